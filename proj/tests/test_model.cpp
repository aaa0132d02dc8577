#include <doctest.h>

#include <random>

#include "fairdiv/error.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/model.hpp"
#include "test_support.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

TEST_CASE("instance structure is checked at construction") {
    CHECK_THROWS_AS(Instance(0, {"a"}, AdditiveValuation{{}}), InstanceError);
    CHECK_THROWS_AS(Instance(1, {"a", "a"}, AdditiveValuation{{{q("1"), q("2")}}}), InstanceError);
    CHECK_THROWS_AS(Instance(2, {"a"}, AdditiveValuation{{{q("1")}}}), InstanceError);
    CHECK_THROWS_AS(Instance(1, {"a"}, AdditiveValuation{{{q("1"), q("2")}}}), InstanceError);
    CHECK_THROWS_AS(Instance(1, {"a"}, IdenticalSetFunction{{q("0"), q("1"), q("2")}}), InstanceError);
    CHECK_NOTHROW(Instance(1, {}, AdditiveValuation{{{}}}));
}

TEST_CASE("validate_instance") {
    SUBCASE("table1 is accepted") { CHECK(validate_instance(fixture_instance("table1")).accepted()); }

    SUBCASE("zero set function is accepted") {
        CHECK(validate_instance(set_function(2, {"0", "0", "0", "0"})).accepted());
    }

    SUBCASE("mixed monotonicity names item and both subsets") {
        const auto verdict = validate_instance(set_function(2, {"0", "1", "0", "-1"}));
        REQUIRE_FALSE(verdict.accepted());
        CHECK(verdict.violation->kind == ViolationKind::MixedMonotonicity);
        CHECK(verdict.violation->item == 0);
        CHECK(verdict.violation->raising_set == Bundle{});
        CHECK(verdict.violation->lowering_set == Bundle{1});
    }

    SUBCASE("nonzero empty set") {
        const auto verdict = validate_instance(set_function(1, {"1", "2"}));
        REQUIRE_FALSE(verdict.accepted());
        CHECK(verdict.violation->kind == ViolationKind::NonzeroEmptySet);
    }
}

TEST_CASE("classify_items") {
    SUBCASE("table1 is all chores") {
        const auto cls = classify_items(fixture_instance("table1"));
        for (AgentIndex i = 0; i < 5; ++i) {
            CHECK(cls.goods[i].empty());
            CHECK(cls.chores[i] == Bundle::first(7));
        }
    }
    SUBCASE("zero-valued items are goods") {
        const auto cls = classify_items(additive({{"5", "0", "-3"}}));
        CHECK(cls.goods[0] == Bundle{0, 1});
        CHECK(cls.chores[0] == Bundle{2});
    }
    SUBCASE("nonzero-marginal set function with weights (+2, -1)") {
        std::mt19937_64 rng(11);
        const std::vector<Rational> weights{Rational(2), Rational(-1)};
        const Instance inst(2, {"a", "b"}, perturbed_set_function(weights, rng));
        const auto& table = inst.set_function()->table;
        // oracle: every marginal of a is > 0, every marginal of b is < 0
        CHECK(table[1] - table[0] > Rational(0));
        CHECK(table[3] - table[2] > Rational(0));
        CHECK(table[2] - table[0] < Rational(0));
        CHECK(table[3] - table[1] < Rational(0));
        const auto cls = classify_items(inst);
        CHECK(cls.goods[0] == Bundle{0});
        CHECK(cls.chores[0] == Bundle{1});
        CHECK(cls.goods[1] == cls.goods[0]);
    }
}

TEST_CASE("classification of additive rows matches the induced set function") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        GeneratorConfig c;
        c.family = Family::AdditiveMixed;
        c.agents = 1;
        c.items = 1 + trial % 4;
        c.value_lo = Rational(-2);
        c.value_hi = Rational(2);
        c.resolution = 1;  // lots of zeros
        c.seed = rng();
        const Instance add = generate(c);
        std::vector<Rational> table(std::size_t{1} << c.items);
        for (std::uint64_t s = 0; s < table.size(); ++s) table[s] = value(add, 0, Bundle(s));
        const Instance induced(1, add.items(), IdenticalSetFunction{table});
        const auto a = classify_items(add);
        const auto b = classify_items(induced);
        CHECK(a.goods == b.goods);
        CHECK(a.chores == b.chores);
    }
}

TEST_CASE("value") {
    const Instance t1 = fixture_instance("table1");
    CHECK(value(t1, 0, Bundle{0, 1, 2}) == Rational(-18));
    CHECK(value(t1, 3, Bundle{}) == Rational(0));
    const Instance mnw = aversion_view(fixture_instance("mnw"));
    CHECK(value(mnw, 0, Bundle{0, 1, 2}.without(2)) == Rational(12));
    CHECK(value(set_function(2, {"0", "1", "2", "5/2"}), 1, Bundle{0, 1}) == Rational(5, 2));
}

TEST_CASE("decimal sums are exact") {
    // 0.1 + 0.2 == 0.3 and ten copies of 0.1 sum to exactly 1
    const Instance inst = additive({{"0.1", "0.2", "0.1", "0.1", "0.1", "0.1", "0.1", "0.1", "0.1", "0.1", "0.1"}});
    CHECK(value(inst, 0, Bundle{0, 1}) == Rational(3, 10));
    CHECK(value(inst, 0, Bundle::first(11) - Bundle{1}) == Rational(1));
}

TEST_CASE("rescale_common_total") {
    SUBCASE("two rows to total -2") {
        const Instance r = rescale_common_total(additive({{"-1", "-1"}, {"-2", "-2"}}), Rational(-2));
        CHECK(r.additive().matrix == additive({{"-1", "-1"}, {"-1", "-1"}}).additive().matrix);
    }
    SUBCASE("table1 with U = -55 is unchanged") {
        const Instance t1 = fixture_instance("table1");
        CHECK(rescale_common_total(t1, Rational(-55)) == t1);
    }
    SUBCASE("single item equals the total") {
        CHECK(rescale_common_total(additive({{"-3"}}), Rational(-1)).additive().matrix[0][0] == Rational(-1));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(rescale_common_total(additive({{"1", "-1"}}), Rational(-1)), ZeroTotal);
        CHECK_THROWS_AS(rescale_common_total(additive({{"-1", "-1"}}), Rational(4)), SignMismatch);
        CHECK_THROWS_AS(rescale_common_total(set_function(1, {"0", "1"}), Rational(1)), NotAdditive);
    }
    SUBCASE("bundle rankings are preserved") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            GeneratorConfig c{3, 4, Family::AdditiveChores, {}, {}, 10, {}, rng()};
            const Instance inst = generate(c);
            const Instance r = rescale_common_total(inst, Rational(-7, 3));
            for (AgentIndex i = 0; i < 3; ++i) {
                CHECK(value(r, i, r.all_items()) == Rational(-7, 3));
                for (std::uint64_t s = 0; s < 16; ++s) {
                    for (std::uint64_t t = 0; t < 16; ++t) {
                        CHECK((value(inst, i, Bundle(s)) - value(inst, i, Bundle(t))).sign() ==
                              (value(r, i, Bundle(s)) - value(r, i, Bundle(t))).sign());
                    }
                }
            }
        }
    }
}

TEST_CASE("aversion_view") {
    const Instance t1 = fixture_instance("table1");
    const Instance u = aversion_view(t1);
    CHECK(u.sense() == ValueSense::Aversion);
    CHECK(u.additive().matrix[0] ==
          std::vector<Rational>{Rational(6), Rational(6), Rational(6), Rational(9), Rational(9), Rational(9), Rational(10)});
    CHECK(u.additive().matrix[1][0] == q("18.1"));
    CHECK(utility_view(u) == t1);

    const Instance zeros = additive({{"0", "0"}, {"0", "0"}});
    CHECK(aversion_view(zeros).additive().matrix == zeros.additive().matrix);

    const Instance mnw = fixture_instance("mnw");
    CHECK(mnw.additive().matrix[0][3] == Rational(-7));
    CHECK(aversion_view(mnw).additive().matrix[0][3] == Rational(7));

    try {
        aversion_view(additive({{"-1", "2"}}));
        FAIL("expected NotChoresOnly");
    } catch (const NotChoresOnly& e) {
        CHECK(e.agent == 0);
        CHECK(e.item == 1);
    }
}

TEST_CASE("restrict_items keeps values of the kept items") {
    const Instance t1 = fixture_instance("table1");
    const Instance sub = restrict_items(t1, Bundle{1, 4});
    CHECK(sub.items() == std::vector<std::string>{"b", "e"});
    CHECK(value(sub, 2, Bundle{0, 1}) == value(t1, 2, Bundle{1, 4}));

    const Instance fn = set_function(1, {"0", "1", "2", "4"});
    const Instance fsub = restrict_items(fn, Bundle{1});
    CHECK(fsub.set_function()->table == std::vector<Rational>{Rational(0), Rational(2)});
}

TEST_CASE("allocation partitions the items") {
    const Allocation a = bundles(3, {{0, 2}, {1}});
    CHECK(a.owner(2) == 0);
    CHECK(a.bundle(1) == Bundle{1});
    CHECK_THROWS_AS(bundles(3, {{0}, {1}}), InstanceError);
    CHECK_THROWS_AS(bundles(2, {{0, 1}, {1}}), InstanceError);
    CHECK_THROWS_AS(Allocation(2, {0, 2}), InstanceError);
}
