#include <doctest.h>

#include <algorithm>
#include <random>

#include "fairdiv/audit.hpp"
#include "fairdiv/error.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/leximin.hpp"
#include "test_support.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

namespace {

ObjectiveTuple tuple(std::initializer_list<Rational> entries) { return ObjectiveTuple{entries}; }

// Sorted-multiset comparison, the closed form of the position scan.
bool sorted_less(std::vector<ObjectiveTuple> a, std::vector<ObjectiveTuple> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Instance small_instance(std::mt19937_64& rng, Family family, std::size_t n, std::size_t m) {
    GeneratorConfig c;
    c.family = family;
    c.agents = n;
    c.items = m;
    c.resolution = 1;
    c.value_lo = Rational(-3);
    c.value_hi = family == Family::AdditiveChores ? Rational(-1) : Rational(3);
    c.seed = rng();
    return generate(c);
}

}  // namespace

TEST_CASE("objective tuples") {
    const Instance t1 = fixture_instance("table1");
    CHECK(objective(t1, ObjectiveSpec::utility(), 0, Bundle{0, 1, 2}) == tuple({Rational(-18)}));

    const Instance mixed = additive({{"2", "-1", "0"}});
    CHECK(objective(mixed, ObjectiveSpec::utility_goods_chores(), 0, Bundle{}) ==
          tuple({Rational(0), Rational(0), Rational(0)}));
    CHECK(objective(mixed, ObjectiveSpec::utility_goods(), 0, Bundle{0, 2}) == tuple({Rational(2), Rational(2)}));
    CHECK(objective(mixed, ObjectiveSpec::utility_goods_chores(), 0, Bundle{0, 1, 2}) ==
          tuple({Rational(1), Rational(2), Rational(-1)}));

    const Instance fn = set_function(2, {"0", "3", "-1", "5/2"});
    CHECK(objective(fn, ObjectiveSpec::utility_goods_chores(), 1, Bundle{0, 1}) ==
          tuple({Rational(5, 2), Rational(1), Rational(-1)}));

    const auto custom = ObjectiveSpec::custom_vector(
        [](const Instance&, AgentIndex agent, Bundle b) { return tuple({Rational(b.size()), Rational(agent)}); });
    CHECK(objective(mixed, custom, 0, Bundle{1, 2}) == tuple({Rational(2), Rational(0)}));
}

TEST_CASE("objective names") {
    CHECK(objective_name(parse_objective("leximin")) == "leximin");
    CHECK(parse_objective("leximin++").kind == ObjectiveKind::UtilityGoods);
    CHECK(parse_objective("leximin-gc").kind == ObjectiveKind::UtilityGoodsChores);
    CHECK_THROWS_AS(parse_objective("maximin"), ConfigError);
}

TEST_CASE("agent ordering breaks ties by index") {
    const std::vector<ObjectiveTuple> t{tuple({Rational(2)}), tuple({Rational(1)}), tuple({Rational(2)}),
                                        tuple({Rational(1)})};
    CHECK(agent_ordering(t) == std::vector<AgentIndex>{1, 3, 0, 2});
}

TEST_CASE("precedes") {
    const Instance t1 = fixture_instance("table1");
    const auto spec = ObjectiveSpec::utility();
    const Allocation reference = fixture_allocation("table1");

    SUBCASE("moving g to agent 0 makes things worse") {
        auto owners = reference.owners();
        owners[6] = 0;
        const Allocation worse(5, owners);
        CHECK(value(t1, 0, worse.bundle(0)) == Rational(-28));
        CHECK(precedes(t1, spec, worse, reference));
        CHECK_FALSE(precedes(t1, spec, reference, worse));
    }
    SUBCASE("irreflexive") { CHECK_FALSE(precedes(t1, spec, reference, reference)); }
    SUBCASE("equal sorted vectors are incomparable") {
        const Instance fn = set_function(2, {"0", "1", "1", "2"});
        const Allocation a = bundles(2, {{0}, {1}});
        const Allocation b = bundles(2, {{1}, {0}});
        CHECK_FALSE(precedes(fn, spec, a, b));
        CHECK_FALSE(precedes(fn, spec, b, a));
    }
    SUBCASE("later positions decide when earlier ones tie") {
        const std::vector<ObjectiveTuple> a{tuple({Rational(1)}), tuple({Rational(2)})};
        const std::vector<ObjectiveTuple> b{tuple({Rational(3)}), tuple({Rational(1)})};
        CHECK(precedes(a, b));
        CHECK_FALSE(precedes(b, a));
    }
}

TEST_CASE("precedes equals sorted-vector comparison") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> pick(-2, 2);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const std::size_t d = 1 + trial % 3;
        std::vector<ObjectiveTuple> a(n), b(n);
        for (auto* side : {&a, &b})
            for (auto& t : *side)
                for (std::size_t k = 0; k < d; ++k) t.entries.push_back(Rational(pick(rng)));
        CHECK(precedes(a, b) == sorted_less(a, b));
    }
}

TEST_CASE("precedes ignores which agent holds a tuple-equal bundle") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = small_instance(rng, Family::GeneralIdentical, 3, 3);
        const Allocation a = random_allocation(3, 3, rng);
        const Allocation b = random_allocation(3, 3, rng);
        // relabel agents of a by a rotation
        std::vector<AgentIndex> owners = a.owners();
        for (auto& o : owners) o = (o + 1) % 3;
        const Allocation a2(3, owners);
        for (const auto& spec : {ObjectiveSpec::utility(), ObjectiveSpec::utility_goods_chores()}) {
            CHECK(precedes(inst, spec, a, b) == precedes(inst, spec, a2, b));
            CHECK(precedes(inst, spec, b, a) == precedes(inst, spec, b, a2));
        }
    }
}

TEST_CASE("leximin_solve") {
    SUBCASE("table1") {
        const Instance t1 = fixture_instance("table1");
        const SolveResult r = leximin_solve(t1, ObjectiveSpec::utility());
        const Rational tenth(-1, 10);
        CHECK(r.sorted_objectives ==
              std::vector<ObjectiveTuple>{tuple({Rational(-18)}), tuple({tenth}), tuple({tenth}), tuple({tenth}),
                                          tuple({tenth})});
        CHECK(r.allocation.bundle(0) == Bundle{0, 1, 2});
        CHECK(r.allocation == fixture_allocation("table1"));
        CHECK(r.explored == 78125);
        CHECK(is_leximin_optimal(t1, ObjectiveSpec::utility(), fixture_allocation("table1")));

        auto owners = fixture_allocation("table1").owners();
        owners[0] = 1;
        CHECK_FALSE(is_leximin_optimal(t1, ObjectiveSpec::utility(), Allocation(5, owners)));
    }
    SUBCASE("one agent takes everything") {
        const Instance inst = additive({{"-1", "2", "-3"}});
        const SolveResult r = leximin_solve(inst, ObjectiveSpec::utility());
        CHECK(r.allocation == bundles(3, {{0, 1, 2}}));
        CHECK(r.optimal_count == 1);
        CHECK(is_leximin_optimal(inst, ObjectiveSpec::utility(), r.allocation));
    }
    SUBCASE("two agents, each takes the cheaper chore") {
        const SolveResult r = leximin_solve(additive({{"-1", "-2"}, {"-2", "-1"}}), ObjectiveSpec::utility());
        CHECK(r.allocation == bundles(2, {{0}, {1}}));
        CHECK(r.utilities == std::vector<Rational>{Rational(-1), Rational(-1)});
    }
    SUBCASE("ties return the canonical first and are counted") {
        const SolveResult r = leximin_solve(additive({{"0", "0"}, {"0", "0"}}), ObjectiveSpec::utility());
        CHECK(r.allocation == bundles(2, {{0, 1}, {}}));
        CHECK(r.optimal_count == 4);
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS(leximin_solve(additive({{"1", "1", "1"}, {"1", "1", "1"}}), ObjectiveSpec::utility(),
                                      SearchLimits{4}),
                        SearchSpaceTooLarge);
    }
}

TEST_CASE("leximin_solve equals the pairwise maximum") {
    std::mt19937_64 rng(53);
    const Family families[] = {Family::AdditiveChores, Family::AdditiveMixed, Family::GeneralIdentical};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const std::size_t m = trial % 5;
        const Instance inst = small_instance(rng, families[trial % 3], n, m);
        for (const auto& spec : {ObjectiveSpec::utility(), ObjectiveSpec::utility_goods(),
                                 ObjectiveSpec::utility_goods_chores()}) {
            const auto every = all_allocations(n, m);
            std::size_t best = 0;
            for (std::size_t k = 1; k < every.size(); ++k)
                if (precedes(inst, spec, every[best], every[k])) best = k;
            std::size_t ties = 0;
            for (const auto& b : every)
                if (!precedes(inst, spec, b, every[best]) && !precedes(inst, spec, every[best], b)) ++ties;
            const SolveResult r = leximin_solve(inst, spec);
            CHECK(r.allocation == every[best]);
            CHECK(r.optimal_count == ties);
            CHECK(r.explored == every.size());
        }
    }
}

TEST_CASE("leximin under utilities is Pareto-optimal") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const std::size_t m = 1 + trial % 5;
        const Family family = trial % 2 ? Family::AdditiveMixed : Family::AdditiveChores;
        const Instance inst = small_instance(rng, family, n, m);
        const SolveResult r = leximin_solve(inst, ObjectiveSpec::utility());
        CHECK(check_po(inst, r.allocation).holds());
    }
}
