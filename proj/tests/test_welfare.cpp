#include <doctest.h>

#include <random>

#include "fairdiv/audit.hpp"
#include "fairdiv/error.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/welfare.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

namespace {

Instance chores(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    GeneratorConfig c;
    c.family = Family::AdditiveChores;
    c.agents = n;
    c.items = m;
    c.resolution = 1;
    c.value_lo = Rational(-4);
    c.value_hi = Rational(-1);
    c.seed = rng();
    return generate(c);
}

// (count of nonzero factors, product of nonzero factors), compared as a pair
std::pair<std::size_t, Rational> score(const std::vector<Rational>& factors) {
    std::size_t count = 0;
    Rational product(1);
    for (const auto& f : factors) {
        if (f.is_zero()) continue;
        ++count;
        product = product * f;
    }
    return {count, product};
}

}  // namespace

TEST_CASE("welfare score") {
    const Rational f[] = {Rational(0), Rational(3), Rational(1, 2)};
    const auto s = WelfareScore::of(f);
    CHECK(s.nonzero_factors == 2);
    CHECK(s.product == Rational(3, 2));
    CHECK(WelfareScore::of({}).product == Rational(1));
    CHECK(WelfareScore{1, Rational(100)} < WelfareScore{2, Rational(1, 100)});
}

TEST_CASE("modified Nash welfare") {
    const Instance mnw = fixture_instance("mnw");
    const auto s = modified_nash_welfare(mnw, fixture_allocation("mnw"));
    CHECK(s.nonzero_factors == 3);
    CHECK(s.product == Rational(15360));
    CHECK(modified_nash_welfare(aversion_view(mnw), fixture_allocation("mnw")) == s);

    const auto alone = modified_nash_welfare(additive({{"-2", "-1"}}), bundles(2, {{0, 1}}));
    CHECK(alone.nonzero_factors == 0);
    CHECK(alone.product == Rational(1));

    const Instance empty(2, {}, AdditiveValuation{{{}, {}}});
    CHECK(modified_nash_welfare(empty, Allocation(2, {})).nonzero_factors == 0);
    CHECK_THROWS_AS(modified_nash_welfare(additive({{"1"}}), bundles(1, {{0}})), NotChoresOnly);
}

TEST_CASE("mnw_prime_solve") {
    SUBCASE("fixture") {
        const SolveResult r = mnw_prime_solve(fixture_instance("mnw"));
        CHECK(r.allocation == fixture_allocation("mnw"));
        CHECK(r.welfare->product == Rational(15360));
        const auto prop1 = check_prop1(fixture_instance("mnw"), r.allocation);
        REQUIRE(prop1.fails());
        CHECK(std::get<ShareWitness>(prop1.witness).agent == 0);
        CHECK(std::get<ShareWitness>(prop1.witness).best_adjusted == Rational(-12));
        CHECK(std::get<ShareWitness>(prop1.witness).threshold == Rational(-11));
    }
    SUBCASE("single item, aversions (1, 2)") {
        const SolveResult r = mnw_prime_solve(additive({{"-1"}, {"-2"}}));
        CHECK(r.allocation.owner(0) == 0);
        CHECK(r.welfare->nonzero_factors == 1);
        CHECK(r.welfare->product == Rational(2));
    }
    SUBCASE("all zero") {
        const SolveResult r = mnw_prime_solve(additive({{"0", "0"}, {"0", "0"}}));
        CHECK(r.allocation == bundles(2, {{0, 1}, {}}));
        CHECK(r.optimal_count == 4);
    }
    SUBCASE("utilities keep the input's sense") {
        const Instance mnw = fixture_instance("mnw");
        CHECK(mnw_prime_solve(mnw).utilities[0] == Rational(-18));
        CHECK(mnw_prime_solve(aversion_view(mnw)).utilities[0] == Rational(18));
    }
    SUBCASE("argmax by enumeration") {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + trial % 3;
            const std::size_t m = trial % 5;
            const Instance inst = chores(rng, n, m);
            const Instance u = aversion_view(inst);
            std::optional<Allocation> best;
            std::pair<std::size_t, Rational> best_score;
            for (const auto& a : all_allocations(n, m)) {
                std::vector<Rational> f;
                for (AgentIndex i = 0; i < n; ++i) f.push_back(value(u, i, u.all_items()) - value(u, i, a.bundle(i)));
                const auto s = score(f);
                if (!best || s > best_score) {
                    best = a;
                    best_score = s;
                }
            }
            CHECK(mnw_prime_solve(inst).allocation == *best);
        }
    }
}

TEST_CASE("constrained_mnw_solve") {
    SUBCASE("mnw2") {
        const SolveResult r = constrained_mnw_solve(fixture_instance("mnw2"));
        CHECK(r.allocation == fixture_allocation("mnw2"));
        CHECK(check_ef1(fixture_instance("mnw2"), r.allocation).fails());
        CHECK(check_po(fixture_instance("mnw2"), r.allocation).holds());
    }
    SUBCASE("mnw3") {
        const SolveResult r = constrained_mnw_solve(fixture_instance("mnw3"));
        CHECK(r.allocation == fixture_allocation("mnw3"));
        CHECK(check_prop1(fixture_instance("mnw3"), r.allocation).fails());
    }
    SUBCASE("one agent") {
        CHECK(constrained_mnw_solve(additive({{"-1", "-2"}})).allocation == bundles(2, {{0, 1}}));
    }
    SUBCASE("argmax over the Pareto-optimal set, by enumeration") {
        std::mt19937_64 rng(67);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + trial % 3;
            const std::size_t m = trial % 5;
            const Instance inst = chores(rng, n, m);
            const Instance u = aversion_view(inst);
            const auto table = oracle::tabulate(inst);
            const auto every = all_allocations(n, m);
            std::optional<Allocation> best;
            std::pair<std::size_t, Rational> best_score;
            for (const auto& a : every) {
                if (!oracle::po(table, a, every)) continue;
                std::vector<Rational> f;
                for (AgentIndex i = 0; i < n; ++i) f.push_back(value(u, i, a.bundle(i)));
                const auto s = score(f);
                if (!best || s > best_score) {
                    best = a;
                    best_score = s;
                }
            }
            const SolveResult r = constrained_mnw_solve(inst);
            CHECK(r.allocation == *best);
            CHECK(check_po(inst, r.allocation).holds());
        }
    }
}
