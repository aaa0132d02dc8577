#include <doctest.h>

#include <algorithm>
#include <random>

#include "fairdiv/audit.hpp"
#include "fairdiv/error.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/greedy.hpp"
#include "test_support.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Instance identical(std::mt19937_64& rng, std::size_t n, std::size_t m, long resolution = 1) {
    GeneratorConfig c;
    c.family = Family::IdenticalAdditive;
    c.agents = n;
    c.items = m;
    c.resolution = resolution;
    c.value_lo = Rational(-4);
    c.value_hi = Rational(4);
    c.seed = rng();
    return generate(c);
}

}  // namespace

TEST_CASE("trace on (5, -4, 3, -2)") {
    const Instance inst = additive({{"5", "-4", "3", "-2"}, {"5", "-4", "3", "-2"}});
    const auto trace = alg_identical_trace(inst);
    REQUIRE(trace.size() == 4);
    CHECK(trace[0].item == 0);
    CHECK(trace[0].agent == 0);
    CHECK(trace[0].utilities == rats({5, 0}));
    CHECK(trace[1].item == 1);
    CHECK(trace[1].agent == 0);
    CHECK(trace[1].utilities == rats({1, 0}));
    CHECK(trace[2].item == 2);
    CHECK(trace[2].agent == 1);
    CHECK(trace[2].utilities == rats({1, 3}));
    CHECK(trace[3].item == 3);
    CHECK(trace[3].agent == 1);
    CHECK(trace[3].utilities == rats({1, 1}));
    CHECK(alg_identical(inst) == bundles(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("ordering breaks |v| ties by item index") {
    const Instance inst = additive({{"1", "-3", "3", "-1", "2"}});
    CHECK(alg_identical_order(inst) == std::vector<ItemIndex>{1, 2, 4, 0, 3});
}

TEST_CASE("degenerate inputs") {
    CHECK(alg_identical(additive({{"0", "0", "0"}, {"0", "0", "0"}})) == bundles(3, {{0, 1, 2}, {}}));
    CHECK(alg_identical(additive({{"-1"}, {"-1"}, {"-1"}})).owner(0) == 0);
    const Instance none(2, {}, AdditiveValuation{{{}, {}}});
    CHECK(alg_identical_trace(none).empty());
    const auto single = alg_identical_trace(additive({{"-1"}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].utilities == rats({-1}));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(alg_identical(set_function(2, {"0", "1"})), NotAdditive);
    try {
        alg_identical(additive({{"1", "2"}, {"1", "2"}, {"2", "1"}}));
        FAIL("expected NotIdentical");
    } catch (const NotIdentical& e) {
        CHECK(e.agent == 2);
    }
}

TEST_CASE("every prefix is EFX") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const std::size_t m = trial % 9;
        const Instance inst = identical(rng, n, m);
        const auto trace = alg_identical_trace(inst);
        REQUIRE(trace.size() == m);
        std::vector<AgentIndex> owners(m);
        Bundle seen;
        for (const auto& step : trace) {
            owners[step.item] = step.agent;
            seen = seen.with(step.item);
            const Allocation prefix = restrict_allocation(Allocation(n, owners), seen);
            const Instance sub = restrict_items(inst, seen);
            CHECK(check_efx(sub, prefix).holds());
            for (AgentIndex i = 0; i < n; ++i) CHECK(step.utilities[i] == value(sub, i, prefix.bundle(i)));
        }
        const Allocation out = alg_identical(inst);
        CHECK(out == Allocation(n, owners));
        CHECK(check_efx(inst, out).holds());
    }
}

TEST_CASE("sorted utilities do not depend on agent labels") {
    std::mt19937_64 rng(73);
    int compared = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const Instance inst = identical(rng, n, 6, 1000);
        // identical rows: relabelling agents changes nothing in the input, so
        // permute the items instead and compare sorted utility vectors
        std::vector<ItemIndex> perm{5, 3, 1, 0, 2, 4};
        std::vector<std::vector<Rational>> rows(n);
        for (AgentIndex i = 0; i < n; ++i)
            for (ItemIndex o : perm) rows[i].push_back(inst.additive().matrix[i][o]);
        const Instance shuffled(n, inst.items(), AdditiveValuation{rows});
        auto utilities = [&](const Instance& x) {
            std::vector<Rational> u;
            const Allocation a = alg_identical(x);
            for (AgentIndex i = 0; i < n; ++i) u.push_back(value(x, i, a.bundle(i)));
            std::sort(u.begin(), u.end());
            return u;
        };
        // equal |v| ties may be processed in a different order, so only
        // tie-free rows are compared
        std::vector<Rational> mags;
        for (const auto& v : inst.additive().matrix[0]) mags.push_back(v.abs());
        std::sort(mags.begin(), mags.end());
        if (std::adjacent_find(mags.begin(), mags.end()) != mags.end()) continue;
        CHECK(utilities(inst) == utilities(shuffled));
        ++compared;
    }
    CHECK(compared >= 90);
}
