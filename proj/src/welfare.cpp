#include "fairdiv/welfare.hpp"

#include <algorithm>
#include <numeric>

#include "fairdiv/error.hpp"

namespace fairdiv {

WelfareScore WelfareScore::of(std::span<const Rational> factors) {
    WelfareScore score;
    for (const auto& f : factors) {
        if (f.is_zero()) continue;
        ++score.nonzero_factors;
        score.product *= f;
    }
    return score;
}

namespace {

Instance aversions_of(const Instance& inst) {
    if (inst.sense() == ValueSense::Aversion) {
        utility_view(inst);  // rejects negative aversions
        return inst;
    }
    if (!inst.is_additive()) throw NotAdditive();
    return aversion_view(inst);
}

std::vector<Rational> totals(const Instance& aversions) {
    std::vector<Rational> out(aversions.agent_count());
    for (AgentIndex i = 0; i < out.size(); ++i) out[i] = value(aversions, i, aversions.all_items());
    return out;
}

std::vector<Rational> own_values(const Instance& inst, const Allocation& alloc) {
    std::vector<Rational> out(inst.agent_count());
    for (AgentIndex i = 0; i < out.size(); ++i) out[i] = value(inst, i, alloc.bundle(i));
    return out;
}

}  // namespace

WelfareScore modified_nash_welfare(const Instance& inst, const Allocation& alloc) {
    const Instance u = aversions_of(inst);
    auto factors = totals(u);
    for (AgentIndex i = 0; i < factors.size(); ++i) factors[i] -= value(u, i, alloc.bundle(i));
    return WelfareScore::of(factors);
}

WelfareScore disutility_product(const Instance& inst, const Allocation& alloc) {
    const Instance u = aversions_of(inst);
    return WelfareScore::of(own_values(u, alloc));
}

SolveResult mnw_prime_solve(const Instance& inst, const SearchLimits& limits) {
    const Instance u = aversions_of(inst);
    const auto total = totals(u);
    const std::size_t n = u.agent_count();

    SolveResult result;
    std::vector<Rational> factors(n);
    AllocationEnumerator e(u, limits);
    do {
        for (AgentIndex i = 0; i < n; ++i) {
            factors[i] = total[i];
            factors[i] -= e.utilities()[i];
        }
        WelfareScore score = WelfareScore::of(factors);
        ++result.explored;
        if (!result.welfare || score > *result.welfare) {
            result.welfare = std::move(score);
            result.allocation = e.allocation();
            result.optimal_count = 1;
        } else if (score == *result.welfare) {
            ++result.optimal_count;
        }
    } while (e.next());

    result.utilities = own_values(inst, result.allocation);
    return result;
}

SolveResult constrained_mnw_solve(const Instance& inst, const SearchLimits& limits) {
    const Instance u = aversions_of(inst);
    const std::size_t n = u.agent_count();

    // Aversion vectors of every allocation (stride n) and their scores.
    std::vector<Rational> vectors;
    std::vector<WelfareScore> scores;
    require_enumerable(u, limits);
    const std::uint64_t space = allocation_count(n, u.item_count());
    vectors.reserve(space * n);
    scores.reserve(space);

    AllocationEnumerator e(u, limits);
    do {
        vectors.insert(vectors.end(), e.utilities().begin(), e.utilities().end());
        scores.push_back(WelfareScore::of(e.utilities()));
    } while (e.next());

    auto row = [&](std::size_t k) { return std::span<const Rational>(vectors).subspan(k * n, n); };

    // Distinct vectors suffice for the dominance test. A dominating vector has
    // a strictly smaller coordinate sum, so candidates are scanned in ascending
    // sum order and the scan stops at the tested vector's own sum.
    std::vector<Rational> sums(scores.size());
    for (std::size_t k = 0; k < scores.size(); ++k) {
        for (const auto& x : row(k)) sums[k] += x;
    }
    std::vector<std::size_t> distinct(scores.size());
    std::iota(distinct.begin(), distinct.end(), std::size_t{0});
    auto by_sum_then_lex = [&](std::size_t x, std::size_t y) {
        if (auto c = sums[x] <=> sums[y]; c != 0) return c < 0;
        auto a = row(x);
        auto b = row(y);
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::sort(distinct.begin(), distinct.end(), by_sum_then_lex);
    distinct.erase(std::unique(distinct.begin(), distinct.end(),
                               [&](std::size_t x, std::size_t y) {
                                   auto a = row(x);
                                   auto b = row(y);
                                   return std::equal(a.begin(), a.end(), b.begin());
                               }),
                   distinct.end());

    // Lower aversion is better, so w dominates v when w <= v everywhere and w != v.
    auto pareto_optimal = [&](std::size_t k) {
        auto v = row(k);
        for (std::size_t d : distinct) {
            if (!(sums[d] < sums[k])) break;
            auto w = row(d);
            bool dominates = true;
            for (std::size_t i = 0; i < n && dominates; ++i) dominates = !(v[i] < w[i]);
            if (dominates) return false;
        }
        return true;
    };

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return scores[x] > scores[y]; });

    SolveResult result;
    result.explored = scores.size();
    std::optional<std::size_t> winner;
    for (std::size_t k : order) {
        if (winner && scores[k] != scores[*winner]) break;
        if (!pareto_optimal(k)) continue;
        if (!winner) winner = k;
        ++result.optimal_count;
    }
    // Some allocation always survives: a maximal element of the finite dominance order.
    std::vector<AgentIndex> owners(u.item_count());
    std::uint64_t code = *winner;
    for (std::size_t pos = owners.size(); pos-- > 0;) {
        owners[pos] = static_cast<AgentIndex>(code % n);
        code /= n;
    }
    result.allocation = Allocation(n, std::move(owners));
    result.welfare = scores[*winner];
    result.utilities = own_values(inst, result.allocation);
    return result;
}

}  // namespace fairdiv
