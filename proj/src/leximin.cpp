#include "fairdiv/leximin.hpp"

#include <algorithm>
#include <numeric>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

void sort_agents(std::span<const ObjectiveTuple> tuples, std::vector<AgentIndex>& order) {
    order.resize(tuples.size());
    std::iota(order.begin(), order.end(), AgentIndex{0});
    std::sort(order.begin(), order.end(), [&](AgentIndex x, AgentIndex y) {
        const auto c = tuples[x] <=> tuples[y];
        return c != 0 ? c < 0 : x < y;
    });
}

/// Compares the tuples of `current`, read in `order`, against an already sorted profile.
std::strong_ordering compare_sorted(std::span<const ObjectiveTuple> current, std::span<const AgentIndex> order,
                                    std::span<const ObjectiveTuple> sorted) {
    for (std::size_t l = 0; l < order.size(); ++l) {
        if (auto c = current[order[l]] <=> sorted[l]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::vector<ObjectiveTuple> sorted_profile(std::span<const ObjectiveTuple> tuples) {
    std::vector<AgentIndex> order;
    sort_agents(tuples, order);
    std::vector<ObjectiveTuple> out;
    out.reserve(order.size());
    for (AgentIndex i : order) out.push_back(tuples[i]);
    return out;
}

}  // namespace

std::vector<AgentIndex> agent_ordering(std::span<const ObjectiveTuple> tuples) {
    std::vector<AgentIndex> order;
    sort_agents(tuples, order);
    return order;
}

bool precedes(std::span<const ObjectiveTuple> a, std::span<const ObjectiveTuple> b) {
    if (a.size() != b.size()) throw InstanceError("leximin comparison of allocations with different agent counts");
    const auto order_a = agent_ordering(a);
    const auto order_b = agent_ordering(b);
    for (std::size_t l = 0; l < order_a.size(); ++l) {
        const auto& fa = a[order_a[l]];
        const auto& fb = b[order_b[l]];
        if (fa != fb) return fa < fb;
    }
    return false;
}

std::vector<ObjectiveTuple> objective_profile(const ObjectiveEvaluator& eval, const Allocation& alloc) {
    std::vector<ObjectiveTuple> out(alloc.agent_count());
    for (AgentIndex i = 0; i < out.size(); ++i) out[i] = eval(i, alloc.bundle(i));
    return out;
}

bool precedes(const Instance& inst, const ObjectiveSpec& spec, const Allocation& a, const Allocation& b) {
    const ObjectiveEvaluator eval(inst, spec);
    return precedes(objective_profile(eval, a), objective_profile(eval, b));
}

SolveResult leximin_solve(const Instance& inst, const ObjectiveSpec& spec, const SearchLimits& limits) {
    const ObjectiveEvaluator eval(inst, spec);
    const std::size_t n = inst.agent_count();

    AllocationEnumerator e(inst, limits);
    std::vector<ObjectiveTuple> current(n);
    std::vector<AgentIndex> order;
    std::vector<ObjectiveTuple> best_sorted;
    SolveResult result;

    do {
        for (AgentIndex i = 0; i < n; ++i) eval.evaluate(i, e.bundles()[i], e.utilities()[i], current[i]);
        sort_agents(current, order);
        ++result.explored;

        const auto c = best_sorted.empty() ? std::strong_ordering::greater
                                           : compare_sorted(current, order, best_sorted);
        if (c > 0) {
            best_sorted.clear();
            for (AgentIndex i : order) best_sorted.push_back(current[i]);
            result.allocation = e.allocation();
            result.utilities = e.utilities();
            result.optimal_count = 1;
        } else if (c == 0) {
            ++result.optimal_count;
        }
    } while (e.next());

    result.sorted_objectives = std::move(best_sorted);
    return result;
}

bool is_leximin_optimal(const Instance& inst, const ObjectiveSpec& spec, const Allocation& alloc,
                        const SearchLimits& limits) {
    const ObjectiveEvaluator eval(inst, spec);
    const auto target = sorted_profile(objective_profile(eval, alloc));
    const std::size_t n = inst.agent_count();

    AllocationEnumerator e(inst, limits);
    std::vector<ObjectiveTuple> current(n);
    std::vector<AgentIndex> order;
    do {
        for (AgentIndex i = 0; i < n; ++i) eval.evaluate(i, e.bundles()[i], e.utilities()[i], current[i]);
        sort_agents(current, order);
        if (compare_sorted(current, order, target) > 0) return false;
    } while (e.next());
    return true;
}

}  // namespace fairdiv
