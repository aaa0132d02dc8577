#include "fairdiv/greedy.hpp"

#include <algorithm>
#include <numeric>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

const std::vector<Rational>& shared_row(const Instance& inst) {
    const auto& matrix = inst.additive().matrix;
    for (AgentIndex i = 1; i < matrix.size(); ++i) {
        if (matrix[i] != matrix[0]) throw NotIdentical(i);
    }
    return matrix[0];
}

}  // namespace

std::vector<ItemIndex> alg_identical_order(const Instance& inst) {
    const auto& row = shared_row(inst);
    std::vector<Rational> magnitude;
    magnitude.reserve(row.size());
    for (const auto& x : row) magnitude.push_back(x.abs());

    std::vector<ItemIndex> order(row.size());
    std::iota(order.begin(), order.end(), ItemIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](ItemIndex a, ItemIndex b) { return magnitude[a] > magnitude[b]; });
    return order;
}

std::vector<GreedyStep> alg_identical_trace(const Instance& inst) {
    const auto& row = shared_row(inst);
    std::vector<Rational> utilities(inst.agent_count());
    std::vector<GreedyStep> trace;
    trace.reserve(row.size());

    for (ItemIndex o : alg_identical_order(inst)) {
        // min_element / max_element return the first extremum, i.e. the lowest index.
        const auto pick = row[o].sign() >= 0 ? std::min_element(utilities.begin(), utilities.end())
                                             : std::max_element(utilities.begin(), utilities.end());
        const auto agent = static_cast<AgentIndex>(pick - utilities.begin());
        utilities[agent] += row[o];
        trace.push_back(GreedyStep{o, agent, utilities});
    }
    return trace;
}

Allocation alg_identical(const Instance& inst) {
    std::vector<AgentIndex> owners(inst.item_count());
    for (const auto& step : alg_identical_trace(inst)) owners[step.item] = step.agent;
    return Allocation(inst.agent_count(), std::move(owners));
}

}  // namespace fairdiv
