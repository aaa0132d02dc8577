#pragma once

#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// One iteration of the greedy pass: `item` went to `agent`, leaving `utilities`.
struct GreedyStep {
    ItemIndex item;
    AgentIndex agent;
    std::vector<Rational> utilities;
};

/// Greedy EFX allocation for identical additive valuations over goods and chores.
///
/// Items are taken in decreasing |v(o)| (ties by item index). A good
/// (v(o) >= 0) goes to the poorest agent, a chore to the richest; ties go to
/// the lowest agent index. Throws NotAdditive for set functions and
/// NotIdentical when rows differ.
Allocation alg_identical(const Instance& inst);

/// The per-iteration trace of alg_identical.
std::vector<GreedyStep> alg_identical_trace(const Instance& inst);

/// Items in processing order.
std::vector<ItemIndex> alg_identical_order(const Instance& inst);

}  // namespace fairdiv
