#pragma once

#include <span>
#include <vector>

#include "fairdiv/enumeration.hpp"
#include "fairdiv/objective.hpp"
#include "fairdiv/solve_result.hpp"

namespace fairdiv {

/// Agents ordered by increasing objective tuple, ties by ascending agent index.
std::vector<AgentIndex> agent_ordering(std::span<const ObjectiveTuple> tuples);

/// The generalized leximin comparison: true iff A ≺ B, where `a` and `b` hold
/// f_i(A_i) and f_i(B_i) indexed by agent.
bool precedes(std::span<const ObjectiveTuple> a, std::span<const ObjectiveTuple> b);

bool precedes(const Instance& inst, const ObjectiveSpec& spec, const Allocation& a, const Allocation& b);

/// f_i(A_i) for every agent.
std::vector<ObjectiveTuple> objective_profile(const ObjectiveEvaluator& eval, const Allocation& alloc);

/// Exhaustive leximin maximization. Among tuple-equivalent maxima the first in
/// canonical enumeration order is returned; `optimal_count` reports how many
/// there were.
SolveResult leximin_solve(const Instance& inst, const ObjectiveSpec& spec, const SearchLimits& limits = {});

/// True iff no complete allocation B satisfies alloc ≺ B.
bool is_leximin_optimal(const Instance& inst, const ObjectiveSpec& spec, const Allocation& alloc,
                        const SearchLimits& limits = {});

}  // namespace fairdiv
