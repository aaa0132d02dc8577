#pragma once

#include "fairdiv/enumeration.hpp"
#include "fairdiv/solve_result.hpp"

namespace fairdiv {

// Both baselines work on chores-only additive instances, given either as
// utilities (all entries <= 0) or as an aversion view. Scores use aversions
// u_i = |v_i|. SolveResult::utilities are reported in the input's own sense.

/// NW'(A): the product over agents of u_i(M) - u_i(A_i).
WelfareScore modified_nash_welfare(const Instance& inst, const Allocation& alloc);

/// Product over agents of u_i(A_i).
WelfareScore disutility_product(const Instance& inst, const Allocation& alloc);

/// Maximizes NW' over all complete allocations, canonical-first on ties.
SolveResult mnw_prime_solve(const Instance& inst, const SearchLimits& limits = {});

/// Maximizes the disutility product over the Pareto-optimal allocations,
/// canonical-first on ties.
SolveResult constrained_mnw_solve(const Instance& inst, const SearchLimits& limits = {});

}  // namespace fairdiv
