#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/objective.hpp"

namespace fairdiv {

/// Nash-style product that tolerates zero factors: more nonzero factors wins,
/// then the larger product of the nonzero ones. The empty product is 1.
struct WelfareScore {
    std::size_t nonzero_factors = 0;
    Rational product{1};

    static WelfareScore of(std::span<const Rational> factors);

    friend bool operator==(const WelfareScore&, const WelfareScore&) = default;
    friend std::strong_ordering operator<=>(const WelfareScore& a, const WelfareScore& b) {
        if (auto c = a.nonzero_factors <=> b.nonzero_factors; c != 0) return c;
        return a.product <=> b.product;
    }
};

struct SolveResult {
    Allocation allocation;
    /// v_i(A_i) per agent, in the instance's own value sense.
    std::vector<Rational> utilities;
    /// Leximin solvers: objective tuples in ascending order (the X^A ordering).
    std::vector<ObjectiveTuple> sorted_objectives;
    /// Welfare solvers: the optimal score.
    std::optional<WelfareScore> welfare;
    std::uint64_t explored = 0;
    /// Allocations tied with the returned one under the solver's criterion.
    std::uint64_t optimal_count = 0;
};

}  // namespace fairdiv
