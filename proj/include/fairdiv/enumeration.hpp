#pragma once

#include <cstdint>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// Guard on exhaustive searches: at most `max_space` complete allocations.
struct SearchLimits {
    std::uint64_t max_space = 10'000'000;
};

/// n^m, saturating at UINT64_MAX.
std::uint64_t allocation_count(std::size_t agents, std::size_t items);

/// Throws SearchSpaceTooLarge when n^m exceeds the guard.
void require_enumerable(const Instance& inst, const SearchLimits& limits);

/// Walks every complete allocation in canonical order: owner vectors ascending
/// lexicographically, item 0 being the most significant base-n digit. Bundles
/// and per-agent values v_i(A_i) are maintained incrementally.
///
///     AllocationEnumerator e(inst, limits);
///     do { use(e.utilities()); } while (e.next());
class AllocationEnumerator {
public:
    AllocationEnumerator(const Instance& inst, const SearchLimits& limits);

    /// Advances to the next allocation; false once the last one has been visited.
    bool next();

    std::uint64_t index() const { return index_; }
    const std::vector<AgentIndex>& owners() const { return owners_; }
    const std::vector<Bundle>& bundles() const { return bundles_; }
    const std::vector<Rational>& utilities() const { return utilities_; }
    Allocation allocation() const { return Allocation(bundles_.size(), owners_); }

private:
    void move_item(ItemIndex o, AgentIndex from, AgentIndex to);

    const Instance* inst_;
    const AdditiveValuation* additive_;
    std::vector<AgentIndex> owners_;
    std::vector<Bundle> bundles_;
    std::vector<Rational> utilities_;
    std::uint64_t index_ = 0;
};

}  // namespace fairdiv
