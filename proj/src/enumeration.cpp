#include "fairdiv/enumeration.hpp"

#include "fairdiv/error.hpp"

namespace fairdiv {

std::uint64_t allocation_count(std::size_t agents, std::size_t items) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < items; ++k) {
        if (agents != 0 && count > UINT64_MAX / agents) return UINT64_MAX;
        count *= agents;
    }
    return count;
}

void require_enumerable(const Instance& inst, const SearchLimits& limits) {
    const std::uint64_t space = allocation_count(inst.agent_count(), inst.item_count());
    if (space > limits.max_space) throw SearchSpaceTooLarge(space, limits.max_space);
}

AllocationEnumerator::AllocationEnumerator(const Instance& inst, const SearchLimits& limits)
    : inst_(&inst),
      additive_(std::get_if<AdditiveValuation>(&inst.valuation())),
      owners_(inst.item_count(), 0),
      bundles_(inst.agent_count()),
      utilities_(inst.agent_count()) {
    require_enumerable(inst, limits);
    bundles_[0] = inst.all_items();
    for (AgentIndex i = 0; i < bundles_.size(); ++i) utilities_[i] = value(inst, i, bundles_[i]);
}

void AllocationEnumerator::move_item(ItemIndex o, AgentIndex from, AgentIndex to) {
    owners_[o] = to;
    bundles_[from] = bundles_[from].without(o);
    bundles_[to] = bundles_[to].with(o);
    if (additive_ != nullptr) {
        utilities_[from] -= additive_->matrix[from][o];
        utilities_[to] += additive_->matrix[to][o];
    } else {
        const auto& table = inst_->set_function()->table;
        utilities_[from] = table[bundles_[from].mask()];
        utilities_[to] = table[bundles_[to].mask()];
    }
}

bool AllocationEnumerator::next() {
    const std::size_t n = bundles_.size();
    for (std::size_t pos = owners_.size(); pos-- > 0;) {
        const AgentIndex current = owners_[pos];
        if (current + 1 < n) {
            move_item(pos, current, current + 1);
            ++index_;
            return true;
        }
        move_item(pos, current, 0);
    }
    return false;
}

}  // namespace fairdiv
