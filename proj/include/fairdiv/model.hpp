#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

using AgentIndex = std::size_t;
using ItemIndex = std::size_t;

/// Bundles are 64-bit masks, so no instance may carry more items than this.
inline constexpr std::size_t kMaxItems = 64;
/// Dense set-function tables hold 2^m entries.
inline constexpr std::size_t kMaxSetFunctionItems = 16;

/// A set of items, bit j standing for item j.
class Bundle {
public:
    constexpr Bundle() = default;
    constexpr explicit Bundle(std::uint64_t mask) : mask_(mask) {}
    Bundle(std::initializer_list<ItemIndex> items) {
        for (ItemIndex o : items) mask_ |= bit(o);
    }

    static constexpr Bundle first(std::size_t m) {
        return Bundle(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool contains(ItemIndex o) const { return (mask_ & bit(o)) != 0; }
    constexpr bool subset_of(Bundle other) const { return (mask_ & ~other.mask_) == 0; }

    constexpr Bundle with(ItemIndex o) const { return Bundle(mask_ | bit(o)); }
    constexpr Bundle without(ItemIndex o) const { return Bundle(mask_ & ~bit(o)); }

    /// Members in ascending index order.
    std::vector<ItemIndex> items() const;

    friend constexpr Bundle operator|(Bundle a, Bundle b) { return Bundle(a.mask_ | b.mask_); }
    friend constexpr Bundle operator&(Bundle a, Bundle b) { return Bundle(a.mask_ & b.mask_); }
    friend constexpr Bundle operator-(Bundle a, Bundle b) { return Bundle(a.mask_ & ~b.mask_); }
    friend constexpr bool operator==(Bundle a, Bundle b) = default;

private:
    static constexpr std::uint64_t bit(ItemIndex o) { return std::uint64_t{1} << o; }
    std::uint64_t mask_ = 0;
};

/// v_i(o) per agent row and item column; bundle value is the row sum over members.
struct AdditiveValuation {
    std::vector<std::vector<Rational>> matrix;
};

/// One set function shared by every agent, stored densely: table[k] is the value
/// of the bundle whose mask is k.
struct IdenticalSetFunction {
    std::vector<Rational> table;
};

using ValuationModel = std::variant<AdditiveValuation, IdenticalSetFunction>;

/// Whether stored numbers are utilities v or aversions u = |v| of a chores-only
/// instance. Fairness checkers work on utilities.
enum class ValueSense { Utility, Aversion };

/// Agents, named items, and a valuation. Construction checks structure only
/// (shapes, names, sizes); semantic invariants are checked by validate_instance.
class Instance {
public:
    Instance(std::size_t agents, std::vector<std::string> items, ValuationModel valuation,
             ValueSense sense = ValueSense::Utility);

    std::size_t agent_count() const { return agents_; }
    std::size_t item_count() const { return items_.size(); }
    const std::vector<std::string>& items() const { return items_; }
    const std::string& item_name(ItemIndex o) const { return items_.at(o); }
    std::optional<ItemIndex> find_item(std::string_view name) const;
    Bundle all_items() const { return Bundle::first(items_.size()); }

    const ValuationModel& valuation() const { return valuation_; }
    ValueSense sense() const { return sense_; }

    bool is_additive() const { return std::holds_alternative<AdditiveValuation>(valuation_); }
    /// Throws NotAdditive for set-function instances.
    const AdditiveValuation& additive() const;
    const IdenticalSetFunction* set_function() const { return std::get_if<IdenticalSetFunction>(&valuation_); }

    friend bool operator==(const Instance& a, const Instance& b);

private:
    std::size_t agents_;
    std::vector<std::string> items_;
    ValuationModel valuation_;
    ValueSense sense_;
};

bool operator==(const AdditiveValuation& a, const AdditiveValuation& b);
bool operator==(const IdenticalSetFunction& a, const IdenticalSetFunction& b);

/// A complete allocation: every item has exactly one owner.
class Allocation {
public:
    Allocation() = default;
    Allocation(std::size_t agents, std::vector<AgentIndex> owners);

    /// Throws InstanceError unless the bundles partition the first `items` items.
    static Allocation from_bundles(std::span<const Bundle> bundles, std::size_t items);

    std::size_t agent_count() const { return bundles_.size(); }
    std::size_t item_count() const { return owners_.size(); }
    AgentIndex owner(ItemIndex o) const { return owners_.at(o); }
    const std::vector<AgentIndex>& owners() const { return owners_; }
    Bundle bundle(AgentIndex i) const { return bundles_.at(i); }
    const std::vector<Bundle>& bundles() const { return bundles_; }

    friend bool operator==(const Allocation& a, const Allocation& b) {
        return a.owners_ == b.owners_ && a.bundles_.size() == b.bundles_.size();
    }

private:
    std::vector<AgentIndex> owners_;
    std::vector<Bundle> bundles_;
};

/// Per-agent partition of the items into goods G_i and chores C_i.
struct ItemClassification {
    std::vector<Bundle> goods;
    std::vector<Bundle> chores;
};

enum class ViolationKind { MixedMonotonicity, NonzeroEmptySet };

/// Why validate_instance rejected. For MixedMonotonicity, `item` raises the
/// value of `raising_set` and lowers the value of `lowering_set`.
struct Violation {
    ViolationKind kind;
    ItemIndex item = 0;
    Bundle raising_set;
    Bundle lowering_set;
    std::string message;
};

struct ValidationVerdict {
    std::optional<Violation> violation;
    bool accepted() const { return !violation.has_value(); }
};

/// Checks v(∅) = 0 and item-wise monotonicity. Additive valuations always pass.
/// For set functions the reported witness is the lowest offending item with the
/// smallest-mask raising and lowering sets.
ValidationVerdict validate_instance(const Instance& inst);

/// Zero-valued items (and items whose marginals are all zero) count as goods.
ItemClassification classify_items(const Instance& inst);

Rational value(const Instance& inst, AgentIndex agent, Bundle bundle);

/// Multiplies each row by U / v_i(M) so that every agent's total becomes U.
Instance rescale_common_total(const Instance& inst, const Rational& total);

/// Negates a chores-only additive utility instance into aversions u = |v|.
Instance aversion_view(const Instance& inst);
/// Inverse of aversion_view: turns aversions back into utilities v = -u.
Instance utility_view(const Instance& inst);

/// Additive with every entry <= 0.
bool is_chores_only(const Instance& inst);

/// The instance restricted to the items of `keep`, re-indexed in ascending order.
Instance restrict_items(const Instance& inst, Bundle keep);

/// Sub-allocation of `alloc` on the items of `keep`, matching restrict_items.
Allocation restrict_allocation(const Allocation& alloc, Bundle keep);

}  // namespace fairdiv
