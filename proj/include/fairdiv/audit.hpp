#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fairdiv/enumeration.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv {

enum class Notion { EF, EF1, EFX, PROP, PROP1, PO };

inline constexpr Notion kAllNotions[] = {Notion::EF, Notion::EF1, Notion::EFX,
                                         Notion::PROP, Notion::PROP1, Notion::PO};

/// "EF", "EF1", ...
std::string_view notion_name(Notion notion);
/// Case-insensitive inverse of notion_name.
std::optional<Notion> parse_notion(std::string_view text);

enum class Verdict { Holds, Fails, NotApplicable };

enum class AdjustmentSide { None, GoodRemoval, ChoreCopy };
std::string_view side_name(AdjustmentSide side);

/// An envious pair that no permitted adjustment repairs.
///
/// `item`/`side` name the adjustment: removing a good from the envied bundle or
/// copying a chore of the envier's bundle into it. For EFX this is the first
/// adjustment that leaves the envy in place; for EF1 it is the adjustment that
/// comes closest. `adjusted_value` is the envier's value of the envied bundle
/// after that adjustment (or unadjusted, when no item applies).
struct EnvyWitness {
    AgentIndex envier = 0;
    AgentIndex envied = 0;
    std::optional<ItemIndex> item;
    AdjustmentSide side = AdjustmentSide::None;
    Rational own_value;
    Rational adjusted_value;
};

/// An agent below the proportional share, even after the best single-item
/// adjustment (for PROP the adjustment is the identity).
struct ShareWitness {
    AgentIndex agent = 0;
    Rational own_value;
    Rational best_adjusted;
    Rational threshold;
};

struct ParetoWitness {
    Allocation improvement;
};

using Witness = std::variant<std::monostate, EnvyWitness, ShareWitness, ParetoWitness>;

struct NotionResult {
    Notion notion;
    Verdict verdict = Verdict::Holds;
    Witness witness;
    std::string note;

    bool holds() const { return verdict == Verdict::Holds; }
    bool fails() const { return verdict == Verdict::Fails; }
};

struct FairnessReport {
    std::vector<NotionResult> results;

    const NotionResult* find(Notion notion) const;
};

bool envies(const Instance& inst, const Allocation& alloc, AgentIndex i, AgentIndex j);

// Every checker reports the lexicographically smallest violation and requires a
// utility-sense instance. Overloads taking an ItemClassification skip the
// classification pass.

NotionResult check_ef(const Instance& inst, const Allocation& alloc);
NotionResult check_efx(const Instance& inst, const Allocation& alloc);
NotionResult check_efx(const Instance& inst, const ItemClassification& cls, const Allocation& alloc);
NotionResult check_ef1(const Instance& inst, const Allocation& alloc);
NotionResult check_ef1(const Instance& inst, const ItemClassification& cls, const Allocation& alloc);
NotionResult check_prop(const Instance& inst, const Allocation& alloc);
NotionResult check_prop1(const Instance& inst, const Allocation& alloc);
/// Exhaustive; throws SearchSpaceTooLarge beyond the guard. The witness is the
/// first Pareto-improvement in canonical enumeration order.
NotionResult check_po(const Instance& inst, const Allocation& alloc, const SearchLimits& limits = {});

/// Runs the requested checkers. PO beyond the guard is reported as
/// not-applicable rather than thrown.
FairnessReport audit(const Instance& inst, const Allocation& alloc, std::span<const Notion> notions,
                     const SearchLimits& limits = {});

// Chores-only variants stated on aversions u = |v|. They take the output of
// aversion_view and return Holds/Fails with the first failing agent (pair).

NotionResult check_ef1_chores(const Instance& aversions, const Allocation& alloc);
NotionResult check_prop1_chores(const Instance& aversions, const Allocation& alloc);

/// Directed graph over agents with an edge u -> v whenever u envies v.
class EnvyGraph {
public:
    explicit EnvyGraph(std::size_t agents) : out_(agents) {}

    void add_edge(AgentIndex from, AgentIndex to);
    std::size_t agent_count() const { return out_.size(); }
    bool has_edge(AgentIndex from, AgentIndex to) const;
    /// Targets in ascending order.
    const std::vector<AgentIndex>& successors(AgentIndex u) const { return out_.at(u); }
    std::vector<std::pair<AgentIndex, AgentIndex>> edges() const;
    bool empty() const;
    bool acyclic() const { return !find_cycle().has_value(); }

    /// Depth-first from the lowest-index agent with an outgoing edge, following
    /// lowest-index edges first; returns the first cycle closed, as agents
    /// c0 -> c1 -> ... -> c0.
    std::optional<std::vector<AgentIndex>> find_cycle() const;

private:
    std::vector<std::vector<AgentIndex>> out_;
};

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc);

/// Gives every agent on `cycle` the bundle of its successor on the cycle.
Allocation rotate_bundles(const Allocation& alloc, std::span<const AgentIndex> cycle);

/// Rotates envy cycles until the envy graph is acyclic.
Allocation eliminate_envy_cycles(const Instance& inst, const Allocation& alloc);

}  // namespace fairdiv
