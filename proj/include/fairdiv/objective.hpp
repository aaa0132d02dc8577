#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// Score of one bundle for one agent; compared lexicographically, first entry first.
struct ObjectiveTuple {
    std::vector<Rational> entries;

    friend bool operator==(const ObjectiveTuple&, const ObjectiveTuple&) = default;
    friend std::strong_ordering operator<=>(const ObjectiveTuple& a, const ObjectiveTuple& b) {
        return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(),
                                                      b.entries.begin(), b.entries.end());
    }
};

std::string to_string(const ObjectiveTuple& t);

enum class ObjectiveKind {
    Utility,             // (v_i(S))
    UtilityGoods,        // (v_i(S), |S ∩ G_i|)
    UtilityGoodsChores,  // (v_i(S), |S ∩ G_i|, -|S ∩ C_i|)
    CustomVector,
};

using CustomObjective = std::function<ObjectiveTuple(const Instance&, AgentIndex, Bundle)>;

struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::Utility;
    /// Only for CustomVector; must return tuples of one fixed dimension.
    CustomObjective custom;

    static ObjectiveSpec utility() { return {ObjectiveKind::Utility, {}}; }
    static ObjectiveSpec utility_goods() { return {ObjectiveKind::UtilityGoods, {}}; }
    static ObjectiveSpec utility_goods_chores() { return {ObjectiveKind::UtilityGoodsChores, {}}; }
    static ObjectiveSpec custom_vector(CustomObjective fn) { return {ObjectiveKind::CustomVector, std::move(fn)}; }
};

/// CLI names: "leximin", "leximin++", "leximin-gc".
std::string_view objective_name(const ObjectiveSpec& spec);
/// Throws ConfigError for unknown names.
ObjectiveSpec parse_objective(std::string_view name);

/// Evaluates f_i(S) for one instance, classifying items once.
class ObjectiveEvaluator {
public:
    ObjectiveEvaluator(const Instance& inst, ObjectiveSpec spec);

    ObjectiveTuple operator()(AgentIndex agent, Bundle bundle) const;
    /// Same as operator(), reusing `out`'s storage. `utility` must be v_i(bundle).
    void evaluate(AgentIndex agent, Bundle bundle, const Rational& utility, ObjectiveTuple& out) const;

    const Instance& instance() const { return *inst_; }
    const ObjectiveSpec& spec() const { return spec_; }

private:
    const Instance* inst_;
    ObjectiveSpec spec_;
    ItemClassification cls_;
};

ObjectiveTuple objective(const Instance& inst, const ObjectiveSpec& spec, AgentIndex agent, Bundle bundle);

}  // namespace fairdiv
