#include "fairdiv/objective.hpp"

#include "fairdiv/error.hpp"

namespace fairdiv {

std::string to_string(const ObjectiveTuple& t) {
    std::string out = "(";
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
        if (k != 0) out += ", ";
        out += t.entries[k].str();
    }
    return out + ")";
}

std::string_view objective_name(const ObjectiveSpec& spec) {
    switch (spec.kind) {
        case ObjectiveKind::Utility: return "leximin";
        case ObjectiveKind::UtilityGoods: return "leximin++";
        case ObjectiveKind::UtilityGoodsChores: return "leximin-gc";
        case ObjectiveKind::CustomVector: return "custom";
    }
    return "?";
}

ObjectiveSpec parse_objective(std::string_view name) {
    if (name == "leximin") return ObjectiveSpec::utility();
    if (name == "leximin++") return ObjectiveSpec::utility_goods();
    if (name == "leximin-gc") return ObjectiveSpec::utility_goods_chores();
    throw ConfigError("unknown objective \"" + std::string(name) + "\" (expected leximin, leximin++ or leximin-gc)");
}

ObjectiveEvaluator::ObjectiveEvaluator(const Instance& inst, ObjectiveSpec spec)
    : inst_(&inst), spec_(std::move(spec)) {
    if (spec_.kind == ObjectiveKind::CustomVector && !spec_.custom) {
        throw ConfigError("custom objective without a function");
    }
    if (spec_.kind == ObjectiveKind::UtilityGoods || spec_.kind == ObjectiveKind::UtilityGoodsChores) {
        cls_ = classify_items(inst);
    }
}

void ObjectiveEvaluator::evaluate(AgentIndex agent, Bundle bundle, const Rational& utility,
                                  ObjectiveTuple& out) const {
    auto& e = out.entries;
    switch (spec_.kind) {
        case ObjectiveKind::Utility:
            e.resize(1);
            e[0] = utility;
            return;
        case ObjectiveKind::UtilityGoods:
            e.resize(2);
            e[0] = utility;
            e[1] = Rational((bundle & cls_.goods[agent]).size());
            return;
        case ObjectiveKind::UtilityGoodsChores:
            e.resize(3);
            e[0] = utility;
            e[1] = Rational((bundle & cls_.goods[agent]).size());
            e[2] = -Rational((bundle & cls_.chores[agent]).size());
            return;
        case ObjectiveKind::CustomVector:
            out = spec_.custom(*inst_, agent, bundle);
            return;
    }
}

ObjectiveTuple ObjectiveEvaluator::operator()(AgentIndex agent, Bundle bundle) const {
    ObjectiveTuple out;
    evaluate(agent, bundle, value(*inst_, agent, bundle), out);
    return out;
}

ObjectiveTuple objective(const Instance& inst, const ObjectiveSpec& spec, AgentIndex agent, Bundle bundle) {
    return ObjectiveEvaluator(inst, spec)(agent, bundle);
}

}  // namespace fairdiv
