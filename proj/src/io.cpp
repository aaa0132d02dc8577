#include "fairdiv/io.hpp"

#include <fstream>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

Rational number_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const InstanceError& e) {
            throw InstanceError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InstanceError(where + ": values must be decimal strings (or integers) for exact parsing");
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InstanceError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

json items_json(Bundle bundle, const Instance& inst) {
    json out = json::array();
    for (ItemIndex o : bundle.items()) out.push_back(inst.item_name(o));
    return out;
}

json rationals_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InstanceError(path.string() + ": " + e.what());
    }
}

}  // namespace

Instance instance_from_json(const json& j) {
    const json& agents = field(j, "agents");
    if (!agents.is_number_integer() || agents.get<long long>() < 1) {
        throw InstanceError("\"agents\" must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(agents.get<long long>());

    std::vector<std::string> items;
    const json& item_list = field(j, "items");
    if (!item_list.is_array()) throw InstanceError("\"items\" must be an array of strings");
    for (const auto& name : item_list) {
        if (!name.is_string()) throw InstanceError("\"items\" must be an array of strings");
        items.push_back(name.get<std::string>());
    }

    const json& val = field(j, "valuation");
    const json& type = field(val, "type");
    ValuationModel model;
    if (type == "additive") {
        const json& matrix = field(val, "matrix");
        if (!matrix.is_array()) throw InstanceError("\"matrix\" must be an array of rows");
        AdditiveValuation add;
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            if (!matrix[i].is_array()) throw InstanceError("matrix row " + std::to_string(i) + " is not an array");
            auto& row = add.matrix.emplace_back();
            for (std::size_t o = 0; o < matrix[i].size(); ++o) {
                row.push_back(number_from_json(matrix[i][o],
                                               "matrix[" + std::to_string(i) + "][" + std::to_string(o) + "]"));
            }
        }
        model = std::move(add);
    } else if (type == "general-identical") {
        const json& table = field(val, "table");
        if (!table.is_array()) throw InstanceError("\"table\" must be an array");
        IdenticalSetFunction fn;
        for (std::size_t k = 0; k < table.size(); ++k) {
            fn.table.push_back(number_from_json(table[k], "table[" + std::to_string(k) + "]"));
        }
        model = std::move(fn);
    } else if (type == "general") {
        throw InstanceError("per-agent general valuations are not supported; use \"general-identical\"");
    } else {
        throw InstanceError("unknown valuation type " + type.dump());
    }

    Instance inst(n, std::move(items), std::move(model));
    if (auto verdict = validate_instance(inst); !verdict.accepted()) {
        throw InstanceError("invalid valuation: " + verdict.violation->message);
    }
    return inst;
}

json instance_to_json(const Instance& inst) {
    json val;
    if (const auto* fn = inst.set_function()) {
        val = {{"type", "general-identical"}, {"table", rationals_json(fn->table)}};
    } else {
        json matrix = json::array();
        for (const auto& row : inst.additive().matrix) matrix.push_back(rationals_json(row));
        val = {{"type", "additive"}, {"matrix", std::move(matrix)}};
    }
    return {{"agents", inst.agent_count()}, {"items", inst.items()}, {"valuation", std::move(val)}};
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json(read_json_file(path)); }

Allocation allocation_from_json(const json& j, const Instance& inst) {
    const json& bundles = field(j, "bundles");
    if (!bundles.is_array() || bundles.size() != inst.agent_count()) {
        throw InstanceError("\"bundles\" must list one bundle per agent");
    }
    std::vector<Bundle> out(bundles.size());
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        if (!bundles[i].is_array()) throw InstanceError("bundle " + std::to_string(i) + " is not an array");
        for (const auto& name : bundles[i]) {
            if (!name.is_string()) throw InstanceError("bundle entries must be item names");
            auto o = inst.find_item(name.get<std::string>());
            if (!o) throw InstanceError("unknown item " + name.dump());
            if (out[i].contains(*o)) throw InstanceError("item " + name.dump() + " listed twice");
            out[i] = out[i].with(*o);
        }
    }
    return Allocation::from_bundles(out, inst.item_count());
}

json allocation_to_json(const Allocation& alloc, const Instance& inst) {
    json bundles = json::array();
    for (const auto& b : alloc.bundles()) bundles.push_back(items_json(b, inst));
    return {{"bundles", std::move(bundles)}};
}

Allocation load_allocation(const std::filesystem::path& path, const Instance& inst) {
    return allocation_from_json(read_json_file(path), inst);
}

json notion_to_json(const NotionResult& result, const Instance& inst) {
    json out = {{"notion", notion_name(result.notion)}, {"verdict", verdict_name(result.verdict)}};
    out["holds"] = result.verdict == Verdict::NotApplicable ? json(nullptr) : json(result.holds());

    json witness = nullptr;
    if (const auto* w = std::get_if<EnvyWitness>(&result.witness)) {
        witness = {{"envier", w->envier},
                   {"envied", w->envied},
                   {"item", w->item ? json(inst.item_name(*w->item)) : json(nullptr)},
                   {"side", side_name(w->side)},
                   {"own_value", w->own_value.str()},
                   {"adjusted_value", w->adjusted_value.str()}};
    } else if (const auto* w = std::get_if<ShareWitness>(&result.witness)) {
        witness = {{"agent", w->agent},
                   {"own_value", w->own_value.str()},
                   {"best_adjusted", w->best_adjusted.str()},
                   {"threshold", w->threshold.str()}};
    } else if (const auto* w = std::get_if<ParetoWitness>(&result.witness)) {
        witness = {{"improvement", allocation_to_json(w->improvement, inst)}};
    }
    out["witness"] = std::move(witness);
    if (!result.note.empty()) out["note"] = result.note;
    return out;
}

json report_to_json(const FairnessReport& report, const Instance& inst) {
    json out = json::array();
    for (const auto& r : report.results) out.push_back(notion_to_json(r, inst));
    return out;
}

json solve_result_to_json(const SolveResult& result, const Instance& inst) {
    json out = allocation_to_json(result.allocation, inst);
    out["utilities"] = rationals_json(result.utilities);
    if (!result.sorted_objectives.empty()) {
        json tuples = json::array();
        for (const auto& t : result.sorted_objectives) tuples.push_back(rationals_json(t.entries));
        out["sorted_objectives"] = std::move(tuples);
    }
    if (result.welfare) {
        out["welfare"] = {{"nonzero_factors", result.welfare->nonzero_factors},
                          {"product", result.welfare->product.str()}};
    }
    out["explored"] = result.explored;
    out["optimal_count"] = result.optimal_count;
    return out;
}

json greedy_step_to_json(const GreedyStep& step, const Instance& inst) {
    return {{"item", inst.item_name(step.item)}, {"agent", step.agent}, {"utilities", rationals_json(step.utilities)}};
}

json search_report_to_json(const SearchReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"trial", v.trial},
                              {"trial_seed", v.trial_seed},
                              {"instance", instance_to_json(v.instance)},
                              {"allocation", allocation_to_json(v.allocation, v.instance)},
                              {"audit", notion_to_json(v.result, v.instance)}});
    }
    return {{"trials", report.trials},
            {"seed", report.seed},
            {"not_applicable", report.not_applicable},
            {"violations", std::move(violations)}};
}

json fixture_report_to_json(const FixtureReport& report) {
    json figures = json::object();
    for (const auto& [label, value] : report.figures) figures[label] = value.str();
    return {{"fixture", report.name},
            {"method", method_name(report.method)},
            {"instance", instance_to_json(report.instance)},
            {"solution", solve_result_to_json(report.solved, report.instance)},
            {"failure", notion_to_json(report.failure, report.instance)},
            {"figures", std::move(figures)}};
}

}  // namespace fairdiv
