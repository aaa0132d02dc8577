#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fairdiv/audit.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/greedy.hpp"
#include "fairdiv/search.hpp"
#include "fairdiv/solve_result.hpp"

namespace fairdiv {

using json = nlohmann::json;

/// Parses the instance schema and runs validate_instance; any problem is an
/// InstanceError naming the offending field or invariant.
///
///     {"agents": 2, "items": ["a", "b"],
///      "valuation": {"type": "additive", "matrix": [["-1", "-2"], ["-2", "-1"]]}}
///     {"agents": 2, "items": ["a"],
///      "valuation": {"type": "general-identical", "table": ["0", "3/2"]}}
Instance instance_from_json(const json& j);
json instance_to_json(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);

/// {"bundles": [["a", "c"], ["b"]]}, bundle k belonging to agent k.
Allocation allocation_from_json(const json& j, const Instance& inst);
json allocation_to_json(const Allocation& alloc, const Instance& inst);

Allocation load_allocation(const std::filesystem::path& path, const Instance& inst);

/// {"notion": "PROP1", "holds": false, "verdict": "fails", "witness": {...}}
json notion_to_json(const NotionResult& result, const Instance& inst);
json report_to_json(const FairnessReport& report, const Instance& inst);
json solve_result_to_json(const SolveResult& result, const Instance& inst);
json greedy_step_to_json(const GreedyStep& step, const Instance& inst);
json search_report_to_json(const SearchReport& report);
json fixture_report_to_json(const FixtureReport& report);

}  // namespace fairdiv
