#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairdiv/audit.hpp"
#include "fairdiv/search.hpp"
#include "fairdiv/solve_result.hpp"

namespace fairdiv {

/// "table1", "mnw", "mnw2", "mnw3".
std::vector<std::string_view> fixture_names();

/// The embedded counterexample instance, as utilities (aversion tables are negated).
Instance fixture_instance(std::string_view name);
/// The documented optimal allocation of the fixture.
Allocation fixture_allocation(std::string_view name);
/// Solver the fixture is documented for.
Method fixture_method(std::string_view name);

struct FixtureReport {
    std::string name;
    Method method;
    Instance instance;
    SolveResult solved;
    /// The documented fairness failure, as audited on the solver output.
    NotionResult failure;
    /// Named quantities behind the failure, e.g. threshold and best adjusted value.
    std::vector<std::pair<std::string, Rational>> figures;
};

/// Solves the fixture, checks that the documented allocation comes out and that
/// the documented failure appears with the documented numbers. Throws
/// FixtureMismatch listing every discrepancy, ConfigError for unknown names.
FixtureReport run_fixture(std::string_view name, const SearchLimits& limits = {});

}  // namespace fairdiv
