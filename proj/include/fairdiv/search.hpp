#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fairdiv/audit.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/solve_result.hpp"

namespace fairdiv {

enum class Method { Leximin, LeximinPlusPlus, LeximinGoodsChores, MnwPrime, MnwConstrained, AlgIdentical };

/// "leximin", "leximin++", "leximin-gc", "mnw-prime", "mnw-constrained", "alg-identical".
std::string_view method_name(Method method);
/// Throws ConfigError for unknown names.
Method parse_method(std::string_view name);

/// Runs one solver. alg-identical fills only allocation and utilities.
SolveResult solve_with(Method method, const Instance& inst, const SearchLimits& limits = {});

struct SearchOptions {
    GeneratorConfig config;
    Method method = Method::Leximin;
    std::vector<Notion> notions;
    std::size_t trials = 0;
    SearchLimits limits;
    /// Audited before the generated stream, as trials 0..prelude.size()-1.
    std::vector<Instance> prelude;
};

struct SearchViolation {
    std::size_t trial;
    /// Seed that regenerates the instance with the search's config
    /// (0 for prelude instances).
    std::uint64_t trial_seed;
    Instance instance;
    Allocation allocation;
    NotionResult result;
};

struct SearchReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<SearchViolation> violations;
    /// Audits that could not run (PO beyond the guard).
    std::size_t not_applicable = 0;
};

/// Generates instances from one seeded stream, solves each with the method and
/// audits every requested notion. Violations are listed in trial order.
SearchReport search_counterexamples(const SearchOptions& options);

}  // namespace fairdiv
