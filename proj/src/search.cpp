#include "fairdiv/search.hpp"

#include <random>

#include "fairdiv/error.hpp"
#include "fairdiv/greedy.hpp"
#include "fairdiv/leximin.hpp"
#include "fairdiv/welfare.hpp"

namespace fairdiv {

namespace {

constexpr Method kMethods[] = {Method::Leximin,  Method::LeximinPlusPlus, Method::LeximinGoodsChores,
                               Method::MnwPrime, Method::MnwConstrained,  Method::AlgIdentical};

}  // namespace

std::string_view method_name(Method method) {
    switch (method) {
        case Method::Leximin: return "leximin";
        case Method::LeximinPlusPlus: return "leximin++";
        case Method::LeximinGoodsChores: return "leximin-gc";
        case Method::MnwPrime: return "mnw-prime";
        case Method::MnwConstrained: return "mnw-constrained";
        case Method::AlgIdentical: return "alg-identical";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    for (Method m : kMethods) {
        if (method_name(m) == name) return m;
    }
    throw ConfigError("unknown method \"" + std::string(name) + "\"");
}

SolveResult solve_with(Method method, const Instance& inst, const SearchLimits& limits) {
    switch (method) {
        case Method::Leximin: return leximin_solve(inst, ObjectiveSpec::utility(), limits);
        case Method::LeximinPlusPlus: return leximin_solve(inst, ObjectiveSpec::utility_goods(), limits);
        case Method::LeximinGoodsChores: return leximin_solve(inst, ObjectiveSpec::utility_goods_chores(), limits);
        case Method::MnwPrime: return mnw_prime_solve(inst, limits);
        case Method::MnwConstrained: return constrained_mnw_solve(inst, limits);
        case Method::AlgIdentical: {
            SolveResult r;
            r.allocation = alg_identical(inst);
            for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
                r.utilities.push_back(value(inst, i, r.allocation.bundle(i)));
            }
            r.optimal_count = 1;
            return r;
        }
    }
    throw ConfigError("unknown method");
}

SearchReport search_counterexamples(const SearchOptions& options) {
    SearchReport report;
    report.seed = options.config.seed;
    std::mt19937_64 stream(options.config.seed);

    auto run = [&](std::size_t trial, std::uint64_t trial_seed, const Instance& inst) {
        const SolveResult solved = solve_with(options.method, inst, options.limits);
        FairnessReport audit_report = audit(inst, solved.allocation, options.notions, options.limits);
        for (auto& r : audit_report.results) {
            if (r.verdict == Verdict::NotApplicable) ++report.not_applicable;
            if (r.fails()) report.violations.push_back({trial, trial_seed, inst, solved.allocation, std::move(r)});
        }
        ++report.trials;
    };

    std::size_t trial = 0;
    for (const auto& inst : options.prelude) run(trial++, 0, inst);
    for (std::size_t t = 0; t < options.trials; ++t) {
        GeneratorConfig config = options.config;
        config.seed = stream();
        run(trial++, config.seed, generate(config));
    }
    return report;
}

}  // namespace fairdiv
