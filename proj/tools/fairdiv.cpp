// fairdiv: command-line front end for the solvers, auditors and fixtures.
//
// Exit codes: 0 success (or every audited notion holds), 1 a violation was
// found, 2 error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairdiv/error.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/greedy.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/leximin.hpp"
#include "fairdiv/search.hpp"

namespace {

using namespace fairdiv;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kError = 2;

std::vector<Notion> parse_notions(const std::string& list) {
    std::vector<Notion> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string token = list.substr(start, comma - start);
        if (!token.empty()) {
            auto n = parse_notion(token);
            if (!n) throw ConfigError("unknown notion \"" + token + "\"");
            out.push_back(*n);
        }
        start = comma + 1;
    }
    if (out.empty()) throw ConfigError("no notions given");
    return out;
}

std::optional<Rational> optional_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return Rational::parse(text);
}

struct GenOptions {
    std::string family = "additive-chores";
    std::size_t agents = 3;
    std::size_t items = 5;
    std::uint64_t seed = 0;
    std::string rescale;
    std::string lo;
    std::string hi;
    long resolution = 10;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "Instance family")
            ->check(CLI::IsMember({"additive-chores", "additive-mixed", "identical-additive", "general-identical",
                                   "general-identical-nonzero-marginal"}));
        cmd->add_option("--agents", agents, "Number of agents")->required();
        cmd->add_option("--items", items, "Number of items")->required();
        cmd->add_option("--seed", seed, "64-bit seed");
        cmd->add_option("--rescale", rescale, "Rescale additive rows to this common total");
        cmd->add_option("--lo", lo, "Lower bound of the value range");
        cmd->add_option("--hi", hi, "Upper bound of the value range");
        cmd->add_option("--resolution", resolution, "Values are multiples of 1/resolution");
    }

    GeneratorConfig config() const {
        GeneratorConfig c;
        c.family = parse_family(family);
        c.agents = agents;
        c.items = items;
        c.seed = seed;
        c.rescale_total = optional_rational(rescale);
        c.value_lo = optional_rational(lo);
        c.value_hi = optional_rational(hi);
        c.resolution = resolution;
        return c;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair allocation of indivisible goods and chores: leximin, MNW baselines, ALG-IDENTICAL, audits"};
    app.require_subcommand(1);

    std::uint64_t max_space = SearchLimits{}.max_space;
    app.add_option("--max-space", max_space, "Largest number of allocations an exhaustive search may visit")
        ->capture_default_str();

    std::string instance_path;
    std::string allocation_path;
    std::string method = "leximin";
    std::string objective;
    std::string notions = "ef,ef1,efx,prop,prop1,po";
    bool trace = false;

    auto* solve = app.add_subcommand("solve", "Solve an instance with one method");
    solve->add_option("--instance", instance_path, "Instance JSON file")->required()->check(CLI::ExistingFile);
    solve->add_option("--method", method, "leximin, leximin++, leximin-gc, mnw-prime, mnw-constrained, alg-identical");
    solve->add_option("--objective", objective, "leximin objective: leximin, leximin++ or leximin-gc");
    solve->add_flag("--trace", trace, "alg-identical: emit the per-item trace as JSON lines");
    solve->add_option("--max-space", max_space, "Exhaustive search guard");

    auto* audit_cmd = app.add_subcommand("audit", "Audit an allocation against fairness notions");
    audit_cmd->add_option("--instance", instance_path, "Instance JSON file")->required()->check(CLI::ExistingFile);
    audit_cmd->add_option("--allocation", allocation_path, "Allocation JSON file")->required()->check(CLI::ExistingFile);
    audit_cmd->add_option("--notions", notions, "Comma-separated: ef,ef1,efx,prop,prop1,po");
    audit_cmd->add_option("--max-space", max_space, "Exhaustive search guard");

    GenOptions search_gen;
    std::size_t trials = 100;
    std::vector<std::string> include_fixtures;
    auto* search = app.add_subcommand("search", "Search generated instances for fairness violations");
    search_gen.attach(search);
    search->add_option("--method", method, "Solver to audit");
    search->add_option("--notions", notions, "Comma-separated notions to audit");
    search->add_option("--trials", trials, "Number of generated instances");
    search->add_option("--include-fixture", include_fixtures, "Audit this fixture instance before the stream");
    search->add_option("--max-space", max_space, "Exhaustive search guard");

    GenOptions gen_opts;
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen_opts.attach(gen);

    std::string fixture_name;
    auto* fixture = app.add_subcommand("fixture", "Reproduce a documented counterexample");
    fixture->add_option("--name", fixture_name, "table1, mnw, mnw2 or mnw3")->required();
    fixture->add_option("--max-space", max_space, "Exhaustive search guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }
    const SearchLimits limits{max_space};

    try {
        if (*solve) {
            const Instance inst = load_instance(instance_path);
            if (!objective.empty()) {
                if (method != "leximin") throw ConfigError("--objective applies to --method leximin only");
                method = std::string(method_name(parse_method(objective)));
            }
            const Method m = parse_method(method);
            if (trace) {
                if (m != Method::AlgIdentical) throw ConfigError("--trace applies to --method alg-identical only");
                for (const auto& step : alg_identical_trace(inst)) {
                    std::cout << greedy_step_to_json(step, inst).dump() << '\n';
                }
            }
            json out = solve_result_to_json(solve_with(m, inst, limits), inst);
            out["method"] = method_name(m);
            std::cout << (trace ? out.dump() : out.dump(2)) << '\n';
            return kOk;
        }
        if (*audit_cmd) {
            const Instance inst = load_instance(instance_path);
            const Allocation alloc = load_allocation(allocation_path, inst);
            const FairnessReport report = audit(inst, alloc, parse_notions(notions), limits);
            std::cout << report_to_json(report, inst).dump(2) << '\n';
            for (const auto& r : report.results) {
                if (r.fails()) return kViolation;
            }
            return kOk;
        }
        if (*search) {
            SearchOptions options;
            options.config = search_gen.config();
            options.method = parse_method(method);
            options.notions = parse_notions(notions);
            options.trials = trials;
            options.limits = limits;
            for (const auto& name : include_fixtures) options.prelude.push_back(fixture_instance(name));
            const SearchReport report = search_counterexamples(options);
            std::cout << search_report_to_json(report).dump(2) << '\n';
            return report.violations.empty() ? kOk : kViolation;
        }
        if (*gen) {
            std::cout << instance_to_json(generate(gen_opts.config())).dump(2) << '\n';
            return kOk;
        }
        if (*fixture) {
            std::cout << fixture_report_to_json(run_fixture(fixture_name, limits)).dump(2) << '\n';
            return kOk;
        }
    } catch (const fairdiv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
