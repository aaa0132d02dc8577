#include "fairdiv/fixtures.hpp"

#include <sstream>

#include "fairdiv/error.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/leximin.hpp"

namespace fairdiv {

namespace {

struct Table {
    std::string_view name;
    bool aversions;
    std::vector<std::vector<std::string_view>> rows;
    std::vector<std::vector<ItemIndex>> reference;  // per agent
};

const std::vector<Table>& tables() {
    static const std::vector<Table> all = {
        {"table1",
         false,
         {{"-6", "-6", "-6", "-9", "-9", "-9", "-10"},
          {"-18.1", "-18.1", "-18.1", "-0.1", "-0.2", "-0.2", "-0.2"},
          {"-18.1", "-18.1", "-18.1", "-0.2", "-0.1", "-0.2", "-0.2"},
          {"-18.1", "-18.1", "-18.1", "-0.2", "-0.2", "-0.1", "-0.2"},
          {"-18.1", "-18.1", "-18.1", "-0.2", "-0.2", "-0.2", "-0.1"}},
         {{0, 1, 2}, {3}, {4}, {5}, {6}}},
        {"mnw",
         true,
         {{"6", "6", "6", "7", "8"}, {"10", "10", "10", "1", "2"}, {"10", "10", "10", "2", "1"}},
         {{0, 1, 2}, {3}, {4}}},
        {"mnw2",
         true,
         {{"2", "3", "3", "3", "9"}, {"2", "3", "9", "2", "4"}, {"1", "1", "1", "5", "12"}},
         {{0, 1, 2}, {3}, {4}}},
        {"mnw3",
         true,
         {{"10.3", "12.2", "10", "2.2", "12.7", "1.1", "1.5"},
          {"7.9", "9.4", "1.4", "5.7", "7.4", "10.3", "7.9"},
          {"9.8", "6", "6.5", "9.6", "6.8", "7.4", "3.9"},
          {"7.5", "10.1", "2.5", "8.1", "8", "6.6", "7.2"},
          {"10.5", "6.3", "6.4", "1", "6.1", "13.7", "6"}},
         {{0, 1}, {2, 3}, {4}, {5}, {6}}},
    };
    return all;
}

const Table& table(std::string_view name) {
    for (const auto& t : tables()) {
        if (t.name == name) return t;
    }
    throw ConfigError("unknown fixture \"" + std::string(name) + "\" (expected table1, mnw, mnw2 or mnw3)");
}

class Mismatches {
public:
    template <class T>
    void expect_equal(const std::string& what, const T& expected, const T& actual) {
        if (!(expected == actual)) {
            out_ << "  " << what << ": expected " << show(expected) << ", got " << show(actual) << '\n';
            empty_ = false;
        }
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            out_ << "  " << what << '\n';
            empty_ = false;
        }
    }
    void raise_if_any(std::string_view fixture) const {
        if (!empty_) throw FixtureMismatch("fixture " + std::string(fixture) + " mismatch:\n" + out_.str());
    }

private:
    static std::string show(const Rational& r) { return r.str(); }
    static std::string show(std::size_t v) { return std::to_string(v); }
    static std::string show(bool v) { return v ? "true" : "false"; }
    static std::string show(const std::vector<AgentIndex>& owners) {
        std::string s = "owners[";
        for (std::size_t k = 0; k < owners.size(); ++k) s += (k ? "," : "") + std::to_string(owners[k]);
        return s + "]";
    }
    static std::string show(const std::vector<ObjectiveTuple>& ts) {
        std::string s = "[";
        for (std::size_t k = 0; k < ts.size(); ++k) s += (k ? ", " : "") + to_string(ts[k]);
        return s + "]";
    }

    std::ostringstream out_;
    bool empty_ = true;
};

const ShareWitness* share_witness(const NotionResult& r) { return std::get_if<ShareWitness>(&r.witness); }

}  // namespace

std::vector<std::string_view> fixture_names() {
    std::vector<std::string_view> out;
    for (const auto& t : tables()) out.push_back(t.name);
    return out;
}

Instance fixture_instance(std::string_view name) {
    const Table& t = table(name);
    std::vector<std::vector<Rational>> matrix;
    for (const auto& row : t.rows) {
        auto& r = matrix.emplace_back();
        for (auto cell : row) r.push_back(Rational::parse(cell));
    }
    std::vector<std::string> items;
    for (std::size_t o = 0; o < t.rows.front().size(); ++o) items.push_back(default_item_name(o));
    Instance inst(t.rows.size(), std::move(items), AdditiveValuation{std::move(matrix)},
                  t.aversions ? ValueSense::Aversion : ValueSense::Utility);
    return t.aversions ? utility_view(inst) : inst;
}

Allocation fixture_allocation(std::string_view name) {
    const Table& t = table(name);
    std::vector<Bundle> bundles;
    for (const auto& items : t.reference) {
        Bundle b;
        for (ItemIndex o : items) b = b.with(o);
        bundles.push_back(b);
    }
    return Allocation::from_bundles(bundles, t.rows.front().size());
}

Method fixture_method(std::string_view name) {
    const Table& t = table(name);
    if (t.name == "table1") return Method::Leximin;
    if (t.name == "mnw") return Method::MnwPrime;
    return Method::MnwConstrained;
}

FixtureReport run_fixture(std::string_view name, const SearchLimits& limits) {
    const Method method = fixture_method(name);
    const Instance inst = fixture_instance(name);
    const Allocation reference = fixture_allocation(name);
    FixtureReport report{std::string(name), method, inst, solve_with(method, inst, limits), {}, {}};
    Mismatches diff;
    diff.expect_equal("solver allocation", reference.owners(), report.solved.allocation.owners());

    if (name == "table1") {
        const std::vector<ObjectiveTuple> expected = {
            {{Rational(-18)}}, {{Rational(-1, 10)}}, {{Rational(-1, 10)}}, {{Rational(-1, 10)}}, {{Rational(-1, 10)}}};
        diff.expect_equal("sorted utility vector", expected, report.solved.sorted_objectives);
        diff.expect(is_leximin_optimal(inst, ObjectiveSpec::utility(), reference, limits),
                    "documented allocation is not leximin-optimal");
    }

    if (name == "mnw2") {
        report.failure = check_ef1(inst, report.solved.allocation);
        const auto* w = std::get_if<EnvyWitness>(&report.failure.witness);
        diff.expect(report.failure.fails() && w != nullptr, "EF1 holds on the solver output");
        if (w != nullptr) {
            diff.expect_equal("EF1 envier", std::size_t{0}, w->envier);
            diff.expect_equal("EF1 envied", std::size_t{1}, w->envied);
            // Aversion form: u_1(A_1 \ {c}) for the best c, against u_1(A_2).
            const Bundle mine = report.solved.allocation.bundle(0);
            std::optional<Rational> least_removal;
            for (ItemIndex c : mine.items()) {
                Rational r = -value(inst, 0, mine.without(c));
                if (!least_removal || r < *least_removal) least_removal = r;
            }
            const Rational envied = -value(inst, 0, report.solved.allocation.bundle(1));
            diff.expect_equal("least single-removal aversion", Rational(5), least_removal.value_or(Rational(0)));
            diff.expect_equal("aversion of envied bundle", Rational(3), envied);
            report.figures = {{"least single-removal aversion", least_removal.value_or(Rational(0))},
                              {"aversion of envied bundle", envied}};
        }
    } else {
        report.failure = check_prop1(inst, report.solved.allocation);
        const auto* w = share_witness(report.failure);
        diff.expect(report.failure.fails() && w != nullptr, "PROP1 holds on the solver output");
        if (w != nullptr) {
            diff.expect_equal("PROP1 agent", std::size_t{0}, w->agent);
            const bool mnw3 = name == "mnw3";
            const Rational best = mnw3 ? Rational::parse("-10.3") : Rational(-12);
            const Rational threshold = mnw3 ? Rational(-10) : Rational(-11);
            diff.expect_equal("best single-item adjustment", best, w->best_adjusted);
            diff.expect_equal("proportional threshold", threshold, w->threshold);
            if (name == "table1") {
                report.figures = {{"best single-item adjustment", w->best_adjusted}, {"threshold", w->threshold}};
            } else {
                report.figures = {{"best single-removal aversion", -w->best_adjusted},
                                  {"aversion threshold", -w->threshold}};
            }
        }
    }

    diff.raise_if_any(name);
    return report;
}

}  // namespace fairdiv
