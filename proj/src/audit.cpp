#include "fairdiv/audit.hpp"

#include <algorithm>
#include <cctype>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

void require_utilities(const Instance& inst) {
    if (inst.sense() != ValueSense::Utility) {
        throw InstanceError("fairness checkers expect utilities; convert aversions with utility_view");
    }
}

void require_same_shape(const Instance& inst, const Allocation& alloc) {
    if (alloc.agent_count() != inst.agent_count() || alloc.item_count() != inst.item_count()) {
        throw InstanceError("allocation shape does not match the instance");
    }
}

NotionResult holds(Notion notion) { return NotionResult{notion, Verdict::Holds, {}, {}}; }

NotionResult fails(Notion notion, Witness witness) {
    return NotionResult{notion, Verdict::Fails, std::move(witness), {}};
}

Rational share_threshold(const Instance& inst, AgentIndex i) {
    return value(inst, i, inst.all_items()) / Rational(inst.agent_count());
}

}  // namespace

std::string_view notion_name(Notion notion) {
    switch (notion) {
        case Notion::EF: return "EF";
        case Notion::EF1: return "EF1";
        case Notion::EFX: return "EFX";
        case Notion::PROP: return "PROP";
        case Notion::PROP1: return "PROP1";
        case Notion::PO: return "PO";
    }
    return "?";
}

std::optional<Notion> parse_notion(std::string_view text) {
    std::string upper(text);
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (Notion n : kAllNotions) {
        if (notion_name(n) == upper) return n;
    }
    return std::nullopt;
}

std::string_view side_name(AdjustmentSide side) {
    switch (side) {
        case AdjustmentSide::None: return "none";
        case AdjustmentSide::GoodRemoval: return "good-removal";
        case AdjustmentSide::ChoreCopy: return "chore-copy";
    }
    return "?";
}

const NotionResult* FairnessReport::find(Notion notion) const {
    for (const auto& r : results) {
        if (r.notion == notion) return &r;
    }
    return nullptr;
}

bool envies(const Instance& inst, const Allocation& alloc, AgentIndex i, AgentIndex j) {
    return value(inst, i, alloc.bundle(i)) < value(inst, i, alloc.bundle(j));
}

NotionResult check_ef(const Instance& inst, const Allocation& alloc) {
    require_utilities(inst);
    require_same_shape(inst, alloc);
    const std::size_t n = inst.agent_count();
    for (AgentIndex i = 0; i < n; ++i) {
        const Rational own = value(inst, i, alloc.bundle(i));
        for (AgentIndex j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational other = value(inst, i, alloc.bundle(j));
            if (own < other) {
                return fails(Notion::EF, EnvyWitness{i, j, std::nullopt, AdjustmentSide::None, own, other});
            }
        }
    }
    return holds(Notion::EF);
}

NotionResult check_efx(const Instance& inst, const Allocation& alloc) {
    return check_efx(inst, classify_items(inst), alloc);
}

NotionResult check_efx(const Instance& inst, const ItemClassification& cls, const Allocation& alloc) {
    require_utilities(inst);
    require_same_shape(inst, alloc);
    const std::size_t n = inst.agent_count();
    for (AgentIndex i = 0; i < n; ++i) {
        const Bundle mine = alloc.bundle(i);
        const Rational own = value(inst, i, mine);
        for (AgentIndex j = 0; j < n; ++j) {
            if (i == j) continue;
            const Bundle theirs = alloc.bundle(j);
            Rational other = value(inst, i, theirs);
            if (!(own < other)) continue;

            // Goods of j and chores of i are disjoint, so one ascending pass
            // over their union visits every adjustment in item order.
            const Bundle adjustable = (theirs & cls.goods[i]) | (mine & cls.chores[i]);
            if (adjustable.empty()) {
                return fails(Notion::EFX, EnvyWitness{i, j, std::nullopt, AdjustmentSide::None, own, other});
            }
            for (ItemIndex o : adjustable.items()) {
                const bool removal = theirs.contains(o);
                Rational adjusted = value(inst, i, removal ? theirs.without(o) : theirs.with(o));
                if (own < adjusted) {
                    return fails(Notion::EFX,
                                 EnvyWitness{i, j, o,
                                             removal ? AdjustmentSide::GoodRemoval : AdjustmentSide::ChoreCopy,
                                             own, std::move(adjusted)});
                }
            }
        }
    }
    return holds(Notion::EFX);
}

NotionResult check_ef1(const Instance& inst, const Allocation& alloc) {
    return check_ef1(inst, classify_items(inst), alloc);
}

NotionResult check_ef1(const Instance& inst, const ItemClassification& cls, const Allocation& alloc) {
    require_utilities(inst);
    require_same_shape(inst, alloc);
    const std::size_t n = inst.agent_count();
    for (AgentIndex i = 0; i < n; ++i) {
        const Bundle mine = alloc.bundle(i);
        const Rational own = value(inst, i, mine);
        for (AgentIndex j = 0; j < n; ++j) {
            if (i == j) continue;
            const Bundle theirs = alloc.bundle(j);
            Rational other = value(inst, i, theirs);
            if (!(own < other)) continue;

            EnvyWitness closest{i, j, std::nullopt, AdjustmentSide::None, own, other};
            bool repaired = false;
            const Bundle adjustable = (theirs & cls.goods[i]) | (mine & cls.chores[i]);
            for (ItemIndex o : adjustable.items()) {
                const bool removal = theirs.contains(o);
                Rational adjusted = value(inst, i, removal ? theirs.without(o) : theirs.with(o));
                if (!(own < adjusted)) {
                    repaired = true;
                    break;
                }
                if (!closest.item || adjusted < closest.adjusted_value) {
                    closest.item = o;
                    closest.side = removal ? AdjustmentSide::GoodRemoval : AdjustmentSide::ChoreCopy;
                    closest.adjusted_value = std::move(adjusted);
                }
            }
            if (!repaired) return fails(Notion::EF1, std::move(closest));
        }
    }
    return holds(Notion::EF1);
}

NotionResult check_prop(const Instance& inst, const Allocation& alloc) {
    require_utilities(inst);
    require_same_shape(inst, alloc);
    for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
        Rational own = value(inst, i, alloc.bundle(i));
        Rational threshold = share_threshold(inst, i);
        if (own < threshold) {
            return fails(Notion::PROP, ShareWitness{i, own, own, std::move(threshold)});
        }
    }
    return holds(Notion::PROP);
}

NotionResult check_prop1(const Instance& inst, const Allocation& alloc) {
    require_utilities(inst);
    require_same_shape(inst, alloc);
    const Bundle all = inst.all_items();
    for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
        const Bundle mine = alloc.bundle(i);
        Rational own = value(inst, i, mine);
        Rational best = own;
        for (ItemIndex o : all.items()) {
            Rational adjusted = value(inst, i, mine.contains(o) ? mine.without(o) : mine.with(o));
            if (best < adjusted) best = std::move(adjusted);
        }
        Rational threshold = share_threshold(inst, i);
        if (best < threshold) {
            return fails(Notion::PROP1, ShareWitness{i, std::move(own), std::move(best), std::move(threshold)});
        }
    }
    return holds(Notion::PROP1);
}

NotionResult check_po(const Instance& inst, const Allocation& alloc, const SearchLimits& limits) {
    require_utilities(inst);
    require_same_shape(inst, alloc);
    const std::size_t n = inst.agent_count();
    std::vector<Rational> base(n);
    for (AgentIndex i = 0; i < n; ++i) base[i] = value(inst, i, alloc.bundle(i));

    AllocationEnumerator e(inst, limits);
    do {
        const auto& u = e.utilities();
        bool weakly_better = true;
        bool strictly_better = false;
        for (AgentIndex i = 0; i < n && weakly_better; ++i) {
            const auto c = u[i] <=> base[i];
            if (c < 0) weakly_better = false;
            if (c > 0) strictly_better = true;
        }
        if (weakly_better && strictly_better) return fails(Notion::PO, ParetoWitness{e.allocation()});
    } while (e.next());
    return holds(Notion::PO);
}

FairnessReport audit(const Instance& inst, const Allocation& alloc, std::span<const Notion> notions,
                     const SearchLimits& limits) {
    FairnessReport report;
    std::optional<ItemClassification> cls;
    auto classification = [&]() -> const ItemClassification& {
        if (!cls) cls = classify_items(inst);
        return *cls;
    };
    for (Notion notion : notions) {
        switch (notion) {
            case Notion::EF: report.results.push_back(check_ef(inst, alloc)); break;
            case Notion::EF1: report.results.push_back(check_ef1(inst, classification(), alloc)); break;
            case Notion::EFX: report.results.push_back(check_efx(inst, classification(), alloc)); break;
            case Notion::PROP: report.results.push_back(check_prop(inst, alloc)); break;
            case Notion::PROP1: report.results.push_back(check_prop1(inst, alloc)); break;
            case Notion::PO:
                try {
                    report.results.push_back(check_po(inst, alloc, limits));
                } catch (const SearchSpaceTooLarge& e) {
                    report.results.push_back(NotionResult{Notion::PO, Verdict::NotApplicable, {}, e.what()});
                }
                break;
        }
    }
    return report;
}

namespace {

void require_aversions(const Instance& inst, const Allocation& alloc) {
    if (inst.sense() != ValueSense::Aversion) {
        throw InstanceError("chores variants expect an aversion view");
    }
    require_same_shape(inst, alloc);
}

}  // namespace

NotionResult check_ef1_chores(const Instance& aversions, const Allocation& alloc) {
    require_aversions(aversions, alloc);
    const std::size_t n = aversions.agent_count();
    for (AgentIndex i = 0; i < n; ++i) {
        const Bundle mine = alloc.bundle(i);
        const Rational own = value(aversions, i, mine);
        for (AgentIndex j = 0; j < n; ++j) {
            const Bundle theirs = alloc.bundle(j);
            Rational other = value(aversions, i, theirs);
            if (own <= other) continue;
            bool repaired = false;
            for (ItemIndex c : mine.items()) {
                if (own <= value(aversions, i, theirs.with(c))) {
                    repaired = true;
                    break;
                }
            }
            if (!repaired) {
                return fails(Notion::EF1, EnvyWitness{i, j, std::nullopt, AdjustmentSide::None, own, other});
            }
        }
    }
    return holds(Notion::EF1);
}

NotionResult check_prop1_chores(const Instance& aversions, const Allocation& alloc) {
    require_aversions(aversions, alloc);
    const std::size_t n = aversions.agent_count();
    for (AgentIndex i = 0; i < n; ++i) {
        const Bundle mine = alloc.bundle(i);
        Rational own = value(aversions, i, mine);
        Rational threshold = value(aversions, i, aversions.all_items()) / Rational(n);
        if (own <= threshold) continue;
        Rational best = own;
        for (ItemIndex c : mine.items()) {
            Rational reduced = value(aversions, i, mine.without(c));
            if (reduced < best) best = std::move(reduced);
        }
        if (best > threshold) {
            return fails(Notion::PROP1, ShareWitness{i, std::move(own), std::move(best), std::move(threshold)});
        }
    }
    return holds(Notion::PROP1);
}

void EnvyGraph::add_edge(AgentIndex from, AgentIndex to) {
    auto& targets = out_.at(from);
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it == targets.end() || *it != to) targets.insert(it, to);
}

bool EnvyGraph::has_edge(AgentIndex from, AgentIndex to) const {
    const auto& targets = out_.at(from);
    return std::binary_search(targets.begin(), targets.end(), to);
}

std::vector<std::pair<AgentIndex, AgentIndex>> EnvyGraph::edges() const {
    std::vector<std::pair<AgentIndex, AgentIndex>> out;
    for (AgentIndex u = 0; u < out_.size(); ++u) {
        for (AgentIndex v : out_[u]) out.emplace_back(u, v);
    }
    return out;
}

bool EnvyGraph::empty() const {
    return std::all_of(out_.begin(), out_.end(), [](const auto& t) { return t.empty(); });
}

std::optional<std::vector<AgentIndex>> EnvyGraph::find_cycle() const {
    enum class Mark { Unseen, OnPath, Done };
    const std::size_t n = out_.size();
    std::vector<Mark> mark(n, Mark::Unseen);

    for (AgentIndex start = 0; start < n; ++start) {
        if (mark[start] != Mark::Unseen || out_[start].empty()) continue;
        // (agent, index of the next edge to follow)
        std::vector<std::pair<AgentIndex, std::size_t>> path{{start, 0}};
        mark[start] = Mark::OnPath;
        while (!path.empty()) {
            auto& [u, next_edge] = path.back();
            if (next_edge == out_[u].size()) {
                mark[u] = Mark::Done;
                path.pop_back();
                continue;
            }
            const AgentIndex v = out_[u][next_edge++];
            if (mark[v] == Mark::OnPath) {
                std::vector<AgentIndex> cycle;
                auto it = std::find_if(path.begin(), path.end(), [v](const auto& p) { return p.first == v; });
                for (; it != path.end(); ++it) cycle.push_back(it->first);
                return cycle;
            }
            if (mark[v] == Mark::Unseen) {
                mark[v] = Mark::OnPath;
                path.emplace_back(v, 0);
            }
        }
    }
    return std::nullopt;
}

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc) {
    require_same_shape(inst, alloc);
    const std::size_t n = inst.agent_count();
    EnvyGraph graph(n);
    for (AgentIndex u = 0; u < n; ++u) {
        const Rational own = value(inst, u, alloc.bundle(u));
        for (AgentIndex v = 0; v < n; ++v) {
            if (u != v && own < value(inst, u, alloc.bundle(v))) graph.add_edge(u, v);
        }
    }
    return graph;
}

Allocation rotate_bundles(const Allocation& alloc, std::span<const AgentIndex> cycle) {
    std::vector<Bundle> bundles = alloc.bundles();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        bundles[cycle[k]] = alloc.bundle(cycle[(k + 1) % cycle.size()]);
    }
    return Allocation::from_bundles(bundles, alloc.item_count());
}

Allocation eliminate_envy_cycles(const Instance& inst, const Allocation& alloc) {
    Allocation current = alloc;
    while (auto cycle = build_envy_graph(inst, current).find_cycle()) {
        current = rotate_bundles(current, *cycle);
    }
    return current;
}

}  // namespace fairdiv
