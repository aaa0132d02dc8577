#include "fairdiv/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "fairdiv/error.hpp"

namespace fairdiv {

std::vector<ItemIndex> Bundle::items() const {
    std::vector<ItemIndex> out;
    out.reserve(size());
    for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
        out.push_back(static_cast<ItemIndex>(std::countr_zero(rest)));
    }
    return out;
}

Instance::Instance(std::size_t agents, std::vector<std::string> items, ValuationModel valuation,
                   ValueSense sense)
    : agents_(agents), items_(std::move(items)), valuation_(std::move(valuation)), sense_(sense) {
    if (agents_ == 0) throw InstanceError("an instance needs at least one agent");
    if (items_.size() > kMaxItems) {
        throw InstanceError("at most " + std::to_string(kMaxItems) + " items are supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : items_) {
        if (!seen.insert(name).second) throw InstanceError("duplicate item identifier \"" + name + "\"");
    }

    const std::size_t m = items_.size();
    if (const auto* add = std::get_if<AdditiveValuation>(&valuation_)) {
        if (add->matrix.size() != agents_) {
            throw InstanceError("valuation matrix has " + std::to_string(add->matrix.size()) +
                                " rows for " + std::to_string(agents_) + " agents");
        }
        for (std::size_t i = 0; i < agents_; ++i) {
            if (add->matrix[i].size() != m) {
                throw InstanceError("row " + std::to_string(i) + " has " +
                                    std::to_string(add->matrix[i].size()) + " entries for " +
                                    std::to_string(m) + " items");
            }
        }
    } else {
        const auto& table = std::get<IdenticalSetFunction>(valuation_).table;
        if (m > kMaxSetFunctionItems) {
            throw InstanceError("set-function instances are limited to " +
                                std::to_string(kMaxSetFunctionItems) + " items");
        }
        if (table.size() != (std::size_t{1} << m)) {
            throw InstanceError("set-function table has " + std::to_string(table.size()) +
                                " entries, expected 2^" + std::to_string(m));
        }
    }
}

std::optional<ItemIndex> Instance::find_item(std::string_view name) const {
    auto it = std::find(items_.begin(), items_.end(), name);
    if (it == items_.end()) return std::nullopt;
    return static_cast<ItemIndex>(it - items_.begin());
}

const AdditiveValuation& Instance::additive() const {
    const auto* add = std::get_if<AdditiveValuation>(&valuation_);
    if (add == nullptr) throw NotAdditive();
    return *add;
}

bool operator==(const AdditiveValuation& a, const AdditiveValuation& b) { return a.matrix == b.matrix; }
bool operator==(const IdenticalSetFunction& a, const IdenticalSetFunction& b) { return a.table == b.table; }

bool operator==(const Instance& a, const Instance& b) {
    return a.agents_ == b.agents_ && a.items_ == b.items_ && a.sense_ == b.sense_ &&
           a.valuation_ == b.valuation_;
}

Allocation::Allocation(std::size_t agents, std::vector<AgentIndex> owners)
    : owners_(std::move(owners)), bundles_(agents) {
    if (agents == 0) throw InstanceError("an allocation needs at least one agent");
    if (owners_.size() > kMaxItems) throw InstanceError("too many items");
    for (ItemIndex o = 0; o < owners_.size(); ++o) {
        if (owners_[o] >= agents) {
            throw InstanceError("item " + std::to_string(o) + " assigned to nonexistent agent " +
                                std::to_string(owners_[o]));
        }
        bundles_[owners_[o]] = bundles_[owners_[o]].with(o);
    }
}

Allocation Allocation::from_bundles(std::span<const Bundle> bundles, std::size_t items) {
    std::vector<AgentIndex> owners(items, bundles.size());
    for (AgentIndex i = 0; i < bundles.size(); ++i) {
        if (!bundles[i].subset_of(Bundle::first(items))) {
            throw InstanceError("bundle of agent " + std::to_string(i) + " contains unknown items");
        }
        for (ItemIndex o : bundles[i].items()) {
            if (owners[o] != bundles.size()) {
                throw InstanceError("item " + std::to_string(o) + " appears in two bundles");
            }
            owners[o] = i;
        }
    }
    for (ItemIndex o = 0; o < items; ++o) {
        if (owners[o] == bundles.size()) {
            throw InstanceError("item " + std::to_string(o) + " is not allocated");
        }
    }
    return Allocation(bundles.size(), std::move(owners));
}

namespace {

std::string describe(const Instance& inst, Bundle b) {
    std::string out = "{";
    for (ItemIndex o : b.items()) {
        if (out.size() > 1) out += ", ";
        out += inst.item_name(o);
    }
    return out + "}";
}

}  // namespace

ValidationVerdict validate_instance(const Instance& inst) {
    const auto* fn = inst.set_function();
    if (fn == nullptr) return {};

    const auto& table = fn->table;
    if (!table[0].is_zero()) {
        return {Violation{ViolationKind::NonzeroEmptySet, 0, {}, {},
                          "v(empty set) = " + table[0].str() + ", expected 0"}};
    }
    const std::size_t m = inst.item_count();
    const std::uint64_t full = std::uint64_t{1} << m;
    for (ItemIndex o = 0; o < m; ++o) {
        const std::uint64_t bit = std::uint64_t{1} << o;
        std::optional<std::uint64_t> raising;
        std::optional<std::uint64_t> lowering;
        for (std::uint64_t s = 0; s < full && !(raising && lowering); ++s) {
            if (s & bit) continue;
            const auto marginal = table[s | bit] <=> table[s];
            if (marginal > 0 && !raising) raising = s;
            if (marginal < 0 && !lowering) lowering = s;
        }
        if (raising && lowering) {
            Violation v{ViolationKind::MixedMonotonicity, o, Bundle(*raising), Bundle(*lowering), {}};
            v.message = "item \"" + inst.item_name(o) + "\" raises the value of " +
                        describe(inst, v.raising_set) + " but lowers the value of " + describe(inst, v.lowering_set);
            return {std::move(v)};
        }
    }
    return {};
}

ItemClassification classify_items(const Instance& inst) {
    const std::size_t n = inst.agent_count();
    const std::size_t m = inst.item_count();
    ItemClassification out{std::vector<Bundle>(n), std::vector<Bundle>(n)};

    if (const auto* fn = inst.set_function()) {
        Bundle goods;
        Bundle chores;
        const std::uint64_t full = std::uint64_t{1} << m;
        for (ItemIndex o = 0; o < m; ++o) {
            const std::uint64_t bit = std::uint64_t{1} << o;
            bool lowers = false;
            for (std::uint64_t s = 0; s < full && !lowers; ++s) {
                if (!(s & bit) && fn->table[s | bit] < fn->table[s]) lowers = true;
            }
            if (lowers) {
                chores = chores.with(o);
            } else {
                goods = goods.with(o);
            }
        }
        std::fill(out.goods.begin(), out.goods.end(), goods);
        std::fill(out.chores.begin(), out.chores.end(), chores);
        return out;
    }

    const auto& matrix = inst.additive().matrix;
    for (AgentIndex i = 0; i < n; ++i) {
        for (ItemIndex o = 0; o < m; ++o) {
            if (matrix[i][o].sign() >= 0) {
                out.goods[i] = out.goods[i].with(o);
            } else {
                out.chores[i] = out.chores[i].with(o);
            }
        }
    }
    return out;
}

Rational value(const Instance& inst, AgentIndex agent, Bundle bundle) {
    if (const auto* fn = inst.set_function()) return fn->table[bundle.mask()];
    const auto& row = inst.additive().matrix.at(agent);
    Rational sum;
    for (ItemIndex o : bundle.items()) sum += row[o];
    return sum;
}

Instance rescale_common_total(const Instance& inst, const Rational& total) {
    auto matrix = inst.additive().matrix;
    for (AgentIndex i = 0; i < matrix.size(); ++i) {
        Rational row_total;
        for (const auto& x : matrix[i]) row_total += x;
        if (row_total.is_zero()) throw ZeroTotal(i);
        if (row_total.sign() != total.sign()) throw SignMismatch(i);
        const Rational factor = total / row_total;
        for (auto& x : matrix[i]) x *= factor;
    }
    return Instance(inst.agent_count(), inst.items(), AdditiveValuation{std::move(matrix)}, inst.sense());
}

namespace {

Instance negated(const Instance& inst, ValueSense sense) {
    auto matrix = inst.additive().matrix;
    for (AgentIndex i = 0; i < matrix.size(); ++i) {
        for (ItemIndex o = 0; o < matrix[i].size(); ++o) {
            if (matrix[i][o].sign() > 0) throw NotChoresOnly(i, o);
            matrix[i][o] = -matrix[i][o];
        }
    }
    return Instance(inst.agent_count(), inst.items(), AdditiveValuation{std::move(matrix)}, sense);
}

}  // namespace

Instance aversion_view(const Instance& inst) {
    if (inst.sense() != ValueSense::Utility) throw InstanceError("instance is already an aversion view");
    return negated(inst, ValueSense::Aversion);
}

Instance utility_view(const Instance& inst) {
    if (inst.sense() != ValueSense::Aversion) throw InstanceError("instance is not an aversion view");
    auto matrix = inst.additive().matrix;
    for (AgentIndex i = 0; i < matrix.size(); ++i) {
        for (ItemIndex o = 0; o < matrix[i].size(); ++o) {
            if (matrix[i][o].sign() < 0) throw InstanceError("aversions must be nonnegative");
            matrix[i][o] = -matrix[i][o];
        }
    }
    return Instance(inst.agent_count(), inst.items(), AdditiveValuation{std::move(matrix)}, ValueSense::Utility);
}

bool is_chores_only(const Instance& inst) {
    if (!inst.is_additive() || inst.sense() != ValueSense::Utility) return false;
    for (const auto& row : inst.additive().matrix) {
        for (const auto& x : row) {
            if (x.sign() > 0) return false;
        }
    }
    return true;
}

Instance restrict_items(const Instance& inst, Bundle keep) {
    const auto kept = keep.items();
    std::vector<std::string> names;
    for (ItemIndex o : kept) names.push_back(inst.item_name(o));

    if (const auto* fn = inst.set_function()) {
        std::vector<Rational> table(std::size_t{1} << kept.size());
        for (std::uint64_t k = 0; k < table.size(); ++k) {
            std::uint64_t mask = 0;
            for (std::size_t b = 0; b < kept.size(); ++b) {
                if (k & (std::uint64_t{1} << b)) mask |= std::uint64_t{1} << kept[b];
            }
            table[k] = fn->table[mask];
        }
        return Instance(inst.agent_count(), std::move(names), IdenticalSetFunction{std::move(table)}, inst.sense());
    }

    const auto& src = inst.additive().matrix;
    std::vector<std::vector<Rational>> matrix(src.size());
    for (AgentIndex i = 0; i < src.size(); ++i) {
        for (ItemIndex o : kept) matrix[i].push_back(src[i][o]);
    }
    return Instance(inst.agent_count(), std::move(names), AdditiveValuation{std::move(matrix)}, inst.sense());
}

Allocation restrict_allocation(const Allocation& alloc, Bundle keep) {
    std::vector<AgentIndex> owners;
    for (ItemIndex o : keep.items()) owners.push_back(alloc.owner(o));
    return Allocation(alloc.agent_count(), std::move(owners));
}

}  // namespace fairdiv
