#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>

#include "fairdiv/model.hpp"

namespace fairdiv {

enum class Family {
    AdditiveChores,                   // distinct rows, every value < 0
    AdditiveMixed,                    // distinct rows, any sign
    IdenticalAdditive,                // one row shared by all agents
    GeneralIdentical,                 // shared item-wise monotone set function
    GeneralIdenticalNonzeroMarginal,  // same, with every marginal nonzero
};

std::string_view family_name(Family family);
/// Throws ConfigError for unknown names.
Family parse_family(std::string_view name);

struct GeneratorConfig {
    std::size_t agents = 3;
    std::size_t items = 5;
    Family family = Family::AdditiveChores;
    /// Bounds of the value range; per-family defaults when unset
    /// ([-10, -1/10] for chores, [-10, 10] otherwise).
    std::optional<Rational> value_lo;
    std::optional<Rational> value_hi;
    /// Values are drawn from the grid of multiples of 1/resolution.
    long resolution = 10;
    /// Additive families only: rescale every row to this common total.
    std::optional<Rational> rescale_total;
    std::uint64_t seed = 0;
};

/// Deterministic in the config: the same config yields the same instance.
Instance generate(const GeneratorConfig& config);

/// v(S) = sum of weights over S + eps * h(S), with h a random function on the
/// nonzero-weight items taking values in [0, 1) and h(∅) = 0, and eps half the
/// smallest nonzero |weight|. Every marginal of an item therefore has the sign
/// of its weight, and zero-weight items have zero marginals.
IdenticalSetFunction perturbed_set_function(std::span<const Rational> weights, std::mt19937_64& rng);

/// "a".."z" for small instances, "o26", "o27", ... beyond.
std::string default_item_name(std::size_t index);

}  // namespace fairdiv
