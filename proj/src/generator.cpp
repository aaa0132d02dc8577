#include "fairdiv/generator.hpp"

#include <algorithm>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

constexpr long kPerturbationSteps = 100;

struct Grid {
    long long lo;  // in units of 1/resolution
    long long hi;
    long resolution;

    Rational draw(std::mt19937_64& rng) const {
        std::uniform_int_distribution<long long> dist(lo, hi);
        return Rational(dist(rng), resolution);
    }
};

long long grid_floor(const Rational& x, long resolution) {
    mpz_class scaled = x.numerator() * resolution;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
    if (!q.fits_slong_p()) throw ConfigError("value range too large");
    return q.get_si();
}

long long grid_ceil(const Rational& x, long resolution) {
    mpz_class scaled = x.numerator() * resolution;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
    if (!q.fits_slong_p()) throw ConfigError("value range too large");
    return q.get_si();
}

Grid make_grid(const GeneratorConfig& c) {
    if (c.resolution < 1) throw ConfigError("resolution must be positive");
    const bool chores = c.family == Family::AdditiveChores;
    const Rational lo = c.value_lo.value_or(Rational(-10));
    const Rational hi = c.value_hi.value_or(chores ? Rational(-1, 10) : Rational(10));
    if (hi < lo) throw ConfigError("empty value range");
    Grid g{grid_ceil(lo, c.resolution), grid_floor(hi, c.resolution), c.resolution};
    if (chores) g.hi = std::min(g.hi, -1LL);
    if (g.hi < g.lo) throw ConfigError("value range contains no admissible grid point");
    if (c.family == Family::GeneralIdenticalNonzeroMarginal && g.lo == 0 && g.hi == 0) {
        throw ConfigError("nonzero-marginal family needs a range with nonzero values");
    }
    return g;
}

Rational draw_nonzero(const Grid& g, std::mt19937_64& rng) {
    if (g.lo == 0 && g.hi == 0) return Rational(0);
    for (;;) {
        Rational x = g.draw(rng);
        if (!x.is_zero()) return x;
    }
}

std::vector<std::string> item_names(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t o = 0; o < m; ++o) names.push_back(default_item_name(o));
    return names;
}

}  // namespace

std::string_view family_name(Family family) {
    switch (family) {
        case Family::AdditiveChores: return "additive-chores";
        case Family::AdditiveMixed: return "additive-mixed";
        case Family::IdenticalAdditive: return "identical-additive";
        case Family::GeneralIdentical: return "general-identical";
        case Family::GeneralIdenticalNonzeroMarginal: return "general-identical-nonzero-marginal";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::AdditiveChores, Family::AdditiveMixed, Family::IdenticalAdditive,
                     Family::GeneralIdentical, Family::GeneralIdenticalNonzeroMarginal}) {
        if (family_name(f) == name) return f;
    }
    throw ConfigError("unknown family \"" + std::string(name) + "\"");
}

std::string default_item_name(std::size_t index) {
    if (index < 26) return std::string(1, static_cast<char>('a' + index));
    return "o" + std::to_string(index);
}

IdenticalSetFunction perturbed_set_function(std::span<const Rational> weights, std::mt19937_64& rng) {
    const std::size_t m = weights.size();
    if (m > kMaxSetFunctionItems) throw ConfigError("set-function instances are limited to 16 items");

    std::uint64_t support = 0;
    std::optional<Rational> smallest;
    for (std::size_t o = 0; o < m; ++o) {
        if (weights[o].is_zero()) continue;
        support |= std::uint64_t{1} << o;
        const Rational mag = weights[o].abs();
        if (!smallest || mag < *smallest) smallest = mag;
    }
    const Rational eps = smallest ? *smallest / Rational(2) : Rational(0);

    const std::size_t size = std::size_t{1} << m;
    // h on subsets of the support, read through S ∩ support.
    std::vector<Rational> h(size);
    std::uniform_int_distribution<long> step(0, kPerturbationSteps - 1);
    for (std::uint64_t s = 1; s < size; ++s) {
        if ((s & ~support) == 0) h[s] = Rational(step(rng), kPerturbationSteps);
    }

    IdenticalSetFunction fn{std::vector<Rational>(size)};
    for (std::uint64_t s = 1; s < size; ++s) {
        Rational v = eps * h[s & support];
        for (std::size_t o = 0; o < m; ++o) {
            if (s & (std::uint64_t{1} << o)) v += weights[o];
        }
        fn.table[s] = std::move(v);
    }
    return fn;
}

Instance generate(const GeneratorConfig& c) {
    if (c.agents < 1) throw ConfigError("at least one agent is required");
    if (c.items > kMaxItems) throw ConfigError("at most 64 items are supported");
    const Grid grid = make_grid(c);
    std::mt19937_64 rng(c.seed);
    const std::size_t n = c.agents;
    const std::size_t m = c.items;

    switch (c.family) {
        case Family::AdditiveChores:
        case Family::AdditiveMixed:
        case Family::IdenticalAdditive: {
            std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(m));
            const std::size_t rows = c.family == Family::IdenticalAdditive ? 1 : n;
            for (std::size_t i = 0; i < rows; ++i) {
                for (auto& x : matrix[i]) x = grid.draw(rng);
            }
            for (std::size_t i = rows; i < n; ++i) matrix[i] = matrix[0];
            Instance inst(n, item_names(m), AdditiveValuation{std::move(matrix)});
            return c.rescale_total ? rescale_common_total(inst, *c.rescale_total) : inst;
        }
        case Family::GeneralIdentical:
        case Family::GeneralIdenticalNonzeroMarginal: {
            if (c.rescale_total) throw ConfigError("rescaling applies to additive families only");
            if (m > kMaxSetFunctionItems) throw ConfigError("set-function instances are limited to 16 items");
            const bool strict = c.family == Family::GeneralIdenticalNonzeroMarginal;
            std::vector<Rational> weights(m);
            std::bernoulli_distribution flat(0.25);
            for (auto& w : weights) {
                // Plain general-identical instances get some zero-marginal items.
                w = (!strict && flat(rng)) ? Rational(0) : draw_nonzero(grid, rng);
            }
            return Instance(n, item_names(m), perturbed_set_function(weights, rng));
        }
    }
    throw ConfigError("unknown family");
}

}  // namespace fairdiv
