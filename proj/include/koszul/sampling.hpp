#pragma once

// Deterministic sampling for the verification suites. All randomness comes
// from splitmix64 seeded explicitly, so a (seed, dimension, degree) triple
// fully determines every sample on every platform.

#include <cstdint>
#include <vector>

#include "koszul/algebra.hpp"

namespace koszul {

class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Small integer in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// All exponent vectors over `nvars` variables with total degree <= max_deg.
inline std::vector<std::vector<int>> exponent_tuples(int nvars, int max_deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    // odometer enumeration in lexicographic order
    auto total = [&] {
        int t = 0;
        for (int e : cur) t += e;
        return t;
    };
    while (true) {
        if (total() <= max_deg) out.push_back(cur);
        int i = nvars - 1;
        while (i >= 0) {
            if (++cur[static_cast<std::size_t>(i)] <= max_deg) break;
            cur[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

/// Random polynomial in the given even generator families, total degree
/// <= max_deg, integer coefficients in [-3, 3] (sparse: zero allowed).
inline expression random_polynomial(const chart& c, const std::vector<family>& fams,
                                    int max_deg, splitmix64& rng) {
    std::vector<generator> vars;
    for (family f : fams)
        for (int i = 1; i <= c.dim; ++i) vars.push_back({f, i});
    std::vector<raw_term> raws;
    for (const auto& exps : exponent_tuples(static_cast<int>(vars.size()), max_deg)) {
        int coeff = static_cast<int>(rng.below(7)) - 3;
        if (coeff == 0) continue;
        raw_term t;
        t.coeff = rational(coeff);
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (exps[v] > 0) t.even_factors.push_back({vars[v], exps[v]});
        raws.push_back(std::move(t));
    }
    return expression::make(c, raws);
}

/// Random homogeneous monomial: even exponents <= max_even_deg over the
/// chart's even families, a random subset of odd generators.
inline expression random_monomial(const chart& c, int max_even_deg, splitmix64& rng) {
    raw_term t;
    int coeff = 0;
    while (coeff == 0) coeff = static_cast<int>(rng.below(7)) - 3;
    t.coeff = rational(coeff);
    std::vector<family> evens =
        c.mode == chart_mode::base
            ? std::vector<family>{family::coordinate, family::base_momentum}
            : std::vector<family>{family::coordinate, family::dual_coordinate,
                                  family::momentum, family::dual_momentum};
    int budget = max_even_deg;
    for (family f : evens)
        for (int i = 1; i <= c.dim; ++i) {
            int e = rng.range(0, budget > 0 ? 1 : 0);
            if (e > 0) {
                t.even_factors.push_back({{f, i}, e});
                budget -= e;
            }
        }
    for (int i = 1; i <= c.dim; ++i) {
        if (rng.below(2)) t.odd_factors.push_back(gen_xi(i));
        if (rng.below(2)) t.odd_factors.push_back(gen_xis(i));
    }
    return expression::make(c, {t});
}

}  // namespace koszul
