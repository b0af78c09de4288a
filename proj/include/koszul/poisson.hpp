#pragma once

// Canonical even Poisson bracket on the cotangent charts, plus the derived
// bracket combinators and the Legendre transform.
//
// The bracket is the Darboux sum over conjugate generator pairs,
//
//     {f, g} = sum_(A,B) w(A,B) * dR_A f * dL_B g,
//
// with a right derivative on the first slot and a left derivative on the
// second. Pair weights: {xs_i, x^i} = +1 (base mode), {p_a, x^a} = +1 and
// {pt^a, xt_a} = +1 (doubled mode), with even pairs antisymmetric; the odd
// pair is symmetric, {xi^i, xis_i} = {xis_i, xi^i} = +1. This fixes graded
// antisymmetry, the graded Leibniz rule, Jacobi, and even bracket parity,
// and makes {h, .} of the structure Hamiltonians act as the differential
// with a plus sign on functions.

#include "koszul/algebra.hpp"

namespace koszul {

struct bracket_pair {
    generator lhs;
    generator rhs;
    int weight;  // +1 or -1
};

inline std::vector<bracket_pair> conjugate_pairs(const chart& c) {
    std::vector<bracket_pair> out;
    out.reserve(static_cast<std::size_t>(c.dim) * 6);
    for (int i = 1; i <= c.dim; ++i) {
        if (c.mode == chart_mode::base) {
            out.push_back({gen_xs(i), gen_x(i), +1});
            out.push_back({gen_x(i), gen_xs(i), -1});
        } else {
            out.push_back({gen_p(i), gen_x(i), +1});
            out.push_back({gen_x(i), gen_p(i), -1});
            out.push_back({gen_pt(i), gen_xt(i), +1});
            out.push_back({gen_xt(i), gen_pt(i), -1});
        }
        out.push_back({gen_xi(i), gen_xis(i), +1});
        out.push_back({gen_xis(i), gen_xi(i), +1});
    }
    return out;
}

inline expression poisson(const expression& f, const expression& g) {
    if (f.get_chart() != g.get_chart())
        throw chart_error("poisson bracket of expressions on different charts");
    const chart c = f.get_chart();
    expression acc(c);
    for (const bracket_pair& p : conjugate_pairs(c)) {
        expression df = right_partial(p.lhs, f);
        if (df.is_zero()) continue;
        expression dg = partial(p.rhs, g);
        if (dg.is_zero()) continue;
        acc += rational(p.weight) * (df * dg);
    }
    return acc;
}

/// {h, f}; the action of the Hamiltonian vector field of h.
inline expression hamiltonian_action(const expression& h, const expression& f) {
    return poisson(h, f);
}

/// Derived bracket combinator {{h, f}, g}.
inline expression derived(const expression& h, const expression& f, const expression& g) {
    return poisson(poisson(h, f), g);
}

/// Pullback along the Legendre transform: exchanges each odd fibre
/// generator with its conjugate momentum (xi_i <-> xis_i), fixing the even
/// generators. An involution, and a symplectomorphism for `poisson`.
inline expression legendre(const expression& f) {
    std::vector<raw_term> raws;
    raws.reserve(f.terms().size());
    for (const monomial& m : f.terms()) {
        raw_term t{m.coeff, m.even, m.odd};
        for (generator& g : t.odd_factors) {
            if (g.fam == family::fibre)
                g.fam = family::dual_fibre;
            else if (g.fam == family::dual_fibre)
                g.fam = family::fibre;
        }
        raws.push_back(std::move(t));
    }
    return expression::make(f.get_chart(), raws);
}

}  // namespace koszul
