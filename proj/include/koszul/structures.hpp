#pragma once

// Named example structures used by the verification suites and as CLI
// defaults: the tangent bundle, the so(3) Lie-Poisson bialgebroid, and two
// deliberately broken data sets that serve as negative controls.

#include "koszul/algebroid.hpp"

namespace koszul {

inline int epsilon3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    // parity of the permutation (i j k) of (1 2 3)
    int inversions = (i > j) + (i > k) + (j > k);
    return inversions % 2 == 0 ? 1 : -1;
}

/// Tangent bundle with zero dual: identity anchor, vanishing brackets.
inline lie_bialgebroid tangent_bialgebroid(int dim) {
    return lie_bialgebroid::with_zero_dual(lie_algebroid::tangent(dim));
}

/// (TM, T*M) over R^3 with the so(3) Lie-Poisson bivector pi^{ij} =
/// eps^{ijk} x^k: coanchor pi, dual structure Q_k^{ij} = d_k pi^{ij}.
inline lie_bialgebroid so3_bialgebroid() {
    const int d = 3;
    const chart c = base_chart(d);
    lie_algebroid primal = lie_algebroid::tangent(d);
    dual_lie_algebroid dual(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            expression pi(c);
            for (int k = 1; k <= d; ++k) {
                int s = epsilon3(i, j, k);
                if (s != 0)
                    pi += rational(s) * expression::from_generator(c, gen_x(k));
            }
            dual.set_coanchor(i, j, pi);
            for (int k = 1; k <= d; ++k) {
                int s = epsilon3(i, j, k);
                if (s != 0 && i < j)
                    dual.set_structure(k, i, j, expression::constant(c, rational(s)));
            }
        }
    return lie_bialgebroid(std::move(primal), std::move(dual));
}

/// The bivector pi^{12} = x^1, pi^{13} = x^2, pi^{23} = 0 with Q = d pi:
/// not Poisson (its Jacobiator J^{123} = x^2), so the bialgebroid check
/// must fail on it.
inline lie_bialgebroid nonjacobi_bialgebroid() {
    const int d = 3;
    const chart c = base_chart(d);
    lie_algebroid primal = lie_algebroid::tangent(d);
    dual_lie_algebroid dual(d);

    std::vector<std::vector<expression>> pi(
        3, std::vector<expression>(3, expression::zero(c)));
    pi[0][1] = expression::from_generator(c, gen_x(1));
    pi[0][2] = expression::from_generator(c, gen_x(2));
    pi[1][0] = -pi[0][1];
    pi[2][0] = -pi[0][2];

    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            dual.set_coanchor(
                i, j, pi[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
            if (i < j)
                for (int k = 1; k <= d; ++k)
                    dual.set_structure(
                        k, i, j,
                        partial(gen_x(k), pi[static_cast<std::size_t>(i - 1)]
                                            [static_cast<std::size_t>(j - 1)]));
        }
    return lie_bialgebroid(std::move(primal), std::move(dual));
}

/// The bivector table of nonjacobi_bialgebroid, for the Jacobiator oracle.
inline std::vector<std::vector<expression>> nonjacobi_bivector() {
    const chart c = base_chart(3);
    std::vector<std::vector<expression>> pi(
        3, std::vector<expression>(3, expression::zero(c)));
    pi[0][1] = expression::from_generator(c, gen_x(1));
    pi[0][2] = expression::from_generator(c, gen_x(2));
    pi[1][0] = -pi[0][1];
    pi[2][0] = -pi[0][2];
    return pi;
}

/// The so(3) Lie-Poisson bivector table.
inline std::vector<std::vector<expression>> so3_bivector() {
    const chart c = base_chart(3);
    std::vector<std::vector<expression>> pi(
        3, std::vector<expression>(3, expression::zero(c)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            expression e(c);
            for (int k = 1; k <= 3; ++k) {
                int s = epsilon3(i, j, k);
                if (s != 0) e += rational(s) * expression::from_generator(c, gen_x(k));
            }
            pi[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = e;
        }
    return pi;
}

/// so(3) as a Lie algebra over the point (zero anchor, structure eps_ijk).
/// With zero anchor, {h, h} = 0 is exactly the Jacobi identity for f.
inline lie_algebroid so3_lie_algebra() {
    const int d = 3;
    const chart c = base_chart(d);
    lie_algebroid out(d);
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) {
                int s = epsilon3(i, j, k);
                if (s != 0) out.set_structure(k, i, j, expression::constant(c, rational(s)));
            }
    return out;
}

/// so(3) structure constants with an extra f^1_{12} = 1 entry. This breaks
/// the Jacobi identity (the Jacobiator on (e1,e2,e3) is -e2), so it drives
/// the negative controls for {h,h} = 0 and for Courant axiom 1.
inline lie_algebroid corrupted_so3_lie_algebra() {
    lie_algebroid out = so3_lie_algebra();
    out.set_structure(1, 1, 2, expression::constant(base_chart(3), rational(1)));
    return out;
}

inline lie_bialgebroid corrupted_so3_bialgebroid() {
    return lie_bialgebroid::with_zero_dual(corrupted_so3_lie_algebra());
}

}  // namespace koszul
