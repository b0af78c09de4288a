#pragma once

// Named verification suites over the whole engine. Each suite is a pure
// function of its parameters (seed, dimension, degree, sample count), so a
// report is reproducible byte for byte. Suites that embed a negative
// control PASS when the control fails in the expected way.

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/algebroid.hpp"
#include "koszul/dft.hpp"
#include "koszul/io.hpp"
#include "koszul/sampling.hpp"
#include "koszul/structures.hpp"

namespace koszul {

struct sample_params {
    int dim = 2;
    int degree = 2;
    int samples = 20;
    std::uint64_t seed = 1;
};

namespace detail {

inline double_section sample_double_section(const chart& c, int degree, splitmix64& rng,
                                            bool x_only = false) {
    double_section s = double_section::zero(c);
    std::vector<family> fams = x_only
                                   ? std::vector<family>{family::coordinate}
                                   : std::vector<family>{family::coordinate,
                                                         family::dual_coordinate};
    for (int i = 0; i < c.dim; ++i) {
        s.vec[static_cast<std::size_t>(i)] = random_polynomial(c, fams, degree, rng);
        s.form[static_cast<std::size_t>(i)] = random_polynomial(c, fams, degree, rng);
    }
    return s;
}

inline courant_section sample_courant_section(const chart& c, int degree, splitmix64& rng) {
    courant_section s = courant_section::zero(c);
    for (int i = 0; i < c.dim; ++i) {
        s.vec[static_cast<std::size_t>(i)] =
            random_polynomial(c, {family::coordinate}, degree, rng);
        s.form[static_cast<std::size_t>(i)] =
            random_polynomial(c, {family::coordinate}, degree, rng);
    }
    return s;
}

inline void note_residual(expression& slot, const expression& residual) {
    if (slot.is_zero() && !residual.is_zero()) slot = residual;
}

}  // namespace detail

/// Derived C-bracket against the component formula on seeded random
/// double-section pairs.
inline verification_report check_cbracket_equivalence(const sample_params& p) {
    const chart c = doubled_chart(p.dim);
    splitmix64 rng(p.seed);
    expression residual(c);
    for (int trial = 0; trial < p.samples; ++trial) {
        double_section s1 = detail::sample_double_section(c, p.degree, rng);
        double_section s2 = detail::sample_double_section(c, p.degree, rng);
        detail::note_residual(residual, lift_double(c, c_bracket_components(s1, s2)) -
                                            c_bracket(s1, s2));
    }
    verification_report out;
    out.add(check_result::from_residual("cbracket-derived-vs-components", residual));
    return out;
}

/// Structural rows of the component formula: vector-vector pairs have no
/// form part, form-form pairs no vector part, and the d = 1 hand example
/// comes out exactly.
inline verification_report check_cbracket_rows(const sample_params& p) {
    const chart c = doubled_chart(p.dim);
    splitmix64 rng(p.seed);
    verification_report out;

    expression rv(c), rf(c);
    for (int trial = 0; trial < p.samples; ++trial) {
        double_section v1 = double_section::zero(c), v2 = double_section::zero(c);
        double_section f1 = double_section::zero(c), f2 = double_section::zero(c);
        for (int i = 0; i < c.dim; ++i) {
            auto fams = {family::coordinate, family::dual_coordinate};
            v1.vec[static_cast<std::size_t>(i)] = random_polynomial(c, fams, p.degree, rng);
            v2.vec[static_cast<std::size_t>(i)] = random_polynomial(c, fams, p.degree, rng);
            f1.form[static_cast<std::size_t>(i)] = random_polynomial(c, fams, p.degree, rng);
            f2.form[static_cast<std::size_t>(i)] = random_polynomial(c, fams, p.degree, rng);
        }
        double_section vv = c_bracket_components(v1, v2);
        for (const expression& e : vv.form) detail::note_residual(rv, e);
        double_section ff = c_bracket_components(f1, f2);
        for (const expression& e : ff.vec) detail::note_residual(rf, e);
    }
    out.add(check_result::from_residual("vector-vector-form-part-vanishes", rv));
    out.add(check_result::from_residual("form-form-vector-part-vanishes", rf));

    const chart c1 = doubled_chart(1);
    double_section s1 = double_section::zero(c1), s2 = double_section::zero(c1);
    s1.vec[0] = expression::from_generator(c1, gen_x(1));
    s2.form[0] = expression::from_generator(c1, gen_xt(1));
    expression expect =
        rational(1, 2) * (expression::from_generator(c1, gen_xt(1)) *
                          expression::from_generator(c1, gen_xi(1))) -
        rational(1, 2) * (expression::from_generator(c1, gen_x(1)) *
                          expression::from_generator(c1, gen_xis(1)));
    out.add(check_result::from_residual("cbracket-d1-hand-example",
                                        c_bracket(s1, s2) - expect));
    return out;
}

/// {D^2 phi, psi} against the displayed bilinear, plus the two point checks.
inline verification_report check_strong_constraint(const sample_params& p) {
    splitmix64 rng(p.seed);
    verification_report out;
    for (int d = 1; d <= p.dim; ++d) {
        const chart c = doubled_chart(d);
        expression local(c);
        for (int trial = 0; trial < p.samples; ++trial) {
            expression phi = random_polynomial(
                c, {family::coordinate, family::dual_coordinate}, p.degree, rng);
            expression psi = random_polynomial(
                c, {family::coordinate, family::dual_coordinate}, p.degree, rng);
            detail::note_residual(local, poisson(d_squared(phi), psi) -
                                             strong_constraint_pair(phi, psi));
        }
        out.add(check_result::from_residual(
            "strong-constraint-identity-d" + std::to_string(d), local));
    }

    const chart c2 = doubled_chart(2);
    expression x1 = expression::from_generator(c2, gen_x(1));
    expression xt1 = expression::from_generator(c2, gen_xt(1));
    expression x2 = expression::from_generator(c2, gen_x(2));
    out.add(check_result::from_residual(
        "strong-constraint-point-dual",
        strong_constraint_pair(x1, xt1) - expression::constant(c2, rational(1))));
    out.add(check_result::from_residual("strong-constraint-point-orthogonal",
                                        strong_constraint_pair(x1, x2)));
    return out;
}

/// Projection to half of the coordinates: for xt-independent sections the
/// projected C-bracket is the classical Courant bracket of the tangent
/// bundle, computed independently from the structure-data formulas.
inline verification_report check_projection(const sample_params& p) {
    const chart dc = doubled_chart(p.dim);
    lie_bialgebroid tb = tangent_bialgebroid(p.dim);
    splitmix64 rng(p.seed);
    expression residual(dc);
    for (int trial = 0; trial < p.samples; ++trial) {
        courant_section b1 = detail::sample_courant_section(tb.base(), p.degree, rng);
        courant_section b2 = detail::sample_courant_section(tb.base(), p.degree, rng);
        double_section s1 = section_to_doubled(b1, dc);
        double_section s2 = section_to_doubled(b2, dc);
        expression projected = project_half(c_bracket(s1, s2));
        expression classical =
            lift_double(dc, section_to_doubled(courant_bracket(tb, b1, b2), dc));
        detail::note_residual(residual, projected - classical);
    }
    verification_report out;
    out.add(check_result::from_residual("projection-to-classical-courant", residual));
    return out;
}

/// so(3) Lie-Poisson data passes the bialgebroid test, the broken bivector
/// fails it, and on both data sets the residual vanishes exactly when the
/// independently computed Jacobiator does.
inline verification_report check_bialgebroid_controls() {
    verification_report out;

    check_result so3 = check_bialgebroid(so3_bialgebroid());
    so3.name = "so3-lie-poisson-bialgebroid";
    out.add(so3);

    check_result bad = check_bialgebroid(nonjacobi_bialgebroid());
    check_result control;
    control.name = "nonjacobi-negative-control";
    control.pass = !bad.pass;
    if (bad.residual) control.residual = bad.residual;
    out.add(control);

    auto jac_zero = [](const std::vector<std::vector<expression>>& pi) {
        const chart c = base_chart(3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    if (!bivector_jacobiator_entry(c, pi, i, j, k).is_zero()) return false;
        return true;
    };
    bool equiv = (jac_zero(so3_bivector()) == so3.pass) &&
                 (jac_zero(nonjacobi_bivector()) == bad.pass);
    check_result eq;
    eq.name = "jacobiator-equivalence";
    eq.pass = equiv;
    out.add(eq);
    return out;
}

/// Five Courant axioms on sampled section triples for a given bialgebroid.
inline verification_report check_courant_suite(const lie_bialgebroid& B,
                                               const sample_params& p) {
    const chart c = B.base();
    splitmix64 rng(p.seed);
    std::vector<std::array<courant_section, 3>> triples;
    for (int t = 0; t < p.samples; ++t)
        triples.push_back({detail::sample_courant_section(c, p.degree, rng),
                           detail::sample_courant_section(c, p.degree, rng),
                           detail::sample_courant_section(c, p.degree, rng)});
    std::vector<expression> functions = {
        expression::from_generator(c, gen_x(1)),
        random_polynomial(c, {family::coordinate}, p.degree, rng)};
    return check_courant_axioms(B, triples, functions);
}

/// so(3) positive control plus the corrupted-f axiom-1 negative control.
inline verification_report check_courant_controls(const sample_params& p) {
    verification_report out = check_courant_suite(so3_bialgebroid(), p);

    const chart c = base_chart(3);
    std::vector<std::array<courant_section, 3>> basis_triple(1);
    for (int i = 0; i < 3; ++i) {
        courant_section s = courant_section::zero(c);
        s.vec[static_cast<std::size_t>(i)] = expression::constant(c, rational(1));
        basis_triple[0][static_cast<std::size_t>(i)] = s;
    }
    verification_report bad = check_courant_axioms(corrupted_so3_bialgebroid(), basis_triple,
                                                   {expression::from_generator(c, gen_x(1))});
    check_result control;
    control.name = "corrupted-f-axiom1-negative-control";
    control.pass = !bad.checks[0].pass;
    if (bad.checks[0].residual) control.residual = bad.checks[0].residual;
    out.add(control);
    return out;
}

/// Graded antisymmetry, Leibniz, Jacobi, bracket parity on random
/// homogeneous monomial triples, plus the full generator pair tables, in
/// both chart modes.
inline verification_report check_poisson_laws(const sample_params& p) {
    verification_report out;
    for (chart c : {base_chart(std::min(p.dim, 3)), doubled_chart(std::min(p.dim, 3))}) {
        splitmix64 rng(p.seed + static_cast<std::uint64_t>(c.mode));
        expression r_anti(c), r_leib(c), r_jac(c), r_par(c);
        for (int trial = 0; trial < p.samples; ++trial) {
            expression f = random_monomial(c, 3, rng);
            expression g = random_monomial(c, 3, rng);
            expression h = random_monomial(c, 3, rng);
            auto pf = parity_of(f), pg = parity_of(g);
            if (!pf || !pg) continue;
            const int sfg = (*pf == parity::odd && *pg == parity::odd) ? -1 : 1;
            detail::note_residual(r_anti, poisson(f, g) + rational(sfg) * poisson(g, f));
            detail::note_residual(r_leib, poisson(f, g * h) - poisson(f, g) * h -
                                              rational(sfg) * (g * poisson(f, h)));
            detail::note_residual(r_jac,
                                  poisson(f, poisson(g, h)) - poisson(poisson(f, g), h) -
                                      rational(sfg) * poisson(g, poisson(f, h)));
            expression fg = poisson(f, g);
            if (!fg.is_zero()) {
                auto pfg = parity_of(fg);
                bool ok = pfg && static_cast<int>(*pfg) ==
                                     (static_cast<int>(*pf) + static_cast<int>(*pg)) % 2;
                if (!ok) detail::note_residual(r_par, fg);
            }
        }
        std::string tag = c.mode == chart_mode::base ? "base" : "doubled";
        out.add(check_result::from_residual("poisson-antisymmetry-" + tag, r_anti));
        out.add(check_result::from_residual("poisson-leibniz-" + tag, r_leib));
        out.add(check_result::from_residual("poisson-jacobi-" + tag, r_jac));
        out.add(check_result::from_residual("poisson-bracket-parity-" + tag, r_par));

        // conjugation table
        expression r_table(c);
        auto g_of = [&](family fam, int i) {
            return expression::from_generator(c, generator{fam, i});
        };
        std::vector<family> fams =
            c.mode == chart_mode::base
                ? std::vector<family>{family::coordinate, family::base_momentum,
                                      family::fibre, family::dual_fibre}
                : std::vector<family>{family::coordinate, family::dual_coordinate,
                                      family::momentum, family::dual_momentum,
                                      family::fibre, family::dual_fibre};
        auto expected = [&](generator u, generator v) -> expression {
            int delta = u.index == v.index ? 1 : 0;
            auto pair_sign = [&](family a, family b, int s) -> std::optional<int> {
                if (u.fam == a && v.fam == b) return s;
                return std::nullopt;
            };
            std::optional<int> s;
            if (c.mode == chart_mode::base) {
                if (!s) s = pair_sign(family::base_momentum, family::coordinate, 1);
                if (!s) s = pair_sign(family::coordinate, family::base_momentum, -1);
            } else {
                if (!s) s = pair_sign(family::momentum, family::coordinate, 1);
                if (!s) s = pair_sign(family::coordinate, family::momentum, -1);
                if (!s) s = pair_sign(family::dual_momentum, family::dual_coordinate, 1);
                if (!s) s = pair_sign(family::dual_coordinate, family::dual_momentum, -1);
            }
            if (!s) s = pair_sign(family::fibre, family::dual_fibre, 1);
            if (!s) s = pair_sign(family::dual_fibre, family::fibre, 1);
            if (!s || delta == 0) return expression::zero(c);
            return expression::constant(c, rational(*s));
        };
        for (family fu : fams)
            for (family fv : fams)
                for (int i = 1; i <= c.dim; ++i)
                    for (int j = 1; j <= c.dim; ++j) {
                        generator u{fu, i}, v{fv, j};
                        detail::note_residual(
                            r_table, poisson(g_of(fu, i), g_of(fv, j)) - expected(u, v));
                    }
        out.add(check_result::from_residual("generator-pair-table-" + tag, r_table));
    }
    return out;
}

/// Closure of generalized Lie derivatives on x-only sections and scalars:
/// the commutator of successive variations is minus the transport along the
/// C-bracket.
inline verification_report check_gen_lie_closure(const sample_params& p) {
    const chart c = doubled_chart(p.dim);
    splitmix64 rng(p.seed);
    expression residual(c);
    for (int trial = 0; trial < p.samples; ++trial) {
        double_section s1 = detail::sample_double_section(c, p.degree, rng, true);
        double_section s2 = detail::sample_double_section(c, p.degree, rng, true);
        expression phi = random_polynomial(c, {family::coordinate}, p.degree, rng);
        expression variation_comm = gen_lie_scalar(s2, gen_lie_scalar(s1, phi)) -
                                    gen_lie_scalar(s1, gen_lie_scalar(s2, phi));
        detail::note_residual(
            residual, variation_comm + gen_lie_scalar(c_bracket_components(s1, s2), phi));
    }
    verification_report out;
    out.add(check_result::from_residual("gen-lie-commutator-closure", residual));
    return out;
}

/// Random symmetric invertible G and antisymmetric B: H(G,B) eta H(G,B)
/// = eta, and eta squares to the identity.
inline verification_report check_metric_suite(const sample_params& p) {
    splitmix64 rng(p.seed);
    verification_report out;
    bool all_ok = true;
    int built = 0;
    while (built < p.samples) {
        int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.dim)));
        rational_matrix g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                rational v(rng.range(-3, 3));
                g.at(i, j) = v;
                g.at(j, i) = v;
            }
        if (!g.is_invertible()) continue;
        rational_matrix b(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                rational v(rng.range(-3, 3), 1 + static_cast<long long>(rng.below(2)));
                b.at(i, j) = v;
                b.at(j, i) = -v;
            }
        all_ok = all_ok && check_metric_compatibility(build_generalized_metric(g, b)).pass;
        ++built;
    }
    check_result compat;
    compat.name = "generalized-metric-odd-compatibility";
    compat.pass = all_ok;
    out.add(compat);

    check_result eta_sq;
    eta_sq.name = "eta-squares-to-identity";
    eta_sq.pass = true;
    for (int d = 1; d <= p.dim; ++d)
        eta_sq.pass = eta_sq.pass &&
                      (eta_matrix(d) * eta_matrix(d) == rational_matrix::identity(2 * d));
    out.add(eta_sq);
    return out;
}

/// Proto-bialgebroid controls: flat data with constant H passes, linear H
/// with nonzero de Rham differential fails, and zero flux reduces to the
/// plain bialgebroid residual verbatim.
inline verification_report check_proto_suite() {
    verification_report out;

    lie_bialgebroid tb3 = tangent_bialgebroid(3);
    flux_data const_h(3);
    const_h.set_h(1, 2, 3, expression::constant(base_chart(3), rational(1)));
    check_result flat = check_proto(tb3, const_h);
    flat.name = "proto-flat-constant-h";
    out.add(flat);

    lie_bialgebroid tb4 = tangent_bialgebroid(4);
    const chart c4 = base_chart(4);
    flux_data linear_h(4);
    linear_h.set_h(1, 2, 3, expression::from_generator(c4, gen_x(4)));
    bool oracle_nonzero = !flat_four_form_entry(linear_h, 4, 1, 2, 3).is_zero();
    check_result bad = check_proto(tb4, linear_h);
    check_result control;
    control.name = "proto-nonclosed-h-negative-control";
    control.pass = oracle_nonzero && !bad.pass;
    if (bad.residual) control.residual = bad.residual;
    out.add(control);

    flux_data zero(3);
    check_result via_proto = check_proto(nonjacobi_bialgebroid(), zero);
    check_result direct = check_bialgebroid(nonjacobi_bialgebroid());
    check_result reduce;
    reduce.name = "proto-zero-flux-reduces-to-bialgebroid";
    reduce.pass = via_proto.pass == direct.pass && via_proto.residual.has_value() &&
                  direct.residual.has_value() && *via_proto.residual == *direct.residual;
    out.add(reduce);
    return out;
}

/// Round trip of the text grammar on seeded random normal forms, plus
/// golden canonical strings.
inline verification_report check_roundtrip(const sample_params& p) {
    splitmix64 rng(p.seed);
    verification_report out;
    bool ok = true;
    for (int trial = 0; trial < p.samples; ++trial) {
        chart c = rng.below(2) ? base_chart(1 + static_cast<int>(rng.below(3)))
                               : doubled_chart(1 + static_cast<int>(rng.below(3)));
        expression e(c);
        int nterms = rng.range(0, 4);
        for (int t = 0; t < nterms; ++t) e += random_monomial(c, 3, rng);
        if (parse_expression(print_expression(e), c) != e) ok = false;
    }
    check_result rt;
    rt.name = "print-parse-roundtrip";
    rt.pass = ok;
    out.add(rt);

    const chart c1 = doubled_chart(1);
    expression mu = doubled_hamiltonian(1);
    check_result golden;
    golden.name = "golden-canonical-print";
    golden.pass = print_expression(mu) == "p1*xi1 + pt_1*xis_1" &&
                  print_expression(expression::zero(c1)) == "0" &&
                  print_expression(parse_expression("xi2*xi1", base_chart(2))) ==
                      "-1*xi1*xi2";
    out.add(golden);
    return out;
}

/// The whole battery with fixed seeds; `quick` trims sample counts.
inline verification_report run_selftest(bool quick) {
    verification_report out;
    out.merge(check_cbracket_equivalence({2, 2, quick ? 5 : 20, 41}));
    out.merge(check_cbracket_rows({2, 2, quick ? 3 : 10, 42}));
    out.merge(check_strong_constraint({3, 2, quick ? 5 : 20, 43}));
    out.merge(check_projection({2, 2, quick ? 3 : 10, 44}));
    out.merge(check_bialgebroid_controls());
    out.merge(check_courant_controls({3, quick ? 1 : 2, quick ? 2 : 10, 45}));
    out.merge(check_poisson_laws({3, 3, quick ? 100 : 500, 46}));
    out.merge(check_gen_lie_closure({2, 2, quick ? 3 : 10, 47}));
    out.merge(check_metric_suite({3, 2, quick ? 4 : 10, 48}));
    out.merge(check_proto_suite());
    out.merge(check_roundtrip({3, 3, quick ? 200 : 1000, 49}));
    return out;
}

}  // namespace koszul
