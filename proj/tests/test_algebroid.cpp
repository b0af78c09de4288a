#include <doctest.h>

#include "koszul/algebroid.hpp"
#include "koszul/sampling.hpp"
#include "koszul/structures.hpp"

using namespace koszul;

namespace {

expression gen(const chart& c, generator g) { return expression::from_generator(c, g); }

courant_section random_section(const chart& c, int degree, splitmix64& rng) {
    courant_section s = courant_section::zero(c);
    for (int i = 0; i < c.dim; ++i) {
        s.vec[static_cast<std::size_t>(i)] =
            random_polynomial(c, {family::coordinate}, degree, rng);
        s.form[static_cast<std::size_t>(i)] =
            random_polynomial(c, {family::coordinate}, degree, rng);
    }
    return s;
}

courant_section basis_vector(const chart& c, int i) {
    courant_section s = courant_section::zero(c);
    s.vec[static_cast<std::size_t>(i - 1)] = expression::constant(c, rational(1));
    return s;
}

courant_section basis_form(const chart& c, int i) {
    courant_section s = courant_section::zero(c);
    s.form[static_cast<std::size_t>(i - 1)] = expression::constant(c, rational(1));
    return s;
}

}  // namespace

TEST_CASE("differential Hamiltonian of the tangent bundle") {
    lie_algebroid tb = lie_algebroid::tangent(3);
    const chart c = tb.base();
    expression expect(c);
    for (int i = 1; i <= 3; ++i) expect += gen(c, gen_xs(i)) * gen(c, gen_xi(i));
    CHECK(differential_hamiltonian(tb) == expect);
    CHECK(differential_hamiltonian(lie_algebroid(3)).is_zero());
}

TEST_CASE("differential Hamiltonian with structure constants") {
    // identity anchor with the so(3) epsilon bracket: the displayed cubic
    lie_algebroid L = so3_lie_algebra();
    for (int i = 1; i <= 3; ++i)
        L.set_anchor(i, i, expression::constant(base_chart(3), rational(1)));
    const chart c = base_chart(3);
    expression expect(c);
    for (int i = 1; i <= 3; ++i) expect += gen(c, gen_xs(i)) * gen(c, gen_xi(i));
    const rational minus_half(-1, 2);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                if (int s = epsilon3(i, j, k); s != 0)
                    expect += minus_half * (expression::constant(c, rational(s)) *
                                            gen(c, gen_xi(i)) * gen(c, gen_xi(j)) *
                                            gen(c, gen_xis(k)));
    CHECK(differential_hamiltonian(L) == expect);
    CHECK(parity_of(differential_hamiltonian(L)) == parity::odd);
}

TEST_CASE("dual differential Hamiltonian") {
    CHECK(dual_differential_hamiltonian(dual_lie_algebroid(3)).is_zero());

    // constant identity coanchor, zero bracket
    dual_lie_algebroid D(2);
    const chart c = D.base();
    for (int i = 1; i <= 2; ++i)
        D.set_coanchor(i, i, expression::constant(c, rational(1)));
    expression expect(c);
    for (int i = 1; i <= 2; ++i) expect += gen(c, gen_xs(i)) * gen(c, gen_xis(i));
    CHECK(dual_differential_hamiltonian(D) == expect);
}

TEST_CASE("dual Hamiltonian agrees with legendre of the mirrored primal") {
    // Feeding the dual data through the primal construction on the dual
    // chart and pulling back along the Legendre swap must give the same
    // Hamiltonian.
    lie_bialgebroid B = so3_bialgebroid();
    const int d = B.dim();
    lie_algebroid mirrored(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) mirrored.set_anchor(i, j, B.dual.coanchor(i, j));
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                mirrored.set_structure(k, i, j, B.dual.structure(k, i, j));
    CHECK(dual_differential_hamiltonian(B.dual) ==
          legendre(differential_hamiltonian(mirrored)));
}

TEST_CASE("bialgebroid Hamiltonian sums the halves") {
    lie_bialgebroid tb = tangent_bialgebroid(2);
    const chart c = tb.base();
    expression expect(c);
    for (int i = 1; i <= 2; ++i) expect += gen(c, gen_xs(i)) * gen(c, gen_xi(i));
    CHECK(bialgebroid_hamiltonian(tb) == expect);
    CHECK(bialgebroid_hamiltonian(lie_bialgebroid(lie_algebroid(2), dual_lie_algebroid(2)))
              .is_zero());
    CHECK_THROWS_AS(lie_bialgebroid(lie_algebroid(2), dual_lie_algebroid(3)), data_error);
}

TEST_CASE("bialgebroid check: positive and negative controls") {
    CHECK(check_bialgebroid(tangent_bialgebroid(3)).pass);
    CHECK(check_bialgebroid(so3_bialgebroid()).pass);

    check_result bad = check_bialgebroid(nonjacobi_bialgebroid());
    CHECK(!bad.pass);
    REQUIRE(bad.residual.has_value());
    CHECK(!bad.residual->is_zero());
}

TEST_CASE("bialgebroid residual vanishes exactly when the Jacobiator does") {
    const chart c = base_chart(3);

    auto jacobiator_zero = [&](const std::vector<std::vector<expression>>& pi) {
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    if (!bivector_jacobiator_entry(c, pi, i, j, k).is_zero()) return false;
        return true;
    };

    CHECK(jacobiator_zero(so3_bivector()) == check_bialgebroid(so3_bialgebroid()).pass);
    CHECK(jacobiator_zero(nonjacobi_bivector()) ==
          check_bialgebroid(nonjacobi_bialgebroid()).pass);
    // the broken bivector has J^{123} = x^2
    CHECK(bivector_jacobiator_entry(c, nonjacobi_bivector(), 1, 2, 3) ==
          gen(c, gen_x(2)));
}

TEST_CASE("squared differential Hamiltonian detects the Jacobi identity") {
    // zero anchor: {h, h} = 0 is exactly Jacobi for the structure constants
    expression h_good = differential_hamiltonian(so3_lie_algebra());
    CHECK(poisson(h_good, h_good).is_zero());

    expression h_bad = differential_hamiltonian(corrupted_so3_lie_algebra());
    CHECK(!poisson(h_bad, h_bad).is_zero());

    // anchor-compatible positive control
    expression h_tb = differential_hamiltonian(lie_algebroid::tangent(3));
    CHECK(poisson(h_tb, h_tb).is_zero());
}

TEST_CASE("lifts of vectors and forms") {
    const chart c = base_chart(2);
    std::vector<expression> x = {expression::constant(c, rational(1)),
                                 expression::zero(c)};
    CHECK(lift_vector(c, x) == gen(c, gen_xis(1)));
    std::vector<expression> w = {gen(c, gen_x(2)), expression::zero(c)};
    CHECK(lift_form(c, w) == gen(c, gen_x(2)) * gen(c, gen_xi(1)));
    CHECK(lift_vector(c, {expression::zero(c), expression::zero(c)}).is_zero());
}

TEST_CASE("dorfman operation on the tangent bundle") {
    lie_bialgebroid tb = tangent_bialgebroid(2);
    const chart c = tb.base();

    // [d_1, x^1 d_2] = d_2
    courant_section s1 = basis_vector(c, 1);
    courant_section s2 = basis_vector(c, 2);
    s2.vec[1] = gen(c, gen_x(1));
    CHECK(dorfman_derived(tb, s1, s2) == gen(c, gen_xis(2)));
    CHECK(lift_section(c, dorfman_components(tb, s1, s2)) == gen(c, gen_xis(2)));

    // exact form with constant potential: s o s = 0
    courant_section exact = courant_section::zero(c);
    CHECK(dorfman_derived(tb, exact, exact).is_zero());

    // pure vector against pure form gives the Lie derivative (Cartan)
    courant_section vx = basis_vector(c, 1);
    vx.vec[0] = gen(c, gen_x(1)) * gen(c, gen_x(2));
    courant_section fw = basis_form(c, 2);
    fw.form[1] = gen(c, gen_x(1));
    std::vector<expression> lie = algebroid_lie_derivative(tb.primal, vx.vec, fw.form);
    CHECK(lift_section(c, dorfman_components(tb, vx, fw)) == lift_form(c, lie));
    CHECK(dorfman_derived(tb, vx, fw) == lift_form(c, lie));
}

TEST_CASE("component and derived Dorfman representations agree") {
    splitmix64 rng(90210);
    for (const lie_bialgebroid& B :
         {tangent_bialgebroid(2), so3_bialgebroid(), nonjacobi_bialgebroid()}) {
        const chart c = B.base();
        for (int trial = 0; trial < 6; ++trial) {
            courant_section s1 = random_section(c, 2, rng);
            courant_section s2 = random_section(c, 2, rng);
            CHECK(lift_section(c, dorfman_components(B, s1, s2)) ==
                  dorfman_derived(B, s1, s2));
        }
    }
}

TEST_CASE("courant bracket properties") {
    lie_bialgebroid so3 = so3_bialgebroid();
    const chart c = so3.base();
    splitmix64 rng(777);

    courant_section s = random_section(c, 2, rng);
    courant_section self = courant_bracket(so3, s, s);
    for (const expression& e : self.vec) CHECK(e.is_zero());
    for (const expression& e : self.form) CHECK(e.is_zero());

    // on pure vectors with zero dual the bracket is the Lie bracket
    lie_bialgebroid tb = tangent_bialgebroid(2);
    const chart c2 = tb.base();
    courant_section v1 = courant_section::zero(c2), v2 = courant_section::zero(c2);
    splitmix64 rng2(778);
    for (int i = 0; i < 2; ++i) {
        v1.vec[static_cast<std::size_t>(i)] =
            random_polynomial(c2, {family::coordinate}, 2, rng2);
        v2.vec[static_cast<std::size_t>(i)] =
            random_polynomial(c2, {family::coordinate}, 2, rng2);
    }
    courant_section cb = courant_bracket(tb, v1, v2);
    CHECK(cb.vec == algebroid_bracket(tb.primal, v1.vec, v2.vec));
    for (const expression& e : cb.form) CHECK(e.is_zero());
}

TEST_CASE("tangent-bundle courant bracket matches the classical formula") {
    lie_bialgebroid tb = tangent_bialgebroid(2);
    const chart c = tb.base();
    splitmix64 rng(424242);
    for (int trial = 0; trial < 8; ++trial) {
        courant_section s1 = random_section(c, 2, rng);
        courant_section s2 = random_section(c, 2, rng);
        courant_section got = courant_bracket(tb, s1, s2);

        // [X,Y] + L_X w - L_Y eta + 1/2 d(i_Y eta - i_X w)
        courant_section want = courant_section::zero(c);
        want.vec = algebroid_bracket(tb.primal, s1.vec, s2.vec);
        std::vector<expression> lxw = algebroid_lie_derivative(tb.primal, s1.vec, s2.form);
        std::vector<expression> lyeta = algebroid_lie_derivative(tb.primal, s2.vec, s1.form);
        expression pot(c);
        for (int i = 0; i < 2; ++i)
            pot += s2.vec[static_cast<std::size_t>(i)] * s1.form[static_cast<std::size_t>(i)] -
                   s1.vec[static_cast<std::size_t>(i)] * s2.form[static_cast<std::size_t>(i)];
        std::vector<expression> dpot = differential_of_function(tb.primal, pot);
        for (int i = 0; i < 2; ++i)
            want.form[static_cast<std::size_t>(i)] =
                lxw[static_cast<std::size_t>(i)] - lyeta[static_cast<std::size_t>(i)] +
                rational(1, 2) * dpot[static_cast<std::size_t>(i)];
        CHECK(got == want);
    }
}

TEST_CASE("pairing, anchor, and the section differential") {
    lie_bialgebroid tb = tangent_bialgebroid(2);
    const chart c = tb.base();

    CHECK(pairing(c, basis_vector(c, 1), basis_form(c, 1)) ==
          expression::constant(c, rational(1)));
    CHECK(pairing(c, basis_vector(c, 1), basis_form(c, 2)).is_zero());

    courant_section mixed = basis_vector(c, 1);
    mixed.form[1] = expression::constant(c, rational(1));  // d_1 + dx^2
    std::vector<expression> rho = anchor_rho(tb, mixed);
    CHECK(rho[0] == expression::constant(c, rational(1)));
    CHECK(rho[1].is_zero());

    courant_section df = courant_d(tb, gen(c, gen_x(1)));
    CHECK(df.vec[0].is_zero());
    CHECK(df.vec[1].is_zero());
    CHECK(df.form[0] == expression::constant(c, rational(1)));
    CHECK(df.form[1].is_zero());

    // defining relation <D f, s> = rho(s) f on samples
    splitmix64 rng(5150);
    for (int trial = 0; trial < 6; ++trial) {
        expression f = random_polynomial(c, {family::coordinate}, 2, rng);
        courant_section s = random_section(c, 2, rng);
        expression lhs = pairing(c, courant_d(tb, f), s);
        expression rhs(c);
        std::vector<expression> rs = anchor_rho(tb, s);
        for (int l = 1; l <= 2; ++l)
            rhs += rs[static_cast<std::size_t>(l - 1)] * partial(gen_x(l), f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("courant axioms hold for the so(3) bialgebroid") {
    lie_bialgebroid so3 = so3_bialgebroid();
    const chart c = so3.base();
    splitmix64 rng(60601);
    std::vector<std::array<courant_section, 3>> triples;
    for (int t = 0; t < 3; ++t)
        triples.push_back(
            {random_section(c, 1, rng), random_section(c, 1, rng), random_section(c, 1, rng)});
    std::vector<expression> functions = {gen(c, gen_x(1)),
                                         gen(c, gen_x(2)) * gen(c, gen_x(3))};
    verification_report report = check_courant_axioms(so3, triples, functions);
    for (const check_result& r : report.checks) {
        INFO(r.name);
        CHECK(r.pass);
    }
}

TEST_CASE("courant axioms pass trivially on zero structure data") {
    lie_bialgebroid zero(lie_algebroid(2), dual_lie_algebroid(2));
    const chart c = zero.base();
    splitmix64 rng(8);
    std::vector<std::array<courant_section, 3>> triples = {
        {random_section(c, 1, rng), random_section(c, 1, rng), random_section(c, 1, rng)}};
    verification_report report = check_courant_axioms(zero, triples, {gen(c, gen_x(1))});
    CHECK(report.all_pass());
}

TEST_CASE("corrupted structure constants break axiom 1") {
    lie_bialgebroid bad = corrupted_so3_bialgebroid();
    const chart c = bad.base();
    std::vector<std::array<courant_section, 3>> triples = {
        {basis_vector(c, 1), basis_vector(c, 2), basis_vector(c, 3)}};
    verification_report report = check_courant_axioms(bad, triples, {gen(c, gen_x(1))});
    REQUIRE(report.checks.size() == 5);
    CHECK(!report.checks[0].pass);
    REQUIRE(report.checks[0].residual.has_value());
    CHECK(!report.checks[0].residual->is_zero());
}

TEST_CASE("lie derivative via the derived Hamiltonian") {
    lie_bialgebroid tb = tangent_bialgebroid(2);
    const chart c = tb.base();

    // L_{x^1 d_1} dx^1 = dx^1
    std::vector<expression> x = {gen(c, gen_x(1)), expression::zero(c)};
    std::vector<expression> w = {expression::constant(c, rational(1)), expression::zero(c)};
    std::vector<expression> lw = lie_derivative(tb, x, w);
    CHECK(lw[0] == expression::constant(c, rational(1)));
    CHECK(lw[1].is_zero());

    // zero inputs and constant data give zero
    std::vector<expression> zero = {expression::zero(c), expression::zero(c)};
    for (const expression& e : lie_derivative(tb, zero, w)) CHECK(e.is_zero());
    std::vector<expression> cx = {expression::constant(c, rational(2)),
                                  expression::constant(c, rational(-1))};
    std::vector<expression> cw = {expression::constant(c, rational(3)),
                                  expression::constant(c, rational(5))};
    for (const expression& e : lie_derivative(tb, cx, cw)) CHECK(e.is_zero());
}

TEST_CASE("lie derivative agrees with the Cartan-formula components") {
    splitmix64 rng(11881);
    for (const lie_bialgebroid& B : {tangent_bialgebroid(2), so3_bialgebroid()}) {
        const chart c = B.base();
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<expression> x = detail::zero_family(c, B.dim());
            std::vector<expression> w = detail::zero_family(c, B.dim());
            for (int i = 0; i < B.dim(); ++i) {
                x[static_cast<std::size_t>(i)] =
                    random_polynomial(c, {family::coordinate}, 2, rng);
                w[static_cast<std::size_t>(i)] =
                    random_polynomial(c, {family::coordinate}, 2, rng);
            }
            CHECK(lie_derivative(B, x, w) == algebroid_lie_derivative(B.primal, x, w));
        }
    }
}

TEST_CASE("chevalley-eilenberg values at low degree") {
    lie_algebroid tb = lie_algebroid::tangent(2);
    const chart c = tb.base();
    std::vector<expression> e1 = {expression::constant(c, rational(1)),
                                  expression::zero(c)};
    std::vector<expression> e2 = {expression::zero(c),
                                  expression::constant(c, rational(1))};

    // (d f)(X) = a(X) f
    CHECK(ce_value_0(tb, gen(c, gen_x(1)), e1) == expression::constant(c, rational(1)));

    // w = x^2 dx^1: (dw)(e2, e1) = d_2 w_1 - d_1 w_2 = 1
    std::vector<expression> w = {gen(c, gen_x(2)), expression::zero(c)};
    CHECK(ce_value_1(tb, w, e2, e1) == expression::constant(c, rational(1)));

    // w = df is closed
    splitmix64 rng(3141);
    expression f = random_polynomial(c, {family::coordinate}, 2, rng);
    std::vector<expression> df = differential_of_function(tb, f);
    CHECK(ce_value_1(tb, df, e1, e2).is_zero());
}

TEST_CASE("chevalley-eilenberg oracle matches the Hamiltonian route") {
    splitmix64 rng(2718);
    for (const lie_bialgebroid& B : {tangent_bialgebroid(2), so3_bialgebroid()}) {
        const lie_algebroid& L = B.primal;
        const chart c = L.base();
        const int d = L.dim();
        expression h = differential_hamiltonian(L);

        for (int trial = 0; trial < 4; ++trial) {
            auto rand_family = [&] {
                std::vector<expression> v = detail::zero_family(c, d);
                for (int i = 0; i < d; ++i)
                    v[static_cast<std::size_t>(i)] =
                        random_polynomial(c, {family::coordinate}, 1, rng);
                return v;
            };
            std::vector<expression> X = rand_family(), Y = rand_family(), Z = rand_family();

            // k = 0
            expression f = random_polynomial(c, {family::coordinate}, 2, rng);
            expression ham0 = poisson(lift_vector(c, X), poisson(h, f));
            CHECK(ham0 == ce_value_0(L, f, X));

            // k = 1
            std::vector<expression> w = rand_family();
            expression ham1 =
                poisson(lift_vector(c, Y),
                        poisson(lift_vector(c, X), poisson(h, lift_form(c, w))));
            CHECK(ham1 == ce_value_1(L, w, X, Y));

            // k = 2
            std::vector<std::vector<expression>> w2(
                static_cast<std::size_t>(d),
                std::vector<expression>(static_cast<std::size_t>(d), expression::zero(c)));
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j) {
                    expression entry = random_polynomial(c, {family::coordinate}, 1, rng);
                    w2[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                        entry;
                    w2[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] =
                        -entry;
                }
            expression ham2 = poisson(
                lift_vector(c, Z),
                poisson(lift_vector(c, Y),
                        poisson(lift_vector(c, X), poisson(h, lift_two_form(c, w2)))));
            CHECK(ham2 == ce_value_2(L, w2, X, Y, Z));
        }
    }
}

TEST_CASE("proto-bialgebroid with fluxes") {
    // flat data with constant H and R = 0 passes
    lie_bialgebroid tb3 = tangent_bialgebroid(3);
    flux_data F(3);
    F.set_h(1, 2, 3, expression::constant(base_chart(3), rational(1)));
    CHECK(check_proto(tb3, F).pass);

    // H = R = 0 reduces to the bialgebroid check verbatim
    flux_data zero(3);
    check_result via_proto = check_proto(nonjacobi_bialgebroid(), zero);
    check_result direct = check_bialgebroid(nonjacobi_bialgebroid());
    CHECK(via_proto.pass == direct.pass);
    REQUIRE(via_proto.residual.has_value());
    REQUIRE(direct.residual.has_value());
    CHECK(*via_proto.residual == *direct.residual);

    // linear H with dH != 0 (checked by the flat de Rham oracle) fails
    lie_bialgebroid tb4 = tangent_bialgebroid(4);
    const chart c4 = tb4.base();
    flux_data G(4);
    G.set_h(1, 2, 3, expression::from_generator(c4, gen_x(4)));
    CHECK(!flat_four_form_entry(G, 4, 1, 2, 3).is_zero());
    check_result bad = check_proto(tb4, G);
    CHECK(!bad.pass);

    // closed linear H passes: H_123 = x^4 plus H_124 = -x^3 has dH = 0?
    // dH_(1,2,3,4) picks up d_4 H_123 - d_3 H_124 = 1 - (-1) != 0, so keep a
    // genuinely closed sample instead: constant H on d = 4.
    flux_data K(4);
    K.set_h(1, 2, 4, expression::constant(c4, rational(5)));
    CHECK(check_proto(tb4, K).pass);
}

TEST_CASE("flux arrays enforce antisymmetry") {
    flux_data F(3);
    const chart c = base_chart(3);
    F.set_h(1, 2, 3, gen(c, gen_x(1)));
    CHECK(F.h(2, 3, 1) == gen(c, gen_x(1)));
    CHECK(F.h(2, 1, 3) == -gen(c, gen_x(1)));
    CHECK(F.h(1, 1, 2).is_zero());
    CHECK_THROWS_AS(F.set_h(1, 1, 2, gen(c, gen_x(1))), data_error);
}
