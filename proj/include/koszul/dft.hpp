#pragma once

// Doubled-coordinate constructions: lifts of double sections, the C-bracket
// as an antisymmetrized double derived bracket, its component formula, the
// strong constraint, the half-coordinate projection, generalized Lie
// derivatives, and the generalized-metric block algebra.
//
// Everything lives on the doubled chart (x^a, xt_a, p_a, pt^a, xi^a, xis_a).
// The dual derivative "~d^a" is the partial along xt_a.

#include <vector>

#include "koszul/algebroid.hpp"
#include "koszul/matrix.hpp"
#include "koszul/poisson.hpp"
#include "koszul/report.hpp"

namespace koszul {

namespace detail {

inline void require_double_polynomial(const expression& e, const char* what) {
    if (!uses_only(e, {family::coordinate, family::dual_coordinate}))
        throw data_error(std::string(what) +
                         " must be a polynomial in the x and xt generators");
}

}  // namespace detail

/// Pair (X^i(x, xt), eta_i(x, xt)) of coefficient families on the doubled
/// chart.
struct double_section {
    std::vector<expression> vec;
    std::vector<expression> form;

    static double_section zero(const chart& c) {
        return {detail::zero_family(c, c.dim), detail::zero_family(c, c.dim)};
    }

    void validate() const {
        for (const expression& e : vec)
            detail::require_double_polynomial(e, "double section component");
        for (const expression& e : form)
            detail::require_double_polynomial(e, "double section component");
    }

    friend bool operator==(const double_section& a, const double_section& b) {
        return a.vec == b.vec && a.form == b.form;
    }
};

/// Re-tags an x-only section from the base chart onto the doubled chart.
inline double_section section_to_doubled(const courant_section& s, const chart& doubled_c) {
    double_section out = double_section::zero(doubled_c);
    for (std::size_t i = 0; i < s.vec.size(); ++i) {
        out.vec[i] = s.vec[i].on_chart(doubled_c);
        out.form[i] = s.form[i].on_chart(doubled_c);
    }
    return out;
}

/// X^i xis_i + eta_i xi^i.
inline expression lift_double(const chart& c, const double_section& s) {
    if (static_cast<int>(s.vec.size()) != c.dim || static_cast<int>(s.form.size()) != c.dim)
        throw data_error("double section dimension mismatch");
    return lift_vector(c, s.vec) + lift_form(c, s.form);
}

/// mu = xi^a p_a + xis_a pt^a on the doubled chart.
inline expression doubled_hamiltonian(int dim) {
    const chart c = doubled_chart(dim);
    expression out(c);
    for (int a = 1; a <= dim; ++a) {
        out += expression::from_generator(c, gen_xi(a)) *
               expression::from_generator(c, gen_p(a));
        out += expression::from_generator(c, gen_xis(a)) *
               expression::from_generator(c, gen_pt(a));
    }
    return out;
}

/// The circle operation {{mu, lift s1}, lift s2}; odd and linear in
/// (xi, xis).
inline expression dorfman_double(const double_section& s1, const double_section& s2) {
    if (s1.vec.size() != s2.vec.size()) throw data_error("double section dimension mismatch");
    const chart c = doubled_chart(static_cast<int>(s1.vec.size()));
    expression mu = doubled_hamiltonian(c.dim);
    return derived(mu, lift_double(c, s1), lift_double(c, s2));
}

/// C-bracket as 1/2 (s1 o s2 - s2 o s1), the antisymmetrized circle.
inline expression c_bracket(const double_section& s1, const double_section& s2) {
    return rational(1, 2) * (dorfman_double(s1, s2) - dorfman_double(s2, s1));
}

/// Direct evaluation of the C-bracket component rows; the independent check
/// of `c_bracket`. For sections (X, eta) and (Y, omega):
///   vec^i:  X^k d_k Y^i - Y^k d_k X^i
///           - omega_k ~d^k X^i - 1/2 (X^k ~d^i omega_k - omega_k ~d^i X^k)
///           + eta_k ~d^k Y^i + 1/2 (Y^k ~d^i eta_k - eta_k ~d^i Y^k)
///   form_i: X^k d_k omega_i - 1/2 (X^k d_i omega_k - omega_k d_i X^k)
///           - Y^k d_k eta_i + 1/2 (Y^k d_i eta_k - eta_k d_i Y^k)
///           + eta_k ~d^k omega_i - omega_k ~d^k eta_i
inline double_section c_bracket_components(const double_section& s1,
                                           const double_section& s2) {
    if (s1.vec.size() != s2.vec.size()) throw data_error("double section dimension mismatch");
    const int d = static_cast<int>(s1.vec.size());
    const chart c = doubled_chart(d);
    double_section out = double_section::zero(c);
    const rational half(1, 2);

    auto X = [&](int k) -> const expression& { return s1.vec[static_cast<std::size_t>(k - 1)]; };
    auto eta = [&](int k) -> const expression& {
        return s1.form[static_cast<std::size_t>(k - 1)];
    };
    auto Y = [&](int k) -> const expression& { return s2.vec[static_cast<std::size_t>(k - 1)]; };
    auto omega = [&](int k) -> const expression& {
        return s2.form[static_cast<std::size_t>(k - 1)];
    };
    auto dx = [&](int k, const expression& e) { return partial(gen_x(k), e); };
    auto dt = [&](int k, const expression& e) { return partial(gen_xt(k), e); };

    for (int i = 1; i <= d; ++i) {
        expression vec(c), form(c);
        for (int k = 1; k <= d; ++k) {
            // vector-vector rows
            vec += X(k) * dx(k, Y(i)) - Y(k) * dx(k, X(i));
            // mixed [X, omega]
            vec -= omega(k) * dt(k, X(i));
            vec -= half * (X(k) * dt(i, omega(k)) - omega(k) * dt(i, X(k)));
            // mixed [eta, Y]
            vec += eta(k) * dt(k, Y(i));
            vec += half * (Y(k) * dt(i, eta(k)) - eta(k) * dt(i, Y(k)));

            // mixed [X, omega]
            form += X(k) * dx(k, omega(i));
            form -= half * (X(k) * dx(i, omega(k)) - omega(k) * dx(i, X(k)));
            // mixed [eta, Y]
            form -= Y(k) * dx(k, eta(i));
            form += half * (Y(k) * dx(i, eta(k)) - eta(k) * dx(i, Y(k)));
            // form-form rows
            form += eta(k) * dt(k, omega(i)) - omega(k) * dt(k, eta(i));
        }
        out.vec[static_cast<std::size_t>(i - 1)] = vec;
        out.form[static_cast<std::size_t>(i - 1)] = form;
    }
    return out;
}

/// D^2 phi = p_a ~d^a phi + pt^a d_a phi, the momentum form of the strong
/// constraint operator. Coincides with {mu, {mu, phi}}.
inline expression d_squared(const expression& phi) {
    detail::require_double_polynomial(phi, "double scalar");
    const chart c = phi.get_chart();
    expression out(c);
    for (int a = 1; a <= c.dim; ++a) {
        out += expression::from_generator(c, gen_p(a)) * partial(gen_xt(a), phi);
        out += expression::from_generator(c, gen_pt(a)) * partial(gen_x(a), phi);
    }
    return out;
}

/// d_a phi ~d^a psi + ~d^a phi d_a psi; equals {D^2 phi, psi}.
inline expression strong_constraint_pair(const expression& phi, const expression& psi) {
    detail::require_double_polynomial(phi, "double scalar");
    detail::require_double_polynomial(psi, "double scalar");
    if (phi.get_chart() != psi.get_chart())
        throw chart_error("strong constraint pair on different charts");
    const chart c = phi.get_chart();
    expression out(c);
    for (int a = 1; a <= c.dim; ++a) {
        out += partial(gen_x(a), phi) * partial(gen_xt(a), psi);
        out += partial(gen_xt(a), phi) * partial(gen_x(a), psi);
    }
    return out;
}

/// Sets all dual momenta pt^a to zero (the half-coordinate polarization).
inline expression project_half(const expression& e) {
    const chart c = e.get_chart();
    expression out = e;
    for (int a = 1; a <= c.dim; ++a)
        out = substitute(out, gen_pt(a), expression::zero(c));
    return out;
}

/// Generalized transport of a double scalar: L_Sigma phi = X^a d_a phi
/// + eta_a ~d^a phi.
inline expression gen_lie_scalar(const double_section& sigma, const expression& phi) {
    detail::require_double_polynomial(phi, "double scalar");
    const chart c = phi.get_chart();
    if (static_cast<int>(sigma.vec.size()) != c.dim)
        throw data_error("double section dimension mismatch");
    expression out(c);
    for (int a = 1; a <= c.dim; ++a) {
        out += sigma.vec[static_cast<std::size_t>(a - 1)] * partial(gen_x(a), phi);
        out += sigma.form[static_cast<std::size_t>(a - 1)] * partial(gen_xt(a), phi);
    }
    return out;
}

/// Generalized Lie derivative of a double section V = (W, rho) along
/// Sigma = (X, eta), in the index-split form with the eta-form raising the
/// gradient index:
///   (L_Sigma V)^i = Sigma^K d_K W^i - W^K d_K X^i + (~d^i Sigma_K) V^K
///   (L_Sigma V)_i = Sigma^K d_K rho_i - V^K d_K eta_i + (d_i Sigma_K) V^K
inline double_section gen_lie_vector(const double_section& sigma, const double_section& v) {
    if (sigma.vec.size() != v.vec.size())
        throw data_error("double section dimension mismatch");
    const int d = static_cast<int>(sigma.vec.size());
    const chart c = doubled_chart(d);
    double_section out = double_section::zero(c);

    auto X = [&](int k) -> const expression& {
        return sigma.vec[static_cast<std::size_t>(k - 1)];
    };
    auto eta = [&](int k) -> const expression& {
        return sigma.form[static_cast<std::size_t>(k - 1)];
    };
    auto W = [&](int k) -> const expression& { return v.vec[static_cast<std::size_t>(k - 1)]; };
    auto rho = [&](int k) -> const expression& {
        return v.form[static_cast<std::size_t>(k - 1)];
    };
    auto dx = [&](int k, const expression& e) { return partial(gen_x(k), e); };
    auto dt = [&](int k, const expression& e) { return partial(gen_xt(k), e); };

    for (int i = 1; i <= d; ++i) {
        expression vec(c), form(c);
        for (int a = 1; a <= d; ++a) {
            // transport
            vec += X(a) * dx(a, W(i)) + eta(a) * dt(a, W(i));
            form += X(a) * dx(a, rho(i)) + eta(a) * dt(a, rho(i));
            // gradient of Sigma against V
            vec -= W(a) * dx(a, X(i)) + rho(a) * dt(a, X(i));
            vec += W(a) * dt(i, eta(a)) + rho(a) * dt(i, X(a));
            form -= W(a) * dx(a, eta(i)) + rho(a) * dt(a, eta(i));
            form += W(a) * dx(i, eta(a)) + rho(a) * dx(i, X(a));
        }
        out.vec[static_cast<std::size_t>(i - 1)] = vec;
        out.form[static_cast<std::size_t>(i - 1)] = form;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generalized metric

/// The O(d,d) pairing as a 2d x 2d block matrix with identity off-diagonal
/// blocks; its own inverse.
inline rational_matrix eta_matrix(int d) {
    rational_matrix out(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        out.at(i, d + i) = rational(1);
        out.at(d + i, i) = rational(1);
    }
    return out;
}

/// Block assembly
///   H(G, B) = [ G - B G^-1 B,  B G^-1 ]
///             [ -G^-1 B,       G^-1   ]
/// for symmetric invertible G and antisymmetric B.
inline rational_matrix build_generalized_metric(const rational_matrix& g,
                                                const rational_matrix& b) {
    const int d = g.rows();
    if (g.cols() != d || b.rows() != d || b.cols() != d)
        throw std::invalid_argument("metric blocks must be square of equal size");
    if (!g.is_symmetric()) throw data_error("metric block G must be symmetric");
    if (!b.is_antisymmetric()) throw data_error("two-form block B must be antisymmetric");
    rational_matrix ginv = g.inverse();  // throws std::domain_error when singular
    rational_matrix out(2 * d, 2 * d);
    rational_matrix tl = g - b * ginv * b;
    rational_matrix tr = b * ginv;
    rational_matrix bl = -(ginv * b);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            out.at(i, j) = tl.at(i, j);
            out.at(i, d + j) = tr.at(i, j);
            out.at(d + i, j) = bl.at(i, j);
            out.at(d + i, d + j) = ginv.at(i, j);
        }
    return out;
}

/// H eta H = eta, the O(d,d) compatibility of a generalized metric.
inline check_result check_metric_compatibility(const rational_matrix& h) {
    if (h.rows() != h.cols() || h.rows() % 2 != 0)
        throw std::invalid_argument("generalized metric must be square of even size");
    rational_matrix eta = eta_matrix(h.rows() / 2);
    check_result out;
    out.name = "metric-odd-compatibility";
    out.pass = (h * eta * h == eta);
    return out;
}

}  // namespace koszul
