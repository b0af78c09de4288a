#pragma once

// Lie algebroid and Lie bialgebroid structure data on the base chart,
// their Hamiltonian lifts, Dorfman/Courant brackets on A + A*, Lie
// derivatives, Chevalley-Eilenberg oracles, and the flux-twisted
// proto-bialgebroid.
//
// Index conventions for the stored arrays:
//   anchor(i, j)        d_j-component of the anchor image of the frame
//                       section e_i
//   structure(k, i, j)  e_k-component of [e_i, e_j]; skew in (i, j)
//   coanchor(i, j)      d_j-component of the co-anchor image of e^i
//   dual_structure(k, i, j)  e^k-component of [e^i, e^j]; skew in (i, j)
// All entries are polynomials in the x generators.

#include <array>
#include <string>
#include <vector>

#include "koszul/poisson.hpp"
#include "koszul/report.hpp"

namespace koszul {

namespace detail {

inline void require_x_polynomial(const expression& e, const std::string& what) {
    if (!uses_only(e, {family::coordinate}))
        throw data_error(what + " must be a polynomial in the x generators");
}

inline std::vector<expression> zero_family(const chart& c, int n) {
    return std::vector<expression>(static_cast<std::size_t>(n), expression::zero(c));
}

}  // namespace detail

class lie_algebroid {
public:
    explicit lie_algebroid(int dim)
        : dim_(dim),
          anchor_(static_cast<std::size_t>(dim * dim), expression::zero(base_chart(dim))),
          structure_(static_cast<std::size_t>(dim * dim * dim),
                     expression::zero(base_chart(dim))) {
        if (dim < 1) throw data_error("algebroid dimension must be positive");
    }

    int dim() const { return dim_; }
    chart base() const { return base_chart(dim_); }

    const expression& anchor(int i, int j) const { return anchor_[idx2(i, j)]; }
    const expression& structure(int k, int i, int j) const { return structure_[idx3(k, i, j)]; }

    void set_anchor(int i, int j, expression e) {
        detail::require_x_polynomial(e, "anchor entry");
        anchor_[idx2(i, j)] = std::move(e);
    }

    /// Sets the (k,i,j) entry and its skew partner (k,j,i).
    void set_structure(int k, int i, int j, const expression& e) {
        detail::require_x_polynomial(e, "structure entry");
        structure_[idx3(k, i, j)] = e;
        structure_[idx3(k, j, i)] = -e;
    }

    /// Identity anchor, vanishing bracket.
    static lie_algebroid tangent(int dim) {
        lie_algebroid out(dim);
        for (int i = 1; i <= dim; ++i)
            out.set_anchor(i, i, expression::constant(base_chart(dim), rational(1)));
        return out;
    }

private:
    int dim_;
    std::vector<expression> anchor_;
    std::vector<expression> structure_;

    std::size_t idx2(int i, int j) const {
        return static_cast<std::size_t>((i - 1) * dim_ + (j - 1));
    }
    std::size_t idx3(int k, int i, int j) const {
        return static_cast<std::size_t>(((k - 1) * dim_ + (i - 1)) * dim_ + (j - 1));
    }
};

class dual_lie_algebroid {
public:
    explicit dual_lie_algebroid(int dim)
        : dim_(dim),
          coanchor_(static_cast<std::size_t>(dim * dim), expression::zero(base_chart(dim))),
          structure_(static_cast<std::size_t>(dim * dim * dim),
                     expression::zero(base_chart(dim))) {
        if (dim < 1) throw data_error("algebroid dimension must be positive");
    }

    int dim() const { return dim_; }
    chart base() const { return base_chart(dim_); }

    const expression& coanchor(int i, int j) const { return coanchor_[idx2(i, j)]; }
    const expression& structure(int k, int i, int j) const { return structure_[idx3(k, i, j)]; }

    void set_coanchor(int i, int j, expression e) {
        detail::require_x_polynomial(e, "coanchor entry");
        coanchor_[idx2(i, j)] = std::move(e);
    }

    void set_structure(int k, int i, int j, const expression& e) {
        detail::require_x_polynomial(e, "dual structure entry");
        structure_[idx3(k, i, j)] = e;
        structure_[idx3(k, j, i)] = -e;
    }

private:
    int dim_;
    std::vector<expression> coanchor_;
    std::vector<expression> structure_;

    std::size_t idx2(int i, int j) const {
        return static_cast<std::size_t>((i - 1) * dim_ + (j - 1));
    }
    std::size_t idx3(int k, int i, int j) const {
        return static_cast<std::size_t>(((k - 1) * dim_ + (i - 1)) * dim_ + (j - 1));
    }
};

struct lie_bialgebroid {
    lie_algebroid primal;
    dual_lie_algebroid dual;

    lie_bialgebroid(lie_algebroid p, dual_lie_algebroid d)
        : primal(std::move(p)), dual(std::move(d)) {
        if (primal.dim() != dual.dim())
            throw data_error("bialgebroid halves have different dimensions");
    }

    int dim() const { return primal.dim(); }
    chart base() const { return primal.base(); }

    static lie_bialgebroid with_zero_dual(lie_algebroid p) {
        int d = p.dim();
        return lie_bialgebroid(std::move(p), dual_lie_algebroid(d));
    }
};

/// Section X + eta of A + A*: d vector components and d form components,
/// polynomials in x.
struct courant_section {
    std::vector<expression> vec;
    std::vector<expression> form;

    static courant_section zero(const chart& c) {
        return {detail::zero_family(c, c.dim), detail::zero_family(c, c.dim)};
    }

    void validate() const {
        for (const expression& e : vec) detail::require_x_polynomial(e, "section component");
        for (const expression& e : form) detail::require_x_polynomial(e, "section component");
    }

    friend bool operator==(const courant_section& a, const courant_section& b) {
        return a.vec == b.vec && a.form == b.form;
    }
};

/// Totally antisymmetric three-form H and three-vector R coefficients.
class flux_data {
public:
    explicit flux_data(int dim)
        : dim_(dim),
          h_(static_cast<std::size_t>(dim * dim * dim), expression::zero(base_chart(dim))),
          r_(static_cast<std::size_t>(dim * dim * dim), expression::zero(base_chart(dim))) {}

    int dim() const { return dim_; }

    const expression& h(int i, int j, int k) const { return h_[idx3(i, j, k)]; }
    const expression& r(int i, int j, int k) const { return r_[idx3(i, j, k)]; }

    void set_h(int i, int j, int k, const expression& e) { set_antisym(h_, i, j, k, e); }
    void set_r(int i, int j, int k, const expression& e) { set_antisym(r_, i, j, k, e); }

private:
    int dim_;
    std::vector<expression> h_, r_;

    std::size_t idx3(int i, int j, int k) const {
        return static_cast<std::size_t>(((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1));
    }

    void set_antisym(std::vector<expression>& a, int i, int j, int k, const expression& e) {
        detail::require_x_polynomial(e, "flux entry");
        if (i == j || j == k || i == k) {
            if (!e.is_zero()) throw data_error("flux entry with repeated indices must vanish");
            return;
        }
        a[idx3(i, j, k)] = e;
        a[idx3(j, k, i)] = e;
        a[idx3(k, i, j)] = e;
        a[idx3(j, i, k)] = -e;
        a[idx3(i, k, j)] = -e;
        a[idx3(k, j, i)] = -e;
    }
};

// ---------------------------------------------------------------------------
// Hamiltonian lifts

/// h = anchor(i,j) xs_j xi^i - 1/2 structure(k,i,j) xi^i xi^j xis_k.
/// {h, .} acts as the algebroid differential on lifted functions and forms.
inline expression differential_hamiltonian(const lie_algebroid& L) {
    const chart c = L.base();
    expression out(c);
    for (int i = 1; i <= L.dim(); ++i)
        for (int j = 1; j <= L.dim(); ++j) {
            if (L.anchor(i, j).is_zero()) continue;
            out += L.anchor(i, j) * expression::from_generator(c, gen_xs(j)) *
                   expression::from_generator(c, gen_xi(i));
        }
    const rational minus_half(-1, 2);
    for (int k = 1; k <= L.dim(); ++k)
        for (int i = 1; i <= L.dim(); ++i)
            for (int j = 1; j <= L.dim(); ++j) {
                if (L.structure(k, i, j).is_zero()) continue;
                out += minus_half * (L.structure(k, i, j) *
                                     expression::from_generator(c, gen_xi(i)) *
                                     expression::from_generator(c, gen_xi(j)) *
                                     expression::from_generator(c, gen_xis(k)));
            }
    return out;
}

/// Legendre-transformed dual Hamiltonian,
///   coanchor(i,j) xs_j xis_i - 1/2 dual_structure(k,i,j) xi^k xis_i xis_j.
/// The xs factor carries the derivative index so that {h*, .} represents
/// the dual differential on lifted functions.
inline expression dual_differential_hamiltonian(const dual_lie_algebroid& D) {
    const chart c = D.base();
    expression out(c);
    for (int i = 1; i <= D.dim(); ++i)
        for (int j = 1; j <= D.dim(); ++j) {
            if (D.coanchor(i, j).is_zero()) continue;
            out += D.coanchor(i, j) * expression::from_generator(c, gen_xs(j)) *
                   expression::from_generator(c, gen_xis(i));
        }
    const rational minus_half(-1, 2);
    for (int k = 1; k <= D.dim(); ++k)
        for (int i = 1; i <= D.dim(); ++i)
            for (int j = 1; j <= D.dim(); ++j) {
                if (D.structure(k, i, j).is_zero()) continue;
                out += minus_half * (D.structure(k, i, j) *
                                     expression::from_generator(c, gen_xi(k)) *
                                     expression::from_generator(c, gen_xis(i)) *
                                     expression::from_generator(c, gen_xis(j)));
            }
    return out;
}

inline expression bialgebroid_hamiltonian(const lie_bialgebroid& B) {
    return differential_hamiltonian(B.primal) + dual_differential_hamiltonian(B.dual);
}

/// The pair is a Lie bialgebroid exactly when {mu, mu} = 0.
inline check_result check_bialgebroid(const lie_bialgebroid& B) {
    expression mu = bialgebroid_hamiltonian(B);
    return check_result::from_residual("bialgebroid", poisson(mu, mu));
}

// ---------------------------------------------------------------------------
// Lifts of sections

inline expression lift_vector(const chart& c, const std::vector<expression>& x) {
    expression out(c);
    for (std::size_t i = 0; i < x.size(); ++i)
        out += x[i] * expression::from_generator(c, gen_xis(static_cast<int>(i) + 1));
    return out;
}

inline expression lift_form(const chart& c, const std::vector<expression>& w) {
    expression out(c);
    for (std::size_t i = 0; i < w.size(); ++i)
        out += w[i] * expression::from_generator(c, gen_xi(static_cast<int>(i) + 1));
    return out;
}

inline expression lift_section(const chart& c, const courant_section& s) {
    return lift_vector(c, s.vec) + lift_form(c, s.form);
}

// ---------------------------------------------------------------------------
// Dorfman and Courant brackets

/// Dorfman operation as a double derived bracket of the structure
/// Hamiltonian: {{mu, lift s1}, lift s2}.
inline expression dorfman_derived(const lie_bialgebroid& B, const courant_section& s1,
                                  const courant_section& s2) {
    const chart c = B.base();
    expression mu = bialgebroid_hamiltonian(B);
    return derived(mu, lift_section(c, s1), lift_section(c, s2));
}

namespace detail {

// a(X) f for a coefficient family X
inline expression anchor_apply(const lie_algebroid& L, const std::vector<expression>& x,
                               const expression& f) {
    const chart c = L.base();
    expression out(c);
    for (int i = 1; i <= L.dim(); ++i)
        for (int l = 1; l <= L.dim(); ++l)
            out += x[static_cast<std::size_t>(i - 1)] * L.anchor(i, l) *
                   partial(gen_x(l), f);
    return out;
}

inline expression coanchor_apply(const dual_lie_algebroid& D, const std::vector<expression>& w,
                                 const expression& f) {
    const chart c = D.base();
    expression out(c);
    for (int i = 1; i <= D.dim(); ++i)
        for (int l = 1; l <= D.dim(); ++l)
            out += w[static_cast<std::size_t>(i - 1)] * D.coanchor(i, l) *
                   partial(gen_x(l), f);
    return out;
}

}  // namespace detail

/// [X, Y]_A components from the structure data.
inline std::vector<expression> algebroid_bracket(const lie_algebroid& L,
                                                 const std::vector<expression>& x,
                                                 const std::vector<expression>& y) {
    const chart c = L.base();
    const int d = L.dim();
    std::vector<expression> out = detail::zero_family(c, d);
    for (int k = 1; k <= d; ++k) {
        expression& acc = out[static_cast<std::size_t>(k - 1)];
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (!L.structure(k, i, j).is_zero())
                    acc += x[static_cast<std::size_t>(i - 1)] *
                           y[static_cast<std::size_t>(j - 1)] * L.structure(k, i, j);
        acc += detail::anchor_apply(L, x, y[static_cast<std::size_t>(k - 1)]);
        acc -= detail::anchor_apply(L, y, x[static_cast<std::size_t>(k - 1)]);
    }
    return out;
}

/// (d_A f)_i = anchor(i,l) d_l f.
inline std::vector<expression> differential_of_function(const lie_algebroid& L,
                                                        const expression& f) {
    const chart c = L.base();
    std::vector<expression> out = detail::zero_family(c, L.dim());
    for (int i = 1; i <= L.dim(); ++i)
        for (int l = 1; l <= L.dim(); ++l)
            out[static_cast<std::size_t>(i - 1)] += L.anchor(i, l) * partial(gen_x(l), f);
    return out;
}

/// (d_A w)_{ij}, skew in (i, j).
inline expression differential_of_form_entry(const lie_algebroid& L,
                                             const std::vector<expression>& w, int i, int j) {
    const chart c = L.base();
    expression out(c);
    for (int l = 1; l <= L.dim(); ++l) {
        out += L.anchor(i, l) * partial(gen_x(l), w[static_cast<std::size_t>(j - 1)]);
        out -= L.anchor(j, l) * partial(gen_x(l), w[static_cast<std::size_t>(i - 1)]);
    }
    for (int k = 1; k <= L.dim(); ++k)
        out -= L.structure(k, i, j) * w[static_cast<std::size_t>(k - 1)];
    return out;
}

/// L^A_X w = i_X d_A w + d_A(i_X w), as a form family.
inline std::vector<expression> algebroid_lie_derivative(const lie_algebroid& L,
                                                        const std::vector<expression>& x,
                                                        const std::vector<expression>& w) {
    const chart c = L.base();
    const int d = L.dim();
    expression contraction(c);
    for (int j = 1; j <= d; ++j)
        contraction +=
            x[static_cast<std::size_t>(j - 1)] * w[static_cast<std::size_t>(j - 1)];
    std::vector<expression> out = differential_of_function(L, contraction);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            out[static_cast<std::size_t>(i - 1)] +=
                x[static_cast<std::size_t>(j - 1)] * differential_of_form_entry(L, w, j, i);
    return out;
}

/// (d_A* f)^i = coanchor(i,l) d_l f.
inline std::vector<expression> dual_differential_of_function(const dual_lie_algebroid& D,
                                                             const expression& f) {
    const chart c = D.base();
    std::vector<expression> out = detail::zero_family(c, D.dim());
    for (int i = 1; i <= D.dim(); ++i)
        for (int l = 1; l <= D.dim(); ++l)
            out[static_cast<std::size_t>(i - 1)] += D.coanchor(i, l) * partial(gen_x(l), f);
    return out;
}

/// (d_A* X)^{ij}, skew in (i, j).
inline expression dual_differential_of_vector_entry(const dual_lie_algebroid& D,
                                                    const std::vector<expression>& x, int i,
                                                    int j) {
    const chart c = D.base();
    expression out(c);
    for (int l = 1; l <= D.dim(); ++l) {
        out += D.coanchor(i, l) * partial(gen_x(l), x[static_cast<std::size_t>(j - 1)]);
        out -= D.coanchor(j, l) * partial(gen_x(l), x[static_cast<std::size_t>(i - 1)]);
    }
    for (int k = 1; k <= D.dim(); ++k)
        out -= D.structure(k, i, j) * x[static_cast<std::size_t>(k - 1)];
    return out;
}

/// L^{A*}_eta Y, as a vector family.
inline std::vector<expression> dual_lie_derivative(const dual_lie_algebroid& D,
                                                   const std::vector<expression>& eta,
                                                   const std::vector<expression>& y) {
    const chart c = D.base();
    const int d = D.dim();
    expression contraction(c);
    for (int j = 1; j <= d; ++j)
        contraction +=
            eta[static_cast<std::size_t>(j - 1)] * y[static_cast<std::size_t>(j - 1)];
    std::vector<expression> out = dual_differential_of_function(D, contraction);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            out[static_cast<std::size_t>(i - 1)] +=
                eta[static_cast<std::size_t>(j - 1)] *
                dual_differential_of_vector_entry(D, y, j, i);
    return out;
}

/// [eta, omega]_{A*} components.
inline std::vector<expression> dual_algebroid_bracket(const dual_lie_algebroid& D,
                                                      const std::vector<expression>& eta,
                                                      const std::vector<expression>& omega) {
    const chart c = D.base();
    const int d = D.dim();
    std::vector<expression> out = detail::zero_family(c, d);
    for (int k = 1; k <= d; ++k) {
        expression& acc = out[static_cast<std::size_t>(k - 1)];
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (!D.structure(k, i, j).is_zero())
                    acc += eta[static_cast<std::size_t>(i - 1)] *
                           omega[static_cast<std::size_t>(j - 1)] * D.structure(k, i, j);
        acc += detail::coanchor_apply(D, eta, omega[static_cast<std::size_t>(k - 1)]);
        acc -= detail::coanchor_apply(D, omega, eta[static_cast<std::size_t>(k - 1)]);
    }
    return out;
}

/// Dorfman operation assembled from the displayed component formula:
/// ([X,Y]_A + L^{A*}_eta Y - i_omega d_{A*} X) + ([eta,omega]_{A*} + L^A_X omega
/// - i_Y d_A eta).
inline courant_section dorfman_components(const lie_bialgebroid& B, const courant_section& s1,
                                          const courant_section& s2) {
    const chart c = B.base();
    const int d = B.dim();
    courant_section out = courant_section::zero(c);

    out.vec = algebroid_bracket(B.primal, s1.vec, s2.vec);
    std::vector<expression> lie_dual = dual_lie_derivative(B.dual, s1.form, s2.vec);
    for (int i = 1; i <= d; ++i) {
        expression& acc = out.vec[static_cast<std::size_t>(i - 1)];
        acc += lie_dual[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= d; ++j)
            acc -= s2.form[static_cast<std::size_t>(j - 1)] *
                   dual_differential_of_vector_entry(B.dual, s1.vec, j, i);
    }

    out.form = dual_algebroid_bracket(B.dual, s1.form, s2.form);
    std::vector<expression> lie_primal = algebroid_lie_derivative(B.primal, s1.vec, s2.form);
    for (int i = 1; i <= d; ++i) {
        expression& acc = out.form[static_cast<std::size_t>(i - 1)];
        acc += lie_primal[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= d; ++j)
            acc -= s2.vec[static_cast<std::size_t>(j - 1)] *
                   differential_of_form_entry(B.primal, s1.form, j, i);
    }
    return out;
}

/// Courant bracket: the antisymmetrization 1/2 (s1 o s2 - s2 o s1).
inline courant_section courant_bracket(const lie_bialgebroid& B, const courant_section& s1,
                                       const courant_section& s2) {
    const chart c = B.base();
    courant_section a = dorfman_components(B, s1, s2);
    courant_section b = dorfman_components(B, s2, s1);
    courant_section out = courant_section::zero(c);
    const rational half(1, 2);
    for (int i = 0; i < B.dim(); ++i) {
        out.vec[static_cast<std::size_t>(i)] =
            half * (a.vec[static_cast<std::size_t>(i)] - b.vec[static_cast<std::size_t>(i)]);
        out.form[static_cast<std::size_t>(i)] =
            half * (a.form[static_cast<std::size_t>(i)] - b.form[static_cast<std::size_t>(i)]);
    }
    return out;
}

/// <X + eta, Y + omega> = eta(Y) + omega(X).
inline expression pairing(const chart& c, const courant_section& s1,
                          const courant_section& s2) {
    expression out(c);
    for (std::size_t i = 0; i < s1.form.size(); ++i)
        out += s1.form[i] * s2.vec[i] + s2.form[i] * s1.vec[i];
    return out;
}

/// rho(X + eta) = a(X) + a*(eta) as a vector-field coefficient family.
inline std::vector<expression> anchor_rho(const lie_bialgebroid& B, const courant_section& s) {
    const chart c = B.base();
    std::vector<expression> out = detail::zero_family(c, B.dim());
    for (int j = 1; j <= B.dim(); ++j) {
        expression& acc = out[static_cast<std::size_t>(j - 1)];
        for (int i = 1; i <= B.dim(); ++i) {
            acc += B.primal.anchor(i, j) * s.vec[static_cast<std::size_t>(i - 1)];
            acc += B.dual.coanchor(i, j) * s.form[static_cast<std::size_t>(i - 1)];
        }
    }
    return out;
}

/// D f, the section determined by <D f, s> = rho(s) f: vector part d_{A*} f,
/// form part d_A f.
inline courant_section courant_d(const lie_bialgebroid& B, const expression& f) {
    courant_section out = courant_section::zero(B.base());
    out.vec = dual_differential_of_function(B.dual, f);
    out.form = differential_of_function(B.primal, f);
    return out;
}

namespace detail {

// [V, W] of vector-field coefficient families on the base
inline std::vector<expression> vector_field_bracket(const chart& c,
                                                    const std::vector<expression>& v,
                                                    const std::vector<expression>& w) {
    std::vector<expression> out = zero_family(c, c.dim);
    for (int j = 1; j <= c.dim; ++j)
        for (int k = 1; k <= c.dim; ++k) {
            out[static_cast<std::size_t>(j - 1)] +=
                v[static_cast<std::size_t>(k - 1)] *
                partial(gen_x(k), w[static_cast<std::size_t>(j - 1)]);
            out[static_cast<std::size_t>(j - 1)] -=
                w[static_cast<std::size_t>(k - 1)] *
                partial(gen_x(k), v[static_cast<std::size_t>(j - 1)]);
        }
    return out;
}

inline expression apply_family(const chart& c, const std::vector<expression>& v,
                               const expression& f) {
    expression out(c);
    for (int k = 1; k <= c.dim; ++k)
        out += v[static_cast<std::size_t>(k - 1)] * partial(gen_x(k), f);
    return out;
}

inline courant_section scale_section(const rational& r, courant_section s) {
    for (expression& e : s.vec) e = r * e;
    for (expression& e : s.form) e = r * e;
    return s;
}

inline courant_section add_sections(const courant_section& a, const courant_section& b) {
    courant_section out = a;
    for (std::size_t i = 0; i < out.vec.size(); ++i) {
        out.vec[i] += b.vec[i];
        out.form[i] += b.form[i];
    }
    return out;
}

inline courant_section mul_section(const expression& f, courant_section s) {
    for (expression& e : s.vec) e = f * e;
    for (expression& e : s.form) e = f * e;
    return s;
}

}  // namespace detail

/// Verifies the five Courant-algebroid axioms on the supplied section
/// triples and test functions; one result per axiom, carrying the first
/// nonzero residual found.
inline verification_report check_courant_axioms(
    const lie_bialgebroid& B, const std::vector<std::array<courant_section, 3>>& triples,
    const std::vector<expression>& functions) {
    const chart c = B.base();
    verification_report report;

    expression r1(c), r2(c), r3(c), r4(c), r5(c);

    auto note = [](expression& slot, const expression& residual) {
        if (slot.is_zero() && !residual.is_zero()) slot = residual;
    };

    for (const auto& [s1, s2, s3] : triples) {
        // 1: left Leibniz rule for the Dorfman operation
        courant_section lhs = dorfman_components(B, s1, dorfman_components(B, s2, s3));
        courant_section rhs = detail::add_sections(
            dorfman_components(B, dorfman_components(B, s1, s2), s3),
            dorfman_components(B, s2, dorfman_components(B, s1, s3)));
        for (int i = 0; i < B.dim(); ++i) {
            note(r1, lhs.vec[static_cast<std::size_t>(i)] - rhs.vec[static_cast<std::size_t>(i)]);
            note(r1,
                 lhs.form[static_cast<std::size_t>(i)] - rhs.form[static_cast<std::size_t>(i)]);
        }

        // 2: the anchor is a homomorphism onto vector fields
        std::vector<expression> rho_circ = anchor_rho(B, dorfman_components(B, s1, s2));
        std::vector<expression> rho_bracket =
            detail::vector_field_bracket(c, anchor_rho(B, s1), anchor_rho(B, s2));
        for (int i = 0; i < B.dim(); ++i)
            note(r2, rho_circ[static_cast<std::size_t>(i)] -
                         rho_bracket[static_cast<std::size_t>(i)]);

        // 3: module Leibniz rule in the second argument
        for (const expression& f : functions) {
            courant_section lhs3 = dorfman_components(B, s1, detail::mul_section(f, s2));
            courant_section rhs3 = detail::add_sections(
                detail::mul_section(f, dorfman_components(B, s1, s2)),
                detail::mul_section(detail::apply_family(c, anchor_rho(B, s1), f), s2));
            for (int i = 0; i < B.dim(); ++i) {
                note(r3, lhs3.vec[static_cast<std::size_t>(i)] -
                             rhs3.vec[static_cast<std::size_t>(i)]);
                note(r3, lhs3.form[static_cast<std::size_t>(i)] -
                             rhs3.form[static_cast<std::size_t>(i)]);
            }
        }

        // 4: s o s = 1/2 D <s, s>
        for (const courant_section* s : {&s1, &s2, &s3}) {
            courant_section lhs4 = dorfman_components(B, *s, *s);
            courant_section rhs4 = detail::scale_section(
                rational(1, 2), courant_d(B, pairing(c, *s, *s)));
            for (int i = 0; i < B.dim(); ++i) {
                note(r4, lhs4.vec[static_cast<std::size_t>(i)] -
                             rhs4.vec[static_cast<std::size_t>(i)]);
                note(r4, lhs4.form[static_cast<std::size_t>(i)] -
                             rhs4.form[static_cast<std::size_t>(i)]);
            }
        }

        // 5: invariance of the pairing
        expression lhs5 = detail::apply_family(c, anchor_rho(B, s1), pairing(c, s2, s3));
        expression rhs5 = pairing(c, dorfman_components(B, s1, s2), s3) +
                          pairing(c, s2, dorfman_components(B, s1, s3));
        note(r5, lhs5 - rhs5);
    }

    report.add(check_result::from_residual("courant-axiom-1-leibniz-jacobi", r1));
    report.add(check_result::from_residual("courant-axiom-2-anchor-homomorphism", r2));
    report.add(check_result::from_residual("courant-axiom-3-module-leibniz", r3));
    report.add(check_result::from_residual("courant-axiom-4-self-pairing", r4));
    report.add(check_result::from_residual("courant-axiom-5-pairing-invariance", r5));
    return report;
}

/// Lie derivative of a form family along a vector family, computed as the
/// double derived bracket {{h, lift X}, lift omega}; returns the form family.
inline std::vector<expression> lie_derivative(const lie_bialgebroid& B,
                                              const std::vector<expression>& x,
                                              const std::vector<expression>& w) {
    const chart c = B.base();
    expression h = differential_hamiltonian(B.primal);
    expression r = derived(h, lift_vector(c, x), lift_form(c, w));
    std::vector<expression> out = detail::zero_family(c, B.dim());
    expression rebuilt(c);
    for (int i = 1; i <= B.dim(); ++i) {
        out[static_cast<std::size_t>(i - 1)] = partial(gen_xi(i), r);
        rebuilt += out[static_cast<std::size_t>(i - 1)] *
                   expression::from_generator(c, gen_xi(i));
    }
    if (rebuilt != r)
        throw data_error("lie_derivative produced a non-form result");
    return out;
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg oracle (direct evaluation of the alternating sum)

/// (d_A f)(X) = a(X) f.
inline expression ce_value_0(const lie_algebroid& L, const expression& f,
                             const std::vector<expression>& x) {
    return detail::anchor_apply(L, x, f);
}

/// (d_A w)(X, Y) = a(X)(w(Y)) - a(Y)(w(X)) - w([X, Y]).
inline expression ce_value_1(const lie_algebroid& L, const std::vector<expression>& w,
                             const std::vector<expression>& x,
                             const std::vector<expression>& y) {
    const chart c = L.base();
    auto contract = [&](const std::vector<expression>& v) {
        expression out(c);
        for (std::size_t i = 0; i < v.size(); ++i) out += w[i] * v[i];
        return out;
    };
    return detail::anchor_apply(L, x, contract(y)) - detail::anchor_apply(L, y, contract(x)) -
           contract(algebroid_bracket(L, x, y));
}

/// (d_A w)(X, Y, Z) for an antisymmetric two-form coefficient matrix
/// (1-based, w[i][j] = w(e_i, e_j)).
inline expression ce_value_2(const lie_algebroid& L,
                             const std::vector<std::vector<expression>>& w,
                             const std::vector<expression>& x, const std::vector<expression>& y,
                             const std::vector<expression>& z) {
    const chart c = L.base();
    auto eval = [&](const std::vector<expression>& u, const std::vector<expression>& v) {
        expression out(c);
        for (int i = 1; i <= L.dim(); ++i)
            for (int j = 1; j <= L.dim(); ++j)
                out += w[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] *
                       u[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)];
        return out;
    };
    return detail::anchor_apply(L, x, eval(y, z)) - detail::anchor_apply(L, y, eval(x, z)) +
           detail::anchor_apply(L, z, eval(x, y)) - eval(algebroid_bracket(L, x, y), z) +
           eval(algebroid_bracket(L, x, z), y) - eval(algebroid_bracket(L, y, z), x);
}

inline expression lift_two_form(const chart& c,
                                const std::vector<std::vector<expression>>& w) {
    expression out(c);
    const rational half(1, 2);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            out += half * (w[i][j] *
                           expression::from_generator(c, gen_xi(static_cast<int>(i) + 1)) *
                           expression::from_generator(c, gen_xi(static_cast<int>(j) + 1)));
    return out;
}

// ---------------------------------------------------------------------------
// Proto-bialgebroid with H- and R-flux

/// nu = h + L*h* + 1/3! H_ijk xi^i xi^j xi^k + 1/3! R^ijk xis_i xis_j xis_k.
inline expression proto_hamiltonian(const lie_bialgebroid& B, const flux_data& F) {
    if (F.dim() != B.dim()) throw data_error("flux data dimension mismatch");
    const chart c = B.base();
    expression out = bialgebroid_hamiltonian(B);
    const rational sixth(1, 6);
    for (int i = 1; i <= B.dim(); ++i)
        for (int j = 1; j <= B.dim(); ++j)
            for (int k = 1; k <= B.dim(); ++k) {
                if (!F.h(i, j, k).is_zero())
                    out += sixth * (F.h(i, j, k) * expression::from_generator(c, gen_xi(i)) *
                                    expression::from_generator(c, gen_xi(j)) *
                                    expression::from_generator(c, gen_xi(k)));
                if (!F.r(i, j, k).is_zero())
                    out += sixth * (F.r(i, j, k) * expression::from_generator(c, gen_xis(i)) *
                                    expression::from_generator(c, gen_xis(j)) *
                                    expression::from_generator(c, gen_xis(k)));
            }
    return out;
}

/// Proto-bialgebroid condition {nu, nu} = 0. With H = R = 0 this is the
/// bialgebroid check verbatim.
inline check_result check_proto(const lie_bialgebroid& B, const flux_data& F) {
    expression nu = proto_hamiltonian(B, F);
    return check_result::from_residual("proto-bialgebroid", poisson(nu, nu));
}

/// Jacobiator of a bivector, J^{ijk} = pi^{li} d_l pi^{jk} + cyclic; the
/// brute-force oracle for the bialgebroid check on Poisson data.
inline expression bivector_jacobiator_entry(const chart& c,
                                            const std::vector<std::vector<expression>>& pi,
                                            int i, int j, int k) {
    expression out(c);
    auto at = [&](int a, int b) -> const expression& {
        return pi[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    };
    for (int l = 1; l <= c.dim; ++l) {
        out += at(l, i) * partial(gen_x(l), at(j, k));
        out += at(l, j) * partial(gen_x(l), at(k, i));
        out += at(l, k) * partial(gen_x(l), at(i, j));
    }
    return out;
}

/// Flat de Rham differential of a 3-form coefficient array, as the
/// independent oracle for flux integrability: (dH)_{ijkl}.
inline expression flat_four_form_entry(const flux_data& F, int i, int j, int k, int l) {
    expression out = partial(gen_x(i), F.h(j, k, l));
    out -= partial(gen_x(j), F.h(i, k, l));
    out += partial(gen_x(k), F.h(i, j, l));
    out -= partial(gen_x(l), F.h(i, j, k));
    return out;
}

}  // namespace koszul
