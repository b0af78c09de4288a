#pragma once

// Graded-commutative polynomial algebra with even and odd generators.
//
// Values of every computation in this library are `expression`s: normalized
// sums of monomials over exact rationals. A monomial splits into an even
// part (commuting generators with exponents) and an odd part (a strictly
// increasing sequence of anticommuting generators). Reordering odd factors
// picks up the Koszul sign; a repeated odd factor kills the term.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

struct error : std::runtime_error {
    explicit error(const std::string& w) : std::runtime_error(w) {}
};
struct chart_error : error {
    explicit chart_error(const std::string& w) : error(w) {}
};
struct parity_error : error {
    explicit parity_error(const std::string& w) : error(w) {}
};
struct data_error : error {
    explicit data_error(const std::string& w) : error(w) {}
};

enum class parity : int { even = 0, odd = 1 };

/// Generator families. Surface names in the text grammar:
///   x1, xt_1, p1, pt_1, xs_1, xi1, xis_1
enum class family : int {
    coordinate = 0,       // x
    dual_coordinate = 1,  // xt
    momentum = 2,         // p
    dual_momentum = 3,    // pt
    base_momentum = 4,    // xs
    fibre = 5,            // xi
    dual_fibre = 6,       // xis
};

inline parity family_parity(family f) {
    return (f == family::fibre || f == family::dual_fibre) ? parity::odd : parity::even;
}

inline const char* family_name(family f) {
    switch (f) {
        case family::coordinate: return "x";
        case family::dual_coordinate: return "xt_";
        case family::momentum: return "p";
        case family::dual_momentum: return "pt_";
        case family::base_momentum: return "xs_";
        case family::fibre: return "xi";
        case family::dual_fibre: return "xis_";
    }
    return "?";
}

struct generator {
    family fam;
    int index;  // 1-based, bounded by the chart dimension

    friend bool operator==(const generator& a, const generator& b) {
        return a.fam == b.fam && a.index == b.index;
    }
    friend bool operator!=(const generator& a, const generator& b) { return !(a == b); }
    friend bool operator<(const generator& a, const generator& b) {
        if (a.fam != b.fam) return static_cast<int>(a.fam) < static_cast<int>(b.fam);
        return a.index < b.index;
    }
};

inline generator gen_x(int i) { return {family::coordinate, i}; }
inline generator gen_xt(int i) { return {family::dual_coordinate, i}; }
inline generator gen_p(int i) { return {family::momentum, i}; }
inline generator gen_pt(int i) { return {family::dual_momentum, i}; }
inline generator gen_xs(int i) { return {family::base_momentum, i}; }
inline generator gen_xi(int i) { return {family::fibre, i}; }
inline generator gen_xis(int i) { return {family::dual_fibre, i}; }

inline std::string generator_name(const generator& g) {
    return std::string(family_name(g.fam)) + std::to_string(g.index);
}

enum class chart_mode : int { base = 0, doubled = 1 };

/// Chart: dimension plus generator mode.
///   base mode:    x, xs, xi, xis   (conjugate pairs x|xs and xi|xis)
///   doubled mode: x, xt, p, pt, xi, xis   (pairs x|p, xt|pt, xi|xis)
struct chart {
    chart_mode mode;
    int dim;

    bool allows(family f) const {
        switch (f) {
            case family::coordinate:
            case family::fibre:
            case family::dual_fibre: return true;
            case family::base_momentum: return mode == chart_mode::base;
            case family::dual_coordinate:
            case family::momentum:
            case family::dual_momentum: return mode == chart_mode::doubled;
        }
        return false;
    }

    void validate(const generator& g) const {
        if (!allows(g.fam))
            throw chart_error("generator " + generator_name(g) + " not available on this chart");
        if (g.index < 1 || g.index > dim)
            throw chart_error("generator " + generator_name(g) + " outside chart dimension " +
                              std::to_string(dim));
    }

    friend bool operator==(const chart& a, const chart& b) {
        return a.mode == b.mode && a.dim == b.dim;
    }
    friend bool operator!=(const chart& a, const chart& b) { return !(a == b); }
};

inline chart base_chart(int dim) { return {chart_mode::base, dim}; }
inline chart doubled_chart(int dim) { return {chart_mode::doubled, dim}; }

/// One term before normalization: factors may be unsorted and repeated.
struct raw_term {
    rational coeff;
    std::vector<std::pair<generator, int>> even_factors;
    std::vector<generator> odd_factors;
};

/// Normalized term. `even` is sorted by generator with exponents >= 1,
/// `odd` is strictly increasing in canonical generator order.
struct monomial {
    rational coeff;
    std::vector<std::pair<generator, int>> even;
    std::vector<generator> odd;

    parity term_parity() const {
        return odd.size() % 2 == 0 ? parity::even : parity::odd;
    }
};

// (even, odd) key order; used for the canonical term order everywhere,
// including printing.
inline int compare_key(const monomial& a, const monomial& b) {
    const std::size_t ne = std::min(a.even.size(), b.even.size());
    for (std::size_t i = 0; i < ne; ++i) {
        if (a.even[i].first != b.even[i].first)
            return a.even[i].first < b.even[i].first ? -1 : 1;
        if (a.even[i].second != b.even[i].second)
            return a.even[i].second < b.even[i].second ? -1 : 1;
    }
    if (a.even.size() != b.even.size()) return a.even.size() < b.even.size() ? -1 : 1;
    const std::size_t no = std::min(a.odd.size(), b.odd.size());
    for (std::size_t i = 0; i < no; ++i)
        if (a.odd[i] != b.odd[i]) return a.odd[i] < b.odd[i] ? -1 : 1;
    if (a.odd.size() != b.odd.size()) return a.odd.size() < b.odd.size() ? -1 : 1;
    return 0;
}

/// Normalized sum of monomials on a fixed chart. Immutable value type:
/// every operation returns a fresh expression.
class expression {
public:
    explicit expression(chart c) : chart_(c) {}

    static expression zero(chart c) { return expression(c); }

    static expression constant(chart c, rational v) {
        expression e(c);
        if (!v.is_zero()) e.terms_.push_back({std::move(v), {}, {}});
        return e;
    }

    static expression from_generator(chart c, generator g) {
        c.validate(g);
        expression e(c);
        if (family_parity(g.fam) == parity::even)
            e.terms_.push_back({rational(1), {{g, 1}}, {}});
        else
            e.terms_.push_back({rational(1), {}, {g}});
        return e;
    }

    /// Builds the normal form from raw terms: odd factors sorted with the
    /// Koszul sign, squares of odd generators dropped, like terms combined,
    /// zero coefficients removed. Idempotent by construction.
    static expression make(chart c, const std::vector<raw_term>& raw) {
        std::vector<monomial> out;
        out.reserve(raw.size());
        for (const raw_term& t : raw) {
            if (t.coeff.is_zero()) continue;
            monomial m;
            m.coeff = t.coeff;
            for (const auto& [g, e] : t.even_factors) {
                c.validate(g);
                if (family_parity(g.fam) != parity::even)
                    throw parity_error("odd generator " + generator_name(g) +
                                       " used as an even factor");
                if (e <= 0) throw error("nonpositive exponent on " + generator_name(g));
            }
            m.even = merge_even(t.even_factors, {});
            bool dead = false;
            for (const generator& g : t.odd_factors) {
                c.validate(g);
                if (family_parity(g.fam) != parity::odd)
                    throw parity_error("even generator " + generator_name(g) +
                                       " used as an odd factor");
                if (!insert_odd(m, g)) {
                    dead = true;
                    break;
                }
            }
            if (!dead) out.push_back(std::move(m));
        }
        expression e(c);
        e.terms_ = combine(std::move(out));
        return e;
    }

    chart get_chart() const { return chart_; }
    const std::vector<monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Re-tags the expression onto another chart; every generator must
    /// exist there.
    expression on_chart(chart c) const {
        expression e(c);
        e.terms_ = terms_;
        for (const monomial& m : e.terms_) {
            for (const auto& [g, _] : m.even) c.validate(g);
            for (const generator& g : m.odd) c.validate(g);
        }
        return e;
    }

    friend bool operator==(const expression& a, const expression& b) {
        if (a.chart_ != b.chart_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
            if (compare_key(a.terms_[i], b.terms_[i]) != 0) return false;
        }
        return true;
    }
    friend bool operator!=(const expression& a, const expression& b) { return !(a == b); }

    friend expression operator+(const expression& a, const expression& b) {
        require_same_chart(a, b);
        std::vector<monomial> all = a.terms_;
        all.insert(all.end(), b.terms_.begin(), b.terms_.end());
        expression e(a.chart_);
        e.terms_ = combine(std::move(all));
        return e;
    }

    expression operator-() const {
        expression e(chart_);
        e.terms_ = terms_;
        for (monomial& m : e.terms_) m.coeff = -m.coeff;
        return e;
    }

    friend expression operator-(const expression& a, const expression& b) { return a + (-b); }

    friend expression operator*(const rational& s, const expression& a) {
        expression e(a.chart_);
        if (s.is_zero()) return e;
        e.terms_ = a.terms_;
        for (monomial& m : e.terms_) m.coeff = m.coeff * s;
        return e;
    }

    friend expression operator*(const expression& a, const expression& b) {
        require_same_chart(a, b);
        std::vector<monomial> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const monomial& ma : a.terms_)
            for (const monomial& mb : b.terms_) {
                monomial m;
                if (!multiply_monomials(ma, mb, m)) continue;
                out.push_back(std::move(m));
            }
        expression e(a.chart_);
        e.terms_ = combine(std::move(out));
        return e;
    }

    expression& operator+=(const expression& o) { return *this = *this + o; }
    expression& operator-=(const expression& o) { return *this = *this - o; }
    expression& operator*=(const expression& o) { return *this = *this * o; }

private:
    chart chart_;
    std::vector<monomial> terms_;

    static void require_same_chart(const expression& a, const expression& b) {
        if (a.chart_ != b.chart_) throw chart_error("expressions live on different charts");
    }

    // keeps m.odd strictly increasing; false when g already occurs
    static bool insert_odd(monomial& m, const generator& g) {
        std::size_t pos = 0;
        while (pos < m.odd.size() && m.odd[pos] < g) ++pos;
        if (pos < m.odd.size() && m.odd[pos] == g) return false;
        // moving g past (m.odd.size() - pos) trailing odd factors... the new
        // factor arrives from the right, so it crosses the tail
        std::size_t crossings = m.odd.size() - pos;
        if (crossings % 2 == 1) m.coeff = -m.coeff;
        m.odd.insert(m.odd.begin() + static_cast<std::ptrdiff_t>(pos), g);
        return true;
    }

    static std::vector<std::pair<generator, int>> merge_even(
        std::vector<std::pair<generator, int>> v,
        const std::vector<std::pair<generator, int>>& w) {
        v.insert(v.end(), w.begin(), w.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<generator, int>> out;
        for (const auto& fe : v) {
            if (!out.empty() && out.back().first == fe.first)
                out.back().second += fe.second;
            else
                out.push_back(fe);
        }
        return out;
    }

    // false when the product vanishes (repeated odd generator)
    static bool multiply_monomials(const monomial& a, const monomial& b, monomial& out) {
        out.coeff = a.coeff * b.coeff;
        out.even = merge_even(a.even, b.even);
        // merge two strictly increasing odd sequences, counting crossings
        out.odd.clear();
        out.odd.reserve(a.odd.size() + b.odd.size());
        std::size_t i = 0, j = 0, crossings = 0;
        while (i < a.odd.size() && j < b.odd.size()) {
            if (a.odd[i] == b.odd[j]) return false;
            if (a.odd[i] < b.odd[j]) {
                out.odd.push_back(a.odd[i++]);
            } else {
                crossings += a.odd.size() - i;
                out.odd.push_back(b.odd[j++]);
            }
        }
        while (i < a.odd.size()) out.odd.push_back(a.odd[i++]);
        while (j < b.odd.size()) out.odd.push_back(b.odd[j++]);
        if (crossings % 2 == 1) out.coeff = -out.coeff;
        return true;
    }

    static std::vector<monomial> combine(std::vector<monomial> v) {
        std::sort(v.begin(), v.end(),
                  [](const monomial& a, const monomial& b) { return compare_key(a, b) < 0; });
        std::vector<monomial> out;
        for (monomial& m : v) {
            if (!out.empty() && compare_key(out.back(), m) == 0)
                out.back().coeff += m.coeff;
            else
                out.push_back(std::move(m));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const monomial& m) { return m.coeff.is_zero(); }),
                  out.end());
        return out;
    }
};

inline expression operator*(const expression& a, const rational& s) { return s * a; }

inline expression pow(const expression& a, int n) {
    if (n < 0) throw error("negative power of an expression");
    expression r = expression::constant(a.get_chart(), rational(1));
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

/// Left (for odd generators) or right graded partial derivative.
inline expression partial_impl(const generator& g, const expression& a, bool from_right) {
    std::vector<monomial> terms;
    const bool g_odd = family_parity(g.fam) == parity::odd;
    for (const monomial& m : a.terms()) {
        if (!g_odd) {
            auto it = std::find_if(m.even.begin(), m.even.end(),
                                   [&](const auto& fe) { return fe.first == g; });
            if (it == m.even.end()) continue;
            monomial d = m;
            d.coeff = d.coeff * rational(it->second);
            auto dit = d.even.begin() + (it - m.even.begin());
            if (--dit->second == 0) d.even.erase(dit);
            terms.push_back(std::move(d));
        } else {
            auto it = std::find(m.odd.begin(), m.odd.end(), g);
            if (it == m.odd.end()) continue;
            const std::size_t pos = static_cast<std::size_t>(it - m.odd.begin());
            const std::size_t swaps = from_right ? m.odd.size() - 1 - pos : pos;
            monomial d = m;
            if (swaps % 2 == 1) d.coeff = -d.coeff;
            d.odd.erase(d.odd.begin() + static_cast<std::ptrdiff_t>(pos));
            terms.push_back(std::move(d));
        }
    }
    std::vector<raw_term> raws;
    raws.reserve(terms.size());
    for (monomial& m : terms)
        raws.push_back(raw_term{std::move(m.coeff), std::move(m.even), std::move(m.odd)});
    return expression::make(a.get_chart(), raws);
}

/// Left partial derivative: for odd g the factor is commuted to the front
/// (with Koszul sign) and deleted. Satisfies the graded Leibniz rule
/// d(ab) = (da)b + (-1)^{|g||a|} a(db).
inline expression partial(const generator& g, const expression& a) {
    return partial_impl(g, a, false);
}

/// Right partial derivative (odd factor commuted to the back instead).
inline expression right_partial(const generator& g, const expression& a) {
    return partial_impl(g, a, true);
}

/// Parity of a homogeneous expression; nullopt when terms disagree.
/// The zero expression counts as even.
inline std::optional<parity> parity_of(const expression& a) {
    if (a.is_zero()) return parity::even;
    parity p = a.terms().front().term_parity();
    for (const monomial& m : a.terms())
        if (m.term_parity() != p) return std::nullopt;
    return p;
}

/// Replaces every occurrence of g by v (parities must match, or v = 0).
/// For odd g the occurrence is commuted to the front before replacement.
inline expression substitute(const expression& a, const generator& g, const expression& v) {
    if (v.get_chart() != a.get_chart())
        throw chart_error("substitution value lives on a different chart");
    if (!v.is_zero()) {
        auto pv = parity_of(v);
        if (!pv || *pv != family_parity(g.fam))
            throw parity_error("substitution changes parity of " + generator_name(g));
    }
    const bool g_odd = family_parity(g.fam) == parity::odd;
    expression acc(a.get_chart());
    for (const monomial& m : a.terms()) {
        if (!g_odd) {
            auto it = std::find_if(m.even.begin(), m.even.end(),
                                   [&](const auto& fe) { return fe.first == g; });
            if (it == m.even.end()) {
                acc += expression::make(a.get_chart(), {raw_term{m.coeff, m.even, m.odd}});
                continue;
            }
            monomial rest = m;
            rest.even.erase(rest.even.begin() + (it - m.even.begin()));
            expression tail =
                expression::make(a.get_chart(), {raw_term{rest.coeff, rest.even, rest.odd}});
            acc += pow(v, it->second) * tail;
        } else {
            auto it = std::find(m.odd.begin(), m.odd.end(), g);
            if (it == m.odd.end()) {
                acc += expression::make(a.get_chart(), {raw_term{m.coeff, m.even, m.odd}});
                continue;
            }
            const std::size_t pos = static_cast<std::size_t>(it - m.odd.begin());
            monomial rest = m;
            if (pos % 2 == 1) rest.coeff = -rest.coeff;
            rest.odd.erase(rest.odd.begin() + static_cast<std::ptrdiff_t>(pos));
            expression tail =
                expression::make(a.get_chart(), {raw_term{rest.coeff, rest.even, rest.odd}});
            acc += v * tail;
        }
    }
    return acc;
}

/// True when the expression is a polynomial in the listed families only.
inline bool uses_only(const expression& e, std::initializer_list<family> fams) {
    auto ok = [&](family f) {
        for (family g : fams)
            if (f == g) return true;
        return false;
    };
    for (const monomial& m : e.terms()) {
        for (const auto& [g, _] : m.even)
            if (!ok(g.fam)) return false;
        for (const generator& g : m.odd)
            if (!ok(g.fam)) return false;
    }
    return true;
}

}  // namespace koszul
