#pragma once

// Text grammar for expressions and structure files.
//
// Expressions:  sums of products, '*' binds tighter than '+'/'-', '^' only
// on even generators, unary minus allowed, rationals written n or n/m.
// Generator surface names: x1, xt_1, p1, pt_1, xs_1, xi1, xis_1.
//
// Structure files are line oriented: '#' comments, a mandatory `dim = N`
// line, then entries `name[i]...[j] = <expr>`. Known arrays: a[i][j],
// f[k][i][j], astar[i][j], Q[k][i][j], H[i][j][k], R[i][j][k] (base-chart
// polynomials in x) and X[i], eta[i] (doubled-chart polynomials in x, xt).
// Omitted entries are zero; skew or total antisymmetry is validated and a
// violation names the offending entry.
//
// The printer emits the canonical form: terms in (even, odd) key order,
// '+1' coefficients omitted, every other coefficient explicit. Printing is
// deterministic, and parse(print(e)) == e for normalized e.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/algebroid.hpp"
#include "koszul/dft.hpp"

namespace koszul {

struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& what, int l, int c)
        : error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + what),
          line(l), column(c) {}
};

// ---------------------------------------------------------------------------
// Printing

inline std::string print_monomial_factors(const monomial& m) {
    std::string out;
    bool first = true;
    auto push = [&](const std::string& s) {
        if (!first) out += "*";
        out += s;
        first = false;
    };
    for (const auto& [g, e] : m.even) {
        std::string s = generator_name(g);
        if (e != 1) s += "^" + std::to_string(e);
        push(s);
    }
    for (const generator& g : m.odd) push(generator_name(g));
    return out;
}

inline std::string print_term(const monomial& m, bool absolute) {
    rational c = absolute ? m.coeff.abs() : m.coeff;
    std::string factors = print_monomial_factors(m);
    if (factors.empty()) return c.str();
    if (c.is_one()) return factors;
    return c.str() + "*" + factors;
}

inline std::string print_expression(const expression& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const monomial& m : e.terms()) {
        if (first) {
            out += print_term(m, false);
            first = false;
        } else if (m.coeff.is_negative()) {
            out += " - " + print_term(m, true);
        } else {
            out += " + " + print_term(m, false);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expression parsing

namespace detail {

struct lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit lexer(const std::string& t, int start_line = 1) : text(t), line(start_line) {}

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, line, col); }

    void skip_space() {
        while (pos < text.size()) {
            char ch = text[pos];
            if (ch == '\n') {
                ++line;
                col = 1;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++col;
                ++pos;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    char take() {
        char ch = peek();
        if (pos < text.size()) {
            ++pos;
            ++col;
        }
        return ch;
    }

    bool accept(char ch) {
        if (peek() == ch) {
            ++pos;
            ++col;
            return true;
        }
        return false;
    }

    std::string take_digits() {
        skip_space();
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out += text[pos++];
            ++col;
        }
        return out;
    }

    std::string take_ident() {
        skip_space();
        std::string out;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            out += text[pos++];
            ++col;
        }
        return out;
    }
};

inline std::optional<generator> generator_from_name(const std::string& name) {
    // longest prefixes first so "xis_" is not read as "xi"
    static const std::pair<const char*, family> table[] = {
        {"xis_", family::dual_fibre}, {"xi", family::fibre},
        {"xt_", family::dual_coordinate}, {"xs_", family::base_momentum},
        {"pt_", family::dual_momentum}, {"p", family::momentum},
        {"x", family::coordinate},
    };
    for (const auto& [prefix, fam] : table) {
        std::string p(prefix);
        if (name.size() > p.size() && name.compare(0, p.size(), p) == 0) {
            std::string digits = name.substr(p.size());
            bool all_digits = !digits.empty();
            for (char ch : digits)
                if (!std::isdigit(static_cast<unsigned char>(ch))) all_digits = false;
            if (!all_digits) return std::nullopt;
            return generator{fam, std::stoi(digits)};
        }
    }
    return std::nullopt;
}

class expression_parser {
public:
    expression_parser(const std::string& text, const chart& c, int start_line = 1)
        : lex_(text, start_line), chart_(c) {}

    expression parse() {
        expression out = parse_sum();
        if (!lex_.done()) lex_.fail("unexpected trailing input");
        return out;
    }

private:
    lexer lex_;
    chart chart_;

    expression parse_sum() {
        expression out = parse_product();
        while (true) {
            if (lex_.accept('+'))
                out += parse_product();
            else if (lex_.accept('-'))
                out -= parse_product();
            else
                break;
        }
        return out;
    }

    expression parse_product() {
        expression out = parse_factor();
        while (lex_.accept('*')) out *= parse_factor();
        return out;
    }

    expression parse_factor() {
        if (lex_.accept('-')) return -parse_factor();
        char ch = lex_.peek();
        if (ch == '(') {
            lex_.take();
            expression out = parse_sum();
            if (!lex_.accept(')')) lex_.fail("expected ')'");
            return out;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(ch))) return parse_generator();
        lex_.fail(std::string("unexpected character '") + ch + "'");
    }

    expression parse_rational() {
        std::string num = lex_.take_digits();
        if (num.empty()) lex_.fail("expected a number");
        rational value(bigint::from_decimal(num));
        if (lex_.accept('/')) {
            std::string den = lex_.take_digits();
            if (den.empty()) lex_.fail("expected a denominator");
            bigint d = bigint::from_decimal(den);
            if (d.is_zero()) lex_.fail("zero denominator");
            value = rational(bigint::from_decimal(num), std::move(d));
        }
        return expression::constant(chart_, value);
    }

    expression parse_generator() {
        int at_line = lex_.line, at_col = lex_.col;
        std::string name = lex_.take_ident();
        auto g = generator_from_name(name);
        if (!g) throw parse_error("unknown generator name '" + name + "'", at_line, at_col);
        if (!chart_.allows(g->fam))
            throw parse_error("generator '" + name + "' not available on this chart", at_line,
                              at_col);
        if (g->index < 1 || g->index > chart_.dim)
            throw parse_error("generator index out of range in '" + name + "'", at_line,
                              at_col);
        expression out = expression::from_generator(chart_, *g);
        if (lex_.accept('^')) {
            if (family_parity(g->fam) == parity::odd)
                throw parse_error("exponent on odd generator '" + name + "'", at_line, at_col);
            std::string exp = lex_.take_digits();
            if (exp.empty()) lex_.fail("expected an exponent");
            int e = std::stoi(exp);
            if (e < 1) lex_.fail("exponent must be positive");
            out = pow(out, e);
        }
        return out;
    }
};

}  // namespace detail

/// Parses the expression grammar against a chart; the result is in normal
/// form. Throws parse_error with line/column on malformed input.
inline expression parse_expression(const std::string& text, const chart& c) {
    return detail::expression_parser(text, c).parse();
}

/// Same, reporting errors relative to a containing file's line number.
inline expression parse_expression_at(const std::string& text, const chart& c, int line) {
    return detail::expression_parser(text, c, line).parse();
}

// ---------------------------------------------------------------------------
// Structure files

/// Parsed structure file: which arrays were present decides what it
/// describes (bialgebroid halves, fluxes, or a double section).
class structure_file {
public:
    int dim() const { return dim_; }
    bool has_algebroid() const { return saw_a_ || saw_f_; }
    bool has_dual() const { return saw_astar_ || saw_q_; }
    bool has_flux() const { return saw_h_ || saw_r_; }
    bool has_section() const { return saw_x_ || saw_eta_; }

    lie_bialgebroid to_bialgebroid() const {
        lie_algebroid primal(dim_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j) primal.set_anchor(i, j, entry(a_, {i, j}));
        for (int k = 1; k <= dim_; ++k)
            for (int i = 1; i <= dim_; ++i)
                for (int j = i + 1; j <= dim_; ++j)
                    primal.set_structure(k, i, j, skew_entry(f_, k, i, j));
        dual_lie_algebroid dual(dim_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j) dual.set_coanchor(i, j, entry(astar_, {i, j}));
        for (int k = 1; k <= dim_; ++k)
            for (int i = 1; i <= dim_; ++i)
                for (int j = i + 1; j <= dim_; ++j)
                    dual.set_structure(k, i, j, skew_entry(q_, k, i, j));
        return lie_bialgebroid(std::move(primal), std::move(dual));
    }

    flux_data to_flux() const {
        flux_data out(dim_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = i + 1; j <= dim_; ++j)
                for (int k = j + 1; k <= dim_; ++k) {
                    out.set_h(i, j, k, antisym_entry(h_, i, j, k));
                    out.set_r(i, j, k, antisym_entry(r_, i, j, k));
                }
        return out;
    }

    double_section to_section() const {
        const chart c = doubled_chart(dim_);
        double_section out = double_section::zero(c);
        for (int i = 1; i <= dim_; ++i) {
            out.vec[static_cast<std::size_t>(i - 1)] = entry_or(x_, {i}, c);
            out.form[static_cast<std::size_t>(i - 1)] = entry_or(eta_, {i}, c);
        }
        return out;
    }

    friend structure_file parse_structure(const std::string& text);

private:
    using entry_map = std::map<std::vector<int>, expression>;

    int dim_ = 0;
    entry_map a_, f_, astar_, q_, h_, r_, x_, eta_;
    bool saw_a_ = false, saw_f_ = false, saw_astar_ = false, saw_q_ = false;
    bool saw_h_ = false, saw_r_ = false, saw_x_ = false, saw_eta_ = false;

    expression entry(const entry_map& m, std::vector<int> idx) const {
        auto it = m.find(idx);
        if (it != m.end()) return it->second;
        return expression::zero(base_chart(dim_));
    }

    expression entry_or(const entry_map& m, std::vector<int> idx, const chart& c) const {
        auto it = m.find(idx);
        if (it != m.end()) return it->second;
        return expression::zero(c);
    }

    // a file may list either orientation; normalize through the sign
    expression skew_entry(const entry_map& m, int k, int i, int j) const {
        if (auto it = m.find({k, i, j}); it != m.end()) return it->second;
        if (auto it = m.find({k, j, i}); it != m.end()) return -it->second;
        return expression::zero(base_chart(dim_));
    }

    expression antisym_entry(const entry_map& m, int i, int j, int k) const {
        const std::pair<std::vector<int>, int> perms[] = {
            {{i, j, k}, 1}, {{j, k, i}, 1}, {{k, i, j}, 1},
            {{j, i, k}, -1}, {{i, k, j}, -1}, {{k, j, i}, -1}};
        for (const auto& [p, s] : perms)
            if (auto it = m.find(p); it != m.end()) return rational(s) * it->second;
        return expression::zero(base_chart(dim_));
    }
};

namespace detail {

inline std::string entry_name(const std::string& array, const std::vector<int>& idx) {
    std::string out = array;
    for (int i : idx) out += "[" + std::to_string(i) + "]";
    return out;
}

}  // namespace detail

inline structure_file parse_structure(const std::string& text) {
    structure_file out;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    bool have_dim = false;

    struct array_info {
        structure_file::entry_map* slot;
        int arity;
        bool doubled;
        bool* seen;
    };
    std::map<std::string, array_info> arrays = {
        {"a", {&out.a_, 2, false, &out.saw_a_}},
        {"f", {&out.f_, 3, false, &out.saw_f_}},
        {"astar", {&out.astar_, 2, false, &out.saw_astar_}},
        {"Q", {&out.q_, 3, false, &out.saw_q_}},
        {"H", {&out.h_, 3, false, &out.saw_h_}},
        {"R", {&out.r_, 3, false, &out.saw_r_}},
        {"X", {&out.x_, 1, true, &out.saw_x_}},
        {"eta", {&out.eta_, 1, true, &out.saw_eta_}},
    };

    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'name = value'", line_no, 1);
        std::string lhs = line.substr(0, eq);
        std::string rhs = line.substr(eq + 1);
        while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back())))
            lhs.pop_back();

        if (lhs == "dim") {
            if (have_dim) throw parse_error("duplicate dim line", line_no, 1);
            try {
                out.dim_ = std::stoi(rhs);
            } catch (const std::exception&) {
                throw parse_error("dim must be an integer", line_no, 1);
            }
            if (out.dim_ < 1) throw parse_error("dim must be positive", line_no, 1);
            have_dim = true;
            continue;
        }
        if (!have_dim)
            throw parse_error("dim must be declared before any entry", line_no, 1);

        auto bracket = lhs.find('[');
        if (bracket == std::string::npos)
            throw parse_error("expected indexed entry 'name[i]...'", line_no, 1);
        std::string name = lhs.substr(0, bracket);
        auto info_it = arrays.find(name);
        if (info_it == arrays.end())
            throw parse_error("unknown array '" + name + "'", line_no, 1);
        const array_info& info = info_it->second;

        std::vector<int> idx;
        std::size_t cursor = bracket;
        while (cursor < lhs.size()) {
            if (lhs[cursor] != '[')
                throw parse_error("malformed index list in '" + lhs + "'", line_no, 1);
            auto close = lhs.find(']', cursor);
            if (close == std::string::npos)
                throw parse_error("unterminated index in '" + lhs + "'", line_no, 1);
            std::string digits = lhs.substr(cursor + 1, close - cursor - 1);
            try {
                idx.push_back(std::stoi(digits));
            } catch (const std::exception&) {
                throw parse_error("non-integer index in '" + lhs + "'", line_no, 1);
            }
            cursor = close + 1;
        }
        if (static_cast<int>(idx.size()) != info.arity)
            throw parse_error("array '" + name + "' takes " + std::to_string(info.arity) +
                                  " indices",
                              line_no, 1);
        for (int i : idx)
            if (i < 1 || i > out.dim_)
                throw parse_error("index out of range in " + detail::entry_name(name, idx),
                                  line_no, 1);

        const chart c = info.doubled ? doubled_chart(out.dim_) : base_chart(out.dim_);
        expression value = parse_expression_at(rhs, c, line_no);
        if (!info.doubled && !uses_only(value, {family::coordinate}))
            throw parse_error(detail::entry_name(name, idx) +
                                  " must be a polynomial in the x generators",
                              line_no, 1);
        if (info.doubled &&
            !uses_only(value, {family::coordinate, family::dual_coordinate}))
            throw parse_error(detail::entry_name(name, idx) +
                                  " must be a polynomial in x and xt",
                              line_no, 1);

        if (!info.slot->emplace(idx, value).second)
            throw parse_error("duplicate entry " + detail::entry_name(name, idx), line_no, 1);
        *info.seen = true;
    }

    if (!have_dim) throw parse_error("missing dim line", line_no == 0 ? 1 : line_no, 1);

    // invariant checks: skew symmetry in the trailing index pair for f/Q,
    // total antisymmetry for H/R
    auto fetch = [&](const structure_file::entry_map& m,
                     std::vector<int> idx) -> expression {
        auto it = m.find(idx);
        if (it != m.end()) return it->second;
        return expression::zero(base_chart(out.dim_));
    };
    auto check_skew = [&](const structure_file::entry_map& m, const std::string& name) {
        for (const auto& [idx, value] : m) {
            std::vector<int> mirror = idx;
            std::swap(mirror[mirror.size() - 2], mirror[mirror.size() - 1]);
            if (value != -fetch(m, mirror))
                throw data_error("skew-symmetry violated at " +
                                 detail::entry_name(name, idx));
        }
    };
    check_skew(out.f_, "f");
    check_skew(out.q_, "Q");

    auto check_antisym3 = [&](const structure_file::entry_map& m, const std::string& name) {
        for (const auto& [idx, value] : m) {
            int i = idx[0], j = idx[1], k = idx[2];
            if (i == j || j == k || i == k) {
                if (!value.is_zero())
                    throw data_error("antisymmetry violated at " +
                                     detail::entry_name(name, idx));
                continue;
            }
            const std::vector<std::pair<std::vector<int>, int>> perms = {
                {{i, j, k}, 1}, {{j, k, i}, 1}, {{k, i, j}, 1},
                {{j, i, k}, -1}, {{i, k, j}, -1}, {{k, j, i}, -1}};
            for (const auto& [p, s] : perms) {
                auto it = m.find(p);
                if (it == m.end()) continue;
                if (it->second != rational(s) * value)
                    throw data_error("antisymmetry violated at " +
                                     detail::entry_name(name, p));
            }
        }
    };
    check_antisym3(out.h_, "H");
    check_antisym3(out.r_, "R");

    return out;
}

}  // namespace koszul
