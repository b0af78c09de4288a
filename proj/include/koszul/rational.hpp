#pragma once

// Exact integer and rational arithmetic for the symbolic kernel.
// Sign-magnitude bignum with 32-bit limbs; enough for desk-scale
// polynomial work where coefficients stay small but must never
// silently overflow or round.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszul {

class bigint {
public:
    bigint() = default;

    bigint(long long v) {
        if (v < 0) {
            negative_ = true;
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
            assign_magnitude(m);
        } else {
            assign_magnitude(static_cast<unsigned long long>(v));
        }
    }

    bigint(int v) : bigint(static_cast<long long>(v)) {}

    static bigint from_decimal(const std::string& s) {
        bigint r;
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size())
            throw std::invalid_argument("bigint: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bigint: bad digit in numeral");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    bigint operator-() const {
        bigint r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend bigint operator+(const bigint& a, const bigint& b) {
        bigint r;
        if (a.negative_ == b.negative_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return r;
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.negative_ = a.negative_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.negative_ = b.negative_;
            }
        }
        return r;
    }

    friend bigint operator-(const bigint& a, const bigint& b) { return a + (-b); }

    friend bigint operator*(const bigint& a, const bigint& b) {
        bigint r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.negative_ = (a.negative_ != b.negative_) && !r.limbs_.empty();
        return r;
    }

    /// Binary long division of magnitudes; result carries the usual sign rule.
    /// The remainder is discarded, so use only where divisibility is known
    /// (fraction reduction) or flooring is acceptable.
    static bigint div_exact(const bigint& a, const bigint& b) {
        if (b.is_zero()) throw std::domain_error("bigint: division by zero");
        bigint rem, quot;
        for (std::size_t bit = a.bit_length(); bit-- > 0;) {
            rem.shl1();
            if (a.bit(bit)) rem.add_small(1);
            quot.shl1();
            if (cmp_mag(rem.limbs_, b.limbs_) >= 0) {
                rem.limbs_ = sub_mag(rem.limbs_, b.limbs_);
                quot.add_small(1);
            }
        }
        quot.trim();
        quot.negative_ = (a.negative_ != b.negative_) && !quot.limbs_.empty();
        return quot;
    }

    friend bool operator==(const bigint& a, const bigint& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const bigint& a, const bigint& b) { return !(a == b); }

    friend bool operator<(const bigint& a, const bigint& b) {
        if (a.negative_ != b.negative_) return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }

    static bigint gcd(bigint a, bigint b) {
        a.negative_ = false;
        b.negative_ = false;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        unsigned shift = 0;
        while (a.is_even() && b.is_even()) {
            a.shr1();
            b.shr1();
            ++shift;
        }
        while (a.is_even()) a.shr1();
        while (!b.is_zero()) {
            while (b.is_even()) b.shr1();
            if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a.limbs_, b.limbs_);
            b.limbs_ = sub_mag(b.limbs_, a.limbs_);
        }
        for (unsigned i = 0; i < shift; ++i) a.shl1();
        return a;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
                rem = cur % 1000000000ull;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (!work.empty())
                chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return negative_ ? "-" + digits : digits;
    }

private:
    std::vector<std::uint32_t> limbs_;  // little endian, no trailing zeros
    bool negative_ = false;

    void assign_magnitude(unsigned long long m) {
        limbs_.clear();
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }

    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    void shr1() {
        std::uint32_t carry = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint32_t next = limbs_[i] & 1u;
            limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
            carry = next;
        }
        trim();
    }

    void shl1() {
        std::uint32_t carry = 0;
        for (auto& l : limbs_) {
            std::uint32_t next = l >> 31;
            l = (l << 1) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (std::int64_t(1) << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

/// Reduced fraction over bigint; denominator always positive.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(long long n) : num_(n), den_(1) {}
    rational(int n) : num_(n), den_(1) {}
    rational(bigint n) : num_(std::move(n)), den_(1) {}

    rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_one() const { return *this == rational(1); }

    rational operator-() const {
        rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    rational abs() const { return is_negative() ? -*this : *this; }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) { return a + (-b); }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.is_zero()) throw std::domain_error("rational: division by zero");
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return (a - b).is_negative();
    }

    std::string str() const {
        if (den_ == bigint(1)) return num_.to_decimal();
        return num_.to_decimal() + "/" + den_.to_decimal();
    }

    /// Parses "n" or "n/m".
    static rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return rational(bigint::from_decimal(s));
        return rational(bigint::from_decimal(s.substr(0, slash)),
                        bigint::from_decimal(s.substr(slash + 1)));
    }

private:
    bigint num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational: zero denominator");
        if (num_.is_zero()) {
            den_ = bigint(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = bigint::gcd(num_, den_);
        num_ = bigint::div_exact(num_, g);
        den_ = bigint::div_exact(den_, g);
    }
};

}  // namespace koszul
