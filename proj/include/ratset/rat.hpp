/**
 * @file rat.hpp
 * @brief Arbitrary-precision rational numbers in canonical reduced form.
 *
 * Rat keeps numerator and denominator as GMP integers and maintains the
 * canonical form at all times: denominator > 0, gcd(|num|, den) = 1, zero
 * is 0/1. Equality is structural. There is no floating point anywhere;
 * conversions to double exist only for display layers and are marked as
 * such at the call sites.
 */
#pragma once

#include <gmpxx.h>

#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratset {

/// Arbitrary-precision integer.
using Int = mpz_class;

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}
    Rat(const Int& v) : num_(v), den_(1) {}

    Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    Rat(long num, long den) : num_(num), den_(den) { canonicalize(); }

    /// Parses the grammar `-?[0-9]+(/[0-9]+)?`. Throws std::invalid_argument
    /// on any other input (including a zero denominator).
    static Rat parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_negative() const { return sgn(num_) < 0; }
    bool is_positive() const { return sgn(num_) > 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat reciprocal() const {
        if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
        return Rat(den_, num_);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    // Canonical form makes equality structural.
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    // a/b < c/d  iff  a*d < c*b  (denominators positive).
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Canonical text form: "p" when den = 1, otherwise "p/q".
    std::string to_string() const {
        std::string s = num_.get_str();
        if (den_ != 1) {
            s += '/';
            s += den_.get_str();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.to_string();
    }

private:
    Int num_;
    Int den_;  // always > 0

    void canonicalize() {
        if (sgn(den_) == 0) throw std::domain_error("Rat: zero denominator");
        if (sgn(den_) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (sgn(num_) == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

inline int sgn(const Rat& r) { return sgn(r.num()); }

inline Rat square(const Rat& r) { return r * r; }

inline Rat Rat::parse(std::string_view text) {
    auto fail = [&]() -> Rat {
        throw std::invalid_argument("Rat: malformed rational '" +
                                    std::string(text) + "'");
    };
    if (text.empty()) return fail();
    std::size_t pos = (text[0] == '-') ? 1 : 0;
    const std::size_t num_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_start) return fail();
    Int num(std::string(text.substr(0, pos)), 10);
    Int den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') return fail();
        ++pos;
        const std::size_t den_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_start || pos != text.size()) return fail();
        den = Int(std::string(text.substr(den_start)), 10);
        if (den == 0)
            throw std::invalid_argument("Rat: zero denominator in '" +
                                        std::string(text) + "'");
    }
    return Rat(std::move(num), std::move(den));
}

}  // namespace ratset
