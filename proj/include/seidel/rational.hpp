#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "seidel/integer.hpp"

namespace seidel {

/**
 * Exact rational number in canonical form.
 *
 * Invariants: denominator > 0, gcd(|numerator|, denominator) = 1, and zero is
 * always 0/1. Equality is plain structural equality of the canonical form.
 *
 * The canonical text form is "p/q" with "/q" omitted when q = 1 and the sign,
 * if any, carried by the numerator ("-3/2", "7", "0").
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Integer v) : num_(std::move(v)), den_(1) {}

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == Integer(1); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // classic gcd trick: reduce before cross-multiplying so the final
        // normalization gcd stays small
        Integer g = Integer::gcd(a.den_, b.den_);
        if (g == Integer(1)) {
            Rational r;
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            return r;  // already coprime
        }
        Integer bd = b.den_ / g;
        Integer t = a.num_ * bd + b.num_ * (a.den_ / g);
        Integer g2 = Integer::gcd(t, g);
        Rational r;
        r.num_ = t / g2;
        r.den_ = (a.den_ / g2) * bd;
        if (r.num_.is_zero()) r.den_ = Integer(1);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational();
        Integer g1 = Integer::gcd(a.num_, b.den_);
        Integer g2 = Integer::gcd(b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational inv;
        if (b.num_.is_negative()) {
            inv.num_ = -b.den_;
            inv.den_ = -b.num_;
        } else {
            inv.num_ = b.den_;
            inv.den_ = b.num_;
        }
        return a * inv;
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    std::string to_string() const {
        std::string s = num_.to_string();
        if (!is_integer()) {
            s += '/';
            s += den_.to_string();
        }
        return s;
    }

    static Rational from_string(std::string_view text) {
        std::size_t slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(Integer::from_string(text));
        return Rational(Integer::from_string(text.substr(0, slash)),
                        Integer::from_string(text.substr(slash + 1)));
    }

private:
    Integer num_;
    Integer den_;

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = Integer(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = Integer::gcd(num_, den_);
        if (!(g == Integer(1))) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace seidel
