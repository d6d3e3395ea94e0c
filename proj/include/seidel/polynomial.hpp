#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "seidel/rational.hpp"

namespace seidel {

/**
 * Dense univariate polynomial over Rational.
 *
 * coeffs[i] is the coefficient of t^i. Trailing zeros are trimmed, so the
 * zero polynomial has an empty coefficient vector and a nonzero polynomial
 * ends with a nonzero coefficient.
 */
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static Polynomial one() { return Polynomial({1}); }

    bool is_zero() const { return coeffs_.empty(); }

    // degree of the zero polynomial is reported as -1
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<Rational> r(coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coeffs_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        std::vector<Rational> r(a.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeffs_[i] * s;
        return Polynomial(std::move(r));
    }

    // multiply by t^m
    Polynomial shifted(std::size_t m) const {
        if (is_zero() || m == 0) return m == 0 ? *this : Polynomial();
        std::vector<Rational> r(coeffs_.size() + m);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + m] = coeffs_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial pow(Polynomial base, unsigned e) {
        Polynomial r = Polynomial::one();
        for (unsigned i = 0; i < e; ++i) r = r * base;
        return r;
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

}  // namespace seidel
