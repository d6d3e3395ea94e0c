#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seidel/polynomial.hpp"
#include "seidel/rational.hpp"

namespace seidel {

/**
 * Truncated formal power series over Rational.
 *
 * A series of order N stores exactly the coefficients c_0..c_N and makes no
 * claim beyond t^N. Mixed-order arithmetic truncates to the smaller order
 * rather than inventing coefficients, so results are always order-honest.
 */
class Series {
public:
    // zero series of the given order
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    Series(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    static Series from_polynomial(const Polynomial& p, std::size_t order) {
        Series s(order);
        for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p.coeff(i);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& coeff(std::size_t i) const {
        if (i >= coeffs_.size()) throw std::out_of_range("Series: coefficient beyond order");
        return coeffs_[i];
    }

    Rational& coeff_mut(std::size_t i) { return coeffs_[i]; }

    friend Series operator+(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Rational& s) {
        Series r(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] * s;
        return r;
    }

    // Cauchy product truncated to the smaller order.
    friend Series operator*(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

private:
    std::vector<Rational> coeffs_;
};

/**
 * Series division by forward substitution:
 *   c_n = (a_n - sum_{k=1..n} b_k c_{n-k}) / b_0.
 * Exact over Rational; the divisor must be a unit (nonzero constant term).
 */
inline Series div(const Series& a, const Series& b) {
    if (b.coeff(0).is_zero()) throw std::domain_error("Series: division by a non-unit");
    std::size_t n = std::min(a.order(), b.order());
    Series q(n);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational acc = a.coeff(i);
        for (std::size_t k = 1; k <= i; ++k) {
            if (b.coeff(k).is_zero() || q.coeff(i - k).is_zero()) continue;
            acc -= b.coeff(k) * q.coeff(i - k);
        }
        q.coeff_mut(i) = acc / b.coeff(0);
    }
    return q;
}

/**
 * Substitution a(g(t)) by Horner's scheme. Requires g(0) = 0 so every
 * coefficient of the result is determined by finitely many terms.
 */
inline Series compose(const Series& a, const Series& g) {
    if (!g.coeff(0).is_zero()) {
        throw std::domain_error("Series: composition needs a zero constant term");
    }
    std::size_t n = std::min(a.order(), g.order());
    Series gt(n, g.coeffs());
    Series acc(n);
    for (std::size_t i = n + 1; i-- > 0;) {
        acc = acc * gt;
        acc.coeff_mut(0) += a.coeff(i);
    }
    return acc;
}

// Expansion of num/den to the requested order; den must be a unit.
inline Series expand(const Polynomial& num, const Polynomial& den, std::size_t order) {
    if (den.coeff(0).is_zero()) throw std::domain_error("Series: division by a non-unit");
    return div(Series::from_polynomial(num, order), Series::from_polynomial(den, order));
}

// -log(1-t): coefficients 0, 1, 1/2, 1/3, ...
inline Series log_one_minus_t_neg(std::size_t order) {
    Series s(order);
    for (std::size_t n = 1; n <= order; ++n) s.coeff_mut(n) = Rational(1, static_cast<long long>(n));
    return s;
}

struct SeriesEq {
    bool equal = true;
    std::size_t index = 0;  // first mismatching coefficient when !equal
    Rational lhs, rhs;
};

/**
 * Exact coefficient comparison up to an explicit bound. Comparing beyond
 * either stated order is a precision error, never a silent truncation.
 */
inline SeriesEq compare(const Series& a, const Series& b, std::size_t upto) {
    if (upto > a.order() || upto > b.order()) {
        throw std::out_of_range("Series: comparison beyond stated order");
    }
    for (std::size_t i = 0; i <= upto; ++i) {
        if (!(a.coeff(i) == b.coeff(i))) return {false, i, a.coeff(i), b.coeff(i)};
    }
    return {};
}

}  // namespace seidel
