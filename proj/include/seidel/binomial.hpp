#pragma once

#include <stdexcept>

#include "seidel/integer.hpp"

namespace seidel {

/**
 * Binomial coefficient C(n, k) for n >= 0.
 *
 * Out-of-range k (k < 0 or k > n) yields 0, which keeps boundary terms of
 * tableau closed forms well defined without branching at call sites.
 * Negative n is a caller bug and is rejected.
 *
 * Computed by the multiplicative formula with exact intermediate division,
 * O(min(k, n-k)) big-integer operations.
 */
inline Integer binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer result(1);
    for (long long i = 0; i < k; ++i) {
        result = (result * Integer(n - i)) / Integer(i + 1);
    }
    return result;
}

/**
 * Generalized binomial coefficient: any integer n, k >= 0 via the falling
 * factorial product, 0 for k < 0. Agrees with binomial() on n >= 0. Used to
 * evaluate printed formulas whose index ranges stray below zero.
 */
inline Integer binomial_any(long long n, long long k) {
    if (k < 0) return Integer(0);
    Integer result(1);
    for (long long i = 0; i < k; ++i) {
        result = (result * Integer(n - i)) / Integer(i + 1);
    }
    return result;
}

}  // namespace seidel
