#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "seidel/sequences.hpp"
#include "seidel/tableau.hpp"

namespace seidel {

/**
 * Named symmetric-tableau seedings.
 *
 *   hyperharmonic   row 1/(n+1), column 1        -> entries H_{n+1}^(k)
 *   fib-odd         row F_{n-1}, column F_{2k-1} -> entries F_{n+2k-1} (k >= 1)
 *   fib-even-odd    row F_{2n-1}, column F_{2n}
 *   lucas-odd       row L_{n-1}, column L_{2k-1} -> entries L_{n+2k-1} (k >= 1)
 *   lucas-even-odd  row L_{2n-1}, column L_{2n}
 *
 * Corner values: the "-odd" pairs pin a_0^0 = 0 (the natural displays of
 * those tableaux start with 0, not with the n = 0 extension of either seed
 * formula); the "-even-odd" pairs take the column formula at 0 (F_0 = 0,
 * L_0 = 2). Seed formulas apply from index 1 up.
 */
inline SymmetricTableau preset_tableau(const std::string& name) {
    if (name == "hyperharmonic") {
        return SymmetricTableau(SeedPair(
            [](long long n) { return Rational(1, n + 1); },
            [](long long) { return Rational(1); }));
    }
    if (name == "fib-odd") {
        return SymmetricTableau(SeedPair(
            [](long long n) { return n == 0 ? Rational(0) : Rational(fibonacci(n - 1)); },
            [](long long k) { return k == 0 ? Rational(0) : Rational(fibonacci(2 * k - 1)); }));
    }
    if (name == "fib-even-odd") {
        return SymmetricTableau(SeedPair(
            [](long long n) { return n == 0 ? Rational(0) : Rational(fibonacci(2 * n - 1)); },
            [](long long k) { return Rational(fibonacci(2 * k)); }));
    }
    if (name == "lucas-odd") {
        return SymmetricTableau(SeedPair(
            [](long long n) { return n == 0 ? Rational(0) : Rational(lucas(n - 1)); },
            [](long long k) { return k == 0 ? Rational(0) : Rational(lucas(2 * k - 1)); }));
    }
    if (name == "lucas-even-odd") {
        return SymmetricTableau(SeedPair(
            [](long long n) { return n == 0 ? Rational(2) : Rational(lucas(2 * n - 1)); },
            [](long long k) { return Rational(lucas(2 * k)); }));
    }
    throw std::invalid_argument("unknown tableau preset: " + name);
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{
        "hyperharmonic", "fib-odd", "fib-even-odd", "lucas-odd", "lucas-even-odd"};
    return names;
}

}  // namespace seidel
