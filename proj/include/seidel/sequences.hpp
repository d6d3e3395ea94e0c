#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seidel/binomial.hpp"
#include "seidel/integer.hpp"
#include "seidel/polynomial.hpp"
#include "seidel/rational.hpp"
#include "seidel/series.hpp"

namespace seidel {

namespace detail {

// fast doubling: returns (F(n), F(n+1)) for n >= 0
inline std::pair<Integer, Integer> fib_pair(unsigned long long n) {
    if (n == 0) return {Integer(0), Integer(1)};
    auto [a, b] = fib_pair(n >> 1);
    // F(2m) = F(m) (2 F(m+1) - F(m)),  F(2m+1) = F(m)^2 + F(m+1)^2
    Integer c = a * (b + b - a);
    Integer d = a * a + b * b;
    if (n & 1) return {d, c + d};
    return {std::move(c), std::move(d)};
}

inline Integer fib_nonneg(unsigned long long n) {
    if (n <= 10000) {
        Integer a(0), b(1);
        for (unsigned long long i = 0; i < n; ++i) {
            Integer c = a + b;
            a = std::move(b);
            b = std::move(c);
        }
        return a;
    }
    return fib_pair(n).first;
}

}  // namespace detail

/**
 * Fibonacci number for any integer index, F(0) = 0, F(1) = 1, extended to
 * negative indices by F(-n) = (-1)^(n+1) F(n).
 */
inline Integer fibonacci(long long n) {
    if (n >= 0) return detail::fib_nonneg(static_cast<unsigned long long>(n));
    Integer f = detail::fib_nonneg(static_cast<unsigned long long>(-n));
    return ((-n) % 2 == 0) ? -f : f;
}

// Lucas number, L(0) = 2, L(1) = 1; negative indices satisfy L(-n) = (-1)^n L(n).
inline Integer lucas(long long n) { return fibonacci(n - 1) + fibonacci(n + 1); }

// F(0..n_max) in one linear pass
inline std::vector<Integer> fibonacci_row(long long n_max) {
    std::vector<Integer> row;
    row.reserve(static_cast<std::size_t>(n_max) + 1);
    Integer a(0), b(1);
    for (long long i = 0; i <= n_max; ++i) {
        row.push_back(a);
        Integer c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return row;
}

inline std::vector<Integer> lucas_row(long long n_max) {
    std::vector<Integer> row;
    row.reserve(static_cast<std::size_t>(n_max) + 1);
    Integer a(2), b(1);
    for (long long i = 0; i <= n_max; ++i) {
        row.push_back(a);
        Integer c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return row;
}

// H_n = sum_{k=1..n} 1/k, with the empty sum H_0 = 0.
inline Rational harmonic(long long n) {
    if (n < 0) throw std::domain_error("harmonic: negative index");
    Rational h(0);
    for (long long k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

/**
 * Hyperharmonic number H_n^(r): r-fold repeated partial sums of the harmonic
 * numbers, H_n^(1) = H_n, and H_n^(0) = 1/n for n >= 1. H_0^(r) = 0 for all r.
 *
 * Point queries use the closed form C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}) for
 * r >= 1; bulk access should go through hyperharmonic_row.
 */
inline Rational hyperharmonic(long long n, long long r) {
    if (n < 0 || r < 0) throw std::domain_error("hyperharmonic: negative argument");
    if (n == 0) return Rational(0);
    if (r == 0) return Rational(1, n);
    Rational tail(0);
    for (long long k = r; k <= n + r - 1; ++k) tail += Rational(1, k);
    return Rational(binomial(n + r - 1, r - 1)) * tail;
}

// H_0^(r) .. H_{n_max}^(r) by r rounds of running sums, O(n r) additions.
inline std::vector<Rational> hyperharmonic_row(long long n_max, long long r) {
    if (n_max < 0 || r < 0) throw std::domain_error("hyperharmonic_row: negative argument");
    std::vector<Rational> row(static_cast<std::size_t>(n_max) + 1);
    for (long long n = 1; n <= n_max; ++n) row[static_cast<std::size_t>(n)] = Rational(1, n);
    for (long long level = 0; level < r; ++level) {
        for (std::size_t n = 2; n < row.size(); ++n) row[n] += row[n - 1];
    }
    return row;
}

/**
 * Generating function of the subsequence F(kn+r):
 *
 *   sum_n F(kn+r) t^n = (F_r + (-1)^r F_{k-r} t) / (1 - L_k t + (-1)^k t^2)
 *
 * for k >= 1 and r >= 0.
 */
inline Series fib_subseq_gf(long long k, long long r, std::size_t order) {
    if (k < 1) throw std::domain_error("fib_subseq_gf: step k must be >= 1");
    if (r < 0) throw std::domain_error("fib_subseq_gf: negative offset");
    Rational second = Rational(fibonacci(k - r));
    if (r % 2 != 0) second = -second;
    Polynomial num(std::vector<Rational>{Rational(fibonacci(r)), second});
    Rational quad = (k % 2 == 0) ? Rational(1) : Rational(-1);
    Polynomial den(std::vector<Rational>{Rational(1), Rational(-lucas(k)), quad});
    return expand(num, den, order);
}

// Lucas analogue: (L_r + (-1)^(r-1) L_{k-r} t) / (1 - L_k t + (-1)^k t^2).
inline Series lucas_subseq_gf(long long k, long long r, std::size_t order) {
    if (k < 1) throw std::domain_error("lucas_subseq_gf: step k must be >= 1");
    if (r < 0) throw std::domain_error("lucas_subseq_gf: negative offset");
    Rational second = Rational(lucas(k - r));
    if (r % 2 == 0) second = -second;
    Polynomial num(std::vector<Rational>{Rational(lucas(r)), second});
    Rational quad = (k % 2 == 0) ? Rational(1) : Rational(-1);
    Polynomial den(std::vector<Rational>{Rational(1), Rational(-lucas(k)), quad});
    return expand(num, den, order);
}

/**
 * Generating function of the incomplete Fibonacci numbers F_n(k):
 *
 *   R_k(t) = t^(2k+1) [ (F_{2k+1} + F_{2k} t)(1-t)^(k+1) - t^2 ]
 *            / [ (1-t)^(k+1) (1 - t - t^2) ].
 */
inline Series incomplete_fib_gf(long long k, std::size_t order) {
    if (k < 0) throw std::domain_error("incomplete_fib_gf: negative cutoff");
    Polynomial one_minus = pow(Polynomial{1, -1}, static_cast<unsigned>(k + 1));
    Polynomial head(std::vector<Rational>{Rational(fibonacci(2 * k + 1)), Rational(fibonacci(2 * k))});
    Polynomial num = (head * one_minus - Polynomial{0, 0, 1}).shifted(static_cast<std::size_t>(2 * k + 1));
    Polynomial den = one_minus * Polynomial{1, -1, -1};
    return expand(num, den, order);
}

/**
 * Generating function of the incomplete Lucas numbers L_n(k):
 *
 *   S_k(t) = t^(2k) [ (L_{2k} + L_{2k-1} t)(1-t)^(k+1) - t^2 (2 - t) ]
 *            / [ (1-t)^(k+1) (1 - t - t^2) ].
 */
inline Series incomplete_lucas_gf(long long k, std::size_t order) {
    if (k < 0) throw std::domain_error("incomplete_lucas_gf: negative cutoff");
    Polynomial one_minus = pow(Polynomial{1, -1}, static_cast<unsigned>(k + 1));
    Polynomial head(std::vector<Rational>{Rational(lucas(2 * k)), Rational(lucas(2 * k - 1))});
    Polynomial num = (head * one_minus - Polynomial{0, 0, 2, -1}).shifted(static_cast<std::size_t>(2 * k));
    Polynomial den = one_minus * Polynomial{1, -1, -1};
    return expand(num, den, order);
}

namespace detail {

struct GfCache {
    std::mutex mutex;
    std::map<long long, Series> by_cutoff;
};

template <typename Rebuild>
Integer gf_coefficient(GfCache& cache, long long k, long long n, Rebuild rebuild) {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.by_cutoff.find(k);
    if (it == cache.by_cutoff.end() || it->second.order() < static_cast<std::size_t>(n)) {
        std::size_t order = std::max<std::size_t>(static_cast<std::size_t>(n), 32);
        if (it != cache.by_cutoff.end()) order = std::max(order, 2 * it->second.order());
        it = cache.by_cutoff.insert_or_assign(k, rebuild(k, order)).first;
    }
    const Rational& c = it->second.coeff(static_cast<std::size_t>(n));
    if (!c.is_integer()) throw std::logic_error("incomplete number: non-integer coefficient");
    return c.numerator();
}

inline GfCache& incomplete_fib_cache() {
    static GfCache cache;
    return cache;
}

inline GfCache& incomplete_lucas_cache() {
    static GfCache cache;
    return cache;
}

}  // namespace detail

/**
 * Incomplete Fibonacci number F_n(k), defined for all n, k >= 0 as the t^n
 * coefficient of R_k(t). On 2k+1 <= n this agrees with the truncated diagonal
 * sum (see incomplete_fibonacci_sum); below that the value is 0.
 */
inline Integer incomplete_fibonacci(long long n, long long k) {
    if (n < 0 || k < 0) throw std::domain_error("incomplete_fibonacci: negative argument");
    if (n <= 2 * k) return Integer(0);
    return detail::gf_coefficient(detail::incomplete_fib_cache(), k, n,
                                  [](long long kk, std::size_t order) {
                                      return incomplete_fib_gf(kk, order);
                                  });
}

// L_n(k) as the t^n coefficient of S_k(t); 0 below the t^(2k) prefactor.
inline Integer incomplete_lucas(long long n, long long k) {
    if (n < 0 || k < 0) throw std::domain_error("incomplete_lucas: negative argument");
    if (k >= 1 && n <= 2 * k - 1) return Integer(0);
    return detail::gf_coefficient(detail::incomplete_lucas_cache(), k, n,
                                  [](long long kk, std::size_t order) {
                                      return incomplete_lucas_gf(kk, order);
                                  });
}

/**
 * The defining truncated sum F_n(k) = sum_{j=0..k} C(n-1-j, j), valid only on
 * n >= 1, 0 <= k <= (n-1)/2. Kept as an independent route for checks against
 * the generating-function values.
 */
inline Integer incomplete_fibonacci_sum(long long n, long long k) {
    if (n < 1 || k < 0 || 2 * k > n - 1) {
        throw std::domain_error("incomplete_fibonacci_sum: outside the defining domain");
    }
    Integer acc(0);
    for (long long j = 0; j <= k; ++j) acc += binomial(n - 1 - j, j);
    return acc;
}

// L_n(k) = sum_{j=0..k} n/(n-j) C(n-j, j) on n >= 1, 0 <= k <= n/2.
inline Integer incomplete_lucas_sum(long long n, long long k) {
    if (n < 1 || k < 0 || 2 * k > n) {
        throw std::domain_error("incomplete_lucas_sum: outside the defining domain");
    }
    Rational acc(0);
    for (long long j = 0; j <= k; ++j) {
        acc += Rational(Integer(n), Integer(n - j)) * Rational(binomial(n - j, j));
    }
    if (!acc.is_integer()) throw std::logic_error("incomplete_lucas_sum: non-integer value");
    return acc.numerator();
}

/**
 * Hyperfibonacci number F_n^(r): r-fold repeated partial sums of the
 * Fibonacci sequence, F^(0) = F.
 */
inline Integer hyperfibonacci(long long n, long long r) {
    if (n < 0 || r < 0) throw std::domain_error("hyperfibonacci: negative argument");
    if (r == 0) return fibonacci(n);
    std::vector<Integer> row = fibonacci_row(n);
    for (long long level = 0; level < r; ++level) {
        for (std::size_t i = 1; i < row.size(); ++i) row[i] += row[i - 1];
    }
    return row.back();
}

/**
 * Hyperlucas number L_n^(r), the Lucas analogue. The repeated-sum definition
 * forces L_0^(r) = 2 and L_1^(r) = 2r + 1 for r >= 1.
 */
inline Integer hyperlucas(long long n, long long r) {
    if (n < 0 || r < 0) throw std::domain_error("hyperlucas: negative argument");
    if (r == 0) return lucas(n);
    std::vector<Integer> row = lucas_row(n);
    for (long long level = 0; level < r; ++level) {
        for (std::size_t i = 1; i < row.size(); ++i) row[i] += row[i - 1];
    }
    return row.back();
}

enum class AbcKind { A, B, C };

/**
 * The boundary-sum coefficients of the Fibonacci tableau:
 *
 *   A(n,k) = sum_{i=0..k-1} C(n+k-i-2, n-1) F_{2i+1}
 *   B(n,k) = sum_{i=0..n-1} C(n+k-i-2, k-1) F_i
 *   C(n,k) = sum_{i=0..k-1} C(n+k-i-2, n-1) F_{2i}
 *
 * for n, k >= 1.
 */
inline Integer abc_coeff(AbcKind kind, long long n, long long k) {
    if (n < 1 || k < 1) throw std::domain_error("abc_coeff: indices must be >= 1");
    Integer acc(0);
    if (kind == AbcKind::B) {
        for (long long i = 0; i < n; ++i) {
            acc += binomial(n + k - i - 2, k - 1) * fibonacci(i);
        }
        return acc;
    }
    for (long long i = 0; i < k; ++i) {
        long long fib_index = kind == AbcKind::A ? 2 * i + 1 : 2 * i;
        acc += binomial(n + k - i - 2, n - 1) * fibonacci(fib_index);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Named sequence families for the command-line surface.

enum class Family {
    Fibonacci,
    Lucas,
    Harmonic,
    Hyperharmonic,
    IncompleteFib,
    IncompleteLucas,
    Hyperfib,
    Hyperlucas,
};

/**
 * A named, parameterized sequence family. Parameter "r" is the order of the
 * hyper families; parameter "k" is the cutoff of the incomplete families.
 */
struct SequenceSpec {
    Family family;
    std::map<std::string, long long> params;

    static SequenceSpec parse(const std::string& name, std::map<std::string, long long> params) {
        static const std::map<std::string, Family> names{
            {"fibonacci", Family::Fibonacci},
            {"lucas", Family::Lucas},
            {"harmonic", Family::Harmonic},
            {"hyperharmonic", Family::Hyperharmonic},
            {"incomplete-fib", Family::IncompleteFib},
            {"incomplete-lucas", Family::IncompleteLucas},
            {"hyperfib", Family::Hyperfib},
            {"hyperlucas", Family::Hyperlucas},
        };
        auto it = names.find(name);
        if (it == names.end()) throw std::invalid_argument("unknown sequence family: " + name);
        SequenceSpec spec{it->second, std::move(params)};
        spec.validate();
        return spec;
    }

    void validate() const {
        auto need = [this](const char* key) {
            auto it = params.find(key);
            if (it == params.end() || it->second < 0) {
                throw std::invalid_argument(std::string("family parameter --") + key +
                                            " must be present and nonnegative");
            }
            return it->second;
        };
        switch (family) {
            case Family::Hyperharmonic:
            case Family::Hyperfib:
            case Family::Hyperlucas:
                need("r");
                break;
            case Family::IncompleteFib:
            case Family::IncompleteLucas:
                need("k");
                break;
            default:
                break;
        }
    }

    Rational value(long long n) const {
        switch (family) {
            case Family::Fibonacci: return Rational(fibonacci(n));
            case Family::Lucas: return Rational(lucas(n));
            case Family::Harmonic: return harmonic(n);
            case Family::Hyperharmonic: return hyperharmonic(n, params.at("r"));
            case Family::IncompleteFib: return Rational(incomplete_fibonacci(n, params.at("k")));
            case Family::IncompleteLucas: return Rational(incomplete_lucas(n, params.at("k")));
            case Family::Hyperfib: return Rational(hyperfibonacci(n, params.at("r")));
            case Family::Hyperlucas: return Rational(hyperlucas(n, params.at("r")));
        }
        throw std::logic_error("unreachable");
    }

    std::vector<Rational> values(long long n_max) const {
        std::vector<Rational> out;
        out.reserve(static_cast<std::size_t>(n_max) + 1);
        for (long long n = 0; n <= n_max; ++n) out.push_back(value(n));
        return out;
    }
};

}  // namespace seidel
