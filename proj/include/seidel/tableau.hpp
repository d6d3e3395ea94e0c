#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seidel/binomial.hpp"
#include "seidel/rational.hpp"
#include "seidel/series.hpp"

namespace seidel {

using SeedFn = std::function<Rational(long long)>;

/**
 * The two boundary sequences of a symmetric tableau: row(n) supplies the top
 * row a_n^0 and col(k) supplies the left column a_0^k. Both must agree on the
 * shared corner a_0^0; mismatched seeds are rejected at construction instead
 * of silently preferring one side.
 */
class SeedPair {
public:
    SeedPair(SeedFn row, SeedFn col) : row_(std::move(row)), col_(std::move(col)) {
        if (!(row_(0) == col_(0))) {
            throw std::invalid_argument("SeedPair: row and column seeds disagree at the corner");
        }
    }

    static SeedPair from_vectors(std::vector<Rational> row, std::vector<Rational> col) {
        auto make = [](std::vector<Rational> v) {
            return [v = std::move(v)](long long n) {
                if (n < 0 || static_cast<std::size_t>(n) >= v.size()) {
                    throw std::out_of_range("SeedPair: index beyond stored seed values");
                }
                return v[static_cast<std::size_t>(n)];
            };
        };
        return SeedPair(make(std::move(row)), make(std::move(col)));
    }

    Rational row(long long n) const { return row_(n); }
    Rational col(long long k) const { return col_(k); }

private:
    SeedFn row_;
    SeedFn col_;
};

/**
 * Lazily filled tableau of the recurrence
 *
 *   a_n^k = a_{n-1}^k + a_n^{k-1}   (row index k, column index n)
 *
 * seeded by a_n^0 = row(n) and a_0^k = col(k). A request for (n, k) fills the
 * whole rectangle [0..n] x [0..k] iteratively, so there is no recursion depth
 * to worry about and every entry is computed exactly once.
 *
 * The memo is guarded by a mutex; concurrent readers only ever observe fully
 * computed entries. Entries are returned by value.
 */
class SymmetricTableau {
public:
    explicit SymmetricTableau(SeedPair seeds) : seeds_(std::move(seeds)) {}

    // a_n^k by the recurrence
    Rational entry(long long n, long long k) const {
        if (n < 0 || k < 0) throw std::domain_error("SymmetricTableau: negative index");
        std::lock_guard<std::mutex> lock(mutex_);
        fill(n, k);
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    }

    /**
     * a_n^k as the weighted boundary sum
     *
     *   sum_{i=1..k} C(n+k-i-1, n-1) a_0^i + sum_{j=1..n} C(k+n-j-1, k-1) a_j^0
     *
     * valid for n, k >= 1; boundary entries come straight from the seeds, so
     * asking the closed form for them is a caller bug.
     */
    Rational entry_closed(long long n, long long k) const {
        if (n < 1 || k < 1) {
            throw std::domain_error("SymmetricTableau: closed form needs n, k >= 1");
        }
        Rational acc(0);
        for (long long i = 1; i <= k; ++i) {
            Integer c = binomial(n + k - i - 1, n - 1);
            if (!c.is_zero()) acc += Rational(std::move(c)) * seeds_.col(i);
        }
        for (long long j = 1; j <= n; ++j) {
            Integer c = binomial(k + n - j - 1, k - 1);
            if (!c.is_zero()) acc += Rational(std::move(c)) * seeds_.row(j);
        }
        return acc;
    }

    /**
     * Generating function of row k (k >= 1):
     *
     *   sum_{n>=1} a_n^k t^n
     *     = (1/(1-t)^k) { a0(t) + (t/(1-t)) sum_{r=1..k} a_0^r (1-t)^r }
     *
     * with a0(t) = sum_{n>=1} a_n^0 t^n. Row 0 is the seed itself.
     */
    Series row_gf(long long k, std::size_t order) const {
        if (k < 1) throw std::domain_error("SymmetricTableau: row_gf needs k >= 1");
        if (order < 1) throw std::domain_error("SymmetricTableau: row_gf needs order >= 1");
        return boundary_gf(k, order,
                           [this](long long n) { return seeds_.row(n); },
                           [this](long long r) { return seeds_.col(r); });
    }

    // Mirror of row_gf: sum_{k>=1} a_n^k t^k for column n >= 1.
    Series col_gf(long long n, std::size_t order) const {
        if (n < 1) throw std::domain_error("SymmetricTableau: col_gf needs n >= 1");
        if (order < 1) throw std::domain_error("SymmetricTableau: col_gf needs order >= 1");
        return boundary_gf(n, order,
                           [this](long long k) { return seeds_.col(k); },
                           [this](long long j) { return seeds_.row(j); });
    }

    const SeedPair& seeds() const { return seeds_; }

private:
    SeedPair seeds_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<Rational>> rows_;  // rows_[k][n]
    mutable std::size_t cols_ = 0;

    // extend the filled rectangle to cover (n, k); caller holds the mutex
    void fill(long long n, long long k) const {
        std::size_t want_cols = static_cast<std::size_t>(n) + 1;
        std::size_t want_rows = static_cast<std::size_t>(k) + 1;
        std::size_t new_cols = std::max(cols_, want_cols);
        std::size_t new_rows = std::max(rows_.size(), want_rows);
        if (new_cols == cols_ && new_rows == rows_.size()) return;

        for (std::size_t kk = 0; kk < new_rows; ++kk) {
            if (kk == rows_.size()) rows_.emplace_back();
            auto& row = rows_[kk];
            std::size_t start = row.size();
            row.reserve(new_cols);
            for (std::size_t nn = start; nn < new_cols; ++nn) {
                if (kk == 0) {
                    row.push_back(seeds_.row(static_cast<long long>(nn)));
                } else if (nn == 0) {
                    row.push_back(seeds_.col(static_cast<long long>(kk)));
                } else {
                    row.push_back(row[nn - 1] + rows_[kk - 1][nn]);
                }
            }
        }
        cols_ = new_cols;
    }

    template <typename MainSeed, typename CrossSeed>
    Series boundary_gf(long long k, std::size_t order, MainSeed main, CrossSeed cross) const {
        Series seed_tail(order);
        for (std::size_t n = 1; n <= order; ++n) {
            seed_tail.coeff_mut(n) = main(static_cast<long long>(n));
        }

        // sum_{r=1..k} a_0^r (1-t)^r built by repeated multiplication
        Polynomial one_minus_t{1, -1};
        Polynomial power = one_minus_t;
        Polynomial acc;
        for (long long r = 1; r <= k; ++r) {
            acc = acc + power * cross(r);
            power = power * one_minus_t;
        }

        Series t_over = expand(Polynomial{0, 1}, one_minus_t, order);
        Series inner = seed_tail + t_over * Series::from_polynomial(acc, order);
        return div(inner, Series::from_polynomial(pow(one_minus_t, static_cast<unsigned>(k)), order));
    }
};

/**
 * Euler-Seidel tableau of one seed sequence:
 *
 *   a_n^0 = seed(n),   a_n^k = a_n^{k-1} + a_{n+1}^{k-1}.
 *
 * Row k at position n needs the seed out to n + k, so the memo rows shrink by
 * one entry per level. Same locking contract as SymmetricTableau.
 */
class EulerSeidelTableau {
public:
    explicit EulerSeidelTableau(SeedFn seed) : seed_(std::move(seed)) {}

    Rational entry(long long n, long long k) const {
        if (n < 0 || k < 0) throw std::domain_error("EulerSeidelTableau: negative index");
        std::lock_guard<std::mutex> lock(mutex_);
        std::size_t need = static_cast<std::size_t>(n + k) + 1;
        if (rows_.empty()) rows_.emplace_back();
        while (rows_[0].size() < need) {
            rows_[0].push_back(seed_(static_cast<long long>(rows_[0].size())));
        }
        for (std::size_t kk = 1; kk <= static_cast<std::size_t>(k); ++kk) {
            if (kk == rows_.size()) rows_.emplace_back();
            auto& row = rows_[kk];
            const auto& prev = rows_[kk - 1];
            while (row.size() + 1 < prev.size() &&
                   row.size() <= static_cast<std::size_t>(n + k) - kk) {
                std::size_t nn = row.size();
                row.push_back(prev[nn] + prev[nn + 1]);
            }
        }
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    }

private:
    SeedFn seed_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<Rational>> rows_;
};

// b_n = sum_{k=0..n} C(n,k) a_k; equal to the Euler-Seidel first column.
inline std::vector<Rational> binom_transform(const std::vector<Rational>& a) {
    if (a.empty()) throw std::invalid_argument("binom_transform: empty input");
    std::vector<Rational> b(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        Integer c(1);  // C(n, 0), updated multiplicatively
        Rational acc = a[0];
        for (std::size_t k = 1; k <= n; ++k) {
            c = (c * Integer(static_cast<long long>(n - k + 1))) /
                Integer(static_cast<long long>(k));
            if (!a[k].is_zero()) acc += Rational(c) * a[k];
        }
        b[n] = acc;
    }
    return b;
}

// a_n = sum_{k=0..n} C(n,k) (-1)^{n-k} b_k; exact inverse of binom_transform.
inline std::vector<Rational> inv_binom_transform(const std::vector<Rational>& b) {
    if (b.empty()) throw std::invalid_argument("inv_binom_transform: empty input");
    std::vector<Rational> a(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        Integer c(1);
        Rational acc = (n % 2 == 0) ? b[0] : -b[0];
        for (std::size_t k = 1; k <= n; ++k) {
            c = (c * Integer(static_cast<long long>(n - k + 1))) /
                Integer(static_cast<long long>(k));
            if (b[k].is_zero()) continue;
            Rational term = Rational(c) * b[k];
            acc += ((n - k) % 2 == 0) ? term : -term;
        }
        a[n] = acc;
    }
    return a;
}

/**
 * Generating function of the Euler-Seidel first column from the generating
 * function of the seed row:  abar(t) = (1/(1-t)) a(t/(1-t)).
 */
inline Series es_column_gf(const Series& a) {
    std::size_t order = a.order();
    Series g = expand(Polynomial{0, 1}, Polynomial{1, -1}, order);
    Series composed = compose(a, g);
    return div(composed, Series::from_polynomial(Polynomial{1, -1}, order));
}

}  // namespace seidel
