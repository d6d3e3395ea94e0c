#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seidel/presets.hpp"
#include "seidel/report.hpp"
#include "seidel/sequences.hpp"
#include "seidel/tableau.hpp"

namespace seidel {

inline constexpr std::uint64_t kDefaultRngSeed = 123456789;

struct VariantInfo {
    std::string name;
    bool suspect = false;       // transcribed from the source catalog as printed
    std::string reference;      // variant consulted when confirming an erratum
    std::string note;
};

struct RunOptions {
    std::size_t order = 0;  // 0 = use the identity's default order
    std::uint64_t rng_seed = kDefaultRngSeed;
    std::map<std::string, long long> max_overrides;  // parameter -> new upper bound
};

/**
 * One executable identity. The statement is plain ASCII math; lhs_route and
 * rhs_route name the two independent code paths being compared (they must
 * not coincide, that is the point of the check). The expected map pins the
 * verdict of every variant; the default suite fails on any drift.
 */
struct IdentityDescriptor {
    std::string id;
    std::string statement;
    std::string lhs_route;
    std::string rhs_route;
    std::vector<ParamRange> domain;
    std::vector<VariantInfo> variants;
    std::size_t default_order = 25;
    bool randomized = false;
    std::map<std::string, Verdict> expected;

    using Eval = std::function<void(const std::string& variant,
                                    const std::map<std::string, long long>& hi,
                                    std::size_t order, std::uint64_t seed, Checker& out)>;
    Eval eval;

    const VariantInfo& variant(const std::string& name) const {
        for (const auto& v : variants) {
            if (v.name == name) return v;
        }
        throw std::invalid_argument("identity " + id + " has no variant '" + name + "'");
    }
};

namespace detail {

inline Checker::Params params2(const char* a, long long av, const char* b, long long bv) {
    return {{a, av}, {b, bv}};
}

inline Checker::Params params3(const char* a, long long av, const char* b, long long bv,
                               const char* c, long long cv) {
    return {{a, av}, {b, bv}, {c, cv}};
}

inline long long nonzero_digit(std::mt19937_64& rng) {
    long long v = 1 + static_cast<long long>(rng() % 9);
    return (rng() & 1) ? -v : v;
}

// seed pairs with numerators and denominators drawn from [-9,9] \ {0}
inline SeedPair random_seed_pair(std::mt19937_64& rng, std::size_t length) {
    std::vector<Rational> row, col;
    row.reserve(length);
    col.reserve(length);
    for (std::size_t i = 0; i < length; ++i) row.emplace_back(nonzero_digit(rng), nonzero_digit(rng));
    for (std::size_t i = 0; i < length; ++i) col.emplace_back(nonzero_digit(rng), nonzero_digit(rng));
    col[0] = row[0];
    return SeedPair::from_vectors(std::move(row), std::move(col));
}

// Lucas-weighted analogues of the A/B boundary sums
inline Integer abc_lucas_a(long long n, long long k) {
    Integer acc(0);
    for (long long i = 0; i < k; ++i) acc += binomial(n + k - i - 2, n - 1) * lucas(2 * i + 1);
    return acc;
}

inline Integer abc_lucas_b(long long n, long long k) {
    Integer acc(0);
    for (long long i = 0; i < n; ++i) acc += binomial(n + k - i - 2, k - 1) * lucas(i);
    return acc;
}

// printed tail expression of the incomplete-Fibonacci binomial transform
inline Integer printed_tail_fib(long long n, long long k) {
    Integer first(0);
    for (long long r = 2 * k + 1; r <= n; ++r) {
        Integer weight = fibonacci(2 * k) * binomial_any(r, 2 * k) +
                         fibonacci(2 * k - 1) * binomial_any(r - 1, 2 * k - 1);
        first += weight * fibonacci(2 * n - 2 * r);
    }
    Integer second(0);
    for (long long r = 0; r <= n; ++r) {
        for (long long m = 0; m <= r; ++m) {
            second += fibonacci(2 * n - 2 * r - 4 * k - 2) * binomial_any(r + k - m - 1, k) *
                      binomial_any(m + k, k) * pow_u(Integer(2), static_cast<unsigned>(m));
        }
    }
    return first - second;
}

// printed tail expression of the incomplete-Lucas binomial transform, read
// with the sum over r closing before the two trailing binomial terms
inline Integer printed_tail_lucas(long long n, long long k) {
    Integer sum(0);
    for (long long r = 0; r <= n - 2 * k - 2; ++r) {
        Integer braces = fibonacci(2 * n - 4 * k - 2 * r + 2) * lucas(2 * k) -
                         fibonacci(2 * n - 4 * k - 2 * r) * lucas(2 * k - 2);
        Integer inner(0);
        for (long long m = 0; m <= r; ++m) {
            inner += binomial_any(r - m + k, r - m) * binomial_any(m + k, m) *
                     pow_u(Integer(2), static_cast<unsigned>(m));
        }
        Integer odd_pair = fibonacci(2 * n - 4 * k - 2 * r - 5) + fibonacci(2 * n - 4 * k - 2 * r - 3);
        sum += braces * binomial_any(r + 2 * k - 1, r) - odd_pair * inner;
    }
    return sum + lucas(2 * k) * binomial_any(n - 1, n - 2 * k) +
           lucas(2 * k + 2) * binomial_any(n - 2, n - 2 * k - 1);
}

inline void register_tableau_identities(std::vector<IdentityDescriptor>& reg);
inline void register_hyperharmonic_identities(std::vector<IdentityDescriptor>& reg);
inline void register_fibonacci_tableau_identities(std::vector<IdentityDescriptor>& reg);
inline void register_incomplete_identities(std::vector<IdentityDescriptor>& reg);
inline void register_hyper_identities(std::vector<IdentityDescriptor>& reg);

}  // namespace detail

// Full identity registry in a fixed, deterministic order.
inline const std::vector<IdentityDescriptor>& registry() {
    static const std::vector<IdentityDescriptor> reg = [] {
        std::vector<IdentityDescriptor> r;
        detail::register_tableau_identities(r);
        detail::register_hyperharmonic_identities(r);
        detail::register_fibonacci_tableau_identities(r);
        detail::register_incomplete_identities(r);
        detail::register_hyper_identities(r);
        return r;
    }();
    return reg;
}

inline const IdentityDescriptor& find_identity(const std::string& id) {
    for (const auto& d : registry()) {
        if (d.id == id) return d;
    }
    throw std::invalid_argument("unknown identity: " + id);
}

inline IdentityReport run_identity(const std::string& id, const std::string& variant_name,
                                   const RunOptions& opts = {}) {
    const IdentityDescriptor& d = find_identity(id);
    const VariantInfo& variant = d.variant(variant_name.empty() ? d.variants.front().name
                                                                : variant_name);

    std::map<std::string, long long> hi;
    std::vector<ParamRange> domain = d.domain;
    for (auto& range : domain) hi[range.name] = range.hi;
    for (const auto& [name, bound] : opts.max_overrides) {
        auto it = std::find_if(domain.begin(), domain.end(),
                               [&name](const ParamRange& r) { return r.name == name; });
        if (it == domain.end()) {
            throw std::invalid_argument("identity " + id + " has no parameter '" + name + "'");
        }
        if (bound < it->lo) {
            throw std::domain_error("override " + name + " <= " + std::to_string(bound) +
                                    " is below the identity's lower bound " +
                                    std::to_string(it->lo));
        }
        it->hi = bound;
        hi[name] = bound;
    }

    std::size_t order = opts.order ? opts.order : d.default_order;

    Checker out;
    d.eval(variant.name, hi, order, opts.rng_seed, out);

    IdentityReport report;
    report.id = d.id;
    report.variant = variant.name;
    report.domain = std::move(domain);
    report.order = order;
    report.tested = out.tested();
    report.failure_count = out.failure_count();
    report.failures = out.take_failures();

    if (report.failure_count == 0) {
        report.verdict = Verdict::Pass;
    } else if (variant.suspect && !variant.reference.empty()) {
        RunOptions ref_opts = opts;
        IdentityReport ref = run_identity(id, variant.reference, ref_opts);
        report.verdict = ref.verdict == Verdict::Pass ? Verdict::ErratumConfirmed : Verdict::Fail;
    } else {
        report.verdict = Verdict::Fail;
    }
    return report;
}

// Every variant of every identity whose id starts with the filter prefix,
// sorted by id then variant for deterministic assembly.
inline std::vector<IdentityReport> run_suite(const std::string& id_prefix = "",
                                             const RunOptions& opts = {}) {
    std::vector<const IdentityDescriptor*> matched;
    for (const auto& d : registry()) {
        if (d.id.rfind(id_prefix, 0) == 0) matched.push_back(&d);
    }
    std::sort(matched.begin(), matched.end(),
              [](const IdentityDescriptor* a, const IdentityDescriptor* b) { return a->id < b->id; });
    std::vector<IdentityReport> reports;
    for (const IdentityDescriptor* d : matched) {
        for (const auto& v : d->variants) reports.push_back(run_identity(d->id, v.name, opts));
    }
    return reports;
}

// True when every verdict matches its pinned expectation.
inline bool suite_matches_expectations(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports) {
        const auto& expected = find_identity(r.id).expected;
        auto it = expected.find(r.variant);
        if (it == expected.end() || it->second != r.verdict) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// registry construction

namespace detail {

inline void register_tableau_identities(std::vector<IdentityDescriptor>& reg) {
    {
        IdentityDescriptor d;
        d.id = "dumont-roundtrip";
        d.statement = "b_n = sum C(n,i) a_i equals the Euler-Seidel first column, and the "
                      "alternating transform inverts it";
        d.lhs_route = "tableau::binom_transform / inv_binom_transform";
        d.rhs_route = "tableau::EulerSeidelTableau recurrence";
        d.domain = {{"seq", 0, 19}, {"n", 0, 24}, {"part", 1, 2}};
        d.variants = {{"default", false, "", ""}};
        d.randomized = true;
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t seed, Checker& out) {
            std::mt19937_64 rng(seed);
            for (long long s = 0; s <= hi.at("seq"); ++s) {
                std::vector<Rational> a;
                for (int i = 0; i < 25; ++i) {
                    a.emplace_back(static_cast<long long>(rng() % 101) - 50);
                }
                auto fwd = binom_transform(a);
                auto back = inv_binom_transform(fwd);
                EulerSeidelTableau t([a](long long n) { return a[static_cast<std::size_t>(n)]; });
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    auto idx = static_cast<std::size_t>(n);
                    out.check(params3("seq", s, "n", n, "part", 1), fwd[idx], t.entry(0, n));
                    out.check(params3("seq", s, "n", n, "part", 2), back[idx], a[idx]);
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "euler-gf";
        d.statement = "abar(t) = a(t/(1-t)) / (1-t) generates the Euler-Seidel first column";
        d.lhs_route = "tableau::es_column_gf (series composition)";
        d.rhs_route = "tableau::binom_transform sums / closed forms";
        d.domain = {{"seed", 0, 2}, {"n", 0, 25}, {"part", 1, 2}};
        d.variants = {{"default", false, "", ""}};
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long s = 0; s <= hi.at("seed"); ++s) {
                Series base = s == 0   ? expand(Polynomial{0, 1}, Polynomial{1, -1, -1}, order)
                              : s == 1 ? expand(Polynomial{1}, Polynomial{1, -2}, order)
                                       : expand(Polynomial{1}, Polynomial{1, -1}, order);
                Series column = es_column_gf(base);
                auto sums = binom_transform(base.coeffs());
                for (long long n = 0; n <= n_hi; ++n) {
                    auto idx = static_cast<std::size_t>(n);
                    out.check(params3("seed", s, "n", n, "part", 1), column.coeff(idx), sums[idx]);
                    Rational closed = s == 0   ? Rational(fibonacci(2 * n))
                                      : s == 1 ? Rational(pow_u(Integer(3), static_cast<unsigned>(n)))
                                               : Rational(pow_u(Integer(2), static_cast<unsigned>(n)));
                    out.check(params3("seed", s, "n", n, "part", 2), column.coeff(idx), closed);
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "symmetric-closed-form";
        d.statement = "a_n^k = sum_{i=1..k} C(n+k-i-1,n-1) a_0^i + sum_{j=1..n} C(k+n-j-1,k-1) a_j^0";
        d.lhs_route = "SymmetricTableau::entry_closed (binomial sums)";
        d.rhs_route = "SymmetricTableau::entry (recurrence fill)";
        d.domain = {{"seed", 0, 99}, {"n", 1, 15}, {"k", 1, 15}};
        d.variants = {{"default", false, "", ""}};
        d.randomized = true;
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t seed, Checker& out) {
            std::mt19937_64 rng(seed);
            std::size_t len = static_cast<std::size_t>(std::max(hi.at("n"), hi.at("k"))) + 1;
            for (long long s = 0; s <= hi.at("seed"); ++s) {
                SymmetricTableau t(random_seed_pair(rng, len));
                for (long long n = 1; n <= hi.at("n"); ++n) {
                    for (long long k = 1; k <= hi.at("k"); ++k) {
                        out.check(params3("seed", s, "n", n, "k", k), t.entry_closed(n, k),
                                  t.entry(n, k));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "theorem2-row";
        d.statement = "sum_{n>=1} a_n^k t^n = (1/(1-t)^k) { a0(t) + t/(1-t) sum_{r=1..k} a_0^r (1-t)^r }";
        d.lhs_route = "SymmetricTableau::row_gf (series formula)";
        d.rhs_route = "SymmetricTableau::entry (recurrence fill)";
        d.domain = {{"seed", 0, 99}, {"k", 1, 6}, {"n", 1, 25}};
        d.variants = {{"default", false, "", ""}};
        d.randomized = true;
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t seed, Checker& out) {
            std::mt19937_64 rng(seed);
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            std::size_t len = static_cast<std::size_t>(std::max(n_hi, hi.at("k"))) + 1;
            for (long long s = 0; s <= hi.at("seed"); ++s) {
                SymmetricTableau t(random_seed_pair(rng, len));
                for (long long k = 1; k <= hi.at("k"); ++k) {
                    Series row = t.row_gf(k, order);
                    for (long long n = 1; n <= n_hi; ++n) {
                        out.check(params3("seed", s, "k", k, "n", n),
                                  row.coeff(static_cast<std::size_t>(n)), t.entry(n, k));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "theorem2-col";
        d.statement = "sum_{k>=1} a_n^k t^k = (1/(1-t)^n) { abar0(t) + t/(1-t) sum_{j=1..n} a_j^0 (1-t)^j }";
        d.lhs_route = "SymmetricTableau::col_gf (series formula)";
        d.rhs_route = "SymmetricTableau::entry (recurrence fill)";
        d.domain = {{"seed", 0, 99}, {"n", 1, 6}, {"k", 1, 25}};
        d.variants = {{"default", false, "", ""}};
        d.randomized = true;
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t seed, Checker& out) {
            std::mt19937_64 rng(seed);
            long long k_hi = std::min<long long>(hi.at("k"), static_cast<long long>(order));
            std::size_t len = static_cast<std::size_t>(std::max(k_hi, hi.at("n"))) + 1;
            for (long long s = 0; s <= hi.at("seed"); ++s) {
                SymmetricTableau t(random_seed_pair(rng, len));
                for (long long n = 1; n <= hi.at("n"); ++n) {
                    Series col = t.col_gf(n, order);
                    for (long long k = 1; k <= k_hi; ++k) {
                        out.check(params3("seed", s, "n", n, "k", k),
                                  col.coeff(static_cast<std::size_t>(k)), t.entry(n, k));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
}

inline void register_hyperharmonic_identities(std::vector<IdentityDescriptor>& reg) {
    {
        IdentityDescriptor d;
        d.id = "hypmat-identification";
        d.statement = "the tableau seeded by 1/(n+1) and 1 has entries a_n^k = H_{n+1}^(k)";
        d.lhs_route = "SymmetricTableau::entry on preset hyperharmonic";
        d.rhs_route = "sequences::hyperharmonic (binomial closed form)";
        d.domain = {{"k", 0, 10}, {"n", 0, 30}};
        d.variants = {{"default", false, "", ""}};
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("hyperharmonic");
            for (long long k = 0; k <= hi.at("k"); ++k) {
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    out.check(params2("k", k, "n", n), t.entry(n, k), hyperharmonic(n + 1, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hyperharmonic-gf";
        d.statement = "sum_{n>=1} H_n^(k) t^n = -log(1-t)/(1-t)^k, read coefficient-wise for n >= 1";
        d.lhs_route = "series expansion of -log(1-t)/(1-t)^k";
        d.rhs_route = "sequences::hyperharmonic (binomial closed form)";
        d.domain = {{"k", 1, 10}, {"n", 1, 50}};
        d.variants = {{"default", false, "", ""}};
        d.default_order = 50;
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long k = 1; k <= hi.at("k"); ++k) {
                Series gf = log_one_minus_t_neg(order) *
                            expand(Polynomial{1}, pow(Polynomial{1, -1}, static_cast<unsigned>(k)),
                                   order);
                for (long long n = 1; n <= n_hi; ++n) {
                    out.check(params2("k", k, "n", n), gf.coeff(static_cast<std::size_t>(n)),
                              hyperharmonic(n, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hyperharmonic-explicit";
        d.statement = "H_n^(k) = sum_{j=1..n} C(n+k-j-1, k-1) / j";
        d.lhs_route = "direct binomial sum";
        d.rhs_route = "sequences::hyperharmonic (binomial closed form)";
        d.domain = {{"k", 1, 10}, {"n", 1, 40}};
        d.variants = {{"default", false, "", ""}};
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 1; k <= hi.at("k"); ++k) {
                for (long long n = 1; n <= hi.at("n"); ++n) {
                    Rational sum(0);
                    for (long long j = 1; j <= n; ++j) {
                        Integer c = binomial(n + k - j - 1, k - 1);
                        if (!c.is_zero()) sum += Rational(std::move(c)) * Rational(1, j);
                    }
                    out.check(params2("k", k, "n", n), sum, hyperharmonic(n, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
}

inline void register_fibonacci_tableau_identities(std::vector<IdentityDescriptor>& reg) {
    {
        IdentityDescriptor d;
        d.id = "helpfib";
        d.statement = "sum_{i=1..n} F_{2i-1} = F_{2n}  and  sum_{i=1..n} F_i = F_{n+2} - 1";
        d.lhs_route = "running partial sums";
        d.rhs_route = "sequences::fibonacci (doubling / iteration)";
        d.domain = {{"n", 1, 200}, {"part", 1, 2}};
        d.variants = {{"default", false, "", ""}};
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            Integer odd_sum(0), all_sum(0);
            for (long long n = 1; n <= hi.at("n"); ++n) {
                odd_sum += fibonacci(2 * n - 1);
                all_sum += fibonacci(n);
                out.check(params2("n", n, "part", 1), odd_sum, fibonacci(2 * n));
                out.check(params2("n", n, "part", 2), all_sum, fibonacci(n + 2) - Integer(1));
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "helpluc";
        d.statement = "sum_{i=1..n} L_{2i-1} = L_{2n} - 2  and  sum_{i=0..n} L_i = L_{n+2} - 1";
        d.lhs_route = "running partial sums";
        d.rhs_route = "sequences::lucas";
        d.domain = {{"n", 1, 200}, {"part", 1, 2}};
        d.variants = {{"default", false, "", ""}};
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            Integer odd_sum(0), all_sum(2);
            for (long long n = 1; n <= hi.at("n"); ++n) {
                odd_sum += lucas(2 * n - 1);
                all_sum += lucas(n);
                out.check(params2("n", n, "part", 1), odd_sum, lucas(2 * n) - Integer(2));
                out.check(params2("n", n, "part", 2), all_sum, lucas(n + 2) - Integer(1));
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "fibmat-identification";
        d.statement = "the tableau seeded by F_{n-1} and F_{2k-1} has entries a_n^k = F_{n+2k-1} (k >= 1)";
        d.lhs_route = "SymmetricTableau::entry on preset fib-odd";
        d.rhs_route = "sequences::fibonacci";
        d.domain = {{"k", 1, 12}, {"n", 0, 30}};
        d.variants = {{"default", false, "", ""}};
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("fib-odd");
            for (long long k = 1; k <= hi.at("k"); ++k) {
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    out.check(params2("k", k, "n", n), t.entry(n, k),
                              Rational(fibonacci(n + 2 * k - 1)));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "fibmat-identification-lucas";
        d.statement = "the tableau seeded by L_{n-1} and L_{2k-1} has entries a_n^k = L_{n+2k-1} (k >= 1)";
        d.lhs_route = "SymmetricTableau::entry on preset lucas-odd";
        d.rhs_route = "sequences::lucas";
        d.domain = {{"k", 1, 12}, {"n", 0, 30}};
        d.variants = {{"default", false, "", ""}};
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("lucas-odd");
            for (long long k = 1; k <= hi.at("k"); ++k) {
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    out.check(params2("k", k, "n", n), t.entry(n, k), Rational(lucas(n + 2 * k - 1)));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "propfib1-row";
        d.statement = "row k of the fib-odd tableau is generated by t(F_{2k} + t F_{2k-1})/(1-t-t^2)";
        d.lhs_route = "series expansion of the closed form";
        d.rhs_route = "SymmetricTableau::entry on preset fib-odd";
        d.domain = {{"k", 1, 8}, {"n", 1, 25}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("fib-odd");
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long k = 1; k <= hi.at("k"); ++k) {
                Polynomial num(std::vector<Rational>{Rational(0), Rational(fibonacci(2 * k)),
                                                     Rational(fibonacci(2 * k - 1))});
                Series gf = expand(num, Polynomial{1, -1, -1}, order);
                for (long long n = 1; n <= n_hi; ++n) {
                    out.check(params2("k", k, "n", n), gf.coeff(static_cast<std::size_t>(n)),
                              t.entry(n, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "propfib1-col";
        d.statement = "column n of the fib-odd tableau is generated by t(F_{n+1} - t F_{n-1})/(t^2-3t+1)";
        d.lhs_route = "series expansion of the closed form";
        d.rhs_route = "SymmetricTableau::entry on preset fib-odd";
        d.domain = {{"n", 1, 8}, {"k", 1, 25}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("fib-odd");
            long long k_hi = std::min<long long>(hi.at("k"), static_cast<long long>(order));
            for (long long n = 1; n <= hi.at("n"); ++n) {
                Polynomial num(std::vector<Rational>{Rational(0), Rational(fibonacci(n + 1)),
                                                     Rational(-fibonacci(n - 1))});
                Series gf = expand(num, Polynomial{1, -3, 1}, order);
                for (long long k = 1; k <= k_hi; ++k) {
                    out.check(params2("n", n, "k", k), gf.coeff(static_cast<std::size_t>(k)),
                              t.entry(n, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "propfib2-row";
        d.statement = "row k of the fib-even-odd tableau vs. "
                      "-t/(t^2+t-1) { t(t^2-t+1)/((1-t)^k (t^2-3t+1)) + F_{2k+1} + t F_{2k} }";
        d.lhs_route = "series expansion of the closed form / row_gf";
        d.rhs_route = "SymmetricTableau::entry on preset fib-even-odd";
        d.domain = {{"k", 1, 8}, {"n", 1, 25}};
        d.variants = {{"printed", true, "oracle-only", "closed form transcribed verbatim"},
                      {"oracle-only", false, "", "row_gf formula against the recurrence"}};
        d.expected = {{"printed", Verdict::Pass}, {"oracle-only", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("fib-even-odd");
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long k = 1; k <= hi.at("k"); ++k) {
                Series gf(order);
                if (variant == "printed") {
                    Polynomial den = pow(Polynomial{1, -1}, static_cast<unsigned>(k)) *
                                     Polynomial{1, -3, 1};
                    Series inner = expand(Polynomial{0, 1, -1, 1}, den, order) +
                                   Series::from_polynomial(
                                       Polynomial(std::vector<Rational>{
                                           Rational(fibonacci(2 * k + 1)), Rational(fibonacci(2 * k))}),
                                       order);
                    gf = expand(Polynomial{0, -1}, Polynomial{-1, 1, 1}, order) * inner;
                } else {
                    gf = t.row_gf(k, order);
                }
                for (long long n = 1; n <= n_hi; ++n) {
                    out.check(params2("k", k, "n", n), gf.coeff(static_cast<std::size_t>(n)),
                              t.entry(n, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "propfib2-col";
        d.statement = "column n of the fib-even-odd tableau vs. "
                      "t/(t^2+t-1) { 2t(t^2-t+1)/((1-t)^n (t^2-3t+1)) - F_{2n} - t F_{2n-1} }";
        d.lhs_route = "series expansion of the closed form / col_gf";
        d.rhs_route = "SymmetricTableau::entry on preset fib-even-odd";
        d.domain = {{"n", 1, 8}, {"k", 1, 25}};
        d.variants = {
            {"printed", true, "corrected", "closed form transcribed verbatim, 2t factor included"},
            {"corrected", false, "",
             "factor 2t/(1-t)^n replaced by -1/(1-t)^(n-1), derived by the tail telescoping"},
            {"oracle-only", false, "", "col_gf formula against the recurrence"}};
        d.expected = {{"printed", Verdict::ErratumConfirmed},
                      {"corrected", Verdict::Pass},
                      {"oracle-only", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("fib-even-odd");
            long long k_hi = std::min<long long>(hi.at("k"), static_cast<long long>(order));
            for (long long n = 1; n <= hi.at("n"); ++n) {
                Series gf(order);
                Polynomial tail(std::vector<Rational>{Rational(-fibonacci(2 * n)),
                                                      Rational(-fibonacci(2 * n - 1))});
                if (variant == "printed") {
                    Polynomial den = pow(Polynomial{1, -1}, static_cast<unsigned>(n)) *
                                     Polynomial{1, -3, 1};
                    Series inner = expand(Polynomial{0, 2, -2, 2}, den, order) +
                                   Series::from_polynomial(tail, order);
                    gf = expand(Polynomial{0, 1}, Polynomial{-1, 1, 1}, order) * inner;
                } else if (variant == "corrected") {
                    Polynomial den = pow(Polynomial{1, -1}, static_cast<unsigned>(n - 1)) *
                                     Polynomial{1, -3, 1};
                    Series inner = expand(Polynomial{-1, 1, -1}, den, order) +
                                   Series::from_polynomial(tail, order);
                    gf = expand(Polynomial{0, 1}, Polynomial{-1, 1, 1}, order) * inner;
                } else {
                    gf = t.col_gf(n, order);
                }
                for (long long k = 1; k <= k_hi; ++k) {
                    out.check(params2("n", n, "k", k), gf.coeff(static_cast<std::size_t>(k)),
                              t.entry(n, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "propfib2-coeff";
        d.statement = "entries of the fib-even-odd tableau as combinations of A, B, C boundary sums";
        d.lhs_route = "sequences::abc_coeff sums";
        d.rhs_route = "SymmetricTableau::entry on preset fib-even-odd";
        d.domain = {{"n", 1, 12}, {"k", 1, 12}};
        d.variants = {{"printed", true, "corrected", "coefficient written as C(n,k) + A(k,n)"},
                      {"corrected", false, "", "coefficient A(n,k) + C(n,k) + A(k,n)"}};
        d.expected = {{"printed", Verdict::ErratumConfirmed}, {"corrected", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            SymmetricTableau t = preset_tableau("fib-even-odd");
            for (long long n = 1; n <= hi.at("n"); ++n) {
                for (long long k = 1; k <= hi.at("k"); ++k) {
                    Integer combo = abc_coeff(AbcKind::C, n, k) + abc_coeff(AbcKind::A, k, n);
                    if (variant == "corrected") combo += abc_coeff(AbcKind::A, n, k);
                    out.check(params2("n", n, "k", k), Rational(combo), t.entry(n, k));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "fibnew1";
        d.statement = "F_{2k+1} - 1 = sum_{i=0..k-1} (k-i) F_{2i+1}";
        d.lhs_route = "sequences::fibonacci";
        d.rhs_route = "direct weighted sum";
        d.domain = {{"k", 1, 30}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 1; k <= hi.at("k"); ++k) {
                Integer sum(0);
                for (long long i = 0; i < k; ++i) sum += Integer(k - i) * fibonacci(2 * i + 1);
                out.check({{"k", k}}, fibonacci(2 * k + 1) - Integer(1), sum);
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "fibnew2";
        d.statement = "F_{2k+2} - k - 1 = sum_{i=0..k-1} C(k+1-i, 2) F_{2i+1}";
        d.lhs_route = "sequences::fibonacci";
        d.rhs_route = "direct weighted sum";
        d.domain = {{"k", 1, 30}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 1; k <= hi.at("k"); ++k) {
                Integer sum(0);
                for (long long i = 0; i < k; ++i) {
                    sum += binomial(k + 1 - i, 2) * fibonacci(2 * i + 1);
                }
                out.check({{"k", k}}, fibonacci(2 * k + 2) - Integer(k + 1), sum);
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "lucas-corollary";
        d.statement = "L_{2k+1} = sum_{i=0..k-1} (k-i) L_{2i+1} + 2k + 1";
        d.lhs_route = "sequences::lucas";
        d.rhs_route = "direct weighted sum";
        d.domain = {{"k", 1, 30}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 1; k <= hi.at("k"); ++k) {
                Integer sum(2 * k + 1);
                for (long long i = 0; i < k; ++i) sum += Integer(k - i) * lucas(2 * i + 1);
                out.check({{"k", k}}, lucas(2 * k + 1), sum);
            }
        };
        reg.push_back(std::move(d));
    }
}

inline void register_incomplete_identities(std::vector<IdentityDescriptor>& reg) {
    {
        IdentityDescriptor d;
        d.id = "incfib-gf-vs-sum";
        d.statement = "the t^n coefficient of R_k(t) equals sum_{j=0..k} C(n-1-j, j) on 2k+1 <= n";
        d.lhs_route = "sequences::incomplete_fib_gf (series expansion)";
        d.rhs_route = "sequences::incomplete_fibonacci_sum (defining sum)";
        d.domain = {{"k", 0, 19}, {"n", 1, 40}};
        d.variants = {{"default", false, "", ""}};
        d.default_order = 40;
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long k = 0; k <= hi.at("k"); ++k) {
                if (2 * k + 1 > n_hi) break;
                Series gf = incomplete_fib_gf(k, order);
                for (long long n = 2 * k + 1; n <= n_hi; ++n) {
                    out.check(params2("k", k, "n", n), gf.coeff(static_cast<std::size_t>(n)),
                              Rational(incomplete_fibonacci_sum(n, k)));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "incluc-gf-vs-sum";
        d.statement = "the t^n coefficient of S_k(t) equals sum_{j=0..k} n/(n-j) C(n-j, j) on 2k <= n";
        d.lhs_route = "sequences::incomplete_lucas_gf (series expansion)";
        d.rhs_route = "sequences::incomplete_lucas_sum (defining sum)";
        d.domain = {{"k", 0, 20}, {"n", 1, 40}};
        d.variants = {{"default", false, "", ""}};
        d.default_order = 40;
        d.expected = {{"default", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long k = 0; k <= hi.at("k"); ++k) {
                if (2 * k > n_hi) break;
                Series gf = incomplete_lucas_gf(k, order);
                for (long long n = std::max<long long>(1, 2 * k); n <= n_hi; ++n) {
                    out.check(params2("k", k, "n", n), gf.coeff(static_cast<std::size_t>(n)),
                              Rational(incomplete_lucas_sum(n, k)));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "incfib-vanishing-range";
        d.statement = "F_n(k) = 0 for small n: printed range 0 <= n <= 2k+1, actual range 0 <= n <= 2k";
        d.lhs_route = "sequences::incomplete_fibonacci (generating function)";
        d.rhs_route = "constant 0";
        d.domain = {{"k", 0, 10}, {"n", 0, 21}};
        d.variants = {{"printed", true, "gf", "claims vanishing up to n = 2k+1 inclusive"},
                      {"gf", false, "", "vanishing up to n = 2k, forced by the t^(2k+1) prefactor"}};
        d.expected = {{"printed", Verdict::ErratumConfirmed}, {"gf", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 0; k <= hi.at("k"); ++k) {
                long long top = variant == "printed" ? 2 * k + 1 : 2 * k;
                for (long long n = 0; n <= std::min(top, hi.at("n")); ++n) {
                    out.check(params2("k", k, "n", n), incomplete_fibonacci(n, k), Integer(0));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "binsuminc";
        d.statement = "sum_{j=0..h} C(h,j) F_{n+j}(k+j) = F_{n+2h}(k+h) for 0 <= k <= (n-h-1)/2";
        d.lhs_route = "sequences::incomplete_fibonacci (generating function)";
        d.rhs_route = "sequences::incomplete_fibonacci_sum (defining sum)";
        d.domain = {{"h", 0, 8}, {"n", 1, 30}, {"k", 0, 14}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long h = 0; h <= hi.at("h"); ++h) {
                for (long long n = 1; n <= hi.at("n"); ++n) {
                    for (long long k = 0; k <= hi.at("k") && 2 * k <= n - h - 1; ++k) {
                        Integer lhs(0);
                        for (long long j = 0; j <= h; ++j) {
                            lhs += binomial(h, j) * incomplete_fibonacci(n + j, k + j);
                        }
                        out.check(params3("h", h, "n", n, "k", k), lhs,
                                  incomplete_fibonacci_sum(n + 2 * h, k + h));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "binsumincl";
        d.statement = "sum_{j=0..h} C(h,j) L_{n+j}(k+j) = L_{n+2h}(k+h) for 0 <= k <= (n-h)/2";
        d.lhs_route = "sequences::incomplete_lucas (generating function)";
        d.rhs_route = "sequences::incomplete_lucas_sum (defining sum)";
        d.domain = {{"h", 0, 8}, {"n", 1, 30}, {"k", 0, 14}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long h = 0; h <= hi.at("h"); ++h) {
                for (long long n = 1; n <= hi.at("n"); ++n) {
                    for (long long k = 0; k <= hi.at("k") && 2 * k <= n - h; ++k) {
                        Integer lhs(0);
                        for (long long j = 0; j <= h; ++j) {
                            lhs += binomial(h, j) * incomplete_lucas(n + j, k + j);
                        }
                        out.check(params3("h", h, "n", n, "k", k), lhs,
                                  incomplete_lucas_sum(n + 2 * h, k + h));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "inc-cessaro-fib";
        d.statement = "F_{r+n}(s+n) = sum_{k=0..n} C(n,k) (-1)^(n-k) F_{r+2k}(s+k) for 0 <= s <= (r-n-1)/2";
        d.lhs_route = "sequences::incomplete_fibonacci_sum (defining sum)";
        d.rhs_route = "sequences::incomplete_fibonacci (generating function)";
        d.domain = {{"n", 0, 10}, {"r", 1, 30}, {"s", 0, 14}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long n = 0; n <= hi.at("n"); ++n) {
                for (long long r = 1; r <= hi.at("r"); ++r) {
                    for (long long s = 0; s <= hi.at("s") && 2 * s <= r - n - 1; ++s) {
                        Integer rhs(0);
                        for (long long k = 0; k <= n; ++k) {
                            Integer term = binomial(n, k) * incomplete_fibonacci(r + 2 * k, s + k);
                            rhs += ((n - k) % 2 == 0) ? term : -term;
                        }
                        out.check(params3("n", n, "r", r, "s", s),
                                  incomplete_fibonacci_sum(r + n, s + n), rhs);
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "inc-cessaro-lucas";
        d.statement = "L_{r+n}(s+n) = sum_{k=0..n} C(n,k) (-1)^(n-k) L_{r+2k}(s+k) for 0 <= s <= (r-n)/2";
        d.lhs_route = "sequences::incomplete_lucas_sum (defining sum)";
        d.rhs_route = "sequences::incomplete_lucas (generating function)";
        d.domain = {{"n", 0, 10}, {"r", 1, 30}, {"s", 0, 14}};
        d.variants = {{"printed", false, "", ""}};
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long n = 0; n <= hi.at("n"); ++n) {
                for (long long r = 1; r <= hi.at("r"); ++r) {
                    for (long long s = 0; s <= hi.at("s") && 2 * s <= r - n; ++s) {
                        Integer rhs(0);
                        for (long long k = 0; k <= n; ++k) {
                            Integer term = binomial(n, k) * incomplete_lucas(r + 2 * k, s + k);
                            rhs += ((n - k) % 2 == 0) ? term : -term;
                        }
                        out.check(params3("n", n, "r", r, "s", s),
                                  incomplete_lucas_sum(r + n, s + n), rhs);
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "incfib-binom-transform";
        d.statement = "sum_{l=0..n} C(n,l) F_l(k): 0 below n = 2k+1, F_{2k+1} at n = 2k+1, "
                      "then the printed tail expression";
        d.lhs_route = "direct binomial sums over incomplete_fibonacci";
        d.rhs_route = "tableau::EulerSeidelTableau / printed tail expression";
        d.domain = {{"k", 0, 6}, {"n", 0, 30}, {"part", 1, 2}};
        d.variants = {{"oracle", false, "", "transform vs. the Euler-Seidel column and base cases"},
                      {"printed-F-closed-form", true, "oracle",
                       "tail for n >= 2k+2 as printed; stray indices read with generalized "
                       "binomials and negative-index Fibonacci numbers"}};
        d.expected = {{"oracle", Verdict::Pass},
                      {"printed-F-closed-form", Verdict::ErratumConfirmed}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 0; k <= hi.at("k"); ++k) {
                EulerSeidelTableau table(
                    [k](long long l) { return Rational(incomplete_fibonacci(l, k)); });
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    Integer transform(0);
                    for (long long l = 0; l <= n; ++l) {
                        transform += binomial(n, l) * incomplete_fibonacci(l, k);
                    }
                    if (variant == "oracle") {
                        out.check(params3("k", k, "n", n, "part", 1), Rational(transform),
                                  table.entry(0, n));
                        if (n < 2 * k + 1) {
                            out.check(params3("k", k, "n", n, "part", 2), transform, Integer(0));
                        } else if (n == 2 * k + 1) {
                            out.check(params3("k", k, "n", n, "part", 2), transform,
                                      fibonacci(2 * k + 1));
                        }
                    } else if (n >= 2 * k + 2) {
                        out.check(params2("k", k, "n", n), transform, printed_tail_fib(n, k));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "incluc-binom-transform";
        d.statement = "sum_{l=0..n} C(n,l) L_l(k): 0 below n = 2k, L_{2k} at n = 2k, a linear "
                      "combination at n = 2k+1, then the printed tail expression";
        d.lhs_route = "direct binomial sums over incomplete_lucas";
        d.rhs_route = "tableau::EulerSeidelTableau / printed tail expression";
        d.domain = {{"k", 0, 6}, {"n", 0, 30}, {"part", 1, 2}};
        d.variants = {
            {"oracle", false, "", "transform vs. the Euler-Seidel column and forced base cases"},
            {"printed-case-2k1", true, "corrected-case-2k1",
             "value at n = 2k+1 printed as (2k+1) L_{2k} + L_{2k+2}"},
            {"corrected-case-2k1", false, "", "value at n = 2k+1 is (2k+1) L_{2k} + L_{2k+1}"},
            {"printed-L-closed-form", true, "oracle",
             "tail for n >= 2k+2 as printed, unbalanced grouping closed before the two "
             "trailing binomial terms; holds under that reading"}};
        d.expected = {{"oracle", Verdict::Pass},
                      {"printed-case-2k1", Verdict::ErratumConfirmed},
                      {"corrected-case-2k1", Verdict::Pass},
                      {"printed-L-closed-form", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 0; k <= hi.at("k"); ++k) {
                EulerSeidelTableau table(
                    [k](long long l) { return Rational(incomplete_lucas(l, k)); });
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    Integer transform(0);
                    for (long long l = 0; l <= n; ++l) {
                        transform += binomial(n, l) * incomplete_lucas(l, k);
                    }
                    if (variant == "oracle") {
                        out.check(params3("k", k, "n", n, "part", 1), Rational(transform),
                                  table.entry(0, n));
                        if (n < 2 * k) {
                            out.check(params3("k", k, "n", n, "part", 2), transform, Integer(0));
                        } else if (n == 2 * k) {
                            out.check(params3("k", k, "n", n, "part", 2), transform, lucas(2 * k));
                        }
                    } else if (variant == "printed-case-2k1" && n == 2 * k + 1) {
                        out.check(params2("k", k, "n", n), transform,
                                  Integer(2 * k + 1) * lucas(2 * k) + lucas(2 * k + 2));
                    } else if (variant == "corrected-case-2k1" && n == 2 * k + 1) {
                        out.check(params2("k", k, "n", n), transform,
                                  Integer(2 * k + 1) * lucas(2 * k) + lucas(2 * k + 1));
                    } else if (variant == "printed-L-closed-form" && n >= 2 * k + 2) {
                        out.check(params2("k", k, "n", n), transform, printed_tail_lucas(n, k));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "lastfib";
        d.statement = "F_n(k) for n >= 2k+2: printed A_{n-2k,k} + B_{n-2k,k} - F^(k+1)_{n-2k-2}, "
                      "corrected F_n - F^(k+1)_{n-2k-2}";
        d.lhs_route = "sequences::incomplete_fibonacci (generating function)";
        d.rhs_route = "sequences::abc_coeff / fibonacci / hyperfibonacci";
        d.domain = {{"k", 1, 6}, {"n", 0, 40}};
        d.variants = {{"printed", true, "corrected", "tableau sums taken at index n-2k"},
                      {"corrected", false, "",
                       "equivalently the A and B sums at index n-2k+1; both routes give F_n"}};
        d.expected = {{"printed", Verdict::ErratumConfirmed}, {"corrected", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long k = 1; k <= hi.at("k"); ++k) {
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    Integer lhs = incomplete_fibonacci(n, k);
                    Integer rhs(0);
                    if (n < 2 * k + 1) {
                        rhs = Integer(0);
                    } else if (n == 2 * k + 1) {
                        rhs = fibonacci(2 * k + 1);
                    } else if (variant == "printed") {
                        rhs = abc_coeff(AbcKind::A, n - 2 * k, k) +
                              abc_coeff(AbcKind::B, n - 2 * k, k) -
                              hyperfibonacci(n - 2 * k - 2, k + 1);
                    } else {
                        rhs = fibonacci(n) - hyperfibonacci(n - 2 * k - 2, k + 1);
                    }
                    out.check(params2("k", k, "n", n), lhs, rhs);
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "lastluc";
        d.statement = "L_n(k) via tableau sums minus hyperlucas: printed with the Fibonacci-weighted "
                      "A and B, corrected with their Lucas-weighted analogues";
        d.lhs_route = "sequences::incomplete_lucas (generating function)";
        d.rhs_route = "boundary sums / hyperlucas";
        d.domain = {{"k", 1, 6}, {"n", 0, 40}};
        d.variants = {{"printed", true, "lucas-ab",
                       "A and B read literally, i.e. with Fibonacci weights"},
                      {"lucas-ab", false, "",
                       "A and B with Lucas weights; the printed index shift n-2k+1 is kept"}};
        d.expected = {{"printed", Verdict::ErratumConfirmed}, {"lucas-ab", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            const bool lucas_weights = variant == "lucas-ab";
            for (long long k = 1; k <= hi.at("k"); ++k) {
                for (long long n = 0; n <= hi.at("n"); ++n) {
                    Integer lhs = incomplete_lucas(n, k);
                    Integer rhs(0);
                    if (n < 2 * k) {
                        rhs = Integer(0);
                    } else if (n == 2 * k) {
                        rhs = lucas(2 * k);
                    } else if (n == 2 * k + 1) {
                        rhs = lucas_weights
                                  ? abc_lucas_a(2, k) + abc_lucas_b(2, k)
                                  : abc_coeff(AbcKind::A, 2, k) + abc_coeff(AbcKind::B, 2, k);
                    } else {
                        Integer ab = lucas_weights
                                         ? abc_lucas_a(n - 2 * k + 1, k) + abc_lucas_b(n - 2 * k + 1, k)
                                         : abc_coeff(AbcKind::A, n - 2 * k + 1, k) +
                                               abc_coeff(AbcKind::B, n - 2 * k + 1, k);
                        rhs = ab - hyperlucas(n - 2 * k - 2, k + 1);
                    }
                    out.check(params2("k", k, "n", n), lhs, rhs);
                }
            }
        };
        reg.push_back(std::move(d));
    }
}

inline void register_hyper_identities(std::vector<IdentityDescriptor>& reg) {
    {
        IdentityDescriptor d;
        d.id = "hyperfib-gf";
        d.statement = "sum_n F_n^(r) t^n = t / ((1-t-t^2)(1-t)^r)";
        d.lhs_route = "series expansion of the rational form";
        d.rhs_route = "sequences::hyperfibonacci (repeated sums)";
        d.domain = {{"r", 0, 8}, {"n", 0, 40}};
        d.variants = {{"printed", false, "", ""}};
        d.default_order = 40;
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long r = 0; r <= hi.at("r"); ++r) {
                Polynomial den = Polynomial{1, -1, -1} * pow(Polynomial{1, -1}, static_cast<unsigned>(r));
                Series gf = expand(Polynomial{0, 1}, den, order);
                for (long long n = 0; n <= n_hi; ++n) {
                    out.check(params2("r", r, "n", n), gf.coeff(static_cast<std::size_t>(n)),
                              Rational(hyperfibonacci(n, r)));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hyperluc-gf";
        d.statement = "sum_n L_n^(r) t^n = (2-t) / ((1-t-t^2)(1-t)^r)";
        d.lhs_route = "series expansion of the rational form";
        d.rhs_route = "sequences::hyperlucas (repeated sums)";
        d.domain = {{"r", 0, 8}, {"n", 0, 40}};
        d.variants = {{"printed", false, "", ""}};
        d.default_order = 40;
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long r = 0; r <= hi.at("r"); ++r) {
                Polynomial den = Polynomial{1, -1, -1} * pow(Polynomial{1, -1}, static_cast<unsigned>(r));
                Series gf = expand(Polynomial{2, -1}, den, order);
                for (long long n = 0; n <= n_hi; ++n) {
                    out.check(params2("r", r, "n", n), gf.coeff(static_cast<std::size_t>(n)),
                              Rational(hyperlucas(n, r)));
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hyperlucas-initial";
        d.statement = "initial hyperlucas values: printed L_0^(r) = 0 and L_1^(r) = 1, summation "
                      "convention L_0^(r) = 2 and L_1^(r) = 2r+1";
        d.lhs_route = "sequences::hyperlucas (repeated sums)";
        d.rhs_route = "stated constants";
        d.domain = {{"r", 1, 8}, {"n", 0, 1}};
        d.variants = {{"printed", true, "summation", "initial values as printed"},
                      {"summation", false, "", "initial values forced by the summation and the GF"}};
        d.expected = {{"printed", Verdict::ErratumConfirmed}, {"summation", Verdict::Pass}};
        d.eval = [](const std::string& variant, const std::map<std::string, long long>& hi,
                    std::size_t, std::uint64_t, Checker& out) {
            for (long long r = 1; r <= hi.at("r"); ++r) {
                for (long long n = 0; n <= std::min<long long>(1, hi.at("n")); ++n) {
                    Integer expected;
                    if (variant == "printed") {
                        expected = Integer(n);  // 0 at n = 0, 1 at n = 1
                    } else {
                        expected = n == 0 ? Integer(2) : Integer(2 * r + 1);
                    }
                    out.check(params2("r", r, "n", n), hyperlucas(n, r), expected);
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "gengenfib";
        d.statement = "sum_n F_{kn+r} t^n = (F_r + (-1)^r F_{k-r} t) / (1 - L_k t + (-1)^k t^2)";
        d.lhs_route = "sequences::fib_subseq_gf (series expansion)";
        d.rhs_route = "sequences::fibonacci (direct values)";
        d.domain = {{"k", 1, 5}, {"r", 0, 4}, {"n", 0, 20}};
        d.variants = {{"printed", false, "", ""}};
        d.default_order = 20;
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long k = 1; k <= hi.at("k"); ++k) {
                for (long long r = 0; r <= hi.at("r") && r < k; ++r) {
                    Series gf = fib_subseq_gf(k, r, order);
                    for (long long n = 0; n <= n_hi; ++n) {
                        out.check(params3("k", k, "r", r, "n", n),
                                  gf.coeff(static_cast<std::size_t>(n)),
                                  Rational(fibonacci(k * n + r)));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "gengenluc";
        d.statement = "sum_n L_{kn+r} t^n = (L_r + (-1)^(r-1) L_{k-r} t) / (1 - L_k t + (-1)^k t^2)";
        d.lhs_route = "sequences::lucas_subseq_gf (series expansion)";
        d.rhs_route = "sequences::lucas (direct values)";
        d.domain = {{"k", 1, 5}, {"r", 0, 4}, {"n", 0, 20}};
        d.variants = {{"printed", false, "", ""}};
        d.default_order = 20;
        d.expected = {{"printed", Verdict::Pass}};
        d.eval = [](const std::string&, const std::map<std::string, long long>& hi,
                    std::size_t order, std::uint64_t, Checker& out) {
            long long n_hi = std::min<long long>(hi.at("n"), static_cast<long long>(order));
            for (long long k = 1; k <= hi.at("k"); ++k) {
                for (long long r = 0; r <= hi.at("r") && r < k; ++r) {
                    Series gf = lucas_subseq_gf(k, r, order);
                    for (long long n = 0; n <= n_hi; ++n) {
                        out.check(params3("k", k, "r", r, "n", n),
                                  gf.coeff(static_cast<std::size_t>(n)),
                                  Rational(lucas(k * n + r)));
                    }
                }
            }
        };
        reg.push_back(std::move(d));
    }
}

}  // namespace detail

}  // namespace seidel
