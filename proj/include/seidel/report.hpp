#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seidel/rational.hpp"

namespace seidel {

enum class Verdict { Pass, Fail, ErratumConfirmed };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::ErratumConfirmed: return "ERRATUM-CONFIRMED";
    }
    return "FAIL";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "PASS") return Verdict::Pass;
    if (s == "FAIL") return Verdict::Fail;
    if (s == "ERRATUM-CONFIRMED") return Verdict::ErratumConfirmed;
    throw std::invalid_argument("unknown verdict: " + s);
}

struct ParamRange {
    std::string name;
    long long lo = 0;
    long long hi = 0;
};

// One concrete parameter assignment whose two sides disagreed.
struct FailureInstance {
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    std::string variant;
    std::vector<ParamRange> domain;
    std::size_t order = 0;
    long long tested = 0;
    long long failure_count = 0;
    std::vector<FailureInstance> failures;  // capped, smallest parameters first
    Verdict verdict = Verdict::Pass;
};

/**
 * Collects instance comparisons for one identity run. Instances must be fed
 * in ascending parameter order; the stored failures are then automatically
 * the smallest counterexamples. The stored list is capped, the count is not.
 */
class Checker {
public:
    explicit Checker(std::size_t cap = 10) : cap_(cap) {}

    using Params = std::vector<std::pair<std::string, long long>>;

    void check(const Params& params, const Rational& lhs, const Rational& rhs) {
        ++tested_;
        if (lhs == rhs) return;
        ++failure_count_;
        if (failures_.size() < cap_) {
            failures_.push_back({params, lhs.to_string(), rhs.to_string()});
        }
    }

    void check(const Params& params, const Integer& lhs, const Integer& rhs) {
        check(params, Rational(lhs), Rational(rhs));
    }

    long long tested() const { return tested_; }
    long long failure_count() const { return failure_count_; }
    std::vector<FailureInstance> take_failures() { return std::move(failures_); }

private:
    std::size_t cap_;
    long long tested_ = 0;
    long long failure_count_ = 0;
    std::vector<FailureInstance> failures_;
};

}  // namespace seidel
