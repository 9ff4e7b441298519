#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kprim/variant.hpp"

namespace kprim {

// Inequality checks are recomputed with a directed slack so that a pass
// never hinges on the last few ulps of a double: "a < b" passes only if
// a + eps < b with eps = 1e-9 * max(1, |a|, |b|).  The margins verified
// here are orders of magnitude larger than this slack.
inline double slack(double a, double b) {
    return 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// strict "a < b"
inline bool strictly_less(double a, double b) {
    return a + slack(a, b) < b;
}

// non-strict "a <= b"; tolerates roundoff at genuine equality cases
inline bool leq_with_slack(double a, double b) {
    return a <= b + slack(a, b);
}

// One verified inequality: the named terms that enter it, the resulting
// margin (positive means the claim holds with room), and the verdict.
struct MarginReport {
    long long k = 0;
    Variant variant = Variant::main;
    std::string claim;                                  // what was checked
    std::vector<std::pair<std::string, double>> terms;  // named inputs, in order
    double margin = 0.0;
    bool pass = false;
    bool applicable = true;  // false where the claim makes no assertion

    MarginReport& term(std::string name, double value) {
        terms.emplace_back(std::move(name), value);
        return *this;
    }
    double term_value(const std::string& name) const {
        for (const auto& [n, v] : terms)
            if (n == name) return v;
        return std::nan("");
    }
};

inline bool all_pass(const std::vector<MarginReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const MarginReport& r) {
        return !r.applicable || r.pass;
    });
}

// Builders for the two claim directions under the global slack policy.
inline MarginReport check_less(long long k, Variant v, std::string claim, double lhs,
                               double rhs) {
    MarginReport r;
    r.k = k;
    r.variant = v;
    r.claim = std::move(claim);
    r.margin = rhs - lhs;
    r.pass = strictly_less(lhs, rhs);
    return r;
}

inline MarginReport check_leq(long long k, Variant v, std::string claim, double lhs,
                              double rhs) {
    MarginReport r;
    r.k = k;
    r.variant = v;
    r.claim = std::move(claim);
    r.margin = rhs - lhs;
    r.pass = leq_with_slack(lhs, rhs);
    return r;
}

} // namespace kprim
