#pragma once

#include <cstdint>
#include <vector>

#include "kprim/primes.hpp"
#include "kprim/report.hpp"
#include "kprim/variant.hpp"

namespace kprim {

// Per-variant exponent sequence lambda(k) with its companions
// theta(k) and nu(k) = 1/theta(k):
//
//   main    lambda(1) = 1.2, lambda(2) = 0.8,
//           lambda(k) = 2.625 prod_{i<=k} (1 - 1/p_i) for k >= 3;
//           theta(3) = 1/8, theta(k) = 1/p_k otherwise.
//   lcm     lambda(1) = 8/7, lambda(k) = 3 prod_{i<=k} (1 - 1/p_i) for k >= 2;
//           theta(2) = 1/8, theta(k) = 1/p_k otherwise.
//   strong  lambda(k) = 3 log(k)/k for k >= 2;
//           theta(k) = 1 - lambda(k)/lambda(k-1) for k >= 3.
//
// The Mertens-type prefix products are accumulated once, left to right,
// at construction; accessors are O(1) afterwards.  The referenced
// PrimeTable must outlive the schedule.
class ExponentSchedule {
public:
    ExponentSchedule(Variant v, const PrimeTable& t);

    Variant variant() const { return variant_; }
    long long max_k() const { return max_k_; }

    double lambda(long long k) const;
    double theta(long long k) const;
    double nu(long long k) const;  // 1/theta(k)

    // exact integer nu for main/lcm (8 at the special index, p_k otherwise)
    long long nu_int(long long k) const;

private:
    Variant variant_;
    const PrimeTable* table_;
    long long max_k_;
    std::vector<double> lambda_;  // [1..max_k], main/lcm only

    void require_k(long long k, long long min_k) const;
};

inline ExponentSchedule schedule(Variant v, const PrimeTable& t) {
    return ExponentSchedule(v, t);
}

// Margins for the four explicit bounds
//   lambda_k > 1.45/log p_k (k >= 62),   lambda_k < 1.5/log p_k (k >= 1),
//   mu_k     > 1.65/log p_k (k >= 47),   mu_k     < 1.7/log p_k (k >= 1),
// checked directly for every k <= k_max.  For p_k > 2000 each bound is also
// re-derived through the Rosser-Schoenfeld Mertens-product estimates, with
// both legs of that route reported.
std::vector<MarginReport> verify_lemma_primeineq(const PrimeTable& t, long long k_max);

// Margins of lambda_main(k) <= 3 log(k)/k for 2 <= k <= 38, the range where
// the strong-variant theorem reduces to the main one.
std::vector<MarginReport> verify_strong_base(const PrimeTable& t);

} // namespace kprim
