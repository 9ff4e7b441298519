#pragma once

#include <cstdint>
#include <vector>

#include "kprim/report.hpp"

namespace kprim {

// Sieve-backed prime table: primes up to an inclusive limit, 1-indexed
// access to p_k, and prefix sums of log p for Chebyshev theta queries.
// Immutable after construction; concurrent reads are safe.
class PrimeTable {
public:
    static constexpr std::int64_t kLimitCap = 100'000'000;

    // limit >= 2 required; limit > kLimitCap rejected.
    explicit PrimeTable(std::int64_t limit);

    std::int64_t limit() const { return limit_; }
    const std::vector<std::int64_t>& primes() const { return primes_; }
    std::size_t count() const { return primes_.size(); }

    // p_k, 1-indexed (p_1 = 2).  Throws std::out_of_range past the table,
    // naming the limit that would be required.
    std::int64_t nth_prime(std::int64_t k) const;

    // Index of the largest prime <= x, 1-based; 0 if x < 2.
    std::int64_t count_leq(double x) const;

    // theta(x) = sum_{p<=x} log p, from the cached prefix; 0 for x < 2.
    double chebyshev_theta(double x) const;

    // sum_{p<=x} p^{-lam}, ascending primes.
    double prime_power_sum(double x, double lam) const;

    // sum_{p<=x} log(p) / p^{lam}.  The Rosser-Schoenfeld sandwich is only
    // claimed for 0 < lam < 1; other exponents require relaxed = true.
    double prime_log_sum(double x, double lam, bool relaxed = false) const;

private:
    std::int64_t limit_;
    std::vector<std::int64_t> primes_;
    std::vector<double> theta_prefix_;  // theta_prefix_[i] = sum_{j<=i} log primes_[j]

    void require_in_range(double x) const;
};

inline PrimeTable sieve(std::int64_t limit) { return PrimeTable(limit); }

// Margins for the explicit theta bounds x(1 - 1/log x) < theta(x) (x >= 41)
// and theta(x) < 1.01624 x (x > 0), per evaluation point.  The lower bound
// is reported not-applicable below 41.
std::vector<MarginReport> check_rs_theta_bounds(const PrimeTable& t,
                                                const std::vector<double>& xs);

// Margins for the sandwich
//   x^{1-lam} (1 - 1/log x) <= sum_{p<=x} log(p)/p^lam <= 1.01624/(1-lam) x^{1-lam}
// over a grid of (x, lam); claimed for x >= 41 and 0 < lam < 1.
std::vector<MarginReport> check_prime_log_sum_sandwich(const PrimeTable& t,
                                                       const std::vector<double>& xs,
                                                       const std::vector<double>& lams);

} // namespace kprim
