#include "kprim/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kprim {

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit) {
    if (limit < 2) throw std::domain_error("sieve limit must be >= 2");
    if (limit > kLimitCap)
        throw std::length_error("sieve limit " + std::to_string(limit) +
                                " exceeds cap " + std::to_string(kLimitCap));

    // plain sieve of Eratosthenes over odd numbers
    const std::size_t n = static_cast<std::size_t>(limit);
    std::vector<bool> composite((n + 1) / 2, false);  // index i -> 2i+1
    for (std::size_t i = 1; (2 * i + 1) * (2 * i + 1) <= n; ++i) {
        if (composite[i]) continue;
        const std::size_t p = 2 * i + 1;
        for (std::size_t j = (p * p - 1) / 2; j < composite.size(); j += p)
            composite[j] = true;
    }
    primes_.push_back(2);
    for (std::size_t i = 1; 2 * i + 1 <= n; ++i)
        if (!composite[i]) primes_.push_back(static_cast<std::int64_t>(2 * i + 1));

    theta_prefix_.reserve(primes_.size());
    double acc = 0.0;
    for (std::int64_t p : primes_) {
        acc += std::log(static_cast<double>(p));
        theta_prefix_.push_back(acc);
    }
}

std::int64_t PrimeTable::nth_prime(std::int64_t k) const {
    if (k < 1) throw std::out_of_range("prime index must be >= 1");
    if (static_cast<std::size_t>(k) > primes_.size())
        throw std::out_of_range("p_" + std::to_string(k) + " is beyond the table (limit " +
                                std::to_string(limit_) + ", " + std::to_string(primes_.size()) +
                                " primes); sieve at least past p_" + std::to_string(k));
    return primes_[static_cast<std::size_t>(k - 1)];
}

void PrimeTable::require_in_range(double x) const {
    if (!(x <= static_cast<double>(limit_)))
        throw std::out_of_range("x = " + std::to_string(x) + " exceeds sieve limit " +
                                std::to_string(limit_));
}

std::int64_t PrimeTable::count_leq(double x) const {
    if (x < 2.0) return 0;
    const std::int64_t xi = static_cast<std::int64_t>(std::floor(x));
    auto it = std::upper_bound(primes_.begin(), primes_.end(), xi);
    return static_cast<std::int64_t>(it - primes_.begin());
}

double PrimeTable::chebyshev_theta(double x) const {
    if (x < 0) throw std::domain_error("theta(x) requires x >= 0");
    require_in_range(x);
    const std::int64_t idx = count_leq(x);
    return idx == 0 ? 0.0 : theta_prefix_[static_cast<std::size_t>(idx - 1)];
}

double PrimeTable::prime_power_sum(double x, double lam) const {
    require_in_range(x);
    const std::int64_t idx = count_leq(x);
    double s = 0.0;
    for (std::int64_t i = 0; i < idx; ++i)
        s += std::pow(static_cast<double>(primes_[static_cast<std::size_t>(i)]), -lam);
    return s;
}

double PrimeTable::prime_log_sum(double x, double lam, bool relaxed) const {
    if (!relaxed && !(lam > 0.0 && lam < 1.0))
        throw std::domain_error("prime_log_sum requires 0 < lam < 1 (pass relaxed to override)");
    require_in_range(x);
    const std::int64_t idx = count_leq(x);
    double s = 0.0;
    for (std::int64_t i = 0; i < idx; ++i) {
        const double p = static_cast<double>(primes_[static_cast<std::size_t>(i)]);
        s += std::log(p) * std::pow(p, -lam);
    }
    return s;
}

std::vector<MarginReport> check_rs_theta_bounds(const PrimeTable& t,
                                                const std::vector<double>& xs) {
    std::vector<MarginReport> out;
    out.reserve(2 * xs.size());
    for (double x : xs) {
        const double th = t.chebyshev_theta(x);

        MarginReport lo = check_less(0, Variant::main, "x(1 - 1/log x) < theta(x)",
                                     x * (1.0 - 1.0 / std::log(x)), th);
        lo.term("x", x).term("theta", th);
        if (x < 41.0) {
            lo.applicable = false;  // bound only asserted for x >= 41
            lo.pass = false;
        }
        out.push_back(std::move(lo));

        MarginReport hi =
            check_less(0, Variant::main, "theta(x) < 1.01624 x", th, 1.01624 * x);
        hi.term("x", x).term("theta", th);
        out.push_back(std::move(hi));
    }
    return out;
}

std::vector<MarginReport> check_prime_log_sum_sandwich(const PrimeTable& t,
                                                       const std::vector<double>& xs,
                                                       const std::vector<double>& lams) {
    std::vector<MarginReport> out;
    for (double x : xs) {
        for (double lam : lams) {
            if (!(x >= 41.0) || !(lam > 0.0 && lam < 1.0))
                throw std::domain_error("sandwich grid requires x >= 41 and 0 < lam < 1");
            const double sum = t.prime_log_sum(x, lam);
            const double x1l = std::pow(x, 1.0 - lam);
            MarginReport lo = check_leq(0, Variant::main,
                                        "x^(1-lam)(1 - 1/log x) <= sum log(p)/p^lam",
                                        x1l * (1.0 - 1.0 / std::log(x)), sum);
            lo.term("x", x).term("lambda", lam).term("sum", sum);
            out.push_back(std::move(lo));
            MarginReport hi = check_leq(0, Variant::main,
                                        "sum log(p)/p^lam <= 1.01624/(1-lam) x^(1-lam)",
                                        sum, 1.01624 / (1.0 - lam) * x1l);
            hi.term("x", x).term("lambda", lam).term("sum", sum);
            out.push_back(std::move(hi));
        }
    }
    return out;
}

} // namespace kprim
