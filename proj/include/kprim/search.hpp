#pragma once

#include <cstdint>
#include <vector>

#include "kprim/primes.hpp"
#include "kprim/primitivity.hpp"
#include "kprim/report.hpp"
#include "kprim/variant.hpp"

namespace kprim {

struct SearchResult {
    std::vector<std::int64_t> best_set;
    double best_value = 0.0;
    double prime_value = 0.0;
    bool optimal = false;
    long long nodes = 0;
};

// Exact maximization of sum n^{-lam} over subsets of [2..N] that are
// k-primitive in the given notion.  Branch and bound in weight order with
// the plain suffix-sum bound; the prime set seeds the incumbent (it is
// feasible for every notion and k).  Runs are deterministic in
// (N, lam, k, variant, budget); exceeding the node budget returns the
// incumbent with optimal = false.
SearchResult max_weighted_sum(int N, double lam, int k, Variant variant,
                              long long budget = 10'000'000);

struct TauBracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Bisection bracket for the finite-N critical exponent: the smallest
// lambda at which the primes are maximal among k-primitive subsets of
// [2..N] at every cutoff x <= N.  Checking all cutoffs is what makes the
// bisected predicate monotone in lambda.
TauBracket bracket_tau(int N, int k, Variant variant, double tol);

// The lower-bound construction: the primes in (x^{1/(k+1)}, x] together
// with a greedily chosen family of products of k+1 distinct primes
// <= x^{1/(k+1)}, kept k-primitive throughout, aiming for
// floor(x^{2/(k+1)} / (8 (k log x)^2)) products.
struct CgsReport {
    std::int64_t x = 0;
    int k = 0;
    long long primes_in_range = 0;
    long long target_products = 0;
    long long achieved_products = 0;
    bool target_met = false;
    std::vector<std::int64_t> products;         // the chosen S
    std::vector<std::int64_t> members() const;  // full set (primes + S)
    std::vector<std::int64_t> range_primes;
    // at each requested lambda: sum over the construction vs. sum over
    // all primes <= x (a beat is not asserted; the sign is recorded)
    std::vector<MarginReport> comparisons;
};

CgsReport cgs_construct(std::int64_t x, int k, const PrimeTable& t,
                        const std::vector<double>& lambdas = {});

} // namespace kprim
