#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kprim/exponents.hpp"
#include "kprim/primes.hpp"
#include "kprim/report.hpp"
#include "kprim/variant.hpp"

namespace kprim {

// S(Y) = sum_{p<=Y} ((p^{-2 lam} - p^{-2 lam'}) - (p^{-lam} - p^{-lam'})),
// ascending primes.  Requires 0 < lam <= lam'.
double s_of_y(const PrimeTable& t, double Y, double lam, double lam_prime);

// The smooth-member tail at level k: lam/(lam - 1/k - theta) *
// p_{nu+1}^{-nu (lam - 1/k - theta)} for main/lcm; the strong variant
// instead uses p_{k+1} and adds the small-member sum over the first k
// primes.  Requires lam > 1/k + theta.
double smooth_tail_term(long long k, const ExponentSchedule& sched, const PrimeTable& t);

// Monotonicity of j -> S(p_j) for j >= k at the level-k exponents, plus
// the term condition p_k^{-lam(k)} <= 1/3 that drives it.
std::vector<MarginReport> claim1_check(const PrimeTable& t, long long k, long long j_max,
                                       Variant variant);

// S(p_k) < 0 on the directly-verified range (k <= 199) and
// S(p_k) < -0.015/log p_k (main) resp. -0.035/log p_k (lcm) for k >= 200.
std::vector<MarginReport> claim2_check(const PrimeTable& t, Variant variant, long long k_from,
                                       long long k_to);

// smooth tail + S(p_{nu+1}) < 0, the worst case Y = p_{nu+1}.
std::vector<MarginReport> i_bound_check(const PrimeTable& t, Variant variant, long long k_from,
                                        long long k_to);

// The k >= 200 closed-form leg: lam - 1/k - theta > c/log p_k,
// lam/(lam - 1/k - theta) < 1.05, tail <= 1.05 e^{-c p_k} (in logs), and
// the latter below the S(p_k) margin; c = 1.4 (main) / 1.6 (lcm).
std::vector<MarginReport> asymptotic_leg_check(const PrimeTable& t, Variant variant,
                                               long long k_from, long long k_to);

// The strong-variant goal inequality
//   sum_{p<=p_k} p^{-nu lam} + lam/(lam-1/k-theta) p_{k+1}^{-nu(lam-1/k-theta)}
//     < lam' theta p_{k+1}^{1-lam'} (1 - 1/log p_{k+1})
// for k >= 39, together with every intermediate bound of its derivation.
std::vector<MarginReport> strong_goal_check(const PrimeTable& t, long long k_from,
                                            long long k_to);

// Property test of prefix-sum dominance transport: whenever
// I_lam(x) >= 0 at every x for sampled A, B, the same holds at every
// sampled lam' > lam.
struct MonotoneReport {
    long long trials = 0;
    std::uint64_t seed = 0;
    long long hypothesis_held = 0;  // non-vacuous trials
    long long counterexamples = 0;
    std::string first_counterexample;
    bool pass = false;
};

MonotoneReport monotone_exponent_property(long long trials, std::uint64_t seed);

} // namespace kprim
