#pragma once

#include <map>
#include <string>

namespace kprim {

// Tolerances for the analytic routines.
struct Precision {
    double rel_tol = 1e-10;   // series / quadrature relative target
    int max_terms = 256;      // cap on Moebius series terms
    double bisect_tol = 1e-8; // root bracket width

    void validate() const;
};

// Riemann zeta at real s > 1, Euler-Maclaurin (direct sum to a cutoff plus
// a Bernoulli tail).  Rejects s within 1e-6 of the pole.
double zeta(double s, const Precision& prec = {});

// Prime zeta P(s) = sum_p p^{-s}, via P(s) = sum_{n>=1} mu(n)/n log zeta(ns).
double prime_zeta(double s, const Precision& prec = {});

// The unique real root of  P(t) = 1 + sqrt(1 - P(2t)),  located by bisection
// on [1.05, 1.30] after verifying a sign change.
double solve_tau1(const Precision& prec = {});

// sum_p 1/(p log p): direct sum over p <= X plus the exact tail identity
// sum_{p>X} 1/(p log p) = int_1^inf (P(s) - sum_{p<=X} p^{-s}) ds.
double erdos_constant(const Precision& prec = {}, long long X = 100'000);

// Fixed reference constants.
std::map<std::string, double> named_constants();

} // namespace kprim
