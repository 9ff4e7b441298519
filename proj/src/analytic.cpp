#include "kprim/analytic.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kprim/primes.hpp"

namespace kprim {

void Precision::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1e-4))
        throw std::domain_error("Precision.rel_tol must lie in (0, 1e-4)");
    if (max_terms <= 0) throw std::domain_error("Precision.max_terms must be positive");
    if (!(bisect_tol > 0.0)) throw std::domain_error("Precision.bisect_tol must be positive");
}

namespace {

// B_{2j} / (2j)!
constexpr std::array<double, 13> kBernoulliOverFact = {
    1.0,
    0.083333333333333333333,
    -0.0013888888888888888889,
    0.000033068783068783068783,
    -8.2671957671957671958e-07,
    2.0876756987868098979e-08,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.1748686985580618730e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
};

constexpr int kEulerMaclaurinCutoff = 64;

// Bernoulli tail of the Euler-Maclaurin expansion at cutoff M; always at
// least four correction terms, more until they stop mattering.
double bernoulli_tail(double s, int M) {
    double scp = s;                                    // (s)(s+1)...(s+2j-2)
    double pcp = std::pow(double(M), -s) / double(M);  // M^{-s-2j+1}
    double acc = 0.0;
    for (std::size_t j = 1; j < kBernoulliOverFact.size(); ++j) {
        const double delta = kBernoulliOverFact[j] * scp * pcp;
        acc += delta;
        if (j >= 4 && std::fabs(delta) < 1e-17 * (1.0 + std::fabs(acc))) break;
        scp *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        pcp /= double(M) * double(M);
    }
    return acc;
}

// zeta(s) for s > 1, no pole guard (internal use close to s = 1).  For
// large s every correction underflows harmlessly and the head is the
// whole answer.
double zeta_unchecked(double s) {
    const int M = kEulerMaclaurinCutoff;
    double head = 0.0;
    for (int n = M - 1; n >= 1; --n) head += std::pow(double(n), -s);
    const double ms = std::pow(double(M), -s);
    return head + ms * double(M) / (s - 1.0) + 0.5 * ms + bernoulli_tail(s, M);
}

// (s-1) * zeta(s), continuous through s = 1 (value 1 there).
double zeta_times_sm1(double s) {
    const int M = kEulerMaclaurinCutoff;
    double head = 0.0;
    for (int n = M - 1; n >= 1; --n) head += std::pow(double(n), -s);
    const double ms = std::pow(double(M), -s);
    const double finite = head + 0.5 * ms + bernoulli_tail(s, M);
    return (s - 1.0) * finite + ms * double(M);
}

// built per call (it is tiny) so concurrent callers share no state
std::vector<int> moebius_table(int n_max) {
    std::vector<int> mu(n_max + 1, 1);
    std::vector<bool> sieved(n_max + 1, false);
    for (int p = 2; p <= n_max; ++p) {
        if (sieved[p]) continue;
        for (int m = p; m <= n_max; m += p) {
            sieved[m] = m != p;
            mu[m] = -mu[m];
        }
        const long long p2 = 1LL * p * p;
        for (long long m = p2; m <= n_max; m += p2) mu[m] = 0;
    }
    return mu;
}

// prime zeta without the pole guard
double prime_zeta_unchecked(double s, const Precision& prec) {
    const auto& mu = moebius_table(prec.max_terms);
    double acc = 0.0;
    for (int n = 1; n <= prec.max_terms; ++n) {
        if (mu[n] == 0) continue;
        const double ns = double(n) * s;
        if (ns > 740.0) break;  // log zeta(ns) ~ 2^{-ns} underflows
        const double lz = (ns >= 40.0) ? std::log1p(zeta_unchecked(ns) - 1.0)
                                       : std::log(zeta_unchecked(ns));
        const double term = double(mu[n]) / double(n) * lz;
        acc += term;
        if (n > 1 && std::fabs(term) < prec.rel_tol * std::fabs(acc)) break;
    }
    return acc;
}

void require_above_pole(double s) {
    if (!(s > 1.0 + 1e-6))
        throw std::domain_error("argument too close to the s = 1 pole");
}

// adaptive Simpson with absolute tolerance
double simpson_rule(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double m, double fm, double whole,
                            double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_rule(a, fa, flm, m, fm);
    const double right = simpson_rule(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, simpson_rule(a, fa, fm, b, fb),
                                tol, 40);
}

} // namespace

double zeta(double s, const Precision& prec) {
    prec.validate();
    require_above_pole(s);
    return zeta_unchecked(s);
}

double prime_zeta(double s, const Precision& prec) {
    prec.validate();
    require_above_pole(s);
    return prime_zeta_unchecked(s, prec);
}

double solve_tau1(const Precision& prec) {
    prec.validate();
    const auto g = [&](double t) {
        return prime_zeta_unchecked(t, prec) - 1.0 -
               std::sqrt(1.0 - prime_zeta_unchecked(2.0 * t, prec));
    };
    double lo = 1.05, hi = 1.30;
    double glo = g(lo), ghi = g(hi);
    if (!(glo > 0.0 && ghi < 0.0))
        throw std::runtime_error("no sign change on [1.05, 1.30]; prime_zeta is defective");
    while (hi - lo > prec.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double erdos_constant(const Precision& prec, long long X) {
    prec.validate();
    if (X < 2) throw std::domain_error("erdos_constant requires X >= 2");
    const PrimeTable table(X);

    std::vector<double> logp;
    logp.reserve(table.count());
    double head = 0.0;
    for (std::int64_t p : table.primes()) {
        const double lp = std::log(double(p));
        logp.push_back(lp);
        head += 1.0 / (double(p) * lp);
    }

    const auto sum_px = [&](double s) {
        double acc = 0.0;
        for (std::size_t i = logp.size(); i-- > 0;) acc += std::exp(-s * logp[i]);
        return acc;
    };

    // moebius part of P(s) with the log zeta(s) term removed
    const auto mu = moebius_table(prec.max_terms);
    const auto moebius_rest = [&](double s) {
        double acc = 0.0;
        for (int n = 2; n <= prec.max_terms; ++n) {
            if (mu[n] == 0) continue;
            const double ns = double(n) * s;
            if (ns > 740.0) break;
            const double lz = (ns >= 40.0) ? std::log1p(zeta_unchecked(ns) - 1.0)
                                           : std::log(zeta_unchecked(ns));
            const double term = double(mu[n]) / double(n) * lz;
            acc += term;
            if (std::fabs(term) < 1e-18) break;
        }
        return acc;
    };

    // On [1,2] split off the -log(s-1) singularity, whose integral is exact:
    //   P(s) - S_X(s) = g(s) - log(s-1),   int_1^2 -log(s-1) ds = 1,
    // with g(s) = log((s-1) zeta(s)) + moebius_rest(s) - S_X(s) smooth at 1.
    const auto g_smooth = [&](double s) {
        return std::log(zeta_times_sm1(s)) + moebius_rest(s) - sum_px(s);
    };
    const double part_a = adaptive_simpson(g_smooth, 1.0, 2.0, 1e-9) + 1.0;

    // past s = 2 the integrand is smooth and tiny; the remainder beyond 4 is
    // below sum_{p>X} p^{-4}/log p < 1e-16 for X >= 1e4
    const auto f_plain = [&](double s) { return prime_zeta_unchecked(s, prec) - sum_px(s); };
    const double part_b = adaptive_simpson(f_plain, 2.0, 4.0, 1e-10);

    return head + part_a + part_b;
}

std::map<std::string, double> named_constants() {
    return {
        {"e_gamma", 1.7810724179901979},
        {"euler_gamma", 0.5772156649015329},
        {"tau2_lower", 0.5},
        {"tau2_upper", 0.7983},
        {"clp_lambda", 0.7983},
    };
}

} // namespace kprim
