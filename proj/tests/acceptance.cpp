// Acceptance suite: every numeric guarantee the library makes, each run
// at its stated tolerance with one pass/fail line.  Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "kprim/analytic.hpp"
#include "kprim/exponents.hpp"
#include "kprim/lab.hpp"
#include "kprim/primes.hpp"
#include "kprim/primitivity.hpp"
#include "kprim/search.hpp"
#include "kprim/verify.hpp"
#include "oracles.hpp"

using namespace kprim;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int id, std::string label, double budget_s)
        : id_(id), label_(std::move(label)), budget_s_(budget_s),
          start_(std::chrono::steady_clock::now()) {}

    void finish(bool ok, const std::string& detail = "") {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        const bool in_time = secs < budget_s_;
        const bool pass = ok && in_time;
        if (!pass) ++failures;
        std::printf("%s criterion %2d: %s (%.2fs / %.0fs)%s%s\n", pass ? "PASS" : "FAIL", id_,
                    label_.c_str(), secs, budget_s_, detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
    }

private:
    int id_;
    std::string label_;
    double budget_s_;
    std::chrono::steady_clock::time_point start_;
};

bool reports_pass(const std::vector<MarginReport>& rs, std::string* why) {
    for (const auto& r : rs)
        if (r.applicable && !r.pass) {
            *why = "k=" + std::to_string(r.k) + " " + r.claim;
            return false;
        }
    return true;
}

} // namespace

int main() {
    const PrimeTable table(1'000'000);
    std::string why;

    {
        Criterion c(1, "tau_1 = 1.1403 +- 5e-4", 2.0);
        const double tau = solve_tau1();
        c.finish(std::fabs(tau - 1.1403) <= 5e-4, "tau1 = " + std::to_string(tau));
    }

    {
        Criterion c(2, "sum 1/(p log p) in [1.6356, 1.6376]", 30.0);
        const double v = erdos_constant();
        c.finish(v >= 1.6356 && v <= 1.6376, "value = " + std::to_string(v));
    }

    {
        Criterion c(3, "exponent bounds: direct to p_k <= 2000, closed form to 1e5", 10.0);
        const long long k_max = table.count_leq(100000.0);
        const auto rs = verify_lemma_primeineq(table, k_max);
        bool ok = reports_pass(rs, &why);
        // both routes must actually be present
        long long direct = 0, closed = 0;
        for (const auto& r : rs)
            (r.claim.find("rosser") != std::string::npos ? closed : direct) += 1;
        ok = ok && direct == 4 * k_max && closed == 4 * (k_max - 303);
        c.finish(ok, why);
    }

    {
        Criterion c(4, "log-weighted prime sum sandwich on the (x, lambda) grid", 5.0);
        const auto rs = check_prime_log_sum_sandwich(
            table, {41, 100, 1000, 10000, 100000},
            {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
        c.finish(reports_pass(rs, &why), why);
    }

    {
        Criterion c(5, "S(p_k) < 0 for 3<=k<=199 and < -0.015/log p_k to 1000 (main)", 5.0);
        const auto rs = claim2_check(table, Variant::main, 3, 1000);
        c.finish(reports_pass(rs, &why), why);
    }

    {
        Criterion c(6, "S(p_k) < 0 for 2<=k<=199 and < -0.035/log p_k to 1000 (lcm)", 5.0);
        const auto rs = claim2_check(table, Variant::lcm, 2, 1000);
        c.finish(reports_pass(rs, &why), why);
    }

    {
        Criterion c(7, "smooth tail + S(p_nu+1) < 0 on the numeric ranges", 60.0);
        const auto main_rs = i_bound_check(table, Variant::main, 3, 199);
        const auto lcm_rs = i_bound_check(table, Variant::lcm, 2, 199);
        const bool ok = reports_pass(main_rs, &why) && reports_pass(lcm_rs, &why);
        c.finish(ok, why);
    }

    {
        Criterion c(8, "strong goal inequality and sub-bounds for 39<=k<=1000", 10.0);
        const auto rs = strong_goal_check(table, 39, 1000);
        c.finish(reports_pass(rs, &why), why);
    }

    {
        Criterion c(9, "predicates match the naive oracle on 1000 seeded sets", 120.0);
        std::mt19937_64 rng(424242);
        long long mismatches = 0;
        for (int it = 0; it < 1000; ++it) {
            std::vector<std::int64_t> vals;
            const int size = 2 + static_cast<int>(rng() % 6);
            for (int i = 0; i < size; ++i)
                vals.push_back(2 + static_cast<std::int64_t>(rng() % 59));
            const CandidateSet a(vals);
            const int k = 1 + static_cast<int>(rng() % 3);
            const auto values = a.values();
            if (is_k_primitive(a, k).primitive != oracle::naive_k_primitive(values, k))
                ++mismatches;
            if (is_strongly_k_primitive(a, k).primitive !=
                oracle::naive_strongly_k_primitive(values, k))
                ++mismatches;
            if (is_lcm_k_primitive(a, k).primitive !=
                oracle::naive_lcm_k_primitive(values, k))
                ++mismatches;
        }
        c.finish(mismatches == 0, "mismatches = " + std::to_string(mismatches));
    }

    {
        Criterion c(10, "primes maximal: lambda=1.2 k=1 to N=30; lambda=0.8 k=2 to N=24",
                    300.0);
        bool ok = true;
        for (int n = 2; n <= 30 && ok; ++n) {
            const SearchResult r = max_weighted_sum(n, 1.2, 1, Variant::main, 1'000'000'000);
            std::vector<std::int64_t> primes;
            for (std::int64_t p : table.primes()) {
                if (p > n) break;
                primes.push_back(p);
            }
            if (!r.optimal || r.best_set != primes) {
                ok = false;
                why = "N=" + std::to_string(n) + " lambda=1.2";
            }
        }
        for (int n = 2; n <= 24 && ok; ++n) {
            const SearchResult r = max_weighted_sum(n, 0.8, 2, Variant::main, 1'000'000'000);
            if (!r.optimal ||
                std::fabs(r.best_value - r.prime_value) > 1e-12 * r.prime_value) {
                ok = false;
                why = "N=" + std::to_string(n) + " lambda=0.8";
            }
        }
        c.finish(ok, why);
    }

    {
        Criterion c(11, "small-support conclusions, exhaustive over [2..50], k in {2,3}",
                    60.0);
        const LabSuiteResult r = lab_ysmall(50);
        c.finish(r.pass, "sets checked = " + std::to_string(r.trials) +
                             (r.first_failure.empty() ? "" : "; " + r.first_failure));
    }

    {
        Criterion c(12, "derived maps valid on 500 seeded trials each", 60.0);
        const LabSuiteResult a = lab_derive_map_lcm(500, 31337);
        const LabSuiteResult b = lab_derive_map_strong(500, 31338);
        const bool ok = a.pass && b.pass;
        c.finish(ok, "lcm trials = " + std::to_string(a.trials) +
                         ", strong trials = " + std::to_string(b.trials) +
                         (a.first_failure.empty() ? "" : "; " + a.first_failure) +
                         (b.first_failure.empty() ? "" : "; " + b.first_failure));
    }

    {
        Criterion c(13, "dominance transport: 1e4 seeded trials, no counterexamples", 60.0);
        const MonotoneReport r = monotone_exponent_property(10000, 1);
        c.finish(r.pass, "non-vacuous = " + std::to_string(r.hypothesis_held) +
                             (r.first_counterexample.empty() ? ""
                                                             : "; " + r.first_counterexample));
    }

    std::printf("%s: %d of 13 criteria failed\n", failures == 0 ? "ALL PASS" : "RESULT",
                failures);
    return failures == 0 ? 0 : 1;
}
