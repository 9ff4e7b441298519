#include "kprim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kprim {

namespace {

double s_term(double p, double lam, double lam_prime) {
    return (std::pow(p, -2.0 * lam) - std::pow(p, -2.0 * lam_prime)) -
           (std::pow(p, -lam) - std::pow(p, -lam_prime));
}

long long first_k(Variant v) { return v == Variant::main ? 3 : 2; }

void require_numeric_variant(Variant v, const char* who) {
    if (v == Variant::strong)
        throw std::domain_error(std::string(who) + " applies to the main/lcm variants");
}

// log of the smooth tail lam/ex * p^{-nu ex}; the tail itself underflows
// for large k, so comparisons happen in log space
double log_tail(double lam, double ex, double nu, double p) {
    return std::log(lam / ex) - nu * ex * std::log(p);
}

} // namespace

double s_of_y(const PrimeTable& t, double Y, double lam, double lam_prime) {
    if (!(lam > 0.0) || !(lam <= lam_prime))
        throw std::domain_error("s_of_y requires 0 < lam <= lam'");
    if (Y > static_cast<double>(t.limit()))
        throw std::out_of_range("s_of_y: Y exceeds the prime table");
    const std::int64_t idx = t.count_leq(Y);
    double s = 0.0;
    for (std::int64_t i = 1; i <= idx; ++i)
        s += s_term(static_cast<double>(t.nth_prime(i)), lam, lam_prime);
    return s;
}

double smooth_tail_term(long long k, const ExponentSchedule& sched, const PrimeTable& t) {
    const double lam = sched.lambda(k);
    const double theta = sched.theta(k);
    const double ex = lam - 1.0 / static_cast<double>(k) - theta;
    if (!(ex > 0.0))
        throw std::domain_error("smooth_tail_term inapplicable: lam <= 1/k + theta at k = " +
                                std::to_string(k));
    if (sched.variant() == Variant::strong) {
        const double nu = sched.nu(k);
        double small = 0.0;
        for (long long j = 1; j <= k; ++j)
            small += std::exp(-nu * lam * std::log(static_cast<double>(t.nth_prime(j))));
        const double pk1 = static_cast<double>(t.nth_prime(k + 1));
        return small + std::exp(log_tail(lam, ex, nu, pk1));
    }
    const long long nu = sched.nu_int(k);
    const double pn1 = static_cast<double>(t.nth_prime(nu + 1));
    return std::exp(log_tail(lam, ex, static_cast<double>(nu), pn1));
}

std::vector<MarginReport> claim1_check(const PrimeTable& t, long long k, long long j_max,
                                       Variant variant) {
    require_numeric_variant(variant, "claim1_check");
    if (k < first_k(variant))
        throw std::domain_error("claim1_check: k below the claimed range");
    if (j_max < k) throw std::domain_error("claim1_check: j_max must be >= k");

    const ExponentSchedule sched(variant, t);
    const double lam = sched.lambda(k);
    const double lam_prime = sched.lambda(k - 1);

    std::vector<MarginReport> out;
    {
        const double pk = static_cast<double>(t.nth_prime(k));
        MarginReport r = check_leq(k, variant, "p_k^-lam(k) <= 1/3", std::pow(pk, -lam),
                                   1.0 / 3.0);
        r.term("p_k", pk).term("lambda", lam);
        out.push_back(std::move(r));
    }

    double s = s_of_y(t, static_cast<double>(t.nth_prime(k)), lam, lam_prime);
    for (long long j = k; j < j_max; ++j) {
        const double p_next = static_cast<double>(t.nth_prime(j + 1));
        const double s_next = s + s_term(p_next, lam, lam_prime);
        MarginReport r = check_less(k, variant, "S(p_j+1) < S(p_j)", s_next, s);
        r.term("j", static_cast<double>(j)).term("S_j", s).term("S_j+1", s_next);
        out.push_back(std::move(r));
        s = s_next;
    }
    return out;
}

std::vector<MarginReport> claim2_check(const PrimeTable& t, Variant variant, long long k_from,
                                       long long k_to) {
    require_numeric_variant(variant, "claim2_check");
    if (k_from < first_k(variant))
        throw std::domain_error("claim2_check: k_from below the claimed range");
    const ExponentSchedule sched(variant, t);
    const double margin_const = variant == Variant::main ? 0.015 : 0.035;

    std::vector<MarginReport> out;
    for (long long k = k_from; k <= k_to; ++k) {
        const double pk = static_cast<double>(t.nth_prime(k));
        const double s = s_of_y(t, pk, sched.lambda(k), sched.lambda(k - 1));
        MarginReport r;
        if (k <= 199) {
            r = check_less(k, variant, "S(p_k) < 0", s, 0.0);
        } else {
            const double target = -margin_const / std::log(pk);
            r = check_less(k, variant,
                           "S(p_k) < -" + std::to_string(margin_const) + "/log p_k", s,
                           target);
            r.term("target", target);
        }
        r.term("p_k", pk).term("S", s).term("lambda", sched.lambda(k))
            .term("lambda_prime", sched.lambda(k - 1));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MarginReport> i_bound_check(const PrimeTable& t, Variant variant, long long k_from,
                                        long long k_to) {
    require_numeric_variant(variant, "i_bound_check");
    if (k_from < first_k(variant))
        throw std::domain_error("i_bound_check: k_from below the claimed range");
    const ExponentSchedule sched(variant, t);

    std::vector<MarginReport> out;
    for (long long k = k_from; k <= k_to; ++k) {
        const long long nu = sched.nu_int(k);
        const double pn1 = static_cast<double>(t.nth_prime(nu + 1));  // throws with the
                                                                      // required limit if small
        const double tail = smooth_tail_term(k, sched, t);
        const double s = s_of_y(t, pn1, sched.lambda(k), sched.lambda(k - 1));
        MarginReport r = check_less(k, variant, "tail + S(p_nu+1) < 0", tail + s, 0.0);
        r.term("nu", static_cast<double>(nu))
            .term("p_nu+1", pn1)
            .term("tail", tail)
            .term("S", s);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MarginReport> asymptotic_leg_check(const PrimeTable& t, Variant variant,
                                               long long k_from, long long k_to) {
    require_numeric_variant(variant, "asymptotic_leg_check");
    if (k_from < 200) throw std::domain_error("asymptotic_leg_check: k_from must be >= 200");
    const ExponentSchedule sched(variant, t);
    const double c = variant == Variant::main ? 1.4 : 1.6;
    const double margin_const = variant == Variant::main ? 0.015 : 0.035;

    std::vector<MarginReport> out;
    for (long long k = k_from; k <= k_to; ++k) {
        const double pk = static_cast<double>(t.nth_prime(k));
        const double lpk = std::log(pk);
        const double lam = sched.lambda(k);
        const double theta = sched.theta(k);
        const double ex = lam - 1.0 / static_cast<double>(k) - theta;
        {
            MarginReport r =
                check_less(k, variant, "lam - 1/k - theta > c/log p_k", c / lpk, ex);
            r.term("c", c).term("excess", ex).term("p_k", pk);
            out.push_back(std::move(r));
        }
        {
            MarginReport r = check_less(k, variant, "lam/(lam-1/k-theta) < 1.05", lam / ex,
                                        1.05);
            r.term("ratio", lam / ex);
            out.push_back(std::move(r));
        }
        const long long nu = sched.nu_int(k);
        const double pn1 = static_cast<double>(t.nth_prime(nu + 1));
        const double lt = log_tail(lam, ex, static_cast<double>(nu), pn1);
        const double lbound = std::log(1.05) - c * pk;
        {
            MarginReport r =
                check_less(k, variant, "log tail <= log(1.05) - c p_k", lt, lbound);
            r.term("log_tail", lt).term("log_bound", lbound);
            out.push_back(std::move(r));
        }
        {
            const double lmargin = std::log(margin_const) - std::log(lpk);
            MarginReport r = check_less(
                k, variant, "log(1.05) - c p_k < log(margin/log p_k)", lbound, lmargin);
            r.term("log_bound", lbound).term("log_margin", lmargin);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<MarginReport> strong_goal_check(const PrimeTable& t, long long k_from,
                                            long long k_to) {
    if (k_from < 39) throw std::domain_error("strong_goal_check: k_from must be >= 39");
    const ExponentSchedule sched(Variant::strong, t);

    std::vector<MarginReport> out;
    for (long long k = k_from; k <= k_to; ++k) {
        const double kd = static_cast<double>(k);
        const double logk = std::log(kd);
        const double lam = sched.lambda(k);
        const double lam_prime = sched.lambda(k - 1);
        const double theta = sched.theta(k);
        const double nu = sched.nu(k);
        const double ex = lam - 1.0 / kd - theta;
        const double pk = static_cast<double>(t.nth_prime(k));
        const double pk1 = static_cast<double>(t.nth_prime(k + 1));

        double small = 0.0;
        for (long long j = 1; j <= k; ++j)
            small += std::exp(-nu * lam * std::log(static_cast<double>(t.nth_prime(j))));
        const double tail = std::exp(log_tail(lam, ex, nu, pk1));
        const double left = small + tail;
        const double right =
            lam_prime * theta * std::pow(pk1, 1.0 - lam_prime) * (1.0 - 1.0 / std::log(pk1));

        auto push = [&](MarginReport r) { out.push_back(std::move(r)); };

        {
            MarginReport r = check_less(k, Variant::strong, "goal: left < right", left, right);
            r.term("small_sum", small).term("tail", tail).term("left", left).term("right",
                                                                                  right);
            push(std::move(r));
        }
        push(check_less(k, Variant::strong, "nu > k", kd, nu));
        push(check_less(k, Variant::strong, "nu lam > 3 log k", 3.0 * logk, nu * lam));
        push(check_less(k, Variant::strong, "small_sum < 2/k^2", small, 2.0 / (kd * kd)));
        push(check_less(k, Variant::strong, "lam/(lam-1/k-theta) < 1.23", lam / ex, 1.23));
        push(check_less(k, Variant::strong, "nu (lam-1/k-theta) > 3 log k - 2",
                        3.0 * logk - 2.0, nu * ex));
        push(check_less(k, Variant::strong, "tail < 1/k^2", tail, 1.0 / (kd * kd)));
        push(check_less(k, Variant::strong, "left < 3/k^2", left, 3.0 / (kd * kd)));
        push(check_less(k, Variant::strong, "lam' theta > 2 log k / k^2",
                        2.0 * logk / (kd * kd), lam_prime * theta));
        push(check_less(k, Variant::strong, "p_k+1^lam' < 4.4", std::pow(pk1, lam_prime),
                        4.4));
        push(check_less(k, Variant::strong, "right > 0.36 p_k+1 log k / k^2",
                        0.36 * pk1 * logk / (kd * kd), right));
        push(check_less(k, Variant::strong, "p_k > k log k", kd * logk, pk));
        push(check_less(k, Variant::strong, "right > 0.36 log^2 k / k",
                        0.36 * logk * logk / kd, right));
        push(check_less(k, Variant::strong, "3/k^2 < 0.36 log^2 k / k", 3.0 / (kd * kd),
                        0.36 * logk * logk / kd));
    }
    return out;
}

namespace {

// prefix differences of A against B at every element of their union;
// values beyond the largest element stay constant, so these are all the
// sign changes there are
std::vector<double> prefix_differences(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b, double lam) {
    std::set<std::int64_t> events(a.begin(), a.end());
    events.insert(b.begin(), b.end());
    std::vector<double> out;
    double ia = 0.0, ib = 0.0;
    std::size_t pa = 0, pb = 0;
    for (std::int64_t x : events) {
        while (pa < a.size() && a[pa] <= x) ia += std::pow(static_cast<double>(a[pa++]), -lam);
        while (pb < b.size() && b[pb] <= x) ib += std::pow(static_cast<double>(b[pb++]), -lam);
        out.push_back(ia - ib);
    }
    return out;
}

std::vector<std::int64_t> sample_set(std::mt19937_64& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    std::uniform_int_distribution<std::int64_t> val(2, 200);
    std::set<std::int64_t> s;
    const int target = size_dist(rng);
    while (static_cast<int>(s.size()) < target) s.insert(val(rng));
    return {s.begin(), s.end()};
}

} // namespace

MonotoneReport monotone_exponent_property(long long trials, std::uint64_t seed) {
    MonotoneReport rep;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> lam_dist(0.01, 2.0);

    for (long long it = 0; it < trials; ++it) {
        std::vector<std::int64_t> a = sample_set(rng, 8);
        std::vector<std::int64_t> b;
        switch (rng() % 3) {
            case 0:  // unrelated sets; usually a vacuous trial
                b = sample_set(rng, 8);
                break;
            case 1:  // b inside a: dominance holds term by term
                for (std::int64_t v : a)
                    if (rng() % 2) b.push_back(v);
                break;
            default:  // b elementwise >= a: dominance holds prefix by prefix
                for (std::int64_t v : a) {
                    const std::int64_t w =
                        std::min<std::int64_t>(200, v + static_cast<std::int64_t>(rng() % 20));
                    b.push_back(w);
                }
                std::sort(b.begin(), b.end());
                b.erase(std::unique(b.begin(), b.end()), b.end());
                break;
        }

        const double lam = lam_dist(rng);
        std::uniform_real_distribution<double> lam2_dist(lam, 2.0);
        const double lam_prime = lam2_dist(rng);

        bool hypothesis = true;
        for (double d : prefix_differences(a, b, lam))
            if (d < 0.0) {
                hypothesis = false;
                break;
            }
        if (!hypothesis) continue;  // vacuous
        ++rep.hypothesis_held;

        for (double d : prefix_differences(a, b, lam_prime)) {
            if (d < -1e-12) {
                ++rep.counterexamples;
                if (rep.first_counterexample.empty()) {
                    std::ostringstream os;
                    os << "lam=" << lam << " lam'=" << lam_prime << " A={";
                    for (std::int64_t v : a) os << v << ",";
                    os << "} B={";
                    for (std::int64_t v : b) os << v << ",";
                    os << "} I=" << d;
                    rep.first_counterexample = os.str();
                }
                break;
            }
        }
    }
    rep.pass = rep.counterexamples == 0;
    return rep;
}

} // namespace kprim
