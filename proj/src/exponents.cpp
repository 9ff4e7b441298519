#include "kprim/exponents.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kprim {

ExponentSchedule::ExponentSchedule(Variant v, const PrimeTable& t)
    : variant_(v), table_(&t), max_k_(static_cast<long long>(t.count())) {
    if (v == Variant::strong) return;  // closed form, nothing to accumulate
    const double front = (v == Variant::main) ? 2.625 : 3.0;
    lambda_.assign(static_cast<std::size_t>(max_k_) + 1, 0.0);
    double prod = 1.0;
    for (long long k = 1; k <= max_k_; ++k) {
        prod *= 1.0 - 1.0 / static_cast<double>(table_->nth_prime(k));
        lambda_[static_cast<std::size_t>(k)] = front * prod;
    }
    if (v == Variant::main) {
        lambda_[1] = 1.2;
        lambda_[2] = 0.8;
    } else {
        lambda_[1] = 8.0 / 7.0;
    }
}

void ExponentSchedule::require_k(long long k, long long min_k) const {
    if (k < min_k)
        throw std::domain_error("schedule index k = " + std::to_string(k) +
                                " below first defined index " + std::to_string(min_k));
    if (variant_ != Variant::strong && k > max_k_)
        throw std::out_of_range("schedule index k = " + std::to_string(k) +
                                " beyond prime table (max " + std::to_string(max_k_) + ")");
}

double ExponentSchedule::lambda(long long k) const {
    if (variant_ == Variant::strong) {
        require_k(k, 2);
        return 3.0 * std::log(static_cast<double>(k)) / static_cast<double>(k);
    }
    require_k(k, 1);
    return lambda_[static_cast<std::size_t>(k)];
}

double ExponentSchedule::theta(long long k) const {
    if (variant_ == Variant::strong) {
        require_k(k, 3);
        return 1.0 - lambda(k) / lambda(k - 1);
    }
    require_k(k, 1);
    const long long special = (variant_ == Variant::main) ? 3 : 2;
    if (k == special) return 0.125;
    return 1.0 / static_cast<double>(table_->nth_prime(k));
}

double ExponentSchedule::nu(long long k) const { return 1.0 / theta(k); }

long long ExponentSchedule::nu_int(long long k) const {
    if (variant_ == Variant::strong)
        throw std::domain_error("nu is not integral for the strong schedule");
    const long long special = (variant_ == Variant::main) ? 3 : 2;
    return k == special ? 8 : table_->nth_prime(k);
}

namespace {

// gamma = 0.5772156649...; the route truncates it in the safe direction
// for each bound
constexpr double kGammaHi = 0.57722;
constexpr double kGammaLo = 0.57721;

void push_bound_reports(std::vector<MarginReport>& out, const PrimeTable& t, Variant v,
                        long long k, double value, const char* name, double lo_const,
                        long long lo_from, double hi_const, double front) {
    const double pk = static_cast<double>(t.nth_prime(k));
    const double lpk = std::log(pk);

    {
        MarginReport r = check_less(k, v,
                                    std::string(name) + " > " + std::to_string(lo_const) +
                                        "/log p_k (direct)",
                                    lo_const / lpk, value);
        r.term("p_k", pk).term(name, value).term("target", lo_const / lpk);
        if (k < lo_from) {
            r.applicable = false;  // lower bound not claimed this low
            r.pass = false;
        }
        out.push_back(std::move(r));
    }
    {
        MarginReport r = check_less(k, v,
                                    std::string(name) + " < " + std::to_string(hi_const) +
                                        "/log p_k (direct)",
                                    value, hi_const / lpk);
        r.term("p_k", pk).term(name, value).term("target", hi_const / lpk);
        out.push_back(std::move(r));
    }

    if (pk <= 2000.0) return;

    // closed-form route: front * e^{-gamma} / log p_k * (1 -+ 1/(2 log^2 p_k))
    // sandwiches the value, and the bound side already clears the target
    const double rs_lo = front * std::exp(-kGammaHi) / lpk * (1.0 - 1.0 / (2.0 * lpk * lpk));
    const double rs_hi = front * std::exp(-kGammaLo) / lpk * (1.0 + 1.0 / (2.0 * lpk * lpk));
    {
        MarginReport r;
        r.k = k;
        r.variant = v;
        r.claim = std::string(name) + " > " + std::to_string(lo_const) +
                  "/log p_k (rosser-schoenfeld route)";
        r.term("p_k", pk).term(name, value).term("rs_lower", rs_lo).term("target",
                                                                         lo_const / lpk);
        r.margin = rs_lo - lo_const / lpk;
        r.pass = leq_with_slack(rs_lo, value) && strictly_less(lo_const / lpk, rs_lo);
        out.push_back(std::move(r));
    }
    {
        MarginReport r;
        r.k = k;
        r.variant = v;
        r.claim = std::string(name) + " < " + std::to_string(hi_const) +
                  "/log p_k (rosser-schoenfeld route)";
        r.term("p_k", pk).term(name, value).term("rs_upper", rs_hi).term("target",
                                                                         hi_const / lpk);
        r.margin = hi_const / lpk - rs_hi;
        r.pass = leq_with_slack(value, rs_hi) && strictly_less(rs_hi, hi_const / lpk);
        out.push_back(std::move(r));
    }
}

} // namespace

std::vector<MarginReport> verify_lemma_primeineq(const PrimeTable& t, long long k_max) {
    if (k_max < 1 || k_max > static_cast<long long>(t.count()))
        throw std::out_of_range("k_max beyond prime table");
    const ExponentSchedule lam(Variant::main, t);
    const ExponentSchedule mu(Variant::lcm, t);

    std::vector<MarginReport> out;
    out.reserve(static_cast<std::size_t>(4 * k_max));
    for (long long k = 1; k <= k_max; ++k) {
        push_bound_reports(out, t, Variant::main, k, lam.lambda(k), "lambda", 1.45, 62,
                           1.5, 2.625);
        push_bound_reports(out, t, Variant::lcm, k, mu.lambda(k), "mu", 1.65, 47, 1.7,
                           3.0);
    }
    return out;
}

std::vector<MarginReport> verify_strong_base(const PrimeTable& t) {
    const ExponentSchedule lam(Variant::main, t);
    std::vector<MarginReport> out;
    for (long long k = 2; k <= 38; ++k) {
        const double rhs = 3.0 * std::log(static_cast<double>(k)) / static_cast<double>(k);
        MarginReport r =
            check_leq(k, Variant::strong, "lambda_main(k) <= 3 log(k)/k", lam.lambda(k), rhs);
        r.term("lambda_main", lam.lambda(k)).term("3log(k)/k", rhs);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace kprim
