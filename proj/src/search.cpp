#include "kprim/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace kprim {

namespace {

double weight_of(std::int64_t n, double lam) { return std::pow(static_cast<double>(n), -lam); }

// ascending-value accumulation, so equal sets always produce the same double
double set_value(const std::vector<std::int64_t>& sorted_values, double lam) {
    double s = 0.0;
    for (std::int64_t n : sorted_values) s += weight_of(n, lam);
    return s;
}

} // namespace

SearchResult max_weighted_sum(int N, double lam, int k, Variant variant, long long budget) {
    if (N < 2 || N > 100)
        throw std::domain_error("max_weighted_sum: N must lie in [2, 100] (exact mode)");
    if (lam < 0.0) throw std::domain_error("max_weighted_sum: lambda must be >= 0");
    if (k < 1) throw std::domain_error("max_weighted_sum: k must be >= 1");

    std::vector<FactoredInt> cands;
    cands.reserve(static_cast<std::size_t>(N - 1));
    std::vector<std::int64_t> primes_leq;
    for (int n = 2; n <= N; ++n) {
        cands.push_back(factor(n));
        if (!cands.back().is_composite()) primes_leq.push_back(n);
    }
    // weight descending; ties (lambda = 0) by value ascending
    std::stable_sort(cands.begin(), cands.end(), [&](const FactoredInt& a, const FactoredInt& b) {
        const double wa = weight_of(a.n, lam), wb = weight_of(b.n, lam);
        if (wa != wb) return wa > wb;
        return a.n < b.n;
    });

    std::vector<double> suffix(cands.size() + 1, 0.0);
    for (std::size_t i = cands.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + weight_of(cands[i].n, lam);

    SearchResult res;
    res.prime_value = set_value(primes_leq, lam);
    res.best_set = primes_leq;
    res.best_value = res.prime_value;

    std::vector<FactoredInt> current;
    std::vector<std::int64_t> current_values;
    bool aborted = false;

    std::function<void(std::size_t, double)> dfs = [&](std::size_t idx, double value) {
        if (aborted) return;
        ++res.nodes;
        if (res.nodes > budget) {
            aborted = true;
            return;
        }
        if (value > res.best_value) {
            res.best_value = value;
            res.best_set = current_values;
        }
        if (idx == cands.size()) return;
        if (!(value + suffix[idx] > res.best_value)) return;  // cannot strictly improve
        if (!violation_on_add(current, cands[idx], k, variant)) {
            current.push_back(cands[idx]);
            current_values.push_back(cands[idx].n);
            dfs(idx + 1, value + weight_of(cands[idx].n, lam));
            current.pop_back();
            current_values.pop_back();
        }
        dfs(idx + 1, value);
    };
    dfs(0, 0.0);

    res.optimal = !aborted;
    std::sort(res.best_set.begin(), res.best_set.end());
    res.best_value = set_value(res.best_set, lam);
    return res;
}

namespace {

// primes maximal at every cutoff x <= N
bool primes_maximal_all_cutoffs(int N, double lam, int k, Variant variant) {
    for (int x = 2; x <= N; ++x) {
        const SearchResult r = max_weighted_sum(x, lam, k, variant, 1'000'000'000LL);
        if (!r.optimal)
            throw std::runtime_error("bracket_tau: node budget exhausted at cutoff " +
                                     std::to_string(x));
        if (r.best_value > r.prime_value * (1.0 + 1e-12) + 1e-12) return false;
    }
    return true;
}

} // namespace

TauBracket bracket_tau(int N, int k, Variant variant, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("bracket_tau: tol must be positive");
    const double floor_lam = 0.0;
    if (primes_maximal_all_cutoffs(N, floor_lam, k, variant)) return {floor_lam, floor_lam};

    double lo = floor_lam, hi = 1.25;
    if (!primes_maximal_all_cutoffs(N, hi, k, variant))
        throw std::logic_error(
            "bracket_tau: primes not maximal at lambda = 1.25; monotone dominance is broken");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (primes_maximal_all_cutoffs(N, mid, k, variant))
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

std::vector<std::int64_t> CgsReport::members() const {
    std::vector<std::int64_t> out = range_primes;
    out.insert(out.end(), products.begin(), products.end());
    std::sort(out.begin(), out.end());
    return out;
}

CgsReport cgs_construct(std::int64_t x, int k, const PrimeTable& t,
                        const std::vector<double>& lambdas) {
    if (k < 1) throw std::domain_error("cgs_construct: k must be >= 1");
    if (x > 10'000'000) throw std::domain_error("cgs_construct: x must be <= 10^7");
    const double need = std::pow(2.0, k + 1);
    if (static_cast<double>(x) < need)
        throw std::domain_error("cgs_construct: x must be at least 2^(k+1)");
    if (x > t.limit()) throw std::out_of_range("cgs_construct: x exceeds the prime table");

    CgsReport rep;
    rep.x = x;
    rep.k = k;
    const double y = std::pow(static_cast<double>(x), 1.0 / (k + 1));
    const double logx = std::log(static_cast<double>(x));
    rep.target_products = static_cast<long long>(
        std::floor(std::pow(static_cast<double>(x), 2.0 / (k + 1)) /
                   (8.0 * (k * logx) * (k * logx))));

    std::vector<std::int64_t> small_primes;
    for (std::int64_t p : t.primes()) {
        if (static_cast<double>(p) > static_cast<double>(x)) break;
        if (static_cast<double>(p) <= y * (1.0 + 1e-12))
            small_primes.push_back(p);
        else
            rep.range_primes.push_back(p);
    }
    rep.primes_in_range = static_cast<long long>(rep.range_primes.size());

    // all products of k+1 distinct primes <= y with product <= x, ascending
    std::vector<std::int64_t> candidates;
    std::vector<std::int64_t> stack;
    std::function<void(std::size_t, std::int64_t)> gen = [&](std::size_t start,
                                                             std::int64_t prod) {
        if (static_cast<int>(stack.size()) == k + 1) {
            candidates.push_back(prod);
            return;
        }
        for (std::size_t i = start; i < small_primes.size(); ++i) {
            const std::int64_t p = small_primes[i];
            if (static_cast<double>(prod) * static_cast<double>(p) >
                static_cast<double>(x) * (1.0 + 1e-12))
                break;
            stack.push_back(p);
            gen(i + 1, prod * p);
            stack.pop_back();
        }
    };
    gen(0, 1);
    std::sort(candidates.begin(), candidates.end());

    // Greedy filtered selection.  The primes in (y, x] cannot interact
    // with the products: every product factors entirely below y, so no
    // divisibility can cross the split.  Feasibility therefore only has
    // to be maintained inside the product family.
    std::vector<FactoredInt> chosen;
    for (std::int64_t c : candidates) {
        if (static_cast<long long>(chosen.size()) >= rep.target_products) break;
        const FactoredInt f = factor(c);
        if (violation_on_add(chosen, f, k, Variant::main)) continue;
        chosen.push_back(f);
        rep.products.push_back(c);
    }
    rep.achieved_products = static_cast<long long>(rep.products.size());
    rep.target_met = rep.achieved_products >= rep.target_products;

    for (double lam : lambdas) {
        double lhs = 0.0;
        for (std::int64_t p : rep.range_primes) lhs += std::pow(static_cast<double>(p), -lam);
        for (std::int64_t c : rep.products) lhs += std::pow(static_cast<double>(c), -lam);
        const double rhs = t.prime_power_sum(static_cast<double>(x), lam);
        MarginReport r = check_less(k, Variant::main,
                                    "construction sum > sum over all primes <= x", rhs, lhs);
        r.term("lambda", lam).term("construction_sum", lhs).term("prime_sum", rhs);
        rep.comparisons.push_back(std::move(r));
    }
    return rep;
}

} // namespace kprim
