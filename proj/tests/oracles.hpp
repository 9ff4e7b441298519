// Independent reference implementations used only by tests: naive sieving,
// naive primitivity predicates over explicit products, and brute-force
// sums.  Nothing here shares code paths with the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

// trial-division sieve
inline std::vector<std::int64_t> naive_primes(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

inline bool divides_product(std::int64_t a, const std::vector<std::int64_t>& ms) {
    __int128 prod = 1;
    for (std::int64_t m : ms) prod *= m;
    return prod % a == 0;
}

inline bool divides_lcm(std::int64_t a, const std::vector<std::int64_t>& ms) {
    __int128 l = 1;
    for (std::int64_t m : ms) {
        const std::int64_t g = std::gcd(static_cast<std::int64_t>(l % m), m);
        l = l / g * m;
    }
    return l % a == 0;
}

// no member divides a product of j distinct others, 1 <= j <= k
inline bool naive_k_primitive(const std::vector<std::int64_t>& a, int k) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<std::int64_t> others;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) others.push_back(a[j]);
        std::vector<std::int64_t> pick;
        std::function<bool(std::size_t)> combos = [&](std::size_t start) -> bool {
            if (!pick.empty() && static_cast<int>(pick.size()) <= k &&
                divides_product(a[i], pick))
                return true;
            if (static_cast<int>(pick.size()) == k) return false;
            for (std::size_t s = start; s < others.size(); ++s) {
                pick.push_back(others[s]);
                if (combos(s + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (combos(0)) return false;
    }
    return true;
}

// multisets of size up to k
inline bool naive_strongly_k_primitive(const std::vector<std::int64_t>& a, int k) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<std::int64_t> others;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) others.push_back(a[j]);
        std::vector<std::int64_t> pick;
        std::function<bool(std::size_t)> multis = [&](std::size_t start) -> bool {
            if (!pick.empty() && divides_product(a[i], pick)) return true;
            if (static_cast<int>(pick.size()) == k) return false;
            for (std::size_t s = start; s < others.size(); ++s) {
                pick.push_back(others[s]);
                if (multis(s)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (multis(0)) return false;
    }
    return true;
}

inline bool naive_lcm_k_primitive(const std::vector<std::int64_t>& a, int k) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<std::int64_t> others;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) others.push_back(a[j]);
        std::vector<std::int64_t> pick;
        std::function<bool(std::size_t)> combos = [&](std::size_t start) -> bool {
            if (!pick.empty() && static_cast<int>(pick.size()) <= k && divides_lcm(a[i], pick))
                return true;
            if (static_cast<int>(pick.size()) == k) return false;
            for (std::size_t s = start; s < others.size(); ++s) {
                pick.push_back(others[s]);
                if (combos(s + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (combos(0)) return false;
    }
    return true;
}

inline double weighted_sum(const std::vector<std::int64_t>& a, double lam) {
    double s = 0.0;
    for (std::int64_t n : a) s += std::pow(static_cast<double>(n), -lam);
    return s;
}

} // namespace oracle
