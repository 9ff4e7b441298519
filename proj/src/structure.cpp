#include "kprim/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kprim {

namespace {

// thresholds are reals hit exactly by integer products (64^{1/3} = 4), so
// comparisons carry a relative epsilon
bool fits(double product, double threshold) {
    return product <= threshold * (1.0 + 1e-12);
}

BlockSplit greedy_split(const FactoredInt& t, double z, int k,
                        const std::vector<std::int64_t>& parts_desc) {
    BlockSplit out;
    out.t = t.n;
    const double z1k = std::pow(z, 1.0 / k);
    if (fits(static_cast<double>(t.n), z1k)) {
        out.blocks.push_back(t.n);
        return out;
    }
    std::size_t i = 0;
    while (i < parts_desc.size()) {
        std::int64_t cur = 1;
        while (i < parts_desc.size() &&
               fits(static_cast<double>(cur) * static_cast<double>(parts_desc[i]), z1k))
            cur *= parts_desc[i++];
        if (i < parts_desc.size()) cur *= parts_desc[i++];  // the closing factor
        out.blocks.push_back(cur);
    }
    return out;
}

void check_split(const BlockSplit& s, const FactoredInt& t, double z, int k, double theta,
                 bool coprime) {
    __int128 prod = 1;
    for (std::int64_t b : s.blocks) prod *= b;
    if (prod != static_cast<__int128>(t.n))
        throw std::logic_error("block split does not reconstruct t");
    if (s.l() > k) throw std::logic_error("block split produced more than k blocks");
    const double cap = std::pow(z, 1.0 / k + theta);
    for (std::int64_t b : s.blocks)
        if (!fits(static_cast<double>(b), cap))
            throw std::logic_error("block " + std::to_string(b) + " exceeds z^(1/k+theta)");
    if (coprime)
        for (std::size_t i = 0; i < s.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < s.blocks.size(); ++j)
                if (std::gcd(s.blocks[i], s.blocks[j]) != 1)
                    throw std::logic_error("blocks are not pairwise coprime");
}

void require_split_pre(const FactoredInt& t, double z, int k, double theta) {
    if (k < 1) throw std::domain_error("split requires k >= 1");
    if (!(theta > 0.0)) throw std::domain_error("split requires theta > 0");
    if (!(static_cast<double>(t.n) <= z))
        throw std::domain_error("split requires t <= z");
}

PrimitivityResult require_notion(const CandidateSet& T, int k, Variant notion) {
    if (T.size() > kExactSetCap)
        throw std::length_error("derived-map input exceeds exact-check cap");
    return check_primitivity(T, k, notion);
}

bool every_support_prime_twice(const CandidateSet& T) {
    for (std::int64_t p : T.support())
        if (T.members_with_prime(p).size() < 2) return false;
    return true;
}

void require_composites(const CandidateSet& T, const char* who) {
    for (const auto& m : T.members())
        if (!m.is_composite())
            throw std::invalid_argument(std::string(who) + ": member " +
                                        std::to_string(m.n) + " is prime");
}

void check_injective(const std::vector<std::pair<std::int64_t, std::int64_t>>& image) {
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
            if (image[i].second == image[j].second)
                throw std::logic_error("derived map not injective: f(" +
                                       std::to_string(image[i].first) + ") = f(" +
                                       std::to_string(image[j].first) + ") = " +
                                       std::to_string(image[i].second));
}

} // namespace

BlockSplit split_blocks_q(const FactoredInt& t, double z, int k, double theta) {
    require_split_pre(t, z, k, theta);
    if (!(theta <= 1.0 / k + 1e-15))
        throw std::domain_error("split_blocks_q requires theta <= 1/k");
    if (!(static_cast<double>(t.big_prime_power) < std::pow(z, theta)))
        throw std::domain_error("smoothness violation: Q(" + std::to_string(t.n) +
                                ") = " + std::to_string(t.big_prime_power) +
                                " is not below z^theta");
    std::vector<std::int64_t> parts;  // distinct prime powers, decreasing
    for (const auto& [p, e] : t.factors) {
        std::int64_t q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        parts.push_back(q);
    }
    std::sort(parts.rbegin(), parts.rend());
    BlockSplit s = greedy_split(t, z, k, parts);
    check_split(s, t, z, k, theta, /*coprime=*/true);
    return s;
}

BlockSplit split_blocks_p(const FactoredInt& t, double z, int k, double theta) {
    require_split_pre(t, z, k, theta);
    if (!(static_cast<double>(t.big_prime) < std::pow(z, theta)))
        throw std::domain_error("smoothness violation: P(" + std::to_string(t.n) + ") = " +
                                std::to_string(t.big_prime) + " is not below z^theta");
    std::vector<std::int64_t> parts;  // prime multiset, decreasing
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
        for (int i = 0; i < it->second; ++i) parts.push_back(it->first);
    BlockSplit s = greedy_split(t, z, k, parts);
    check_split(s, t, z, k, theta, /*coprime=*/false);
    return s;
}

DerivedMapResult derive_map_lcm(const CandidateSet& T, int k) {
    if (k < 2) throw std::domain_error("derive_map_lcm requires k >= 2");
    require_composites(T, "derive_map_lcm");
    if (const auto pre = require_notion(T, k, Variant::lcm); !pre.primitive)
        throw std::invalid_argument("derive_map_lcm: input is not lcm " + std::to_string(k) +
                                    "-primitive (" + std::to_string(pre.witness->divisor) +
                                    " divides an lcm)");

    DerivedMapResult out;
    for (const auto& t : T.members()) {
        bool q_divides_other = false;
        for (const auto& s : T.members()) {
            if (s.n == t.n) continue;
            if (s.n % t.big_prime_power == 0) {
                q_divides_other = true;
                break;
            }
        }
        if (q_divides_other) {
            out.t_double_prime.push_back(t.n);
            out.image.emplace_back(t.n, t.n / t.big_prime_power);
        } else {
            out.t_prime.push_back(t.n);
            out.image.emplace_back(t.n, t.big_prime_power);
        }
    }
    check_injective(out.image);

    std::vector<std::int64_t> image_values;
    for (const auto& [from, to] : out.image) image_values.push_back(to);
    out.image_set = CandidateSet(image_values);
    if (const auto post = check_primitivity(out.image_set, k - 1, Variant::lcm);
        !post.primitive)
        throw std::logic_error("derive_map_lcm image is not lcm " + std::to_string(k - 1) +
                               "-primitive: " + std::to_string(post.witness->divisor) +
                               " divides an lcm of others");

    if (every_support_prime_twice(T)) {
        out.coprime_prime_power_asserted = true;
        std::vector<FactoredInt> tprime_images;
        for (const auto& [from, to] : out.image)
            if (std::binary_search(out.t_prime.begin(), out.t_prime.end(), from))
                tprime_images.push_back(factor(to));
        for (const auto& f : tprime_images)
            if (f.factors.size() != 1 || f.factors[0].second < 2)
                throw std::logic_error("f(T') member " + std::to_string(f.n) +
                                       " is not a proper prime power");
        for (std::size_t i = 0; i < tprime_images.size(); ++i)
            for (std::size_t j = i + 1; j < tprime_images.size(); ++j)
                if (tprime_images[i].factors[0].first == tprime_images[j].factors[0].first)
                    throw std::logic_error("f(T') members " +
                                           std::to_string(tprime_images[i].n) + ", " +
                                           std::to_string(tprime_images[j].n) +
                                           " are not coprime");
    }
    return out;
}

DerivedMapResult derive_map_strong(const CandidateSet& T, int k) {
    if (k < 2) throw std::domain_error("derive_map_strong requires k >= 2");
    require_composites(T, "derive_map_strong");
    for (std::int64_t p : T.support())
        if (T.members_with_prime(p).size() < 2)
            throw std::invalid_argument("derive_map_strong: support prime " +
                                        std::to_string(p) + " divides only one member");
    if (const auto pre = require_notion(T, k, Variant::strong); !pre.primitive)
        throw std::invalid_argument("derive_map_strong: input is not strongly " +
                                    std::to_string(k) + "-primitive (" +
                                    std::to_string(pre.witness->divisor) +
                                    " divides a product)");

    DerivedMapResult out;
    out.t_prime = T.values();  // no partition for this map
    for (const auto& t : T.members()) out.image.emplace_back(t.n, t.n / t.big_prime);
    check_injective(out.image);

    std::vector<std::int64_t> image_values;
    for (const auto& [from, to] : out.image) image_values.push_back(to);
    out.image_set = CandidateSet(image_values);
    if (const auto post = check_primitivity(out.image_set, k - 1, Variant::strong);
        !post.primitive)
        throw std::logic_error("derive_map_strong image is not strongly " +
                               std::to_string(k - 1) + "-primitive: " +
                               std::to_string(post.witness->divisor) +
                               " divides a product of others");
    return out;
}

SmoothCountCheck smooth_count_exhaustive(long long z, int k) {
    if (z < 2 || z > 100000) throw std::domain_error("smooth_count_exhaustive: z out of range");
    if (k < 2) throw std::domain_error("smooth_count_exhaustive requires k >= 2");

    SmoothCountCheck chk;
    chk.z = z;
    chk.k = k;
    std::vector<FactoredInt> pool;
    for (long long n = 2; n <= z; ++n) {
        FactoredInt f = factor(n);
        if (std::pow(static_cast<double>(f.big_prime_power), k) <
            static_cast<double>(n) * (1.0 - 1e-12)) {
            chk.pool.push_back(n);
            pool.push_back(std::move(f));
        }
    }

    // depth-first over lcm k-primitive subsets (the family is closed under
    // taking subsets, so incremental feasibility enumerates all of it);
    // prefix counts are checked against z'^(2/k) at every member value
    bool ok = true;
    std::vector<FactoredInt> current;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (static_cast<long long>(current.size()) > chk.max_set_size) {
            chk.max_set_size = static_cast<long long>(current.size());
            chk.max_set.clear();
            for (const auto& m : current) chk.max_set.push_back(m.n);
        }
        if (!current.empty()) {
            const double zp = static_cast<double>(current.back().n);
            if (static_cast<double>(current.size()) >
                std::pow(zp, 2.0 / k) * (1.0 + 1e-12))
                ok = false;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (violation_on_add(current, pool[i], k, Variant::lcm)) continue;
            current.push_back(pool[i]);
            dfs(i + 1);
            current.pop_back();
        }
    };
    dfs(0);
    chk.pass = ok && static_cast<double>(chk.max_set_size) <=
                         std::pow(static_cast<double>(z), 2.0 / k) * (1.0 + 1e-12);
    return chk;
}

} // namespace kprim
