#include "kprim/lab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kprim/factored.hpp"
#include "kprim/primes.hpp"
#include "kprim/primitivity.hpp"
#include "kprim/structure.hpp"

namespace kprim {

namespace {

std::string join_values(const std::vector<std::int64_t>& vals) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ",";
        os << vals[i];
    }
    os << "}";
    return os.str();
}

void record_failure(LabSuiteResult& r, const std::string& what) {
    ++r.failures;
    if (r.first_failure.empty()) r.first_failure = what;
}

std::int64_t ipow(std::int64_t p, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= p;
    return r;
}

} // namespace

LabSuiteResult lab_split_blocks(long long trials, std::uint64_t seed) {
    LabSuiteResult res;
    res.name = "split_blocks";
    res.seed = seed;
    std::mt19937_64 rng(seed);
    const std::int64_t base_primes[] = {2, 3, 5, 7};

    long long attempts = 0;
    while (res.trials < trials && attempts < trials * 200) {
        ++attempts;
        std::int64_t n = 1;
        for (std::int64_t p : base_primes) {
            const int e = static_cast<int>(rng() % 6);
            const std::int64_t q = ipow(p, e);
            if (n > 1'000'000'000 / std::max<std::int64_t>(q, 1)) continue;
            n *= q;
        }
        if (n < 4) continue;
        const FactoredInt f = factor(n);
        const int k = 2 + static_cast<int>(rng() % 3);
        const double z = static_cast<double>(n) * (1.0 + static_cast<double>(rng() % 1000) / 100.0);
        const double theta = 1.0 / k;
        const double zt = std::pow(z, theta);
        const double cap = std::pow(z, 1.0 / k + theta) * (1.0 + 1e-9);

        bool ran = false;
        const auto verify = [&](const BlockSplit& s, bool coprime) {
            __int128 prod = 1;
            for (std::int64_t b : s.blocks) prod *= b;
            if (prod != static_cast<__int128>(n))
                record_failure(res, "product mismatch t=" + std::to_string(n));
            if (s.l() > k) record_failure(res, "too many blocks t=" + std::to_string(n));
            for (std::int64_t b : s.blocks)
                if (static_cast<double>(b) > cap)
                    record_failure(res, "oversized block t=" + std::to_string(n));
            if (coprime)
                for (std::size_t i = 0; i < s.blocks.size(); ++i)
                    for (std::size_t j = i + 1; j < s.blocks.size(); ++j)
                        if (std::gcd(s.blocks[i], s.blocks[j]) != 1)
                            record_failure(res, "non-coprime blocks t=" + std::to_string(n));
        };

        try {
            if (static_cast<double>(f.big_prime_power) < zt) {
                verify(split_blocks_q(f, z, k, theta), true);
                ran = true;
            }
            if (static_cast<double>(f.big_prime) < zt) {
                verify(split_blocks_p(f, z, k, theta), false);
                ran = true;
            }
        } catch (const std::logic_error& e) {
            record_failure(res, std::string("split threw: ") + e.what());
            ran = true;
        }
        if (ran) ++res.trials;
    }
    res.pass = res.failures == 0 && res.trials >= trials;
    return res;
}

namespace {

// composite from small primes; 1..3 distinct primes, single-prime members
// get exponent >= 2
std::int64_t random_composite(std::mt19937_64& rng, const std::vector<std::int64_t>& primes) {
    const int count = 1 + static_cast<int>(rng() % 3);
    std::set<std::int64_t> chosen;
    while (static_cast<int>(chosen.size()) < count)
        chosen.insert(primes[rng() % primes.size()]);
    std::int64_t n = 1;
    for (std::int64_t p : chosen) {
        const int e = (count == 1) ? 2 + static_cast<int>(rng() % 3)
                                   : 1 + static_cast<int>(rng() % 3);
        const std::int64_t q = ipow(p, e);
        if (n > 1'000'000 / q) return 0;
        n *= q;
    }
    return n;
}

} // namespace

LabSuiteResult lab_derive_map_lcm(long long trials, std::uint64_t seed) {
    LabSuiteResult res;
    res.name = "derive_map_lcm";
    res.seed = seed;
    std::mt19937_64 rng(seed);
    const std::vector<std::int64_t> primes = {2, 3, 5, 7, 11};

    long long attempts = 0;
    while (res.trials < trials && attempts < trials * 4000) {
        ++attempts;
        const int k = 2 + static_cast<int>(rng() % 2);
        const int size = 2 + static_cast<int>(rng() % 4);
        std::vector<std::int64_t> values;
        for (int i = 0; i < size; ++i) {
            const std::int64_t v = random_composite(rng, primes);
            if (v > 1) values.push_back(v);
        }
        if (values.size() < 2) continue;
        const CandidateSet T(values);
        if (T.size() < 2) continue;
        if (!is_lcm_k_primitive(T, k).primitive) continue;

        ++res.trials;
        try {
            const DerivedMapResult d = derive_map_lcm(T, k);
            if (d.image_set.size() != T.size())
                record_failure(res, "image collapsed for T=" + join_values(T.values()));
            const PrimitivityResult img = is_lcm_k_primitive(d.image_set, k - 1);
            if (!img.primitive)
                record_failure(res, "image not lcm (k-1)-primitive for T=" +
                                        join_values(T.values()));
        } catch (const std::logic_error& e) {
            record_failure(res, std::string("derive_map_lcm threw: ") + e.what());
        }
    }
    res.pass = res.failures == 0 && res.trials >= trials;
    return res;
}

LabSuiteResult lab_derive_map_strong(long long trials, std::uint64_t seed) {
    LabSuiteResult res;
    res.name = "derive_map_strong";
    res.seed = seed;
    std::mt19937_64 rng(seed);
    const std::vector<std::int64_t> all_primes = {2, 3, 5, 7, 11};

    long long attempts = 0;
    while (res.trials < trials && attempts < trials * 20000) {
        ++attempts;
        const int k = 2 + static_cast<int>(rng() % 2);
        const int psize = 2 + static_cast<int>(rng() % 2);
        std::vector<std::int64_t> basis;
        {
            std::set<std::int64_t> s;
            while (static_cast<int>(s.size()) < psize)
                s.insert(all_primes[rng() % all_primes.size()]);
            basis.assign(s.begin(), s.end());
        }
        const int size = 2 + static_cast<int>(rng() % 3);
        std::vector<std::int64_t> values;
        for (int i = 0; i < size; ++i) {
            // one dominant prime with a tall exponent keeps the set from
            // dividing products of its peers
            const std::size_t dom = rng() % basis.size();
            std::int64_t n = 1;
            bool ok = true;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const int e = (j == dom) ? 2 + static_cast<int>(rng() % 4)
                                         : static_cast<int>(rng() % 3);
                const std::int64_t q = ipow(basis[j], e);
                if (q > 0 && n > 1'000'000 / std::max<std::int64_t>(q, 1)) {
                    ok = false;
                    break;
                }
                n *= q;
            }
            if (ok && n > 3) values.push_back(n);
        }
        if (values.size() < 2) continue;
        CandidateSet T(values);
        if (T.size() < 2) continue;
        bool composite = true;
        for (const auto& m : T.members()) composite &= m.is_composite();
        if (!composite) continue;
        bool covered = true;
        for (std::int64_t p : T.support())
            covered &= T.members_with_prime(p).size() >= 2;
        if (!covered) continue;
        if (!is_strongly_k_primitive(T, k).primitive) continue;

        ++res.trials;
        try {
            const DerivedMapResult d = derive_map_strong(T, k);
            if (d.image_set.size() != T.size())
                record_failure(res, "image collapsed for T=" + join_values(T.values()));
            const PrimitivityResult img = is_strongly_k_primitive(d.image_set, k - 1);
            if (!img.primitive)
                record_failure(res, "image not strongly (k-1)-primitive for T=" +
                                        join_values(T.values()));
        } catch (const std::logic_error& e) {
            record_failure(res, std::string("derive_map_strong threw: ") + e.what());
        }
    }
    res.pass = res.failures == 0 && res.trials >= trials;
    return res;
}

LabSuiteResult lab_smooth_count(long long z) {
    LabSuiteResult res;
    res.name = "smooth_count";
    for (int k : {2, 3}) {
        const SmoothCountCheck chk = smooth_count_exhaustive(z, k);
        res.trials += static_cast<long long>(chk.pool.size());
        if (!chk.pass)
            record_failure(res, "bound violated at z=" + std::to_string(z) +
                                    " k=" + std::to_string(k) + " by " +
                                    join_values(chk.max_set));
    }
    res.pass = res.failures == 0;
    return res;
}

LabSuiteResult lab_ysmall(int n_max) {
    LabSuiteResult res;
    res.name = "ysmall";
    const PrimeTable table(n_max);
    const std::vector<double> lambdas = {0.0, 0.5, 1.0};

    for (int k : {2, 3}) {
        // prime subsets P with |P| <= k, then the P-smooth pool in [2..n_max]
        std::vector<std::vector<std::int64_t>> psets;
        std::vector<std::int64_t> cur;
        std::function<void(std::size_t)> combos = [&](std::size_t start) {
            if (!cur.empty() && static_cast<int>(cur.size()) <= k) psets.push_back(cur);
            if (static_cast<int>(cur.size()) == k) return;
            for (std::size_t i = start; i < table.count(); ++i) {
                cur.push_back(table.primes()[i]);
                combos(i + 1);
                cur.pop_back();
            }
        };
        combos(0);

        for (const auto& pset : psets) {
            std::vector<FactoredInt> pool;
            for (std::int64_t n = 2; n <= n_max; ++n) {
                FactoredInt f = factor(n);
                bool ok = true;
                for (const auto& [p, e] : f.factors)
                    ok &= std::find(pset.begin(), pset.end(), p) != pset.end();
                if (ok) pool.push_back(std::move(f));
            }

            std::vector<FactoredInt> current;
            std::function<void(std::size_t)> dfs = [&](std::size_t start) {
                if (!current.empty()) {
                    // count each set under its exact support only
                    std::set<std::int64_t> support;
                    for (const auto& m : current)
                        for (const auto& [p, e] : m.factors) support.insert(p);
                    if (support.size() == pset.size()) {
                        std::vector<std::int64_t> values;
                        for (const auto& m : current) values.push_back(m.n);
                        ++res.trials;
                        const YsmallReport rep = check_ysmall(CandidateSet(values), k, lambdas);
                        if (!rep.pass)
                            record_failure(res, "ysmall conclusions failed for A=" +
                                                    join_values(values) +
                                                    " k=" + std::to_string(k));
                    }
                }
                for (std::size_t i = start; i < pool.size(); ++i) {
                    if (violation_on_add(current, pool[i], k, Variant::lcm)) continue;
                    current.push_back(pool[i]);
                    dfs(i + 1);
                    current.pop_back();
                }
            };
            dfs(0);
        }
    }
    res.pass = res.failures == 0;
    return res;
}

std::vector<LabSuiteResult> run_all_labs(long long trials, std::uint64_t seed) {
    std::vector<LabSuiteResult> out;
    out.push_back(lab_split_blocks(trials, seed));
    out.push_back(lab_derive_map_lcm(trials, seed + 1));
    out.push_back(lab_derive_map_strong(trials, seed + 2));
    out.push_back(lab_smooth_count(200));
    out.push_back(lab_ysmall(50));
    return out;
}

} // namespace kprim
