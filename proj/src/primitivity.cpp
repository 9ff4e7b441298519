#include "kprim/primitivity.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace kprim {

namespace {

bool shares_prime(const FactoredInt& a, const FactoredInt& b) {
    auto i = a.factors.begin();
    auto j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->first == j->first) return true;
        (i->first < j->first) ? ++i : ++j;
    }
    return false;
}

// Divisibility of a target by a product / lcm of helpers reduces to the
// target's own primes: a | m_1...m_j  iff  v_p(a) <= sum_i v_p(m_i) for
// every p | a (max_i for the lcm notion).  The search below works on
// those exponent vectors; big products are never formed.
struct DemandProblem {
    std::vector<std::int64_t> primes;
    std::vector<int> need;
    std::vector<const FactoredInt*> helpers;   // ascending member value
    std::vector<std::vector<int>> contrib;     // helper exponents on `primes`
};

DemandProblem make_problem(const FactoredInt& target,
                           const std::vector<const FactoredInt*>& pool) {
    DemandProblem prob;
    prob.primes.reserve(target.factors.size());
    prob.need.reserve(target.factors.size());
    for (const auto& [p, e] : target.factors) {
        prob.primes.push_back(p);
        prob.need.push_back(e);
    }
    for (const FactoredInt* m : pool) {
        if (m->n == target.n) continue;
        if (!shares_prime(target, *m)) continue;  // cannot contribute
        std::vector<int> c(prob.primes.size(), 0);
        for (std::size_t i = 0; i < prob.primes.size(); ++i)
            c[i] = m->exponent_of(prob.primes[i]);
        prob.helpers.push_back(m);
        prob.contrib.push_back(std::move(c));
    }
    return prob;
}

int total_need(const std::vector<int>& need) {
    int s = 0;
    for (int v : need)
        if (v > 0) s += v;
    return s;
}

int clipped_total(const std::vector<int>& contrib, const std::vector<int>& need) {
    int s = 0;
    for (std::size_t i = 0; i < contrib.size(); ++i)
        if (need[i] > 0) s += std::min(contrib[i], need[i]);
    return s;
}

// distinct helpers, indices strictly increasing -> lexicographic witness
bool search_distinct(const DemandProblem& prob, std::vector<int>& need, int picks_left,
                     std::size_t start, std::vector<std::size_t>& chosen) {
    const int tn = total_need(need);
    if (tn == 0) return true;
    if (picks_left == 0) return false;
    int best = 0;
    for (std::size_t i = start; i < prob.helpers.size(); ++i)
        best = std::max(best, clipped_total(prob.contrib[i], need));
    if (static_cast<long long>(best) * picks_left < tn) return false;
    for (std::size_t i = start; i < prob.helpers.size(); ++i) {
        if (clipped_total(prob.contrib[i], need) == 0) continue;
        chosen.push_back(i);
        for (std::size_t j = 0; j < need.size(); ++j) need[j] -= prob.contrib[i][j];
        if (search_distinct(prob, need, picks_left - 1, i + 1, chosen)) return true;
        for (std::size_t j = 0; j < need.size(); ++j) need[j] += prob.contrib[i][j];
        chosen.pop_back();
    }
    return false;
}

// multiset of helpers, indices nondecreasing; failed residual demands are
// memoized per (start, picks_left, need)
struct MultisetMemo {
    std::vector<std::string> failed;
    bool contains(const std::string& key) const {
        return std::find(failed.begin(), failed.end(), key) != failed.end();
    }
};

std::string memo_key(std::size_t start, int picks_left, const std::vector<int>& need) {
    std::string k = std::to_string(start) + "|" + std::to_string(picks_left);
    for (int v : need) {
        k.push_back(',');
        k += std::to_string(std::max(v, 0));
    }
    return k;
}

bool search_multiset(const DemandProblem& prob, std::vector<int>& need, int picks_left,
                     std::size_t start, std::vector<std::size_t>& chosen,
                     MultisetMemo& memo) {
    const int tn = total_need(need);
    if (tn == 0) return true;
    if (picks_left == 0) return false;
    int best = 0;
    for (std::size_t i = start; i < prob.helpers.size(); ++i)
        best = std::max(best, clipped_total(prob.contrib[i], need));
    if (static_cast<long long>(best) * picks_left < tn) return false;
    const std::string key = memo_key(start, picks_left, need);
    if (memo.contains(key)) return false;
    for (std::size_t i = start; i < prob.helpers.size(); ++i) {
        if (clipped_total(prob.contrib[i], need) == 0) continue;
        chosen.push_back(i);
        for (std::size_t j = 0; j < need.size(); ++j) need[j] -= prob.contrib[i][j];
        if (search_multiset(prob, need, picks_left - 1, i, chosen, memo)) return true;
        for (std::size_t j = 0; j < need.size(); ++j) need[j] += prob.contrib[i][j];
        chosen.pop_back();
    }
    memo.failed.push_back(key);
    return false;
}

// lcm cover: a helper settles prime i outright when its exponent reaches
// the demand; branch on the uncovered prime with fewest usable helpers
bool search_cover(const DemandProblem& prob, std::vector<char>& covered, int picks_left,
                  std::vector<char>& used, std::vector<std::size_t>& chosen) {
    std::size_t branch_prime = std::numeric_limits<std::size_t>::max();
    int fewest = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j < prob.primes.size(); ++j) {
        if (covered[j]) continue;
        int usable = 0;
        for (std::size_t i = 0; i < prob.helpers.size(); ++i)
            if (!used[i] && prob.contrib[i][j] >= prob.need[j]) ++usable;
        if (usable == 0) return false;
        if (usable < fewest) {
            fewest = usable;
            branch_prime = j;
        }
    }
    if (branch_prime == std::numeric_limits<std::size_t>::max()) return true;  // all covered
    if (picks_left == 0) return false;
    for (std::size_t i = 0; i < prob.helpers.size(); ++i) {
        if (used[i] || prob.contrib[i][branch_prime] < prob.need[branch_prime]) continue;
        used[i] = 1;
        chosen.push_back(i);
        std::vector<std::size_t> newly;
        for (std::size_t j = 0; j < prob.primes.size(); ++j)
            if (!covered[j] && prob.contrib[i][j] >= prob.need[j]) {
                covered[j] = 1;
                newly.push_back(j);
            }
        if (search_cover(prob, covered, picks_left - 1, used, chosen)) return true;
        for (std::size_t j : newly) covered[j] = 0;
        chosen.pop_back();
        used[i] = 0;
    }
    return false;
}

bool run_search(const DemandProblem& prob, int k, Variant notion,
                std::vector<std::size_t>& chosen) {
    chosen.clear();
    std::vector<int> need = prob.need;
    switch (notion) {
        case Variant::main:
            return search_distinct(prob, need, k, 0, chosen);
        case Variant::strong: {
            MultisetMemo memo;
            return search_multiset(prob, need, k, 0, chosen, memo);
        }
        case Variant::lcm: {
            std::vector<char> covered(prob.primes.size(), 0);
            std::vector<char> used(prob.helpers.size(), 0);
            return search_cover(prob, covered, k, used, chosen);
        }
    }
    return false;
}

// direct recheck from the factorizations, independent of the search state
bool witness_divides(const FactoredInt& target, const std::vector<const FactoredInt*>& helpers,
                     Variant notion) {
    for (const auto& [p, e] : target.factors) {
        int got = 0;
        for (const FactoredInt* m : helpers) {
            const int v = m->exponent_of(p);
            got = (notion == Variant::lcm) ? std::max(got, v) : got + v;
        }
        if (got < e) return false;
    }
    return true;
}

Witness build_witness(const FactoredInt& target, const DemandProblem& prob,
                      const std::vector<std::size_t>& chosen, Variant notion) {
    Witness w;
    w.divisor = target.n;
    std::vector<const FactoredInt*> picked;
    for (std::size_t i : chosen) {
        picked.push_back(prob.helpers[i]);
        w.helpers.push_back(prob.helpers[i]->n);
    }
    if (!witness_divides(target, picked, notion))
        throw std::logic_error("primitivity witness failed direct recheck");
    return w;
}

void require_exact_size(const CandidateSet& A) {
    if (A.size() > kExactSetCap)
        throw std::length_error("set size " + std::to_string(A.size()) +
                                " exceeds exact-check cap " + std::to_string(kExactSetCap));
}

std::vector<const FactoredInt*> member_ptrs(const CandidateSet& A) {
    std::vector<const FactoredInt*> out;
    out.reserve(A.size());
    for (const auto& m : A.members()) out.push_back(&m);
    return out;
}

PrimitivityResult run_predicate(const CandidateSet& A, int k, Variant notion) {
    if (k < 1) throw std::domain_error("k must be >= 1");
    require_exact_size(A);
    const auto pool = member_ptrs(A);
    std::vector<std::size_t> chosen;
    for (const auto& a : A.members()) {
        const DemandProblem prob = make_problem(a, pool);
        if (run_search(prob, k, notion, chosen))
            return {false, build_witness(a, prob, chosen, notion)};
    }
    return {true, std::nullopt};
}

} // namespace

PrimitivityResult is_k_primitive(const CandidateSet& A, int k, bool cgs_single_j) {
    if (!cgs_single_j) return run_predicate(A, k, Variant::main);

    // single-j variant: only products of exactly k distinct others are
    // forbidden; any shorter witness pads out with unused members (the
    // product only grows), and with fewer than k other members no
    // forbidden product exists at all
    if (k < 1) throw std::domain_error("k must be >= 1");
    require_exact_size(A);
    if (static_cast<int>(A.size()) - 1 < k) return {true, std::nullopt};
    PrimitivityResult r = run_predicate(A, k, Variant::main);
    if (r.primitive) return r;
    Witness& w = *r.witness;
    for (const auto& m : A.members()) {
        if (static_cast<int>(w.helpers.size()) >= k) break;
        if (m.n == w.divisor) continue;
        if (std::find(w.helpers.begin(), w.helpers.end(), m.n) != w.helpers.end()) continue;
        w.helpers.push_back(m.n);
    }
    std::sort(w.helpers.begin(), w.helpers.end());
    return r;
}

PrimitivityResult is_strongly_k_primitive(const CandidateSet& A, int k) {
    return run_predicate(A, k, Variant::strong);
}

PrimitivityResult is_lcm_k_primitive(const CandidateSet& A, int k) {
    return run_predicate(A, k, Variant::lcm);
}

PrimitivityResult check_primitivity(const CandidateSet& A, int k, Variant notion) {
    return run_predicate(A, k, notion);
}

std::optional<Witness> refute_primitivity_randomized(const CandidateSet& A, int k,
                                                     Variant notion, std::uint64_t seed,
                                                     long long attempts) {
    if (A.size() < 2) return std::nullopt;
    std::mt19937_64 rng(seed);
    const auto& mem = A.members();
    std::uniform_int_distribution<std::size_t> pick(0, mem.size() - 1);
    for (long long it = 0; it < attempts; ++it) {
        const std::size_t ai = pick(rng);
        const FactoredInt& a = mem[ai];
        const int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
        std::vector<const FactoredInt*> helpers;
        std::vector<std::size_t> used;
        for (int c = 0; c < j; ++c) {
            std::size_t hi = pick(rng);
            if (hi == ai) continue;
            if (notion != Variant::strong &&
                std::find(used.begin(), used.end(), hi) != used.end())
                continue;
            used.push_back(hi);
            helpers.push_back(&mem[hi]);
        }
        if (helpers.empty()) continue;
        if (witness_divides(a, helpers, notion)) {
            Witness w;
            w.divisor = a.n;
            for (const FactoredInt* h : helpers) w.helpers.push_back(h->n);
            std::sort(w.helpers.begin(), w.helpers.end());
            return w;
        }
    }
    return std::nullopt;
}

std::optional<Witness> violation_on_add(const std::vector<FactoredInt>& members,
                                        const FactoredInt& cand, int k, Variant notion) {
    std::vector<const FactoredInt*> pool;
    pool.reserve(members.size());
    for (const auto& m : members) pool.push_back(&m);

    std::vector<std::size_t> chosen;
    {  // the candidate as the divisor
        const DemandProblem prob = make_problem(cand, pool);
        if (run_search(prob, k, notion, chosen))
            return build_witness(cand, prob, chosen, notion);
    }

    // an existing member as the divisor: only products drawing on the
    // candidate can be new, so members coprime to it are already settled
    for (const auto& a : members) {
        if (!shares_prime(a, cand)) continue;
        std::vector<const FactoredInt*> pool2;
        pool2.reserve(members.size());
        bool cand_placed = false;
        for (const auto& m : members) {
            if (m.n == a.n) continue;
            if (!cand_placed && cand.n < m.n) {
                pool2.push_back(&cand);
                cand_placed = true;
            }
            pool2.push_back(&m);
        }
        if (!cand_placed) pool2.push_back(&cand);
        const DemandProblem prob = make_problem(a, pool2);
        if (run_search(prob, k, notion, chosen)) return build_witness(a, prob, chosen, notion);
    }
    return std::nullopt;
}

YsmallReport check_ysmall(const CandidateSet& A, int k, const std::vector<double>& lambdas) {
    if (k < 2) throw std::domain_error("check_ysmall requires k >= 2");
    require_exact_size(A);

    YsmallReport rep;
    rep.set_size = static_cast<long long>(A.size());
    rep.support_size = static_cast<long long>(A.support().size());

    const PrimitivityResult pre = is_lcm_k_primitive(A, k);
    rep.precondition_ok = pre.primitive;
    rep.precondition_witness = pre.witness;
    if (!rep.precondition_ok) {
        rep.pass = false;
        return rep;
    }

    if (rep.support_size <= k) {
        rep.card_bound_applicable = true;
        rep.card_bound_ok = rep.set_size <= rep.support_size;

        // injective assignment n -> p with v_p(n) strictly maximal at n
        for (const auto& m : A.members()) {
            std::int64_t pick = 0;
            for (const auto& [p, e] : m.factors) {
                bool maximal = true;
                for (const auto& other : A.members()) {
                    if (other.n == m.n) continue;
                    if (other.exponent_of(p) >= e) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) {
                    pick = p;
                    break;
                }
            }
            if (pick == 0) {
                rep.assignment_ok = false;
                break;
            }
            rep.assignment.emplace_back(m.n, pick);
        }
        // distinct by construction: two members maximal at the same prime
        // would each need a strictly larger exponent than the other

        for (double lam : lambdas) {
            double lhs = 0.0, rhs = 0.0;
            for (const auto& m : A.members()) lhs += std::pow(double(m.n), -lam);
            for (std::int64_t p : A.support()) rhs += std::pow(double(p), -lam);
            MarginReport r = check_leq(k, Variant::lcm,
                                       "sum n^-lam <= sum over support primes", lhs, rhs);
            r.term("lambda", lam).term("set_sum", lhs).term("support_sum", rhs);
            rep.sum_checks.push_back(std::move(r));
        }
    } else if (rep.support_size < 2LL * k) {
        rep.extended_bound_applicable = true;
        rep.extended_bound_ok = rep.set_size <= rep.support_size + 1;
    }

    rep.pass = rep.precondition_ok &&
               (!rep.card_bound_applicable || (rep.card_bound_ok && rep.assignment_ok)) &&
               (!rep.extended_bound_applicable || rep.extended_bound_ok) &&
               all_pass(rep.sum_checks);
    return rep;
}

} // namespace kprim
