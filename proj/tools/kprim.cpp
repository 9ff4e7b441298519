// Command-line surface for the k-primitive set library: sieving, the
// analytic constants, exponent schedules, primitivity checking, the
// structural property labs, subset search, the lower-bound construction,
// and the inequality verification harness.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kprim/analytic.hpp"
#include "kprim/exponents.hpp"
#include "kprim/lab.hpp"
#include "kprim/primes.hpp"
#include "kprim/primitivity.hpp"
#include "kprim/report_io.hpp"
#include "kprim/search.hpp"
#include "kprim/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace kprim;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& s) { std::cout << s; }

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json json_with_params(ordered_json params) {
    ordered_json j;
    j["tool_version"] = kToolVersion;
    j["params"] = std::move(params);
    return j;
}

// set input: a JSON array or whitespace-separated integers, decided by
// the first non-whitespace byte
std::vector<std::int64_t> parse_set_input(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    std::vector<std::int64_t> values;
    if (text[first] == '[') {
        const ordered_json j = ordered_json::parse(text);
        for (const auto& v : j) values.push_back(v.get<std::int64_t>());
    } else {
        std::istringstream is(text);
        std::int64_t v;
        while (is >> v) values.push_back(v);
    }
    return values;
}

std::vector<MarginReport> run_chunked(
    long long k_from, long long k_to, int jobs,
    const std::function<std::vector<MarginReport>(long long, long long)>& fn) {
    if (jobs <= 1 || k_to - k_from < 2 * jobs) return fn(k_from, k_to);
    const long long span = k_to - k_from + 1;
    const long long chunk = (span + jobs - 1) / jobs;
    std::vector<std::future<std::vector<MarginReport>>> futures;
    for (long long lo = k_from; lo <= k_to; lo += chunk) {
        const long long hi = std::min(k_to, lo + chunk - 1);
        futures.push_back(std::async(std::launch::async, fn, lo, hi));
    }
    std::vector<MarginReport> out;
    for (auto& f : futures) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct VerifyOptions {
    std::string variant = "main";
    std::vector<std::string> claims;
    long long k_from = -1;
    long long k_to = -1;
    long long trials = 10000;
    std::uint64_t seed = 1;
    int jobs = 1;
    long long sieve_limit = 1'000'000;
    std::string format = "json";
};

MarginReport summary_report(const std::string& claim, long long trials, long long failures,
                            const std::string& detail) {
    MarginReport r;
    r.claim = claim;
    r.margin = static_cast<double>(-failures);
    r.pass = failures == 0;
    r.term("trials", static_cast<double>(trials)).term("failures",
                                                       static_cast<double>(failures));
    if (!detail.empty() && !r.pass) r.claim += " [" + detail + "]";
    return r;
}

int run_verify(const VerifyOptions& opt) {
    const Variant variant = variant_from_string(opt.variant);
    std::vector<std::string> claims = opt.claims;
    if (claims.empty()) {
        switch (variant) {
            case Variant::main:
                claims = {"primeineq", "primeineq2", "claim1", "claim2",
                          "ibound",    "asymptotic", "ysmall", "monotone"};
                break;
            case Variant::lcm:
                claims = {"claim1", "claim2", "ibound", "asymptotic"};
                break;
            case Variant::strong:
                claims = {"goal2"};
                break;
        }
    }

    const PrimeTable table(opt.sieve_limit);
    const long long base_k = variant == Variant::main ? 3 : 2;
    std::vector<MarginReport> reports;

    for (const std::string& claim : claims) {
        const auto range = [&](long long lo_default, long long hi_default) {
            return std::pair<long long, long long>{opt.k_from > 0 ? opt.k_from : lo_default,
                                                   opt.k_to > 0 ? opt.k_to : hi_default};
        };
        if (claim == "primeineq") {
            const auto [lo, hi] = range(1, table.count_leq(100000.0));
            auto part = run_chunked(lo, hi, opt.jobs, [&](long long a, long long b) {
                auto all = verify_lemma_primeineq(table, b);
                std::vector<MarginReport> keep;
                for (auto& r : all)
                    if (r.k >= a) keep.push_back(std::move(r));
                return keep;
            });
            reports.insert(reports.end(), part.begin(), part.end());
        } else if (claim == "primeineq2") {
            const std::vector<double> xs = {41, 100, 1000, 10000, 100000};
            const std::vector<double> lams = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
            auto part = check_rs_theta_bounds(table, xs);
            reports.insert(reports.end(), part.begin(), part.end());
            part = check_prime_log_sum_sandwich(table, xs, lams);
            reports.insert(reports.end(), part.begin(), part.end());
        } else if (claim == "claim1") {
            const auto [lo, hi] = range(base_k, 50);
            auto part = claim1_check(table, lo, hi, variant);
            reports.insert(reports.end(), part.begin(), part.end());
        } else if (claim == "claim2") {
            const auto [lo, hi] = range(base_k, 1000);
            auto part = run_chunked(lo, hi, opt.jobs, [&](long long a, long long b) {
                return claim2_check(table, variant, a, b);
            });
            reports.insert(reports.end(), part.begin(), part.end());
        } else if (claim == "ibound") {
            const auto [lo, hi] = range(base_k, 199);
            auto part = run_chunked(lo, hi, opt.jobs, [&](long long a, long long b) {
                return i_bound_check(table, variant, a, b);
            });
            reports.insert(reports.end(), part.begin(), part.end());
        } else if (claim == "asymptotic") {
            const auto [lo, hi] = range(200, 1000);
            auto part = run_chunked(lo, hi, opt.jobs, [&](long long a, long long b) {
                return asymptotic_leg_check(table, variant, a, b);
            });
            reports.insert(reports.end(), part.begin(), part.end());
        } else if (claim == "goal2") {
            const auto [lo, hi] = range(39, 1000);
            auto part = run_chunked(lo, hi, opt.jobs, [&](long long a, long long b) {
                return strong_goal_check(table, a, b);
            });
            reports.insert(reports.end(), part.begin(), part.end());
        } else if (claim == "ysmall") {
            const LabSuiteResult r = lab_ysmall(50);
            reports.push_back(summary_report("ysmall exhaustive over [2..50], k in {2,3}",
                                             r.trials, r.failures, r.first_failure));
        } else if (claim == "monotone") {
            const MonotoneReport r = monotone_exponent_property(opt.trials, opt.seed);
            MarginReport m = summary_report("prefix dominance transports to larger exponents",
                                            r.trials, r.counterexamples,
                                            r.first_counterexample);
            m.term("hypothesis_held", static_cast<double>(r.hypothesis_held));
            reports.push_back(std::move(m));
        } else {
            std::cerr << "unknown claim: " << claim << "\n";
            return kExitUsage;
        }
    }

    ordered_json params;
    params["variant"] = opt.variant;
    params["claims"] = claims;
    params["k_from"] = opt.k_from;
    params["k_to"] = opt.k_to;
    params["seed"] = opt.seed;
    params["trials"] = opt.trials;
    params["jobs"] = opt.jobs;
    params["sieve_limit"] = opt.sieve_limit;
    emit(render_reports(reports, format_from_string(opt.format), params));
    return all_pass(reports) ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"primitive-set toolkit: exact k/lcm/strong primitivity checks, prime-sum "
                 "analysis, exponent schedules, and the inequality verification harness"};
    app.require_subcommand(1);
    app.fallthrough();

    long long sieve_limit = 1'000'000;
    app.add_option("--sieve-limit", sieve_limit, "prime table bound")
        ->envname("KPRIM_SIEVE_LIMIT");

    // sieve
    auto* sc_sieve = app.add_subcommand("sieve", "build the prime table; report count, "
                                                 "p_k, theta(x)");
    long long sieve_nth = 0;
    double sieve_theta = -1.0;
    sc_sieve->add_option("--nth", sieve_nth, "also report the k-th prime");
    sc_sieve->add_option("--theta", sieve_theta, "also report theta(x) = sum_{p<=x} log p");

    // constants
    auto* sc_const = app.add_subcommand(
        "constants", "reference constants; optionally the prime-zeta critical exponent "
                     "and the prime reciprocal-log-weight sum");
    bool want_tau1 = false, want_erdos = false, want_all = false;
    double rel_tol = 1e-10, bisect_tol = 1e-8;
    long long erdos_cutoff = 100000;
    sc_const->add_flag("--tau1", want_tau1, "solve sum_p p^-t = 1 + sqrt(1 - sum_p p^-2t)");
    sc_const->add_flag("--erdos", want_erdos, "compute sum_p 1/(p log p)");
    sc_const->add_flag("--all", want_all, "compute everything");
    sc_const->add_option("--rel-tol", rel_tol, "series relative tolerance");
    sc_const->add_option("--bisect-tol", bisect_tol, "bisection bracket width");
    sc_const->add_option("--erdos-cutoff", erdos_cutoff, "direct-summation cutoff X");

    // exponents
    auto* sc_exp = app.add_subcommand(
        "exponents", "emit the schedule table (k, p_k, lambda, theta, nu, bound margins)");
    std::string exp_variant = "main";
    long long exp_from = 1, exp_to = 50;
    std::string exp_format = "json";
    bool exp_base_check = false;
    sc_exp->add_option("--variant", exp_variant, "main|lcm|strong");
    sc_exp->add_option("--k-from", exp_from);
    sc_exp->add_option("--k-to", exp_to);
    sc_exp->add_option("--format", exp_format, "json|csv|md");
    sc_exp->add_flag("--base-check", exp_base_check,
                     "also report lambda_main(k) <= 3 log(k)/k margins for k <= 38");

    // check
    auto* sc_check = app.add_subcommand(
        "check", "decide k/lcm/strong primitivity of a set read from a file or stdin");
    int check_k = 1;
    std::string check_notion = "main";
    std::string check_input = "-";
    bool check_single_j = false, check_randomized = false;
    std::uint64_t check_seed = 1;
    sc_check->add_option("--k", check_k, "level k");
    sc_check->add_option("--notion", check_notion, "main|lcm|strong");
    sc_check->add_option("--input", check_input, "file path, or - for stdin");
    sc_check->add_flag("--cgs-single-j", check_single_j,
                       "forbid only products of exactly k distinct members");
    sc_check->add_flag("--randomized", check_randomized,
                       "refutation-only fallback past the exact-size cap");
    sc_check->add_option("--seed", check_seed);

    // lemma-lab
    auto* sc_lab = app.add_subcommand(
        "lemma-lab", "seeded property suites for the block-split and derived-map machinery");
    long long lab_trials = 500;
    std::uint64_t lab_seed = 1;
    sc_lab->add_option("--trials", lab_trials);
    sc_lab->add_option("--seed", lab_seed);

    // search
    auto* sc_search = app.add_subcommand(
        "search", "exact max of sum n^-lambda over k-primitive subsets of [2..N]");
    int search_n = 10, search_k = 1;
    double search_lambda = 1.2, search_tol = 0.01;
    std::string search_variant = "main";
    long long search_budget = 10'000'000;
    bool search_bracket = false;
    sc_search->add_option("--n", search_n, "candidate range bound N");
    sc_search->add_option("--lambda", search_lambda);
    sc_search->add_option("--k", search_k);
    sc_search->add_option("--variant", search_variant, "main|lcm|strong");
    sc_search->add_option("--budget", search_budget, "node budget");
    sc_search->add_flag("--bracket", search_bracket,
                        "bisect the smallest lambda at which the primes are maximal");
    sc_search->add_option("--tol", search_tol, "bracket width for --bracket");

    // construct-cgs
    auto* sc_cgs = app.add_subcommand(
        "construct-cgs", "primes in (x^(1/(k+1)), x] plus greedily chosen products of "
                         "k+1 small primes, kept k-primitive");
    std::int64_t cgs_x = 4096;
    int cgs_k = 1;
    std::vector<double> cgs_lambdas;
    sc_cgs->add_option("--x", cgs_x);
    sc_cgs->add_option("--k", cgs_k);
    sc_cgs->add_option("--lambda", cgs_lambdas, "weights for the sum comparison")
        ->delimiter(',');

    // verify
    auto* sc_verify = app.add_subcommand(
        "verify", "run the finite inequality checks; exit 0 only if all selected pass");
    VerifyOptions vopt;
    sc_verify->add_option("--variant", vopt.variant, "main|lcm|strong");
    sc_verify
        ->add_option("--claims", vopt.claims,
                     "subset of primeineq,primeineq2,claim1,claim2,ibound,asymptotic,"
                     "goal2,ysmall,monotone")
        ->delimiter(',');
    sc_verify->add_option("--k-from", vopt.k_from);
    sc_verify->add_option("--k-to", vopt.k_to);
    sc_verify->add_option("--trials", vopt.trials, "monotone property trials");
    sc_verify->add_option("--seed", vopt.seed);
    sc_verify->add_option("--jobs", vopt.jobs, "parallel fan-out over k ranges")
        ->envname("KPRIM_JOBS");
    sc_verify->add_option("--format", vopt.format, "json|csv|md");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (sc_sieve->parsed()) {
            const PrimeTable t(sieve_limit);
            ordered_json params;
            params["limit"] = sieve_limit;
            ordered_json j = json_with_params(params);
            j["count"] = t.count();
            j["largest"] = t.primes().back();
            if (sieve_nth > 0) j["nth_prime"] = t.nth_prime(sieve_nth);
            if (sieve_theta >= 0.0) j["theta"] = t.chebyshev_theta(sieve_theta);
            emit_json(j);
            return kExitPass;
        }

        if (sc_const->parsed()) {
            Precision prec;
            prec.rel_tol = rel_tol;
            prec.bisect_tol = bisect_tol;
            ordered_json params;
            params["rel_tol"] = rel_tol;
            params["bisect_tol"] = bisect_tol;
            ordered_json j = json_with_params(params);
            ordered_json c;
            for (const auto& [name, value] : named_constants()) c[name] = value;
            if (want_tau1 || want_all) c["tau1"] = solve_tau1(prec);
            if (want_erdos || want_all) {
                params["erdos_cutoff"] = erdos_cutoff;
                c["erdos_constant"] = erdos_constant(prec, erdos_cutoff);
            }
            j["params"] = params;
            j["constants"] = std::move(c);
            emit_json(j);
            return kExitPass;
        }

        if (sc_exp->parsed()) {
            const Variant v = variant_from_string(exp_variant);
            const PrimeTable t(sieve_limit);
            const ExponentSchedule sched(v, t);
            std::vector<MarginReport> rows;
            std::vector<MarginReport> bounds;
            if (v != Variant::strong) bounds = verify_lemma_primeineq(t, exp_to);
            for (long long k = exp_from; k <= exp_to; ++k) {
                MarginReport row;
                row.k = k;
                row.variant = v;
                row.claim = "schedule";
                row.term("p_k", static_cast<double>(t.nth_prime(k)));
                if (v == Variant::strong && k < 2) {
                    row.applicable = false;
                    rows.push_back(std::move(row));
                    continue;
                }
                row.term("lambda", sched.lambda(k));
                if (v != Variant::strong || k >= 3) {
                    row.term("theta", sched.theta(k)).term("nu", sched.nu(k));
                }
                row.pass = true;
                if (v != Variant::strong) {
                    const char* tag = v == Variant::main ? "lambda" : "mu";
                    for (const auto& b : bounds) {
                        if (b.k != k || b.variant != v) continue;
                        if (b.claim.find("direct") == std::string::npos) continue;
                        const bool upper = b.claim.find('<') != std::string::npos;
                        row.term(std::string(tag) + (upper ? "_upper_margin" : "_lower_margin"),
                                 b.margin);
                        if (b.applicable) row.pass = row.pass && b.pass;
                    }
                } else if (k >= 3) {
                    row.term("nu_minus_k", sched.nu(k) - static_cast<double>(k));
                }
                rows.push_back(std::move(row));
            }
            if (exp_base_check && v == Variant::strong) {
                auto base = verify_strong_base(t);
                rows.insert(rows.end(), base.begin(), base.end());
            }
            ordered_json params;
            params["variant"] = exp_variant;
            params["k_from"] = exp_from;
            params["k_to"] = exp_to;
            emit(render_reports(rows, format_from_string(exp_format), params));
            return all_pass(rows) ? kExitPass : kExitCheckFailed;
        }

        if (sc_check->parsed()) {
            std::vector<std::int64_t> values;
            if (check_input == "-") {
                values = parse_set_input(std::cin);
            } else {
                std::ifstream in(check_input);
                if (!in) {
                    std::cerr << "cannot open " << check_input << "\n";
                    return kExitUsage;
                }
                values = parse_set_input(in);
            }
            const CandidateSet A(values);
            const Variant notion = variant_from_string(check_notion);

            ordered_json j;
            j["tool_version"] = kToolVersion;
            j["notion"] = check_notion;
            j["k"] = check_k;
            std::optional<Witness> witness;
            bool known = true, primitive = true;
            try {
                PrimitivityResult r =
                    notion == Variant::main
                        ? is_k_primitive(A, check_k, check_single_j)
                        : check_primitivity(A, check_k, notion);
                primitive = r.primitive;
                witness = r.witness;
            } catch (const std::length_error&) {
                if (!check_randomized) throw;
                witness = refute_primitivity_randomized(A, check_k, notion, check_seed);
                primitive = false;
                known = witness.has_value();
            }
            if (!known)
                j["result"] = "unknown";
            else
                j["result"] = primitive;
            if (witness) {
                ordered_json w;
                w["divisor"] = witness->divisor;
                w["helpers"] = witness->helpers;
                j["witness"] = std::move(w);
            } else {
                j["witness"] = nullptr;
            }
            emit_json(j);
            return known && primitive ? kExitPass : kExitCheckFailed;
        }

        if (sc_lab->parsed()) {
            const auto suites = run_all_labs(lab_trials, lab_seed);
            ordered_json params;
            params["trials"] = lab_trials;
            params["seed"] = lab_seed;
            ordered_json j = json_with_params(params);
            ordered_json arr = ordered_json::array();
            bool ok = true;
            for (const auto& s : suites) {
                ordered_json e;
                e["suite"] = s.name;
                e["trials"] = s.trials;
                e["failures"] = s.failures;
                e["pass"] = s.pass;
                if (!s.first_failure.empty()) e["first_failure"] = s.first_failure;
                arr.push_back(std::move(e));
                ok = ok && s.pass;
            }
            j["suites"] = std::move(arr);
            emit_json(j);
            return ok ? kExitPass : kExitCheckFailed;
        }

        if (sc_search->parsed()) {
            const Variant v = variant_from_string(search_variant);
            ordered_json params;
            params["n"] = search_n;
            params["k"] = search_k;
            params["variant"] = search_variant;
            if (search_bracket) {
                params["tol"] = search_tol;
                const TauBracket b = bracket_tau(search_n, search_k, v, search_tol);
                ordered_json j = json_with_params(params);
                j["lo"] = b.lo;
                j["hi"] = b.hi;
                emit_json(j);
                return kExitPass;
            }
            params["lambda"] = search_lambda;
            params["budget"] = search_budget;
            const SearchResult r =
                max_weighted_sum(search_n, search_lambda, search_k, v, search_budget);
            ordered_json j = json_with_params(params);
            j["best_set"] = r.best_set;
            j["best_value"] = r.best_value;
            j["prime_value"] = r.prime_value;
            j["optimal"] = r.optimal;
            j["nodes"] = r.nodes;
            emit_json(j);
            return kExitPass;
        }

        if (sc_cgs->parsed()) {
            const PrimeTable t(std::max<std::int64_t>(sieve_limit, cgs_x));
            const CgsReport r = cgs_construct(cgs_x, cgs_k, t, cgs_lambdas);
            ordered_json params;
            params["x"] = cgs_x;
            params["k"] = cgs_k;
            params["lambdas"] = cgs_lambdas;
            ordered_json j = json_with_params(params);
            j["primes_in_range"] = r.primes_in_range;
            j["target_products"] = r.target_products;
            j["achieved_products"] = r.achieved_products;
            j["target_met"] = r.target_met;
            j["products"] = r.products;
            ordered_json comps = ordered_json::array();
            for (const auto& c : r.comparisons) comps.push_back(to_json(c));
            j["comparisons"] = std::move(comps);
            emit_json(j);
            return kExitPass;
        }

        if (sc_verify->parsed()) {
            vopt.sieve_limit = sieve_limit;
            return run_verify(vopt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
