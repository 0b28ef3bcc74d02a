#include "ktdom/conformance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>

#include "ktdom/errors.hpp"
#include "json.hpp"

namespace ktdom {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Confirms: return "CONFIRMS";
        case Verdict::WithinBracket: return "WITHIN_BRACKET";
        case Verdict::ConstructionInvalid: return "CONSTRUCTION_INVALID";
        case Verdict::ClaimContradicted: return "CLAIM_CONTRADICTED";
        case Verdict::Unresolved: return "UNRESOLVED";
    }
    return "?";
}

namespace {

Verdict verdict_from_string(const std::string& s) {
    if (s == "CONFIRMS") return Verdict::Confirms;
    if (s == "WITHIN_BRACKET") return Verdict::WithinBracket;
    if (s == "CONSTRUCTION_INVALID") return Verdict::ConstructionInvalid;
    if (s == "CLAIM_CONTRADICTED") return Verdict::ClaimContradicted;
    if (s == "UNRESOLVED") return Verdict::Unresolved;
    throw ParameterError("unknown verdict: " + s);
}

ClaimKind claim_kind_from_string(const std::string& s) {
    if (s == "exact") return ClaimKind::Exact;
    if (s == "bracket") return ClaimKind::Bracket;
    if (s == "suspect") return ClaimKind::Suspect;
    throw ParameterError("unknown claim kind: " + s);
}

SolveMethod method_from_string(const std::string& s) {
    if (s == "BRUTE") return SolveMethod::Brute;
    if (s == "BNB") return SolveMethod::BranchAndBound;
    throw ParameterError("unknown solve method: " + s);
}

bool any_invalid(const std::vector<ConstructionResult>& constructions) {
    return std::any_of(constructions.begin(), constructions.end(),
                       [](const ConstructionResult& c) { return !c.validated; });
}

bool attained_by_validated(const std::vector<ConstructionResult>& constructions,
                           int size) {
    return std::any_of(constructions.begin(), constructions.end(),
                       [size](const ConstructionResult& c) {
                           return c.validated && c.cardinality == size;
                       });
}

}  // namespace

Verdict judge(const CaseDescriptor& descriptor, const BoundsRecord& bounds,
              const std::vector<ConstructionResult>& constructions,
              const SolveResult& oracle) {
    const Claim& claim = descriptor.claim;

    // A claim entirely below the proven lower bound is wrong regardless of
    // whether the oracle finished.
    if (claim.hi < bounds.best_lower()) return Verdict::ClaimContradicted;

    if (!oracle.resolved) {
        // The proven interval [lo, hi] may still decide the claim: hi is the
        // size of a known valid set, lo a proven lower bound.
        if (claim.hi < oracle.lo || claim.lo > oracle.hi) {
            return Verdict::ClaimContradicted;
        }
        const bool decided_true = claim.kind == ClaimKind::Bracket &&
                                  claim.lo <= oracle.lo && oracle.hi <= claim.hi;
        if (!decided_true) return Verdict::Unresolved;
        return any_invalid(constructions) ? Verdict::ConstructionInvalid
                                          : Verdict::WithinBracket;
    }

    if (!claim.contains(oracle.gamma)) return Verdict::ClaimContradicted;
    if (any_invalid(constructions)) return Verdict::ConstructionInvalid;
    if (claim.kind == ClaimKind::Bracket) return Verdict::WithinBracket;

    // Exact-style claims confirm only when a validated construction attains
    // the optimum; matching by value alone is not enough.
    return attained_by_validated(constructions, oracle.gamma)
               ? Verdict::Confirms
               : Verdict::ConstructionInvalid;
}

InstanceReport evaluate_instance(const HararyParams& p, int k, SolveMethod method,
                                 std::chrono::milliseconds budget) {
    InstanceReport rep;
    rep.params = p;
    rep.k = k;
    rep.descriptor = classify(p, k);

    const CirculantGraph g = build_harary(p);
    rep.bounds = lower_bounds(g, k);  // InfeasibleError when min degree < k
    if (k == 2) {
        rep.constructions = construct_2tds(p);
    }
    rep.oracle = solve_exact(g, k, method, budget);
    rep.verdict = judge(rep.descriptor, rep.bounds, rep.constructions, rep.oracle);
    return rep;
}

namespace {

ordered_json claim_to_json(const Claim& c) {
    return {{"kind", to_string(c.kind)}, {"lo", c.lo}, {"hi", c.hi}};
}

ordered_json report_to_json_obj(const InstanceReport& r, bool include_timing) {
    ordered_json j;
    j["params"] = {{"d", r.params.d}, {"n", r.params.n}, {"k", r.k}};

    ordered_json case_j;
    case_j["l"] = r.descriptor.ell;
    case_j["r"] = r.descriptor.r;
    case_j["lp"] = r.descriptor.ell_p;
    case_j["rp"] = r.descriptor.r_p;
    case_j["m"] = r.descriptor.m;
    case_j["claim"] = claim_to_json(r.descriptor.claim);
    if (r.descriptor.alt_value) {
        case_j["alt"] = *r.descriptor.alt_value;
    }
    j["case"] = std::move(case_j);

    j["bounds"] = {{"trivial", r.bounds.lb_trivial},
                   {"degree", r.bounds.lb_degree},
                   {"degree_sum", r.bounds.lb_degree_sum}};

    ordered_json cons = ordered_json::array();
    for (const auto& c : r.constructions) {
        cons.push_back({{"id", to_string(c.id)},
                        {"labels", c.set.labels()},
                        {"size", c.cardinality},
                        {"validated", c.validated},
                        {"collapsed", c.collapsed}});
    }
    j["constructions"] = std::move(cons);

    ordered_json oracle;
    if (r.oracle.resolved) {
        oracle["gamma"] = r.oracle.gamma;
    } else {
        oracle["lo"] = r.oracle.lo;
        oracle["hi"] = r.oracle.hi;
    }
    if (!r.oracle.witness.empty()) {
        oracle["witness"] = r.oracle.witness.labels();
    }
    oracle["method"] = to_string(r.oracle.method);
    oracle["nodes"] = r.oracle.stats.nodes;
    oracle["ms"] = include_timing ? r.oracle.stats.ms : 0;
    j["oracle"] = std::move(oracle);

    j["verdict"] = to_string(r.verdict);
    return j;
}

InstanceReport report_from_json_obj(const ordered_json& j) {
    InstanceReport r;
    r.params.d = j.at("params").at("d").get<int>();
    r.params.n = j.at("params").at("n").get<int>();
    r.k = j.at("params").at("k").get<int>();

    const auto& case_j = j.at("case");
    r.descriptor.parity_class = r.params.parity_class();
    r.descriptor.m = case_j.at("m").get<int>();
    r.descriptor.ell = case_j.at("l").get<int>();
    r.descriptor.r = case_j.at("r").get<int>();
    r.descriptor.ell_p = case_j.at("lp").get<int>();
    r.descriptor.r_p = case_j.at("rp").get<int>();
    const auto& claim_j = case_j.at("claim");
    r.descriptor.claim.kind = claim_kind_from_string(claim_j.at("kind").get<std::string>());
    r.descriptor.claim.lo = claim_j.at("lo").get<int>();
    r.descriptor.claim.hi = claim_j.at("hi").get<int>();
    if (case_j.contains("alt")) {
        r.descriptor.alt_value = case_j.at("alt").get<int>();
    }

    const auto& bounds_j = j.at("bounds");
    r.bounds.lb_trivial = bounds_j.at("trivial").get<int>();
    r.bounds.lb_degree = bounds_j.at("degree").get<int>();
    r.bounds.lb_degree_sum = bounds_j.at("degree_sum").get<int>();
    r.bounds.ub_trivial = r.params.n;

    for (const auto& c_j : j.at("constructions")) {
        ConstructionResult c;
        const auto id = formula_id_from_string(c_j.at("id").get<std::string>());
        if (!id) {
            throw ParameterError("unknown formula id: " +
                                 c_j.at("id").get<std::string>());
        }
        c.id = *id;
        c.set = VertexSet::from_labels(c_j.at("labels").get<std::vector<int>>(),
                                       r.params.n);
        c.cardinality = c_j.at("size").get<int>();
        c.validated = c_j.at("validated").get<bool>();
        c.collapsed = c_j.at("collapsed").get<bool>();
        r.constructions.push_back(std::move(c));
    }

    const auto& oracle_j = j.at("oracle");
    if (oracle_j.contains("gamma")) {
        r.oracle.resolved = true;
        r.oracle.gamma = oracle_j.at("gamma").get<int>();
        r.oracle.lo = r.oracle.hi = r.oracle.gamma;
    } else {
        r.oracle.resolved = false;
        r.oracle.lo = oracle_j.at("lo").get<int>();
        r.oracle.hi = oracle_j.at("hi").get<int>();
    }
    if (oracle_j.contains("witness")) {
        r.oracle.witness = VertexSet::from_labels(
            oracle_j.at("witness").get<std::vector<int>>(), r.params.n);
    }
    r.oracle.method = method_from_string(oracle_j.at("method").get<std::string>());
    r.oracle.stats.nodes = oracle_j.at("nodes").get<std::uint64_t>();
    r.oracle.stats.ms = oracle_j.at("ms").get<std::int64_t>();

    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    return r;
}

}  // namespace

std::string report_to_json(const InstanceReport& r, bool include_timing) {
    return report_to_json_obj(r, include_timing).dump();
}

InstanceReport report_from_json(const std::string& text) {
    return report_from_json_obj(ordered_json::parse(text));
}

namespace {

constexpr int kReportSchema = 1;

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("KTDOM_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

using CacheKey = std::tuple<int, int, int>;  // (d, n, k)

std::map<CacheKey, InstanceReport> load_cache(const std::string& path) {
    std::map<CacheKey, InstanceReport> out;
    std::ifstream in(path);
    if (!in) return out;  // absent cache is an empty cache
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = ordered_json::parse(line);
            if (j.at("key").at("schema").get<int>() != kReportSchema) continue;
            const CacheKey key{j.at("key").at("d").get<int>(),
                               j.at("key").at("n").get<int>(),
                               j.at("key").at("k").get<int>()};
            out[key] = report_from_json_obj(j.at("report"));
        } catch (const std::exception&) {
            // Tolerate truncated or stale lines; they are simply recomputed.
        }
    }
    return out;
}

void append_cache(const std::string& path, const std::vector<InstanceReport>& fresh) {
    if (fresh.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw ParameterError("cannot write cache file: " + path);
    }
    for (const auto& r : fresh) {
        ordered_json line;
        line["key"] = {{"d", r.params.d}, {"n", r.params.n}, {"k", r.k},
                       {"schema", kReportSchema}};
        line["report"] = report_to_json_obj(r, true);
        out << line.dump() << '\n';
    }
}

}  // namespace

SweepResult sweep(const SweepOptions& opts) {
    if (opts.k < 2) {
        throw ParameterError("sweep requires k >= 2, got " + std::to_string(opts.k));
    }
    if (opts.d_min > opts.d_max || opts.n_min > opts.n_max) {
        throw ParameterError("empty parameter range");
    }

    SweepResult result;
    std::vector<HararyParams> todo;
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        for (int d = opts.d_min; d <= opts.d_max; ++d) {
            if (d < 2) {
                result.skipped.push_back({d, n, opts.k, "degree parameter below 2"});
            } else if (d >= n) {
                result.skipped.push_back(
                    {d, n, opts.k, "degree parameter must be below the order"});
            } else if (d < opts.k) {
                result.skipped.push_back(
                    {d, n, opts.k, "infeasible: minimum degree below k"});
            } else {
                todo.push_back({d, n});
            }
        }
    }

    std::map<CacheKey, InstanceReport> cache;
    if (!opts.cache_path.empty()) {
        cache = load_cache(opts.cache_path);
    }

    std::vector<InstanceReport> reports(todo.size());
    std::vector<std::size_t> miss_indices;
    for (std::size_t i = 0; i < todo.size(); ++i) {
        const auto it = cache.find({todo[i].d, todo[i].n, opts.k});
        if (it != cache.end()) {
            reports[i] = it->second;
        } else {
            miss_indices.push_back(i);
        }
    }

    if (!miss_indices.empty()) {
        const int workers =
            std::min<int>(resolve_workers(opts.workers),
                          static_cast<int>(miss_indices.size()));
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        const auto run = [&] {
            for (;;) {
                const std::size_t at = cursor.fetch_add(1);
                if (at >= miss_indices.size()) break;
                const std::size_t slot = miss_indices[at];
                try {
                    reports[slot] = evaluate_instance(todo[slot], opts.k, opts.method,
                                                      opts.budget);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };

        if (workers <= 1) {
            run();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) pool.emplace_back(run);
            for (auto& t : pool) t.join();
        }
        if (failure) std::rethrow_exception(failure);

        if (!opts.cache_path.empty()) {
            std::vector<InstanceReport> fresh;
            fresh.reserve(miss_indices.size());
            for (std::size_t slot : miss_indices) fresh.push_back(reports[slot]);
            append_cache(opts.cache_path, fresh);
        }
    }

    result.reports = std::move(reports);
    return result;
}

std::string sweep_to_json(const SweepResult& r, bool include_timing) {
    ordered_json j;
    j["schema"] = kReportSchema;
    ordered_json reports = ordered_json::array();
    for (const auto& rep : r.reports) {
        reports.push_back(report_to_json_obj(rep, include_timing));
    }
    j["reports"] = std::move(reports);
    ordered_json skipped = ordered_json::array();
    for (const auto& s : r.skipped) {
        skipped.push_back(
            {{"d", s.d}, {"n", s.n}, {"k", s.k}, {"reason", s.reason}});
    }
    j["skipped"] = std::move(skipped);
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepResult& r, bool include_timing) {
    std::ostringstream out;
    out << "d,n,k,l,r,lp,rp,m,claim_kind,claim_lo,claim_hi,"
           "lb_trivial,lb_degree,lb_degree_sum,best_valid_size,"
           "gamma,oracle_lo,oracle_hi,method,nodes,ms,verdict\n";
    for (const auto& rep : r.reports) {
        const auto& c = rep.descriptor;
        out << rep.params.d << ',' << rep.params.n << ',' << rep.k << ',' << c.ell
            << ',' << c.r << ',' << c.ell_p << ',' << c.r_p << ',' << c.m << ','
            << to_string(c.claim.kind) << ',' << c.claim.lo << ',' << c.claim.hi
            << ',' << rep.bounds.lb_trivial << ',' << rep.bounds.lb_degree << ','
            << rep.bounds.lb_degree_sum << ',';
        int best_valid = 0;
        for (const auto& con : rep.constructions) {
            if (con.validated && (best_valid == 0 || con.cardinality < best_valid)) {
                best_valid = con.cardinality;
            }
        }
        if (best_valid > 0) out << best_valid;
        out << ',';
        if (rep.oracle.resolved) out << rep.oracle.gamma;
        out << ',' << rep.oracle.lo << ',' << rep.oracle.hi << ','
            << to_string(rep.oracle.method) << ',' << rep.oracle.stats.nodes << ','
            << (include_timing ? rep.oracle.stats.ms : 0) << ','
            << to_string(rep.verdict) << '\n';
    }
    return out.str();
}

}  // namespace ktdom
