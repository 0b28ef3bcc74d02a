#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "ktdom/constructions.hpp"
#include "ktdom/domination.hpp"
#include "ktdom/solver.hpp"

namespace ktdom {

enum class Verdict {
    Confirms,             // oracle matches an exact-style claim and a validated set attains it
    WithinBracket,        // oracle lies inside a bracket claim
    ConstructionInvalid,  // some applicable formula failed validation
    ClaimContradicted,    // the claim is provably wrong on this instance
    Unresolved,           // budget expired with the claim still undecided
};

const char* to_string(Verdict v);

struct InstanceReport {
    HararyParams params;
    int k = 2;
    CaseDescriptor descriptor;
    BoundsRecord bounds;
    std::vector<ConstructionResult> constructions;
    SolveResult oracle;
    Verdict verdict = Verdict::Unresolved;
};

// Pure function of the evaluated fields.  Precedence when several conditions
// hold: ClaimContradicted, then ConstructionInvalid, then Confirms or
// WithinBracket; Unresolved only when the budget expired with the claim
// still undecided by the proven interval.  Individual formula outcomes stay
// recorded in the constructions array regardless of the verdict.
Verdict judge(const CaseDescriptor& descriptor, const BoundsRecord& bounds,
              const std::vector<ConstructionResult>& constructions,
              const SolveResult& oracle);

// Full pipeline for one instance: build, classify, bound, construct (k == 2),
// solve, judge.  Propagates parameter and infeasibility errors.
InstanceReport evaluate_instance(const HararyParams& p, int k,
                                 SolveMethod method = SolveMethod::BranchAndBound,
                                 std::chrono::milliseconds budget = kNoBudget);

struct SkipRecord {
    int d = 0;
    int n = 0;
    int k = 0;
    std::string reason;
};

struct SweepOptions {
    int d_min = 2;
    int d_max = 2;
    int n_min = 3;
    int n_max = 3;
    int k = 2;
    SolveMethod method = SolveMethod::BranchAndBound;
    std::chrono::milliseconds budget{60000};
    int workers = 0;         // 0: KTDOM_WORKERS env var, else hardware_concurrency
    std::string cache_path;  // empty: no cache
};

struct SweepResult {
    std::vector<InstanceReport> reports;   // ordered by (n, d)
    std::vector<SkipRecord> skipped;       // invalid or infeasible combos, by (n, d)
};

// Evaluates every (d, n) in range.  Combos with d >= n, d < 2 or d < k are
// skipped with a reason, never errors.  Instances run on a small worker pool;
// results are identical regardless of worker count.  With a cache path,
// previously computed reports are reused and fresh ones appended.
SweepResult sweep(const SweepOptions& opts);

// JSON object per report; timing fields are emitted as 0 when include_timing
// is false so that consecutive runs compare byte-identical.
std::string report_to_json(const InstanceReport& r, bool include_timing = true);
InstanceReport report_from_json(const std::string& text);

std::string sweep_to_json(const SweepResult& r, bool include_timing = true);
std::string sweep_to_csv(const SweepResult& r, bool include_timing = true);

}  // namespace ktdom
