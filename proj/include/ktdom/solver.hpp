#pragma once

#include <chrono>
#include <cstdint>

#include "ktdom/harary.hpp"
#include "ktdom/vertex_set.hpp"

namespace ktdom {

enum class SolveMethod {
    Brute,           // cardinality-ascending exhaustive search
    BranchAndBound,  // include/exclude search seeded with forced vertices
};

const char* to_string(SolveMethod m);

struct SolveStats {
    std::uint64_t nodes = 0;  // subsets tested (brute) or tree nodes (bnb)
    std::int64_t ms = 0;
};

// Budget convention: negative = unlimited, zero = already expired (forces the
// timeout path deterministically), positive = wall-clock milliseconds.
inline constexpr std::chrono::milliseconds kNoBudget{-1};

struct SolveResult {
    bool resolved = false;
    int gamma = 0;      // exact optimum; meaningful only when resolved
    VertexSet witness;  // optimal set when resolved, else best known kTDS
    int lo = 0;         // proven lower bound (== gamma when resolved)
    int hi = 0;         // size of the best known kTDS (== gamma when resolved)
    SolveMethod method = SolveMethod::BranchAndBound;
    SolveStats stats;
};

// Exact minimum cardinality of a k-tuple total dominating set.
// Deterministic: identical inputs yield identical gamma, witness and node
// counts.  Requires order <= 64 (neighborhoods live in machine words) and
// k >= 1.  InfeasibleError when min_degree(g) < k.  An exhausted budget
// yields resolved = false with the proven interval [lo, hi], not an error.
SolveResult solve_exact(const CirculantGraph& g, int k,
                        SolveMethod method = SolveMethod::BranchAndBound,
                        std::chrono::milliseconds budget = kNoBudget);

// True iff both methods resolve and agree.  Throws InfeasibleError when no
// kTDS exists and std::runtime_error when a budget expires.
bool cross_check(const CirculantGraph& g, int k,
                 std::chrono::milliseconds budget = kNoBudget);

}  // namespace ktdom
