#include "ktdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>
#include <vector>

#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/numeric.hpp"

namespace ktdom {

const char* to_string(SolveMethod m) {
    return m == SolveMethod::Brute ? "BRUTE" : "BNB";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    explicit Deadline(std::chrono::milliseconds budget)
        : enabled(budget.count() >= 0),
          end(Clock::now() + budget) {}

    bool expired() const { return enabled && Clock::now() >= end; }

    bool enabled;
    Clock::time_point end;
};

std::vector<int> mask_positions(std::uint64_t mask) {
    std::vector<int> out;
    while (mask != 0) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

const std::vector<std::uint64_t>& masks_or_throw(const CirculantGraph& g) {
    if (g.adjacency_masks().empty()) {
        throw ParameterError("exact solving is limited to order <= 64, got order " +
                             std::to_string(g.order()));
    }
    return g.adjacency_masks();
}

// Exhaustive search by ascending cardinality; within one cardinality the
// candidate index tuples are visited in lexicographic order, so the witness
// is the lexicographically least optimum.
SolveResult solve_brute(const CirculantGraph& g, int k, const Deadline& deadline) {
    const auto& adj = masks_or_throw(g);
    const int n = g.order();
    const int start = lower_bounds(g, k).best_lower();

    SolveResult res;
    res.method = SolveMethod::Brute;

    std::uint64_t tested = 0;
    for (int s = start; s <= n; ++s) {
        if (deadline.expired()) {
            res.resolved = false;
            res.lo = s;
            res.hi = n;
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            res.witness = VertexSet(std::move(all));
            res.stats.nodes = tested;
            return res;
        }
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ++tested;
            if ((tested & 0xFFF) == 0 && deadline.expired()) {
                res.resolved = false;
                res.lo = s;  // every smaller cardinality is exhausted
                res.hi = n;
                std::vector<int> all(n);
                std::iota(all.begin(), all.end(), 0);
                res.witness = VertexSet(std::move(all));
                res.stats.nodes = tested;
                return res;
            }

            std::uint64_t mask = 0;
            for (int v : idx) mask |= std::uint64_t{1} << v;
            bool ok = true;
            for (int v = 0; v < n; ++v) {
                if (std::popcount(adj[v] & mask) < k) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                res.resolved = true;
                res.gamma = res.lo = res.hi = s;
                res.witness = VertexSet(idx);
                res.stats.nodes = tested;
                return res;
            }

            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // Unreachable: the full vertex set is a kTDS whenever min_degree >= k,
    // which lower_bounds already guaranteed.
    throw std::logic_error("exhaustive search fell through");
}

struct BnbState {
    const std::vector<std::uint64_t>& adj;
    int n;
    int k;
    int max_degree;
    int floor_lb;
    std::uint64_t full;
    const Deadline& deadline;

    std::vector<int> cov;
    int best;
    std::uint64_t best_mask;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    void include(int u, std::uint64_t& s_mask) {
        s_mask |= std::uint64_t{1} << u;
        for (int w : mask_positions(adj[u])) ++cov[w];
    }

    void exclude_undo(int u, std::uint64_t& s_mask) {
        s_mask &= ~(std::uint64_t{1} << u);
        for (int w : mask_positions(adj[u])) --cov[w];
    }

    void dfs(std::uint64_t s_mask, std::uint64_t x_mask) {
        ++nodes;
        if (timed_out || best == floor_lb) return;
        if ((nodes & 0x3FF) == 0 && deadline.expired()) {
            timed_out = true;
            return;
        }

        const int size = std::popcount(s_mask);
        int total_deficit = 0;
        for (int v = 0; v < n; ++v) {
            total_deficit += std::max(0, k - cov[v]);
        }
        if (total_deficit == 0) {
            if (size < best) {
                best = size;
                best_mask = s_mask;
            }
            return;
        }
        if (size + ceil_div(total_deficit, max_degree) >= best) return;

        // Pick the most deficient vertex (lowest position wins ties); bail out
        // if any deficient vertex can no longer be covered.
        const std::uint64_t avail = full & ~(s_mask | x_mask);
        int target = -1;
        int target_deficit = 0;
        for (int v = 0; v < n; ++v) {
            const int deficit = k - cov[v];
            if (deficit <= 0) continue;
            if (deficit > std::popcount(adj[v] & avail)) return;
            if (deficit > target_deficit) {
                target_deficit = deficit;
                target = v;
            }
        }

        const int u = std::countr_zero(adj[target] & avail);

        include(u, s_mask);
        dfs(s_mask, x_mask);
        exclude_undo(u, s_mask);

        if (timed_out || best == floor_lb) return;
        dfs(s_mask, x_mask | (std::uint64_t{1} << u));
    }
};

// Include/exclude search on the lowest-positioned neighbor of the most
// deficient vertex, seeded with the forced vertices.
SolveResult solve_bnb(const CirculantGraph& g, int k, const Deadline& deadline) {
    const auto& adj = masks_or_throw(g);
    const int n = g.order();
    const BoundsRecord bounds = lower_bounds(g, k);

    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    BnbState state{
        .adj = adj,
        .n = n,
        .k = k,
        .max_degree = g.max_degree(),
        .floor_lb = bounds.best_lower(),
        .full = full,
        .deadline = deadline,
        .cov = std::vector<int>(n, 0),
        .best = n,
        .best_mask = full,
    };

    std::uint64_t seed = 0;
    const VertexSet forced = forced_vertices(g, k);
    for (int v : forced.positions()) {
        state.include(v, seed);
    }
    state.timed_out = deadline.expired();
    state.dfs(seed, 0);

    SolveResult res;
    res.method = SolveMethod::BranchAndBound;
    res.stats.nodes = state.nodes;
    res.witness = VertexSet(mask_positions(state.best_mask));
    if (state.timed_out) {
        res.resolved = false;
        res.lo = state.floor_lb;
        res.hi = state.best;
    } else {
        res.resolved = true;
        res.gamma = res.lo = res.hi = state.best;
    }
    return res;
}

}  // namespace

SolveResult solve_exact(const CirculantGraph& g, int k, SolveMethod method,
                        std::chrono::milliseconds budget) {
    if (k < 1) {
        throw ParameterError("k must be at least 1, got " + std::to_string(k));
    }
    const Deadline deadline(budget);
    const auto t0 = Clock::now();
    SolveResult res = method == SolveMethod::Brute ? solve_brute(g, k, deadline)
                                                   : solve_bnb(g, k, deadline);
    res.stats.ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return res;
}

bool cross_check(const CirculantGraph& g, int k, std::chrono::milliseconds budget) {
    const SolveResult brute = solve_exact(g, k, SolveMethod::Brute, budget);
    const SolveResult bnb = solve_exact(g, k, SolveMethod::BranchAndBound, budget);
    if (!brute.resolved || !bnb.resolved) {
        throw std::runtime_error("cross check exceeded its budget");
    }
    return brute.gamma == bnb.gamma;
}

}  // namespace ktdom
