#pragma once

// Test-side oracles, deliberately independent of the library: adjacency is
// rebuilt straight from the circle definition and optima come from exhaustive
// enumeration over bitmasks.  Nothing here calls into ktdom.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testsupport {

// H(d, n) by definition: join vertices at circular distance <= floor(d/2);
// for odd d add the diameters (even n) or the chords {i, i + (n-1)/2} for
// 0 <= i <= (n-1)/2 (odd n).
inline std::vector<std::set<int>> naive_adjacency(int d, int n) {
    const int m = d / 2;
    std::vector<std::set<int>> adj(n);
    auto join = [&](int u, int v) {
        u %= n;
        v %= n;
        if (u == v) return;
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int gap = std::min(v - u, n - (v - u));
            if (gap <= m) join(u, v);
        }
    }
    if (d % 2 == 1) {
        if (n % 2 == 0) {
            for (int u = 0; u < n / 2; ++u) join(u, u + n / 2);
        } else {
            const int h = (n - 1) / 2;
            for (int i = 0; i <= h; ++i) join(i, i + h);
        }
    }
    return adj;
}

inline std::vector<std::pair<int, int>> edge_pairs(
    const std::vector<std::set<int>>& adj) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        for (int v : adj[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

inline bool naive_is_ktds(const std::vector<std::set<int>>& adj,
                          const std::vector<int>& members, int k) {
    const std::set<int> s(members.begin(), members.end());
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        int cov = 0;
        for (int w : adj[v]) cov += static_cast<int>(s.count(w));
        if (cov < k) return false;
    }
    return true;
}

// Exhaustive optimum over all 2^n subsets; -1 when no set qualifies.
inline int naive_gamma(const std::vector<std::set<int>>& adj, int k) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::uint64_t> nb(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : adj[v]) nb[v] |= std::uint64_t{1} << w;
    }
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (best >= 0 && size >= best) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            ok = std::popcount(nb[v] & mask) >= k;
        }
        if (ok) best = size;
    }
    return best;
}

// Deterministic coin-flip subset; avoids distribution classes so the stream
// is identical across standard library implementations.
inline std::vector<int> random_positions(std::mt19937& rng, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (rng() & 1u) out.push_back(v);
    }
    return out;
}

}  // namespace testsupport
