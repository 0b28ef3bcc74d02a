#include "ktdom/domination.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ktdom/errors.hpp"
#include "ktdom/numeric.hpp"

namespace ktdom {

int BoundsRecord::best_lower() const {
    return std::max({lb_trivial, lb_degree, lb_degree_sum});
}

CoverageVector coverage(const CirculantGraph& g, const VertexSet& s) {
    CoverageVector cov(g.order(), 0);
    for (int v : s.positions()) {
        const VertexSet nb = g.neighbors(v);  // throws for out-of-range members
        for (int w : nb.positions()) {
            ++cov[w];
        }
    }
    return cov;
}

bool is_ktds(const CirculantGraph& g, const VertexSet& s, int k) {
    if (k < 1) {
        throw ParameterError("k must be at least 1, got " + std::to_string(k));
    }
    CoverageVector cov = coverage(g, s);
    return std::all_of(cov.begin(), cov.end(), [k](int c) { return c >= k; });
}

VertexSet forced_vertices(const CirculantGraph& g, int k) {
    if (k < 1) {
        throw ParameterError("k must be at least 1, got " + std::to_string(k));
    }
    std::vector<int> forced;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == k) {
            const VertexSet nb = g.neighbors(v);
            forced.insert(forced.end(), nb.positions().begin(), nb.positions().end());
        }
    }
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    return VertexSet(std::move(forced));
}

BoundsRecord lower_bounds(const CirculantGraph& g, int k) {
    if (k < 1) {
        throw ParameterError("k must be at least 1, got " + std::to_string(k));
    }
    if (g.min_degree() < k) {
        throw InfeasibleError("no " + std::to_string(k) +
                              "-tuple total dominating set: minimum degree " +
                              std::to_string(g.min_degree()) + " < k");
    }

    BoundsRecord b;
    b.lb_trivial = k + 1;
    b.lb_degree = ceil_div(k * g.order(), g.max_degree());

    // Any kTDS S satisfies sum_{v} coverage(v) = sum_{s in S} deg(s), and the
    // left side is at least k * order; greedily taking the largest degrees
    // gives the smallest size that can reach that total.
    std::vector<int> degrees(g.order());
    for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    const long long needed = static_cast<long long>(k) * g.order();
    long long acc = 0;
    int size = 0;
    for (int deg : degrees) {
        if (acc >= needed) break;
        acc += deg;
        ++size;
    }
    b.lb_degree_sum = size;

    b.ub_trivial = g.order();
    return b;
}

}  // namespace ktdom
