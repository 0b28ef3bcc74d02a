#pragma once

#include <vector>

#include "ktdom/harary.hpp"
#include "ktdom/vertex_set.hpp"

namespace ktdom {

// coverage[v] = |N(v) ∩ S| under open neighborhoods: membership of v itself
// never contributes to coverage[v].
using CoverageVector = std::vector<int>;

struct BoundsRecord {
    int lb_trivial = 0;     // k + 1
    int lb_degree = 0;      // ceil(k * order / max_degree)
    int lb_degree_sum = 0;  // shortest descending-degree prefix summing to >= k * order
    int ub_trivial = 0;     // order

    int best_lower() const;

    bool operator==(const BoundsRecord&) const = default;
};

CoverageVector coverage(const CirculantGraph& g, const VertexSet& s);

// S is a k-tuple total dominating set iff every vertex of g has at least k
// neighbors in S.  Requires k >= 1.
bool is_ktds(const CirculantGraph& g, const VertexSet& s, int k);

// Vertices contained in every kTDS: the union of N(v) over vertices v of
// degree exactly k (all k neighbors of such a v are forced).
VertexSet forced_vertices(const CirculantGraph& g, int k);

// InfeasibleError when min_degree(g) < k (no kTDS exists).
BoundsRecord lower_bounds(const CirculantGraph& g, int k);

}  // namespace ktdom
