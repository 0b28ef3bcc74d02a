#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ktdom/vertex_set.hpp"

namespace ktdom {

enum class ParityClass {
    EvenDegree,          // d = 2m: offsets 1..m
    OddDegreeEvenOrder,  // d = 2m+1, n even: offsets 1..m plus the diameter n/2
    OddDegreeOddOrder,   // d = 2m+1, n odd: offsets 1..m plus a near-diameter chord fan
};

const char* to_string(ParityClass c);

// Parameters of the Harary graph H(d, n): n vertices on a circle, each joined
// to its nearest m = floor(d/2) neighbors in both directions; for odd d the
// remaining degree comes from diameters (even n) or from the chords
// {i, i + (n-1)/2 mod n} for 0 <= i <= (n-1)/2 (odd n).  In the odd/odd class
// exactly one vertex, position (n-1)/2, carries two chords and has degree d+1;
// every other vertex has degree d.
struct HararyParams {
    int d = 0;  // degree parameter, 2 <= d < n
    int n = 0;  // order

    ParityClass parity_class() const;
    int half_degree() const;  // m = floor(d/2)

    // MinimumDegreeError when d < 2, ParameterError when d >= n or n < 3.
    void validate() const;

    bool operator==(const HararyParams&) const = default;
};

// Immutable undirected graph on vertices 0..order-1 stored as rotation
// offsets plus explicit chords.  Offsets are the canonical representation of
// circulant structure; chords carry anything extra.  An arbitrary graph is
// representable with an empty offset list (see from_edges).
class CirculantGraph {
public:
    CirculantGraph(int order, std::vector<int> offsets,
                   std::vector<std::pair<int, int>> chords);

    // Edges may repeat in the input; duplicates are merged.
    static CirculantGraph from_edges(int order,
                                     const std::vector<std::pair<int, int>>& edges);

    int order() const { return order_; }
    const std::vector<int>& offsets() const { return offsets_; }
    const std::vector<std::pair<int, int>>& chords() const { return chords_; }

    bool adjacent(int u, int v) const;
    VertexSet neighbors(int v) const;
    int degree(int v) const;

    int min_degree() const { return min_degree_; }
    int max_degree() const { return max_degree_; }
    std::size_t edge_count() const;

    // Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    // (degree, multiplicity) pairs, ascending by degree.
    std::vector<std::pair<int, int>> degree_profile() const;

    // Per-vertex neighborhood bitmasks; empty when order > 64.
    const std::vector<std::uint64_t>& adjacency_masks() const { return masks_; }

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::vector<int> offsets_;
    std::vector<std::pair<int, int>> chords_;
    std::vector<std::vector<int>> chord_adj_;
    std::vector<int> degrees_;
    std::vector<std::uint64_t> masks_;
    int min_degree_ = 0;
    int max_degree_ = 0;
};

CirculantGraph build_harary(const HararyParams& p);

}  // namespace ktdom
