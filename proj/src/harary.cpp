#include "ktdom/harary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ktdom/errors.hpp"
#include "ktdom/numeric.hpp"

namespace ktdom {

const char* to_string(ParityClass c) {
    switch (c) {
        case ParityClass::EvenDegree: return "EVEN_D";
        case ParityClass::OddDegreeEvenOrder: return "ODD_D_EVEN_N";
        case ParityClass::OddDegreeOddOrder: return "ODD_D_ODD_N";
    }
    return "?";
}

ParityClass HararyParams::parity_class() const {
    if (d % 2 == 0) return ParityClass::EvenDegree;
    return n % 2 == 0 ? ParityClass::OddDegreeEvenOrder : ParityClass::OddDegreeOddOrder;
}

int HararyParams::half_degree() const { return d / 2; }

void HararyParams::validate() const {
    if (d < 2) {
        throw MinimumDegreeError("degree parameter must be at least 2, got " +
                                 std::to_string(d));
    }
    if (n < 3) {
        throw ParameterError("order must be at least 3, got " + std::to_string(n));
    }
    if (d >= n) {
        throw ParameterError("degree parameter must be below the order: d=" +
                             std::to_string(d) + ", n=" + std::to_string(n));
    }
}

namespace {

int circular_distance(int u, int v, int order) {
    int diff = u > v ? u - v : v - u;
    return std::min(diff, order - diff);
}

}  // namespace

CirculantGraph::CirculantGraph(int order, std::vector<int> offsets,
                               std::vector<std::pair<int, int>> chords)
    : order_(order), offsets_(std::move(offsets)), chords_(std::move(chords)) {
    if (order_ < 1) {
        throw ParameterError("graph order must be positive");
    }
    std::sort(offsets_.begin(), offsets_.end());
    for (int o : offsets_) {
        if (o < 1 || o > order_ / 2) {
            throw ParameterError("offset " + std::to_string(o) +
                                 " outside [1, " + std::to_string(order_ / 2) + "]");
        }
    }
    if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end()) {
        throw ParameterError("duplicate offset");
    }

    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : chords_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= order_) {
            throw ParameterError("chord endpoint outside [0, order)");
        }
        if (u == v) {
            throw ParameterError("chord endpoints must differ");
        }
        if (std::binary_search(offsets_.begin(), offsets_.end(),
                               circular_distance(u, v, order_))) {
            throw ParameterError("chord duplicates an offset edge");
        }
        if (!seen.insert({u, v}).second) {
            throw ParameterError("duplicate chord");
        }
    }
    std::sort(chords_.begin(), chords_.end());

    chord_adj_.assign(order_, {});
    for (auto [u, v] : chords_) {
        chord_adj_[u].push_back(v);
        chord_adj_[v].push_back(u);
    }
    for (auto& lst : chord_adj_) std::sort(lst.begin(), lst.end());

    degrees_.assign(order_, 0);
    if (order_ <= 64) masks_.assign(order_, 0);
    for (int v = 0; v < order_; ++v) {
        const VertexSet nb = neighbors(v);
        degrees_[v] = nb.size();
        if (!masks_.empty()) {
            for (int w : nb.positions()) {
                masks_[v] |= std::uint64_t{1} << w;
            }
        }
    }
    min_degree_ = degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
    max_degree_ = degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

CirculantGraph CirculantGraph::from_edges(int order,
                                          const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> unique;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        unique.insert({u, v});
    }
    return CirculantGraph(order, {},
                          std::vector<std::pair<int, int>>(unique.begin(), unique.end()));
}

void CirculantGraph::check_vertex(int v) const {
    if (v < 0 || v >= order_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                std::to_string(order_) + ")");
    }
}

bool CirculantGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (std::binary_search(offsets_.begin(), offsets_.end(),
                           circular_distance(u, v, order_))) {
        return true;
    }
    const auto& lst = chord_adj_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

VertexSet CirculantGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(2 * offsets_.size() + chord_adj_[v].size());
    for (int o : offsets_) {
        int fwd = (v + o) % order_;
        int bwd = floor_mod(v - o, order_);
        out.push_back(fwd);
        if (bwd != fwd) out.push_back(bwd);  // the half-order offset pairs up
    }
    out.insert(out.end(), chord_adj_[v].begin(), chord_adj_[v].end());
    return VertexSet(std::move(out));
}

int CirculantGraph::degree(int v) const {
    check_vertex(v);
    return degrees_[v];
}

std::size_t CirculantGraph::edge_count() const {
    std::size_t total = 0;
    for (int deg : degrees_) total += static_cast<std::size_t>(deg);
    return total / 2;
}

std::vector<std::pair<int, int>> CirculantGraph::edges() const {
    std::set<std::pair<int, int>> out;
    for (int v = 0; v < order_; ++v) {
        const VertexSet nb = neighbors(v);
        for (int w : nb.positions()) {
            out.insert({std::min(v, w), std::max(v, w)});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::pair<int, int>> CirculantGraph::degree_profile() const {
    std::map<int, int> hist;
    for (int deg : degrees_) ++hist[deg];
    return {hist.begin(), hist.end()};
}

CirculantGraph build_harary(const HararyParams& p) {
    p.validate();
    const int m = p.half_degree();
    std::vector<int> offsets;
    for (int o = 1; o <= m; ++o) offsets.push_back(o);

    std::vector<std::pair<int, int>> chords;
    switch (p.parity_class()) {
        case ParityClass::EvenDegree:
            break;
        case ParityClass::OddDegreeEvenOrder:
            offsets.push_back(p.n / 2);
            break;
        case ParityClass::OddDegreeOddOrder: {
            const int half = (p.n - 1) / 2;
            for (int i = 0; i <= half; ++i) {
                chords.push_back({i, (i + half) % p.n});
            }
            break;
        }
    }
    // d < n keeps offsets below n/2 in the odd/odd class, so the constructor's
    // chord-versus-offset duplicate check doubles as a structural assertion.
    return CirculantGraph(p.n, std::move(offsets), std::move(chords));
}

}  // namespace ktdom
