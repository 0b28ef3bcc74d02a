#include "ktdom/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "ktdom/errors.hpp"
#include "ktdom/numeric.hpp"

namespace ktdom {

VertexSet::VertexSet(std::vector<int> positions) : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    if (!positions_.empty() && positions_.front() < 0) {
        throw ParameterError("vertex position must be non-negative, got " +
                             std::to_string(positions_.front()));
    }
    if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
        throw ParameterError("duplicate vertex position");
    }
}

VertexSet VertexSet::from_labels(const std::vector<int>& labels, int order) {
    if (order <= 0) {
        throw ParameterError("order must be positive");
    }
    std::vector<int> positions;
    positions.reserve(labels.size());
    for (int label : labels) {
        positions.push_back(floor_mod(label - 1, order));
    }
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    VertexSet s;
    s.positions_ = std::move(positions);
    return s;
}

std::vector<int> VertexSet::labels() const {
    std::vector<int> out;
    out.reserve(positions_.size());
    for (int p : positions_) out.push_back(p + 1);
    return out;
}

bool VertexSet::contains(int position) const {
    return std::binary_search(positions_.begin(), positions_.end(), position);
}

}  // namespace ktdom
