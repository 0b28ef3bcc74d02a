#pragma once

#include <vector>

namespace ktdom {

// Sorted set of distinct 0-based vertex positions.
//
// Canonical 1-based labels and positions are related by
//   position = (label - 1) mod order,      label = position + 1.
// Label arithmetic in construction formulas may leave the canonical range;
// from_labels reduces modulo the order and collapses any duplicates that
// reduction produces.
class VertexSet {
public:
    VertexSet() = default;

    // Sorts; rejects negative or duplicate positions.
    explicit VertexSet(std::vector<int> positions);

    // Reduces each (possibly out-of-range) 1-based label modulo order.
    static VertexSet from_labels(const std::vector<int>& labels, int order);

    const std::vector<int>& positions() const { return positions_; }
    std::vector<int> labels() const;

    bool contains(int position) const;
    int size() const { return static_cast<int>(positions_.size()); }
    bool empty() const { return positions_.empty(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> positions_;
};

}  // namespace ktdom
