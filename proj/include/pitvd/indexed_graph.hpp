#pragma once

#include <cstdint>
#include <vector>

#include "pitvd/multigraph.hpp"

namespace pitvd {

// Dense snapshot of a MultiGraph with vertices renamed to 0..n-1 in id order.
// Used by the recognition and search code, which touch adjacency constantly.
struct IndexedGraph {
    int n = 0;
    std::vector<VertexId> ids;
    std::vector<std::vector<int>> adj;   // ascending
    std::vector<std::uint8_t> mult;      // n*n, saturating at 255

    IndexedGraph() = default;
    explicit IndexedGraph(const MultiGraph& g);

    bool adjacent(int i, int j) const { return mult[static_cast<std::size_t>(i) * n + j] != 0; }
    int multiplicity(int i, int j) const { return mult[static_cast<std::size_t>(i) * n + j]; }
    int degree(int i) const { return static_cast<int>(adj[i].size()); }
    int index_of(VertexId v) const;  // -1 if absent

    // Subgraph on `keep` (ascending indices), renumbered.
    IndexedGraph induced(const std::vector<int>& keep) const;
    IndexedGraph without(int vertex) const;

    VertexSet to_ids(const std::vector<int>& idx) const;
    std::vector<std::vector<int>> components() const;
};

}  // namespace pitvd
