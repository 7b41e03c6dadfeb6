#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pitvd/multigraph.hpp"

namespace pitvd {

// Consecutive cliques of a proper interval component, left to right. Each
// clique keeps the order of the underlying ordering, so front() is its first
// vertex.
class CliquePartition {
public:
    CliquePartition() = default;
    CliquePartition(std::vector<VertexId> ordering, std::vector<std::vector<VertexId>> cliques);

    const std::vector<VertexId>& ordering() const { return ordering_; }
    const std::vector<std::vector<VertexId>>& cliques() const { return cliques_; }
    const std::vector<VertexId>& clique(std::size_t i) const { return cliques_.at(i); }
    std::size_t size() const { return cliques_.size(); }

    // Index of the clique holding v, or -1.
    int clique_of(VertexId v) const;
    // Position of v in the ordering, or -1.
    int position(VertexId v) const;

private:
    std::vector<VertexId> ordering_;
    std::vector<std::vector<VertexId>> cliques_;
    std::map<VertexId, int> clique_index_;
    std::map<VertexId, int> position_;
};

// Greedy construction: the first remaining vertex together with its later
// neighbours forms the next clique. `ordering` must be a proper interval
// ordering of a component of g.
CliquePartition build_clique_partition(const MultiGraph& g, const std::vector<VertexId>& ordering);

// Attachment sets of clique `index` (0-based): its neighbours in the previous
// and in the next clique.
std::pair<VertexSet, VertexSet> attachments(const MultiGraph& g, const CliquePartition& p, std::size_t index);

// Deletes clique `index` (0-based, interior) and joins its attachment sets.
// Returns the added edges.
std::vector<std::pair<VertexId, VertexId>> bypass_in_place(MultiGraph& g, const CliquePartition& p, std::size_t index);

MultiGraph bypass(const MultiGraph& g, const CliquePartition& p, std::size_t index);

}  // namespace pitvd
