#include "pitvd/clique_partition.hpp"

#include <set>
#include <stdexcept>

#include "pitvd/recognition.hpp"

namespace pitvd {

CliquePartition::CliquePartition(std::vector<VertexId> ordering, std::vector<std::vector<VertexId>> cliques)
    : ordering_(std::move(ordering)), cliques_(std::move(cliques)) {
    for (std::size_t i = 0; i < ordering_.size(); ++i) position_[ordering_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < cliques_.size(); ++i)
        for (VertexId v : cliques_[i]) clique_index_[v] = static_cast<int>(i);
}

int CliquePartition::clique_of(VertexId v) const {
    auto it = clique_index_.find(v);
    return it == clique_index_.end() ? -1 : it->second;
}

int CliquePartition::position(VertexId v) const {
    auto it = position_.find(v);
    return it == position_.end() ? -1 : it->second;
}

CliquePartition build_clique_partition(const MultiGraph& g, const std::vector<VertexId>& ordering) {
    std::set<VertexId> members(ordering.begin(), ordering.end());
    if (members.size() != ordering.size()) throw std::invalid_argument("clique partition: repeated vertex in ordering");
    for (VertexId v : ordering) {
        if (!g.has_vertex(v)) throw std::invalid_argument("clique partition: unknown vertex in ordering");
        for (const auto& [w, m] : g.neighbors(v))
            if (!members.count(w)) throw std::invalid_argument("clique partition: ordering is not a whole component");
    }
    if (!is_proper_interval_ordering(g, ordering)) throw std::invalid_argument("clique partition: ordering is not proper interval");
    std::vector<std::vector<VertexId>> cliques;
    std::size_t i = 0;
    while (i < ordering.size()) {
        std::vector<VertexId> clique{ordering[i]};
        std::size_t j = i + 1;
        while (j < ordering.size() && g.adjacent(ordering[i], ordering[j])) clique.push_back(ordering[j++]);
        cliques.push_back(std::move(clique));
        i = j;
    }
    return CliquePartition(ordering, std::move(cliques));
}

std::pair<VertexSet, VertexSet> attachments(const MultiGraph& g, const CliquePartition& p, std::size_t index) {
    if (index >= p.size()) throw std::out_of_range("attachments: clique index out of range");
    const int idx = static_cast<int>(index);
    VertexSet left, right;
    for (VertexId v : p.clique(index))
        for (const auto& [w, m] : g.neighbors(v)) {
            int c = p.clique_of(w);
            if (c == idx - 1) left.push_back(w);
            if (c == idx + 1) right.push_back(w);
        }
    normalize(left);
    normalize(right);
    return {left, right};
}

std::vector<std::pair<VertexId, VertexId>> bypass_in_place(MultiGraph& g, const CliquePartition& p, std::size_t index) {
    if (index == 0 || index + 1 >= p.size()) throw std::invalid_argument("bypass: boundary clique");
    auto [left, right] = attachments(g, p, index);
    if (left.empty() || right.empty()) throw std::invalid_argument("bypass: clique lacks a neighbour on one side");
    VertexSet doomed = p.clique(index);
    normalize(doomed);
    g.delete_vertices(doomed);
    std::vector<std::pair<VertexId, VertexId>> added;
    for (VertexId u : left)
        for (VertexId w : right)
            if (!g.adjacent(u, w)) {
                g.add_edge(u, w);
                added.emplace_back(std::min(u, w), std::max(u, w));
            }
    return added;
}

MultiGraph bypass(const MultiGraph& g, const CliquePartition& p, std::size_t index) {
    MultiGraph out = g;
    bypass_in_place(out, p, index);
    return out;
}

}  // namespace pitvd
