#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace pitvd {

using VertexId = std::uint32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/**
 * Undirected multigraph without self-loops.
 *
 * Vertex ids are stable: deleting a vertex never renumbers the others and a
 * deleted id is never handed out again by add_vertex(). All iteration is in
 * ascending id order.
 */
class MultiGraph {
public:
    using Adjacency = std::map<VertexId, int>;

    MultiGraph() = default;
    // Vertices 0..n-1, no edges.
    explicit MultiGraph(std::size_t n);

    VertexId add_vertex();
    // Insert a vertex with a caller-chosen id; throws if it already exists.
    void add_vertex(VertexId id);
    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }

    // Adds `multiplicity` parallel copies of uv (summed with existing ones).
    void add_edge(VertexId u, VertexId v, int multiplicity = 1);
    // Sets the multiplicity of uv; 0 removes the pair.
    void set_multiplicity(VertexId u, VertexId v, int multiplicity);
    void remove_edge(VertexId u, VertexId v) { set_multiplicity(u, v, 0); }
    int multiplicity(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }

    const Adjacency& neighbors(VertexId v) const;
    // Distinct neighbours, ascending.
    VertexSet neighbor_set(VertexId v) const;
    // Degree counts multiplicity.
    std::size_t degree(VertexId v) const;

    std::size_t num_vertices() const { return adj_.size(); }
    // Number of adjacent pairs.
    std::size_t num_edges() const;
    // Sum of multiplicities over all pairs.
    std::size_t total_multiplicity() const;
    VertexSet vertices() const;
    // (u, v, multiplicity) with u < v, lexicographic.
    std::vector<std::tuple<VertexId, VertexId, int>> edges() const;
    bool is_simple() const;
    // Smallest id that add_vertex() may still return.
    VertexId next_id() const { return next_id_; }

    void delete_vertex(VertexId v);
    void delete_vertices(const VertexSet& vs);
    MultiGraph induced(const VertexSet& keep) const;

    bool operator==(const MultiGraph& other) const { return adj_ == other.adj_; }
    bool operator!=(const MultiGraph& other) const { return !(*this == other); }

private:
    void require(VertexId v) const;

    std::map<VertexId, Adjacency> adj_;
    VertexId next_id_ = 0;
};

enum class PathKind { Tail, Overbridge, Other };

const char* to_string(PathKind kind);

struct DegreeTwoPath {
    // v_1 .. v_l. For a tail, v_1 is the high-degree end.
    std::vector<VertexId> vertices;
    PathKind kind = PathKind::Other;
    // v_l is adjacent to v_1: a cycle hanging at v_1, or a whole cycle component.
    bool closed = false;

    std::size_t length() const { return vertices.size(); }
};

// Components sorted by minimum id; each component sorted.
std::vector<VertexSet> connected_components(const MultiGraph& g);

// Copy of g without zs. Throws std::invalid_argument on an unknown id.
MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& zs);

// Maximal paths whose internal vertices have degree exactly 2 (two distinct
// neighbours joined by single edges). Only paths with at least one internal
// vertex are reported; each vertex is internal to at most one path.
std::vector<DegreeTwoPath> find_degree2_paths(const MultiGraph& g);

// Appends a path of `length` fresh vertices at v; returns the new ids in order.
VertexSet attach_tail(MultiGraph& g, VertexId v, int length);

// Set helpers on sorted vectors.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, VertexId v);
void normalize(VertexSet& s);

}  // namespace pitvd
