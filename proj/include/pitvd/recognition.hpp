#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pitvd/indexed_graph.hpp"
#include "pitvd/multigraph.hpp"

namespace pitvd {

enum class ObstructionKind { DoubleEdge, Claw, Net, Tent, Hole, ClawTrianglePair };

const char* to_string(ObstructionKind kind);

/**
 * Witness that a graph is not a (proper interval, tree)-graph.
 *
 * Layout of `vertices` by kind:
 *   DoubleEdge        u, v
 *   Claw              centre, then the three leaves
 *   Net               triangle a, b, c, then pendants a', b', c'
 *   Tent              triangle a, b, c, then x (on ab), y (on bc), z (on ca)
 *   Hole              the cycle in order
 *   ClawTrianglePair  the claw as above; `triangle` and `path` are filled
 *
 * `path` runs from a claw vertex to a triangle vertex, both included. It is
 * empty when claw and triangle share a vertex.
 */
struct Obstruction {
    ObstructionKind kind = ObstructionKind::DoubleEdge;
    std::vector<VertexId> vertices;
    std::vector<VertexId> triangle;
    std::vector<VertexId> path;

    // Every vertex mentioned by the witness, sorted.
    VertexSet vertex_set() const;
    std::string describe() const;
};

struct PitgVerdict {
    std::optional<Obstruction> obstruction;
    bool yes() const { return !obstruction.has_value(); }
};

using OrderingResult = std::variant<std::vector<VertexId>, Obstruction>;

struct ComponentClass {
    enum class Kind { Tree, ProperInterval, Neither };
    Kind kind = Kind::Tree;
    std::vector<VertexId> ordering;          // ProperInterval only
    std::optional<Obstruction> obstruction;  // Neither only
};

// Umbrella property: for every edge v_i v_j (i < j), v_i..v_j is a clique.
bool is_proper_interval_ordering(const MultiGraph& g, const std::vector<VertexId>& order);

// g must be connected and simple; throws std::invalid_argument on a parallel edge.
OrderingResult proper_interval_ordering(const MultiGraph& g);

ComponentClass classify_component(const MultiGraph& g, const VertexSet& component);
ComponentClass classify_component(const MultiGraph& component);

PitgVerdict is_pitg(const MultiGraph& g);

// All vertex sets inducing a net, tent, C4, C5 or C6 in the underlying simple
// graph, sorted and duplicate-free.
std::vector<VertexSet> enumerate_small_obstructions(const MultiGraph& g);

// Pair at minimum distance inside `component`, or nullopt when the component
// lacks a claw or a triangle.
std::optional<Obstruction> find_claw_triangle_pair(const MultiGraph& g, const VertexSet& component);

bool validate_obstruction(const MultiGraph& g, const Obstruction& obs);

namespace detail {

// Index-level entry points shared with the exact solver.
bool is_tree_component(const IndexedGraph& g, const std::vector<int>& comp);
std::optional<std::vector<int>> pig_ordering(const IndexedGraph& g, const std::vector<int>& comp);
std::optional<std::vector<int>> shortest_hole(const IndexedGraph& g, const std::vector<int>& comp);
std::optional<std::vector<int>> find_claw(const IndexedGraph& g, const std::vector<int>& comp);
std::optional<Obstruction> find_net_or_tent(const IndexedGraph& g, const std::vector<int>& comp);
std::optional<Obstruction> claw_triangle_pair(const IndexedGraph& g, const std::vector<int>& comp);
std::optional<Obstruction> pitg_obstruction(const IndexedGraph& g);

}  // namespace detail

}  // namespace pitvd
