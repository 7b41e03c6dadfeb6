#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pitvd/multigraph.hpp"

namespace pitvd {

using SetFamily = std::vector<VertexSet>;

// Largest set size in the family (0 for an empty family).
std::size_t max_set_size(const SetFamily& family);

// d! * (k+1)^d, saturating at UINT64_MAX.
std::uint64_t sunflower_bound(std::size_t d, int k);

struct Sunflower {
    VertexSet core;
    std::vector<std::size_t> petals;  // indices into the family
};

// A sunflower with `petals` members, or nullopt if the recursive search
// cannot find one. Always succeeds when |family| > d! (petals-1)^d.
std::optional<Sunflower> find_sunflower(const SetFamily& family, std::size_t petals);

// Subfamily with the same minimal hitting sets of size <= k and at most
// d!(k+1)^d members, where d is the largest set size (or `d` if larger).
SetFamily sunflower_reduce(const SetFamily& family, int k, std::size_t d = 0);

bool hits_all(const VertexSet& z, const SetFamily& family);
bool is_minimal_hitting_set(const VertexSet& z, const SetFamily& family);

// Cycles through `v` pairwise meeting only in `v` (a double edge counts as a
// cycle of length two), or a set avoiding `v` that meets every such cycle.
struct FlowerResult {
    bool is_flower = false;
    std::vector<std::vector<VertexId>> petals;  // each starts at v; closing edge implied
    VertexSet hitting_set;
};

FlowerResult v_flower_or_hitting_set(const MultiGraph& g, VertexId v, int k);

// Returns an empty string when the result satisfies its contract, otherwise a
// description of the first violation.
std::string validate_flower_result(const MultiGraph& g, VertexId v, int k, const FlowerResult& r);

// Bipartite graph with sides A = 0..a_count-1 and B = 0..b_count-1.
struct BipartiteGraph {
    int a_count = 0;
    int b_count = 0;
    std::vector<std::vector<int>> adj;  // per A vertex, B neighbours

    BipartiteGraph() = default;
    BipartiteGraph(int a, int b) : a_count(a), b_count(b), adj(a) {}
    void add_edge(int a, int b) { adj[a].push_back(b); }
};

struct BipartiteExpansion {
    std::vector<int> a_hat;                    // ascending
    std::vector<int> b_hat;                    // ascending
    std::vector<std::pair<int, int>> edges;    // (a, b), q per a in a_hat
    int q = 0;

    // B vertices covered by `edges`, ascending.
    std::vector<int> saturated() const;
};

class ExpansionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requires |B| >= q|A|, no isolated B vertex and nonempty A.
BipartiteExpansion q_expansion_classic(const BipartiteGraph& h, int q);

// Requires nonempty A and B. Adds |B \ B^| <= q|A \ A^|; A^ may be empty.
BipartiteExpansion q_expansion_new(const BipartiteGraph& h, int q);

// Structural recheck; empty string when valid. `slack` also checks the bound
// of the new variant.
std::string validate_expansion(const BipartiteGraph& h, const BipartiteExpansion& e, bool slack);

}  // namespace pitvd
