#pragma once

#include <vector>

namespace pitvd {

// Bipartite matching between left vertices 0..left-1 and right vertices
// 0..right-1. `adj[l]` lists the right neighbours of l.
struct BipartiteMatching {
    std::vector<int> mate_left;   // -1 when exposed
    std::vector<int> mate_right;  // -1 when exposed
    int size = 0;
};

BipartiteMatching hopcroft_karp(int left, int right, const std::vector<std::vector<int>>& adj);

// Maximum matching in a general simple graph (Edmonds' blossom algorithm).
struct GeneralMatching {
    std::vector<int> mate;  // -1 when exposed
    int size = 0;
};

GeneralMatching maximum_matching(int n, const std::vector<std::vector<int>>& adj);

// Vertices left exposed by at least one maximum matching. `m` must be maximum.
std::vector<char> missable_vertices(int n, const std::vector<std::vector<int>>& adj, const GeneralMatching& m);

}  // namespace pitvd
