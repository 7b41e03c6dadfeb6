// Random set families and bipartite graphs, with checks written apart from
// the library code they verify.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pitvd/combinatorics.hpp"
#include "pitvd/io.hpp"
#include "pitvd/multigraph.hpp"

namespace families {

using namespace pitvd;

inline SetFamily random_family(Rng& rng, std::size_t count, std::size_t universe, std::size_t max_size) {
    SetFamily out;
    for (std::size_t i = 0; i < count; ++i) {
        VertexSet s;
        const std::size_t size = 1 + rng.below(std::min(max_size, universe));
        while (s.size() < size) {
            s.push_back(static_cast<VertexId>(rng.below(universe)));
            normalize(s);
        }
        out.push_back(s);
    }
    return out;
}

// Every subset of 0..universe-1 with at most k elements.
inline std::vector<VertexSet> small_subsets(std::size_t universe, int k) {
    std::vector<VertexSet> out{{}};
    for (std::size_t at = 0; at < out.size(); ++at) {
        if (static_cast<int>(out[at].size()) == k) continue;
        const VertexId from = out[at].empty() ? 0 : out[at].back() + 1;
        for (VertexId v = from; v < universe; ++v) {
            VertexSet next = out[at];
            next.push_back(v);
            out.push_back(next);
        }
    }
    return out;
}

inline bool naive_hits(const VertexSet& z, const VertexSet& s) {
    for (VertexId x : s)
        if (std::find(z.begin(), z.end(), x) != z.end()) return true;
    return false;
}

// Independent recheck of a q-expansion: stars of q distinct private B^
// vertices per A^ vertex, and N(B^) inside A^.
inline std::string check_expansion(const BipartiteGraph& h, const BipartiteExpansion& e, int q) {
    std::set<int> a_hat(e.a_hat.begin(), e.a_hat.end());
    std::set<int> b_hat(e.b_hat.begin(), e.b_hat.end());
    std::map<int, int> star;
    std::set<int> used;
    for (auto [a, b] : e.edges) {
        if (!a_hat.count(a)) return "edge leaves A^";
        if (!b_hat.count(b)) return "edge leaves B^";
        if (std::find(h.adj[a].begin(), h.adj[a].end(), b) == h.adj[a].end()) return "edge missing from H";
        if (!used.insert(b).second) return "B vertex used twice";
        ++star[a];
    }
    for (int a : a_hat)
        if (star[a] != q) return "star of the wrong size";
    for (int a = 0; a < h.a_count; ++a)
        for (int b : h.adj[a])
            if (b_hat.count(b) && !a_hat.count(a)) return "B^ has a neighbour outside A^";
    return {};
}

inline BipartiteGraph random_bipartite(Rng& rng, int a, int b, double p) {
    BipartiteGraph h(a, b);
    for (int j = 0; j < b; ++j) {
        bool any = false;
        for (int i = 0; i < a; ++i)
            if (rng.chance(p)) {
                h.add_edge(i, j);
                any = true;
            }
        if (!any) h.add_edge(static_cast<int>(rng.below(a)), j);
    }
    return h;
}

}  // namespace families
