#include "pitvd/indexed_graph.hpp"

#include <algorithm>

namespace pitvd {

IndexedGraph::IndexedGraph(const MultiGraph& g) {
    ids = g.vertices();
    n = static_cast<int>(ids.size());
    adj.assign(n, {});
    mult.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (const auto& [w, m] : g.neighbors(ids[i])) {
            int j = index_of(w);
            adj[i].push_back(j);
            mult[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(std::min(m, 255));
        }
    }
}

int IndexedGraph::index_of(VertexId v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) return -1;
    return static_cast<int>(it - ids.begin());
}

IndexedGraph IndexedGraph::induced(const std::vector<int>& keep) const {
    IndexedGraph out;
    out.n = static_cast<int>(keep.size());
    out.ids.reserve(keep.size());
    std::vector<int> remap(n, -1);
    for (int i = 0; i < out.n; ++i) {
        remap[keep[i]] = i;
        out.ids.push_back(ids[keep[i]]);
    }
    out.adj.assign(out.n, {});
    out.mult.assign(static_cast<std::size_t>(out.n) * out.n, 0);
    for (int i = 0; i < out.n; ++i) {
        for (int w : adj[keep[i]]) {
            int j = remap[w];
            if (j < 0) continue;
            out.adj[i].push_back(j);
            out.mult[static_cast<std::size_t>(i) * out.n + j] = multiplicity(keep[i], w);
        }
    }
    return out;
}

IndexedGraph IndexedGraph::without(int vertex) const {
    std::vector<int> keep;
    keep.reserve(n);
    for (int i = 0; i < n; ++i)
        if (i != vertex) keep.push_back(i);
    return induced(keep);
}

VertexSet IndexedGraph::to_ids(const std::vector<int>& idx) const {
    VertexSet out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(ids[i]);
    return out;
}

std::vector<std::vector<int>> IndexedGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace pitvd
