#include "pitvd/matching.hpp"

#include <deque>
#include <limits>

namespace pitvd {

BipartiteMatching hopcroft_karp(int left, int right, const std::vector<std::vector<int>>& adj) {
    BipartiteMatching m;
    m.mate_left.assign(left, -1);
    m.mate_right.assign(right, -1);
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(left);

    auto bfs = [&]() {
        std::deque<int> queue;
        bool found = false;
        for (int l = 0; l < left; ++l) {
            if (m.mate_left[l] < 0) {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = inf;
            }
        }
        while (!queue.empty()) {
            int l = queue.front();
            queue.pop_front();
            for (int r : adj[l]) {
                int next = m.mate_right[r];
                if (next < 0) {
                    found = true;
                } else if (dist[next] == inf) {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        return found;
    };

    std::vector<std::size_t> it(left);
    auto dfs = [&](auto&& self, int l) -> bool {
        for (; it[l] < adj[l].size(); ++it[l]) {
            int r = adj[l][it[l]];
            int next = m.mate_right[r];
            if (next < 0 || (dist[next] == dist[l] + 1 && self(self, next))) {
                m.mate_left[l] = r;
                m.mate_right[r] = l;
                ++it[l];
                return true;
            }
        }
        dist[l] = inf;
        return false;
    };

    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (int l = 0; l < left; ++l)
            if (m.mate_left[l] < 0 && dfs(dfs, l)) ++m.size;
    }
    return m;
}

namespace {

// One search of Edmonds' algorithm from `root`. Returns the exposed endpoint
// of an augmenting path, or -1; `even` marks the outer vertices reached.
struct BlossomSearch {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int>& mate;
    std::vector<int> parent, base;
    std::vector<char> even, in_blossom;

    BlossomSearch(int n_, const std::vector<std::vector<int>>& adj_, std::vector<int>& mate_)
        : n(n_), adj(adj_), mate(mate_), parent(n_), base(n_), even(n_), in_blossom(n_) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        while (true) {
            a = base[a];
            seen[a] = 1;
            if (mate[a] < 0) break;
            a = parent[mate[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[mate[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = 1;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    int run(int root) {
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(even.begin(), even.end(), 0);
        for (int i = 0; i < n; ++i) base[i] = i;
        even[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to : adj[v]) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] >= 0 && parent[mate[to]] >= 0)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[base[i]]) continue;
                        base[i] = cur;
                        if (!even[i]) {
                            even[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent[to] < 0) {
                    parent[to] = v;
                    if (mate[to] < 0) return to;
                    even[mate[to]] = 1;
                    queue.push_back(mate[to]);
                }
            }
        }
        return -1;
    }

    void augment(int end) {
        for (int v = end; v >= 0;) {
            int pv = parent[v], next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
};

}  // namespace

GeneralMatching maximum_matching(int n, const std::vector<std::vector<int>>& adj) {
    GeneralMatching m;
    m.mate.assign(n, -1);
    // Greedy start keeps the number of blossom searches small.
    for (int v = 0; v < n; ++v) {
        if (m.mate[v] >= 0) continue;
        for (int w : adj[v])
            if (m.mate[w] < 0 && w != v) {
                m.mate[v] = w;
                m.mate[w] = v;
                ++m.size;
                break;
            }
    }
    BlossomSearch search(n, adj, m.mate);
    for (int v = 0; v < n; ++v) {
        if (m.mate[v] >= 0) continue;
        int end = search.run(v);
        if (end >= 0) {
            search.augment(end);
            ++m.size;
        }
    }
    return m;
}

std::vector<char> missable_vertices(int n, const std::vector<std::vector<int>>& adj, const GeneralMatching& m) {
    std::vector<int> mate = m.mate;
    BlossomSearch search(n, adj, mate);
    std::vector<char> out(n, 0);
    for (int v = 0; v < n; ++v) {
        if (mate[v] >= 0) continue;
        search.run(v);
        for (int i = 0; i < n; ++i)
            if (search.even[i]) out[i] = 1;
    }
    return out;
}

}  // namespace pitvd
