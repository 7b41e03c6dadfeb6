#include "pitvd/recognition.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pitvd {

const char* to_string(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::DoubleEdge: return "double-edge";
        case ObstructionKind::Claw: return "claw";
        case ObstructionKind::Net: return "net";
        case ObstructionKind::Tent: return "tent";
        case ObstructionKind::Hole: return "hole";
        case ObstructionKind::ClawTrianglePair: return "claw-triangle-pair";
    }
    return "?";
}

VertexSet Obstruction::vertex_set() const {
    VertexSet out = vertices;
    out.insert(out.end(), triangle.begin(), triangle.end());
    out.insert(out.end(), path.begin(), path.end());
    normalize(out);
    return out;
}

std::string Obstruction::describe() const {
    std::ostringstream os;
    os << to_string(kind) << " [";
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? " " : "") << vertices[i];
    os << "]";
    if (kind == ObstructionKind::ClawTrianglePair) {
        os << " triangle [";
        for (std::size_t i = 0; i < triangle.size(); ++i) os << (i ? " " : "") << triangle[i];
        os << "] path [";
        for (std::size_t i = 0; i < path.size(); ++i) os << (i ? " " : "") << path[i];
        os << "]";
    }
    return os.str();
}

namespace detail {

bool is_tree_component(const IndexedGraph& g, const std::vector<int>& comp) {
    long twice = 0;
    for (int v : comp)
        for (int w : g.adj[v]) twice += g.multiplicity(v, w);
    return twice / 2 == static_cast<long>(comp.size()) - 1;
}

namespace {

// Lexicographic BFS by partition refinement. The first vertex of the first
// class is taken each round, so the order of `init` breaks ties.
std::vector<int> lbfs_sweep(const IndexedGraph& g, const std::vector<int>& init) {
    std::vector<std::vector<int>> classes{init};
    std::vector<int> order;
    order.reserve(init.size());
    while (!classes.empty()) {
        auto& first = classes.front();
        int pivot = first.front();
        first.erase(first.begin());
        if (first.empty()) classes.erase(classes.begin());
        order.push_back(pivot);
        std::vector<std::vector<int>> next;
        next.reserve(classes.size() * 2);
        for (auto& cls : classes) {
            std::vector<int> in, out;
            for (int v : cls) (g.adjacent(pivot, v) ? in : out).push_back(v);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        classes.swap(next);
    }
    return order;
}

bool umbrella_holds(const IndexedGraph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    for (int v : order) {
        int lo = pos[v], hi = pos[v];
        for (int w : g.adj[v]) {
            if (pos[w] < 0) return false;
            lo = std::min(lo, pos[w]);
            hi = std::max(hi, pos[w]);
        }
        if (hi - lo != g.degree(v)) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> pig_ordering(const IndexedGraph& g, const std::vector<int>& comp) {
    std::vector<int> sigma = lbfs_sweep(g, comp);
    for (int round = 0; round < 2; ++round) {
        std::vector<int> rev(sigma.rbegin(), sigma.rend());
        sigma = lbfs_sweep(g, rev);
    }
    if (umbrella_holds(g, sigma)) return sigma;
    return std::nullopt;
}

std::optional<std::vector<int>> shortest_hole(const IndexedGraph& g, const std::vector<int>& comp) {
    std::optional<std::vector<int>> best;
    std::vector<char> closed_nb(g.n, 0);
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::vector<int> touched;
    for (int v : comp) {
        if (g.degree(v) < 2) continue;
        closed_nb[v] = 1;
        for (int w : g.adj[v]) closed_nb[w] = 1;
        for (int a : g.adj[v]) {
            // BFS from a through vertices outside N[v].
            for (int t : touched) dist[t] = -1, parent[t] = -1;
            touched.clear();
            std::deque<int> queue{a};
            dist[a] = 0;
            touched.push_back(a);
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : g.adj[u]) {
                    if (closed_nb[w] || dist[w] >= 0) continue;
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push_back(w);
                    queue.push_back(w);
                }
            }
            for (int b : g.adj[v]) {
                if (b <= a || g.adjacent(a, b)) continue;
                int via = -1;
                for (int w : g.adj[b])
                    if (!closed_nb[w] && dist[w] >= 0 && (via < 0 || dist[w] < dist[via])) via = w;
                if (via < 0) continue;
                std::size_t len = static_cast<std::size_t>(dist[via]) + 3;
                if (best && best->size() <= len) continue;
                std::vector<int> tail;
                for (int u = via; u >= 0; u = parent[u]) tail.push_back(u);
                std::vector<int> cyc{v};
                cyc.insert(cyc.end(), tail.rbegin(), tail.rend());
                cyc.push_back(b);
                best = std::move(cyc);
            }
        }
        closed_nb[v] = 0;
        for (int w : g.adj[v]) closed_nb[w] = 0;
        if (best && best->size() == 4) break;
    }
    return best;
}

std::optional<std::vector<int>> find_claw(const IndexedGraph& g, const std::vector<int>& comp) {
    for (int c : comp) {
        const auto& nb = g.adj[c];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t l = j + 1; l < nb.size(); ++l)
                    if (!g.adjacent(nb[i], nb[l]) && !g.adjacent(nb[j], nb[l]))
                        return std::vector<int>{c, nb[i], nb[j], nb[l]};
            }
    }
    return std::nullopt;
}

namespace {

// First pairwise non-adjacent triple (one from each list).
std::optional<std::array<int, 3>> independent_triple(const IndexedGraph& g, const std::vector<int>& xs,
                                                     const std::vector<int>& ys, const std::vector<int>& zs) {
    for (int x : xs)
        for (int y : ys) {
            if (g.adjacent(x, y)) continue;
            for (int z : zs)
                if (!g.adjacent(x, z) && !g.adjacent(y, z)) return std::array<int, 3>{x, y, z};
        }
    return std::nullopt;
}

// Calls `emit` for nets and tents built on each triangle of `comp` (central
// triangle a < b < c). With `all` false, stops at the first hit.
template <typename Emit>
void scan_nets_tents(const IndexedGraph& g, const std::vector<int>& comp, bool all, Emit emit) {
    // Marks the neighbourhood of the current triangle once per vertex.
    std::vector<long> stamp(g.n, -1);
    long tick = 0;
    for (int a : comp)
        for (int b : g.adj[a]) {
            if (b <= a) continue;
            for (int c : g.adj[b]) {
                if (c <= b || !g.adjacent(a, c)) continue;
                // pa: private to a; xab: on a and b but not c.
                std::vector<int> pa, pb, pc, xab, ybc, zca;
                auto classify = [&](int u) {
                    if (u == a || u == b || u == c) return;
                    bool ia = g.adjacent(u, a), ib = g.adjacent(u, b), ic = g.adjacent(u, c);
                    if (ia && !ib && !ic) pa.push_back(u);
                    if (!ia && ib && !ic) pb.push_back(u);
                    if (!ia && !ib && ic) pc.push_back(u);
                    if (ia && ib && !ic) xab.push_back(u);
                    if (!ia && ib && ic) ybc.push_back(u);
                    if (ia && !ib && ic) zca.push_back(u);
                };
                ++tick;
                for (int hub : {a, b, c})
                    for (int u : g.adj[hub])
                        if (stamp[u] != tick) {
                            stamp[u] = tick;
                            classify(u);
                        }
                if (all) {
                    for (int x : pa)
                        for (int y : pb) {
                            if (g.adjacent(x, y)) continue;
                            for (int z : pc)
                                if (!g.adjacent(x, z) && !g.adjacent(y, z))
                                    emit(ObstructionKind::Net, std::vector<int>{a, b, c, x, y, z});
                        }
                    for (int x : xab)
                        for (int y : ybc) {
                            if (g.adjacent(x, y)) continue;
                            for (int z : zca)
                                if (!g.adjacent(x, z) && !g.adjacent(y, z))
                                    emit(ObstructionKind::Tent, std::vector<int>{a, b, c, x, y, z});
                        }
                } else {
                    if (auto t = independent_triple(g, pa, pb, pc)) {
                        emit(ObstructionKind::Net, std::vector<int>{a, b, c, (*t)[0], (*t)[1], (*t)[2]});
                        return;
                    }
                    if (auto t = independent_triple(g, xab, ybc, zca)) {
                        emit(ObstructionKind::Tent, std::vector<int>{a, b, c, (*t)[0], (*t)[1], (*t)[2]});
                        return;
                    }
                }
            }
        }
}

Obstruction make_obstruction(const IndexedGraph& g, ObstructionKind kind, const std::vector<int>& idx) {
    Obstruction o;
    o.kind = kind;
    for (int i : idx) o.vertices.push_back(g.ids[i]);
    return o;
}

}  // namespace

std::optional<Obstruction> find_net_or_tent(const IndexedGraph& g, const std::vector<int>& comp) {
    std::optional<Obstruction> found;
    scan_nets_tents(g, comp, false, [&](ObstructionKind kind, const std::vector<int>& idx) {
        if (!found) found = make_obstruction(g, kind, idx);
    });
    return found;
}

std::optional<Obstruction> claw_triangle_pair(const IndexedGraph& g, const std::vector<int>& comp) {
    std::vector<std::vector<int>> claw_of(g.n), tri_of(g.n);
    for (int c : comp) {
        const auto& nb = g.adj[c];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t l = j + 1; l < nb.size(); ++l) {
                    if (g.adjacent(nb[i], nb[l]) || g.adjacent(nb[j], nb[l])) continue;
                    std::vector<int> claw{c, nb[i], nb[j], nb[l]};
                    for (int u : claw)
                        if (claw_of[u].empty()) claw_of[u] = claw;
                }
            }
    }
    for (int u : comp) {
        const auto& nb = g.adj[u];
        for (std::size_t i = 0; i < nb.size() && tri_of[u].empty(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.adjacent(nb[i], nb[j])) {
                    tri_of[u] = {u, nb[i], nb[j]};
                    break;
                }
    }
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::deque<int> queue;
    for (int u : comp)
        if (!claw_of[u].empty()) {
            dist[u] = 0;
            queue.push_back(u);
        }
    if (queue.empty()) return std::nullopt;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (!tri_of[u].empty()) {
            std::vector<int> path;
            for (int w = u; w >= 0; w = parent[w]) path.push_back(w);
            std::reverse(path.begin(), path.end());
            Obstruction o = make_obstruction(g, ObstructionKind::ClawTrianglePair, claw_of[path.front()]);
            auto tri = tri_of[u];
            std::sort(tri.begin(), tri.end());
            for (int w : tri) o.triangle.push_back(g.ids[w]);
            if (path.size() > 1)
                for (int w : path) o.path.push_back(g.ids[w]);
            return o;
        }
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
    }
    return std::nullopt;
}

namespace {

struct Ranked {
    int tier = 0;
    std::size_t size = 0;
    Obstruction obs;
};

// Best witness inside a simple, connected, non-tree component that has no
// proper interval ordering. With `scattered` the claw must come with a
// triangle; otherwise a bare claw is a valid answer.
Ranked best_in_component(const IndexedGraph& g, const std::vector<int>& comp, bool scattered) {
    auto hole = shortest_hole(g, comp);
    auto as_hole = [&](const std::vector<int>& h) { return make_obstruction(g, ObstructionKind::Hole, h); };
    if (hole && hole->size() <= 5) return {1, hole->size(), as_hole(*hole)};
    if (auto nt = find_net_or_tent(g, comp)) return {1, 6, *nt};
    if (hole) return {hole->size() == 6 ? 1 : 2, hole->size(), as_hole(*hole)};
    if (scattered) {
        if (auto ctp = claw_triangle_pair(g, comp)) return {3, ctp->vertex_set().size(), *ctp};
    } else if (auto claw = find_claw(g, comp)) {
        return {3, 4, make_obstruction(g, ObstructionKind::Claw, *claw)};
    }
    throw std::logic_error("recognition: component rejected without a witness");
}

std::optional<Obstruction> first_double_edge(const IndexedGraph& g, const std::vector<int>& comp) {
    for (int v : comp)
        for (int w : g.adj[v])
            if (w > v && g.multiplicity(v, w) > 1) return make_obstruction(g, ObstructionKind::DoubleEdge, {v, w});
    return std::nullopt;
}

}  // namespace

std::optional<Obstruction> pitg_obstruction(const IndexedGraph& g) {
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    if (auto d = first_double_edge(g, all)) return d;
    std::optional<Ranked> best;
    for (const auto& comp : g.components()) {
        if (is_tree_component(g, comp) || pig_ordering(g, comp)) continue;
        Ranked r = best_in_component(g, comp, true);
        if (!best || std::tie(r.tier, r.size) < std::tie(best->tier, best->size)) best = std::move(r);
        if (best->tier == 1 && best->size == 4) break;
    }
    if (best) return best->obs;
    return std::nullopt;
}

}  // namespace detail

bool is_proper_interval_ordering(const MultiGraph& g, const std::vector<VertexId>& order) {
    // Equivalent to every closed neighbourhood being a contiguous block.
    std::map<VertexId, long> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<long>(i);
    if (pos.size() != order.size()) return false;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!g.has_vertex(order[i])) return false;
        long lo = static_cast<long>(i), hi = lo;
        const auto& nb = g.neighbors(order[i]);
        for (const auto& [w, m] : nb) {
            auto it = pos.find(w);
            if (it == pos.end()) return false;
            lo = std::min(lo, it->second);
            hi = std::max(hi, it->second);
        }
        if (hi - lo != static_cast<long>(nb.size())) return false;
    }
    return true;
}

OrderingResult proper_interval_ordering(const MultiGraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("proper_interval_ordering: graph has a parallel edge");
    IndexedGraph ig(g);
    auto comps = ig.components();
    if (comps.size() > 1) throw std::invalid_argument("proper_interval_ordering: graph is disconnected");
    if (comps.empty()) return std::vector<VertexId>{};
    if (auto order = detail::pig_ordering(ig, comps[0])) return ig.to_ids(*order);
    return detail::best_in_component(ig, comps[0], false).obs;
}

ComponentClass classify_component(const MultiGraph& component) {
    IndexedGraph ig(component);
    ComponentClass out;
    std::vector<int> all(ig.n);
    for (int i = 0; i < ig.n; ++i) all[i] = i;
    if (auto d = detail::first_double_edge(ig, all)) {
        out.kind = ComponentClass::Kind::Neither;
        out.obstruction = d;
        return out;
    }
    if (detail::is_tree_component(ig, all)) {
        out.kind = ComponentClass::Kind::Tree;
        return out;
    }
    if (auto order = detail::pig_ordering(ig, all)) {
        out.kind = ComponentClass::Kind::ProperInterval;
        out.ordering = ig.to_ids(*order);
        return out;
    }
    out.kind = ComponentClass::Kind::Neither;
    out.obstruction = detail::best_in_component(ig, all, true).obs;
    return out;
}

ComponentClass classify_component(const MultiGraph& g, const VertexSet& component) {
    return classify_component(g.induced(component));
}

PitgVerdict is_pitg(const MultiGraph& g) {
    IndexedGraph ig(g);
    return PitgVerdict{detail::pitg_obstruction(ig)};
}

std::vector<VertexSet> enumerate_small_obstructions(const MultiGraph& g) {
    IndexedGraph ig(g);
    std::set<VertexSet> found;
    std::vector<int> all(ig.n);
    for (int i = 0; i < ig.n; ++i) all[i] = i;
    detail::scan_nets_tents(ig, all, true, [&](ObstructionKind, const std::vector<int>& idx) {
        VertexSet s = ig.to_ids(idx);
        normalize(s);
        found.insert(std::move(s));
    });
    // Induced cycles of length 4..6 whose smallest vertex is `start`.
    std::vector<int> path;
    std::vector<char> on_path(ig.n, 0);
    std::function<void()> extend = [&]() {
        int start = path.front(), last = path.back();
        for (int w : ig.adj[last]) {
            if (w <= start || on_path[w]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (ig.adjacent(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (path.size() >= 2 && ig.adjacent(w, start)) {
                if (path.size() >= 3 && path[1] < w) {
                    std::vector<int> cyc = path;
                    cyc.push_back(w);
                    VertexSet s = ig.to_ids(cyc);
                    normalize(s);
                    found.insert(std::move(s));
                }
                continue;
            }
            if (path.size() >= 5) continue;
            path.push_back(w);
            on_path[w] = 1;
            extend();
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < ig.n; ++s) {
        path = {s};
        on_path[s] = 1;
        extend();
        on_path[s] = 0;
    }
    return {found.begin(), found.end()};
}

std::optional<Obstruction> find_claw_triangle_pair(const MultiGraph& g, const VertexSet& component) {
    IndexedGraph ig(g.induced(component));
    std::vector<int> all(ig.n);
    for (int i = 0; i < ig.n; ++i) all[i] = i;
    return detail::claw_triangle_pair(ig, all);
}

namespace {

bool distinct(const std::vector<VertexId>& vs) {
    VertexSet s = vs;
    normalize(s);
    return s.size() == vs.size();
}

// Checks the induced adjacency of `vs` against the edge list `pattern`.
bool induces(const MultiGraph& g, const std::vector<VertexId>& vs, const std::vector<std::pair<int, int>>& pattern) {
    if (!distinct(vs)) return false;
    for (VertexId v : vs)
        if (!g.has_vertex(v)) return false;
    std::set<std::pair<int, int>> want;
    for (auto [a, b] : pattern) want.insert({std::min(a, b), std::max(a, b)});
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            bool e = g.adjacent(vs[i], vs[j]);
            if (e != static_cast<bool>(want.count({static_cast<int>(i), static_cast<int>(j)}))) return false;
        }
    return true;
}

const std::vector<std::pair<int, int>> kClaw{{0, 1}, {0, 2}, {0, 3}};
const std::vector<std::pair<int, int>> kTriangle{{0, 1}, {0, 2}, {1, 2}};
const std::vector<std::pair<int, int>> kNet{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}};
const std::vector<std::pair<int, int>> kTent{{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};

}  // namespace

bool validate_obstruction(const MultiGraph& g, const Obstruction& obs) {
    const auto& v = obs.vertices;
    switch (obs.kind) {
        case ObstructionKind::DoubleEdge:
            return v.size() == 2 && v[0] != v[1] && g.has_vertex(v[0]) && g.has_vertex(v[1]) &&
                   g.multiplicity(v[0], v[1]) >= 2;
        case ObstructionKind::Claw: return v.size() == 4 && induces(g, v, kClaw);
        case ObstructionKind::Net: return v.size() == 6 && induces(g, v, kNet);
        case ObstructionKind::Tent: return v.size() == 6 && induces(g, v, kTent);
        case ObstructionKind::Hole: {
            if (v.size() < 4) return false;
            std::vector<std::pair<int, int>> cyc;
            for (std::size_t i = 0; i < v.size(); ++i)
                cyc.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % v.size()));
            return induces(g, v, cyc);
        }
        case ObstructionKind::ClawTrianglePair: {
            if (v.size() != 4 || !induces(g, v, kClaw)) return false;
            if (obs.triangle.size() != 3 || !induces(g, obs.triangle, kTriangle)) return false;
            VertexSet claw = v, tri = obs.triangle;
            normalize(claw);
            normalize(tri);
            bool meet = !set_intersection(claw, tri).empty();
            if (obs.path.empty()) return meet;
            if (!distinct(obs.path)) return false;
            if (!set_contains(claw, obs.path.front()) || !set_contains(tri, obs.path.back())) return false;
            for (std::size_t i = 0; i + 1 < obs.path.size(); ++i)
                if (!g.has_vertex(obs.path[i]) || !g.adjacent(obs.path[i], obs.path[i + 1])) return false;
            return true;
        }
    }
    return false;
}

}  // namespace pitvd
