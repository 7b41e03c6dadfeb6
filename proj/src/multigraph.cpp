#include "pitvd/multigraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pitvd {

MultiGraph::MultiGraph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex();
}

VertexId MultiGraph::add_vertex() {
    VertexId id = next_id_++;
    adj_.emplace(id, Adjacency{});
    return id;
}

void MultiGraph::add_vertex(VertexId id) {
    if (has_vertex(id)) throw std::invalid_argument("vertex " + std::to_string(id) + " already exists");
    adj_.emplace(id, Adjacency{});
    next_id_ = std::max(next_id_, id + 1);
}

void MultiGraph::require(VertexId v) const {
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

void MultiGraph::add_edge(VertexId u, VertexId v, int multiplicity) {
    if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
    set_multiplicity(u, v, this->multiplicity(u, v) + multiplicity);
}

void MultiGraph::set_multiplicity(VertexId u, VertexId v, int multiplicity) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    require(u);
    require(v);
    if (multiplicity == 0) {
        adj_[u].erase(v);
        adj_[v].erase(u);
    } else {
        adj_[u][v] = multiplicity;
        adj_[v][u] = multiplicity;
    }
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return 0;
    auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
}

const MultiGraph::Adjacency& MultiGraph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

VertexSet MultiGraph::neighbor_set(VertexId v) const {
    VertexSet out;
    for (const auto& [w, m] : neighbors(v)) out.push_back(w);
    return out;
}

std::size_t MultiGraph::degree(VertexId v) const {
    std::size_t d = 0;
    for (const auto& [w, m] : neighbors(v)) d += static_cast<std::size_t>(m);
    return d;
}

std::size_t MultiGraph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& [v, nb] : adj_) twice += nb.size();
    return twice / 2;
}

std::size_t MultiGraph::total_multiplicity() const {
    std::size_t twice = 0;
    for (const auto& [v, nb] : adj_)
        for (const auto& [w, m] : nb) twice += static_cast<std::size_t>(m);
    return twice / 2;
}

VertexSet MultiGraph::vertices() const {
    VertexSet out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
}

std::vector<std::tuple<VertexId, VertexId, int>> MultiGraph::edges() const {
    std::vector<std::tuple<VertexId, VertexId, int>> out;
    for (const auto& [u, nb] : adj_)
        for (const auto& [v, m] : nb)
            if (u < v) out.emplace_back(u, v, m);
    return out;
}

bool MultiGraph::is_simple() const {
    for (const auto& [v, nb] : adj_)
        for (const auto& [w, m] : nb)
            if (m > 1) return false;
    return true;
}

void MultiGraph::delete_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    for (const auto& [w, m] : it->second) adj_[w].erase(v);
    adj_.erase(it);
}

void MultiGraph::delete_vertices(const VertexSet& vs) {
    for (VertexId v : vs) require(v);
    for (VertexId v : vs)
        if (has_vertex(v)) delete_vertex(v);
}

MultiGraph MultiGraph::induced(const VertexSet& keep) const {
    MultiGraph out;
    out.next_id_ = next_id_;
    std::set<VertexId> inside(keep.begin(), keep.end());
    for (VertexId v : inside) {
        require(v);
        out.adj_.emplace(v, Adjacency{});
    }
    for (VertexId v : inside)
        for (const auto& [w, m] : adj_.at(v))
            if (inside.count(w)) out.adj_[v][w] = m;
    return out;
}

const char* to_string(PathKind kind) {
    switch (kind) {
        case PathKind::Tail: return "tail";
        case PathKind::Overbridge: return "overbridge";
        case PathKind::Other: return "other";
    }
    return "?";
}

std::vector<VertexSet> connected_components(const MultiGraph& g) {
    std::vector<VertexSet> comps;
    std::set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        VertexSet comp;
        std::vector<VertexId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& [w, m] : g.neighbors(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& zs) {
    MultiGraph out = g;
    out.delete_vertices(zs);
    return out;
}

namespace {

bool internal_candidate(const MultiGraph& g, VertexId v) {
    const auto& nb = g.neighbors(v);
    return nb.size() == 2 && nb.begin()->second == 1 && std::next(nb.begin())->second == 1;
}

VertexId other_neighbor(const MultiGraph& g, VertexId v, VertexId prev) {
    const auto& nb = g.neighbors(v);
    return nb.begin()->first == prev ? std::next(nb.begin())->first : nb.begin()->first;
}

}  // namespace

std::vector<DegreeTwoPath> find_degree2_paths(const MultiGraph& g) {
    std::vector<DegreeTwoPath> out;
    std::set<VertexId> used;
    for (VertexId v : g.vertices()) {
        if (used.count(v) || !internal_candidate(g, v)) continue;
        const auto& nb = g.neighbors(v);
        VertexId left_start = nb.begin()->first;
        VertexId right_start = std::next(nb.begin())->first;

        // Walk from v through `start` while vertices stay internal.
        auto walk = [&](VertexId start, std::vector<VertexId>& run) -> VertexId {
            VertexId prev = v, cur = start;
            while (cur != v && internal_candidate(g, cur)) {
                run.push_back(cur);
                VertexId next = other_neighbor(g, cur, prev);
                prev = cur;
                cur = next;
            }
            return cur;
        };

        std::vector<VertexId> left, right;
        VertexId left_end = walk(left_start, left);
        DegreeTwoPath p;
        if (left_end == v) {
            // Whole component is a cycle of internal vertices.
            p.vertices.push_back(v);
            p.vertices.insert(p.vertices.end(), left.begin(), left.end());
            p.kind = PathKind::Other;
            p.closed = true;
        } else {
            VertexId right_end = walk(right_start, right);
            std::vector<VertexId> run(left.rbegin(), left.rend());
            run.push_back(v);
            run.insert(run.end(), right.begin(), right.end());
            if (left_end == right_end) {
                p.vertices.push_back(left_end);
                p.vertices.insert(p.vertices.end(), run.begin(), run.end());
                p.kind = PathKind::Other;
                p.closed = true;
            } else {
                p.vertices.push_back(left_end);
                p.vertices.insert(p.vertices.end(), run.begin(), run.end());
                p.vertices.push_back(right_end);
                std::size_t da = g.degree(left_end), db = g.degree(right_end);
                bool flip = false;
                if (da > 2 && db == 1) {
                    p.kind = PathKind::Tail;
                } else if (db > 2 && da == 1) {
                    p.kind = PathKind::Tail;
                    flip = true;
                } else {
                    p.kind = (da > 2 && db > 2) ? PathKind::Overbridge : PathKind::Other;
                    flip = right_end < left_end;
                }
                if (flip) std::reverse(p.vertices.begin(), p.vertices.end());
            }
        }
        for (VertexId u : p.vertices)
            if (internal_candidate(g, u)) used.insert(u);
        out.push_back(std::move(p));
    }
    return out;
}

VertexSet attach_tail(MultiGraph& g, VertexId v, int length) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    if (length < 1) throw std::invalid_argument("tail length must be at least 1");
    VertexSet added;
    VertexId prev = v;
    for (int i = 0; i < length; ++i) {
        VertexId u = g.add_vertex();
        g.add_edge(prev, u);
        added.push_back(u);
        prev = u;
    }
    return added;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

void normalize(VertexSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace pitvd
