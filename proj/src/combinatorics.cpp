#include "pitvd/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "pitvd/matching.hpp"

namespace pitvd {

std::size_t max_set_size(const SetFamily& family) {
    std::size_t d = 0;
    for (const auto& s : family) d = std::max(d, s.size());
    return d;
}

std::uint64_t sunflower_bound(std::size_t d, int k) {
    const auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t out = 1;
    auto mul = [&](std::uint64_t x) {
        if (x != 0 && out > cap / x) {
            out = cap;
            return false;
        }
        out *= x;
        return true;
    };
    for (std::size_t i = 2; i <= d; ++i)
        if (!mul(i)) return cap;
    for (std::size_t i = 0; i < d; ++i)
        if (!mul(static_cast<std::uint64_t>(k) + 1)) return cap;
    return out;
}

namespace {

std::optional<Sunflower> sunflower_rec(const SetFamily& sets, const std::vector<std::size_t>& ids, std::size_t petals) {
    if (ids.size() < petals) return std::nullopt;
    std::vector<std::size_t> disjoint;
    std::set<VertexId> used;
    for (std::size_t i : ids) {
        bool clash = false;
        for (VertexId x : sets[i])
            if (used.count(x)) {
                clash = true;
                break;
            }
        if (clash) continue;
        disjoint.push_back(i);
        used.insert(sets[i].begin(), sets[i].end());
        if (disjoint.size() == petals) return Sunflower{{}, disjoint};
    }
    // Every set meets `used`; recurse on the most frequent element.
    std::map<VertexId, std::size_t> freq;
    for (std::size_t i : ids)
        for (VertexId x : sets[i])
            if (used.count(x)) ++freq[x];
    if (freq.empty()) return std::nullopt;
    auto best = std::max_element(freq.begin(), freq.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    VertexId pivot = best->first;
    SetFamily reduced = sets;
    std::vector<std::size_t> sub;
    for (std::size_t i : ids)
        if (set_contains(sets[i], pivot)) {
            reduced[i] = set_difference(sets[i], {pivot});
            sub.push_back(i);
        }
    auto inner = sunflower_rec(reduced, sub, petals);
    if (!inner) return std::nullopt;
    inner->core = set_union(inner->core, {pivot});
    return inner;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const SetFamily& family, std::size_t petals) {
    if (petals == 0) return Sunflower{};
    SetFamily sets = family;
    for (auto& s : sets) normalize(s);
    std::vector<std::size_t> ids(sets.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return sunflower_rec(sets, ids, petals);
}

SetFamily sunflower_reduce(const SetFamily& family, int k, std::size_t d) {
    if (k < 0) throw std::invalid_argument("sunflower_reduce: negative budget");
    std::set<VertexSet> unique;
    for (auto s : family) {
        normalize(s);
        unique.insert(std::move(s));
    }
    // Drop strict supersets; they never change which sets hit the family.
    SetFamily sets(unique.begin(), unique.end());
    std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    SetFamily kept;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& t : kept)
            if (t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    d = std::max(d, max_set_size(kept));
    const std::uint64_t bound = sunflower_bound(d, k);
    while (kept.size() > bound) {
        auto flower = find_sunflower(kept, static_cast<std::size_t>(k) + 2);
        if (!flower) throw std::logic_error("sunflower_reduce: no sunflower above the bound");
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(flower->petals.back()));
    }
    return kept;
}

bool hits_all(const VertexSet& z, const SetFamily& family) {
    for (const auto& s : family)
        if (set_intersection(z, s).empty()) return false;
    return true;
}

bool is_minimal_hitting_set(const VertexSet& z, const SetFamily& family) {
    if (!hits_all(z, family)) return false;
    for (std::size_t i = 0; i < z.size(); ++i) {
        VertexSet smaller = z;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (hits_all(smaller, family)) return false;
    }
    return true;
}

FlowerResult v_flower_or_hitting_set(const MultiGraph& g, VertexId v, int k) {
    if (!g.has_vertex(v)) throw std::invalid_argument("v_flower_or_hitting_set: unknown vertex");
    if (k < 0) throw std::invalid_argument("v_flower_or_hitting_set: negative budget");
    FlowerResult out;
    VertexSet doubled;
    std::set<VertexId> terminals;
    for (const auto& [u, m] : g.neighbors(v)) {
        if (m >= 2)
            doubled.push_back(u);
        else
            terminals.insert(u);
    }

    // Cycles through v avoiding `doubled` are paths in G - v - doubled
    // between two distinct terminals. Their maximum packing is read off a
    // matching in the graph with a twin for every non-terminal.
    std::vector<VertexId> rest;
    for (VertexId u : g.vertices())
        if (u != v && !set_contains(doubled, u)) rest.push_back(u);
    const int m = static_cast<int>(rest.size());
    auto local = [&](VertexId u) { return static_cast<int>(std::lower_bound(rest.begin(), rest.end(), u) - rest.begin()); };
    std::vector<int> twin(m, -1);
    std::vector<int> origin;
    for (int i = 0; i < m; ++i) origin.push_back(i);
    int non_terminals = 0;
    for (int i = 0; i < m; ++i)
        if (!terminals.count(rest[i])) {
            twin[i] = m + non_terminals++;
            origin.push_back(i);
        }
    const int size = m + non_terminals;
    std::vector<std::set<int>> edge_sets(size);
    auto link = [&](int a, int b) {
        edge_sets[a].insert(b);
        edge_sets[b].insert(a);
    };
    for (int i = 0; i < m; ++i) {
        if (twin[i] >= 0) link(i, twin[i]);
        for (const auto& [w, mult] : g.neighbors(rest[i])) {
            if (w == v || set_contains(doubled, w)) continue;
            int j = local(w);
            if (j <= i) continue;
            link(i, j);
            if (twin[i] >= 0 || twin[j] >= 0) link(twin[i] >= 0 ? twin[i] : i, twin[j] >= 0 ? twin[j] : j);
        }
    }
    std::vector<std::vector<int>> adj(size);
    for (int i = 0; i < size; ++i) adj[i].assign(edge_sets[i].begin(), edge_sets[i].end());
    GeneralMatching matching = maximum_matching(size, adj);
    const int packing = matching.size - non_terminals;

    if (static_cast<long>(doubled.size()) + packing >= static_cast<long>(k) + 1) {
        out.is_flower = true;
        for (VertexId u : doubled) out.petals.push_back({v, u});
        std::vector<int> base_mate(size, -1);
        for (int i = 0; i < m; ++i)
            if (twin[i] >= 0) {
                base_mate[i] = twin[i];
                base_mate[twin[i]] = i;
            }
        std::vector<char> done(size, 0);
        for (int t = 0; t < m; ++t) {
            if (twin[t] >= 0 || done[t] || matching.mate[t] < 0) continue;
            std::vector<int> walk{t};
            int cur = matching.mate[t];
            bool closed = false;
            while (true) {
                walk.push_back(cur);
                if (base_mate[cur] < 0) {
                    closed = true;
                    break;
                }
                int b = base_mate[cur];
                walk.push_back(b);
                if (matching.mate[b] < 0) break;
                cur = matching.mate[b];
            }
            if (!closed) continue;
            done[t] = done[walk.back()] = 1;
            std::vector<VertexId> petal{v};
            for (int x : walk) {
                VertexId id = rest[origin[x]];
                if (petal.back() != id) petal.push_back(id);
            }
            out.petals.push_back(std::move(petal));
        }
        return out;
    }

    std::vector<char> missable = missable_vertices(size, adj, matching);
    std::vector<char> barrier(size, 0);
    std::set<VertexId> hit(doubled.begin(), doubled.end());
    for (int x = 0; x < size; ++x) {
        if (missable[x]) continue;
        for (int y : adj[x])
            if (missable[y]) {
                barrier[x] = 1;
                hit.insert(rest[origin[x]]);
                break;
            }
    }
    // In each component of the graph minus the barrier keep one free terminal.
    std::vector<char> seen(size, 0);
    for (int s = 0; s < size; ++s) {
        if (seen[s] || barrier[s]) continue;
        std::vector<int> stack{s};
        seen[s] = 1;
        std::vector<VertexId> free_terminals;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x < m && twin[x] < 0 && !hit.count(rest[x])) free_terminals.push_back(rest[x]);
            for (int y : adj[x])
                if (!seen[y] && !barrier[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(free_terminals.begin(), free_terminals.end());
        for (std::size_t i = 1; i < free_terminals.size(); ++i) hit.insert(free_terminals[i]);
    }
    out.hitting_set.assign(hit.begin(), hit.end());
    return out;
}

std::string validate_flower_result(const MultiGraph& g, VertexId v, int k, const FlowerResult& r) {
    if (r.is_flower) {
        if (r.petals.size() < static_cast<std::size_t>(k) + 1) return "fewer than k+1 petals";
        std::set<VertexId> used;
        for (const auto& p : r.petals) {
            if (p.size() < 2 || p.front() != v) return "petal does not start at v";
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (!g.adjacent(p[i], p[i + 1])) return "petal uses a missing edge";
            if (p.size() == 2) {
                if (g.multiplicity(v, p[1]) < 2) return "two-vertex petal without a double edge";
            } else if (!g.adjacent(p.back(), v)) {
                return "petal is not closed";
            }
            for (std::size_t i = 1; i < p.size(); ++i)
                if (!used.insert(p[i]).second) return "petals overlap outside v";
        }
        return {};
    }
    const auto& z = r.hitting_set;
    if (z.size() > 2 * static_cast<std::size_t>(k)) return "hitting set larger than 2k";
    if (set_contains(z, v)) return "hitting set contains v";
    for (VertexId u : z)
        if (!g.has_vertex(u)) return "hitting set has an unknown vertex";
    MultiGraph rest = delete_vertices(g, z);
    for (const auto& [u, m] : rest.neighbors(v))
        if (m >= 2) return "double edge at v survives";
    rest.delete_vertex(v);
    for (const auto& comp : connected_components(rest)) {
        int touching = 0;
        for (VertexId u : comp)
            if (g.adjacent(u, v)) ++touching;
        if (touching > 1) return "a cycle through v survives";
    }
    return {};
}

std::vector<int> BipartiteExpansion::saturated() const {
    std::vector<int> out;
    for (auto [a, b] : edges) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void check_shape(const BipartiteGraph& h, int q) {
    if (q < 1) throw ExpansionError("q must be positive");
    if (static_cast<int>(h.adj.size()) != h.a_count) throw ExpansionError("adjacency size differs from |A|");
    for (const auto& nb : h.adj)
        for (int b : nb)
            if (b < 0 || b >= h.b_count) throw ExpansionError("edge to a vertex outside B");
}

BipartiteExpansion expand(const BipartiteGraph& h, int q) {
    const int copies = h.a_count * q;
    std::vector<std::vector<int>> adj(copies);
    std::vector<std::vector<int>> back(h.b_count);
    for (int a = 0; a < h.a_count; ++a) {
        std::vector<int> nb = h.adj[a];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        for (int c = 0; c < q; ++c) {
            adj[a * q + c] = nb;
            for (int b : nb) back[b].push_back(a * q + c);
        }
    }
    BipartiteMatching m = hopcroft_karp(copies, h.b_count, adj);
    std::vector<char> a_in(h.a_count, 0), b_in(h.b_count, 0);
    bool exposed_b = false;
    for (int b = 0; b < h.b_count; ++b)
        if (m.mate_right[b] < 0) exposed_b = true;

    if (exposed_b) {
        // Alternating reach from exposed B vertices.
        std::deque<int> queue;
        std::vector<char> copy_seen(copies, 0);
        for (int b = 0; b < h.b_count; ++b)
            if (m.mate_right[b] < 0) {
                b_in[b] = 1;
                queue.push_back(b);
            }
        while (!queue.empty()) {
            int b = queue.front();
            queue.pop_front();
            for (int c : back[b]) {
                if (copy_seen[c]) continue;
                copy_seen[c] = 1;
                a_in[c / q] = 1;
                int next = m.mate_left[c];
                if (next >= 0 && !b_in[next]) {
                    b_in[next] = 1;
                    queue.push_back(next);
                }
            }
        }
    } else {
        // Alternating reach from exposed copies marks the A side that cannot
        // be fully expanded.
        std::deque<int> queue;
        std::vector<char> copy_seen(copies, 0);
        std::vector<char> bad(h.a_count, 0);
        for (int c = 0; c < copies; ++c)
            if (m.mate_left[c] < 0) {
                copy_seen[c] = 1;
                queue.push_back(c);
            }
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            bad[c / q] = 1;
            for (int b : adj[c]) {
                int next = m.mate_right[b];
                if (next >= 0 && !copy_seen[next]) {
                    copy_seen[next] = 1;
                    queue.push_back(next);
                }
            }
        }
        std::fill(b_in.begin(), b_in.end(), 1);
        for (int a = 0; a < h.a_count; ++a) {
            a_in[a] = !bad[a];
            if (bad[a])
                for (int b : h.adj[a]) b_in[b] = 0;
        }
    }

    BipartiteExpansion e;
    e.q = q;
    for (int a = 0; a < h.a_count; ++a)
        if (a_in[a]) {
            e.a_hat.push_back(a);
            for (int c = 0; c < q; ++c) {
                int b = m.mate_left[a * q + c];
                if (b < 0) throw std::logic_error("expansion: copy of a selected vertex is unmatched");
                e.edges.emplace_back(a, b);
            }
        }
    for (int b = 0; b < h.b_count; ++b)
        if (b_in[b]) e.b_hat.push_back(b);
    return e;
}

}  // namespace

BipartiteExpansion q_expansion_classic(const BipartiteGraph& h, int q) {
    check_shape(h, q);
    if (h.a_count == 0) throw ExpansionError("A is empty");
    if (h.b_count < q * h.a_count) throw ExpansionError("|B| < q|A|");
    std::vector<char> touched(h.b_count, 0);
    for (const auto& nb : h.adj)
        for (int b : nb) touched[b] = 1;
    for (int b = 0; b < h.b_count; ++b)
        if (!touched[b]) throw ExpansionError("B has an isolated vertex");
    BipartiteExpansion e = expand(h, q);
    if (e.a_hat.empty()) throw std::logic_error("classic expansion produced an empty A side");
    return e;
}

BipartiteExpansion q_expansion_new(const BipartiteGraph& h, int q) {
    check_shape(h, q);
    if (h.a_count == 0) throw ExpansionError("A is empty");
    if (h.b_count == 0) throw ExpansionError("B is empty");
    return expand(h, q);
}

std::string validate_expansion(const BipartiteGraph& h, const BipartiteExpansion& e, bool slack) {
    std::vector<char> a_in(h.a_count, 0), b_in(h.b_count, 0);
    for (int a : e.a_hat) {
        if (a < 0 || a >= h.a_count || a_in[a]) return "bad A^ entry";
        a_in[a] = 1;
    }
    for (int b : e.b_hat) {
        if (b < 0 || b >= h.b_count || b_in[b]) return "bad B^ entry";
        b_in[b] = 1;
    }
    std::vector<int> load(h.a_count, 0);
    std::vector<char> hit(h.b_count, 0);
    for (auto [a, b] : e.edges) {
        if (a < 0 || a >= h.a_count || b < 0 || b >= h.b_count) return "edge out of range";
        if (!a_in[a] || !b_in[b]) return "edge leaves A^ x B^";
        if (std::find(h.adj[a].begin(), h.adj[a].end(), b) == h.adj[a].end()) return "edge not in graph";
        if (hit[b]) return "B vertex saturated twice";
        hit[b] = 1;
        ++load[a];
    }
    for (int a : e.a_hat)
        if (load[a] != e.q) return "A^ vertex without exactly q partners";
    for (int a = 0; a < h.a_count; ++a) {
        if (a_in[a]) continue;
        for (int b : h.adj[a])
            if (b_in[b]) return "N(B^) not inside A^";
    }
    if (slack) {
        long outside_b = h.b_count - static_cast<long>(e.b_hat.size());
        long outside_a = h.a_count - static_cast<long>(e.a_hat.size());
        if (outside_b > static_cast<long>(e.q) * outside_a) return "|B \\ B^| > q|A \\ A^|";
    }
    return {};
}

}  // namespace pitvd
