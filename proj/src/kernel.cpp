#include "pitvd/kernel.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pitvd/combinatorics.hpp"
#include "pitvd/recognition.hpp"

namespace pitvd {

namespace {

VertexSet open_neighborhood(const MultiGraph& g, const VertexSet& s) {
    VertexSet out;
    for (VertexId v : s)
        for (const auto& [w, m] : g.neighbors(v))
            if (!set_contains(s, w)) out.push_back(w);
    normalize(out);
    return out;
}

// Sum of multiplicities on pairs inside `vs`.
std::size_t inner_multiplicity(const MultiGraph& g, const VertexSet& vs) {
    std::size_t twice = 0;
    for (VertexId v : vs)
        for (const auto& [w, m] : g.neighbors(v))
            if (set_contains(vs, w)) twice += static_cast<std::size_t>(m);
    return twice / 2;
}

// Vertices reachable from `start` without entering `blocked`.
VertexSet reach(const MultiGraph& g, VertexId start, const std::set<VertexId>& blocked) {
    std::set<VertexId> seen{start};
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const auto& [w, m] : g.neighbors(v))
            if (!blocked.count(w) && seen.insert(w).second) queue.push_back(w);
    }
    return VertexSet(seen.begin(), seen.end());
}

RuleApplication deletion(int rule, VertexSet doomed, int k_delta = 0) {
    RuleApplication a;
    a.rule = rule;
    normalize(doomed);
    a.deleted = std::move(doomed);
    a.k_delta = k_delta;
    return a;
}

std::string join(const VertexSet& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << '}';
    return out.str();
}

// ---- rules 1-7: no modulator needed ----

std::optional<RuleApplication> rule1(const MultiGraph& g, int mutation) {
    std::vector<VertexSet> clean;
    for (VertexSet& comp : connected_components(g))
        if (classify_component(g, comp).kind != ComponentClass::Kind::Neither) clean.push_back(std::move(comp));
    // The mutated rule spares one clean component.
    if (mutation == 1 && !clean.empty()) clean.pop_back();
    VertexSet doomed;
    for (const VertexSet& comp : clean) doomed.insert(doomed.end(), comp.begin(), comp.end());
    if (doomed.empty()) return std::nullopt;
    return deletion(1, doomed);
}

std::optional<RuleApplication> rule2(const MultiGraph& g, int mutation) {
    const int cap = mutation == 2 ? 3 : 2;
    RuleApplication a;
    a.rule = 2;
    for (const auto& [u, v, m] : g.edges())
        if (m > cap) a.edge_changes.emplace_back(u, v, cap);
    if (a.edge_changes.empty()) return std::nullopt;
    return a;
}

std::optional<RuleApplication> rule3(const MultiGraph& g, int k, int mutation) {
    for (VertexId v : g.vertices()) {
        int doubles = 0;
        for (const auto& [w, m] : g.neighbors(v))
            if (m >= 2) ++doubles;
        if (doubles >= k + 1) return deletion(3, {v}, mutation == 3 ? -2 : -1);
    }
    return std::nullopt;
}

std::optional<RuleApplication> rule4(const MultiGraph& g, int mutation) {
    const std::size_t keep = mutation == 4 ? 3 : 2;
    for (const DegreeTwoPath& p : find_degree2_paths(g)) {
        if (p.kind != PathKind::Tail || p.length() <= keep) continue;
        return deletion(4, VertexSet(p.vertices.begin() + keep, p.vertices.end()));
    }
    return std::nullopt;
}

// Shrinks a non-tail degree-2 path to four vertices. A closed path (a, r1..rm)
// becomes the cycle a r1 r_{m-1} r_m.
std::optional<RuleApplication> rule5(const MultiGraph& g, int mutation) {
    const std::size_t keep_back = mutation == 5 ? 3 : 2;
    for (const DegreeTwoPath& p : find_degree2_paths(g)) {
        if (p.kind == PathKind::Tail) continue;
        const std::size_t len = p.length();
        if (len < keep_back + 3) continue;
        RuleApplication a = deletion(5, VertexSet(p.vertices.begin() + 2, p.vertices.end() - keep_back));
        VertexId u = p.vertices[1];
        VertexId w = p.vertices[len - keep_back];
        a.edge_changes.emplace_back(std::min(u, w), std::max(u, w), 1);
        return a;
    }
    return std::nullopt;
}

std::optional<RuleApplication> rule6(const MultiGraph& g, int mutation) {
    const std::size_t extras = mutation == 6 ? 3 : 2;
    for (const PendantTree& pt : pendant_trees(g)) {
        const VertexSet& c = pt.vertices;
        // BFS from the attachment; the first layer holding a branching vertex wins.
        std::map<VertexId, VertexId> parent;
        std::vector<VertexId> layer{pt.attachment};
        std::set<VertexId> seen{pt.attachment};
        std::optional<VertexId> target;
        while (!layer.empty() && !target) {
            std::vector<VertexId> next;
            for (VertexId v : layer)
                for (const auto& [w, m] : g.neighbors(v))
                    if (set_contains(c, w) && seen.insert(w).second) {
                        parent[w] = v;
                        next.push_back(w);
                    }
            std::sort(next.begin(), next.end());
            for (VertexId w : next)
                if (g.degree(w) >= 3) {
                    target = w;
                    break;
                }
            layer = std::move(next);
        }
        if (!target) continue;
        VertexSet kept;
        for (VertexId v = *target; v != pt.attachment; v = parent.at(v)) kept.push_back(v);
        normalize(kept);
        std::size_t added = 0;
        for (const auto& [w, m] : g.neighbors(*target)) {
            if (added == extras) break;
            if (set_contains(c, w) && !set_contains(kept, w)) {
                kept.push_back(w);
                ++added;
            }
        }
        normalize(kept);
        VertexSet doomed = set_difference(c, kept);
        if (!doomed.empty()) return deletion(6, doomed);
    }
    return std::nullopt;
}

std::optional<RuleApplication> rule7(const MultiGraph& g, int mutation) {
    const std::size_t keep = mutation == 7 ? 4 : 3;
    std::map<VertexId, std::vector<VertexSet>> by_attachment;
    for (PendantTree& pt : pendant_trees(g)) by_attachment[pt.attachment].push_back(std::move(pt.vertices));
    for (auto& [x, trees] : by_attachment) {
        if (trees.size() <= keep) continue;
        std::sort(trees.begin(), trees.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
        VertexSet doomed;
        for (std::size_t i = keep; i < trees.size(); ++i) doomed.insert(doomed.end(), trees[i].begin(), trees[i].end());
        return deletion(7, doomed);
    }
    return std::nullopt;
}

// ---- rules 8-14: read the modulator ----

struct Segment {
    VertexId from = 0;
    VertexId to = 0;
    std::vector<VertexId> hooks;  // in walking order
};

std::optional<RuleApplication> rule8(const MultiGraph& g, const VertexSet& s, int mutation) {
    Modulator m = classify_tree_side(g, s);
    VertexSet doomed;
    // The mutated rule spares the last bad hook.
    const std::size_t spared = mutation == 8 ? 1 : 0;
    for (std::size_t i = 0; i + spared < m.bad_hooks.size(); ++i)
        for (const VertexSet& h : m.hangers.at(m.bad_hooks[i])) doomed.insert(doomed.end(), h.begin(), h.end());
    if (doomed.empty()) return std::nullopt;
    return deletion(8, doomed);
}

MultiGraph flower_graph(const MultiGraph& g, VertexId v, const Modulator& m) {
    VertexSet keep = m.v2;
    keep.push_back(v);
    normalize(keep);
    return g.induced(keep);
}

std::optional<RuleApplication> rule9(const MultiGraph& g, int k, const VertexSet& s, int mutation) {
    if (s.empty()) return std::nullopt;
    Modulator m = classify_tree_side(g, s);
    for (VertexId v : s) {
        FlowerResult fr = v_flower_or_hitting_set(flower_graph(g, v, m), v, 4 * k + 2);
        if (fr.is_flower) return deletion(9, {v}, mutation == 9 ? 0 : -1);
    }
    return std::nullopt;
}

std::optional<RuleApplication> rule10(const MultiGraph& g, int k, const VertexSet& s, int mutation, bool strict) {
    if (s.empty()) return std::nullopt;
    Modulator m = classify_tree_side(g, s);
    for (VertexId v : s) {
        FlowerResult fr = v_flower_or_hitting_set(flower_graph(g, v, m), v, 4 * k + 2);
        if (fr.is_flower) continue;
        const VertexSet& z = fr.hitting_set;
        std::size_t degree = 0;
        for (const auto& [w, mult] : g.neighbors(v))
            if (set_contains(m.v2, w)) degree += static_cast<std::size_t>(mult);
        if (degree < 7 * (s.size() + z.size()) + 5) continue;

        const VertexSet side_a = set_difference(set_union(z, s), {v});
        MultiGraph forest = g.induced(set_difference(m.v2, z));
        std::vector<VertexSet> comps;
        for (VertexSet& c : connected_components(forest)) {
            bool touches_v = false;
            for (VertexId u : c) touches_v = touches_v || g.adjacent(u, v);
            if (touches_v) comps.push_back(std::move(c));
        }
        auto complain = [&](const std::string& why) {
            if (strict)
                throw std::logic_error("rule 10 at vertex " + std::to_string(v) + ": " + why + " (|S|=" +
                                       std::to_string(s.size()) + ", |Z|=" + std::to_string(z.size()) +
                                       ", components=" + std::to_string(comps.size()) + ")");
        };
        if (side_a.empty() || comps.empty()) {
            complain("empty side in the auxiliary graph");
            continue;
        }
        BipartiteGraph h(static_cast<int>(side_a.size()), static_cast<int>(comps.size()));
        for (std::size_t i = 0; i < side_a.size(); ++i)
            for (std::size_t j = 0; j < comps.size(); ++j) {
                bool adj = false;
                for (VertexId u : comps[j]) adj = adj || g.adjacent(side_a[i], u);
                if (adj) h.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        BipartiteExpansion e = q_expansion_new(h, 5);
        if (std::string bad = validate_expansion(h, e, true); !bad.empty())
            throw std::logic_error("rule 10: invalid expansion: " + bad);
        const std::vector<int> saturated = e.saturated();
        if (e.a_hat.empty()) {
            complain("no vertex expands");
            continue;
        }
        if (e.b_hat.size() < saturated.size() + 5) {
            complain("fewer than five unsaturated components");
            continue;
        }
        VertexSet a_hat;
        for (int i : e.a_hat) a_hat.push_back(side_a[i]);
        for (int j : e.b_hat) {
            for (VertexId u : comps[j])
                for (const auto& [w, mult] : g.neighbors(u))
                    if (w != v && !set_contains(a_hat, w) && !set_contains(comps[j], w))
                        throw std::logic_error("rule 10: component " + join(comps[j]) + " has neighbour " +
                                               std::to_string(w) + " outside the expanded set");
        }
        RuleApplication a;
        a.rule = 10;
        for (int j : saturated)
            for (VertexId u : comps[j])
                if (g.adjacent(u, v)) a.edge_changes.emplace_back(std::min(u, v), std::max(u, v), 0);
        const VertexSet& doubled = mutation == 10 ? side_a : a_hat;
        for (VertexId w : doubled)
            if (g.multiplicity(v, w) != 2) a.edge_changes.emplace_back(std::min(v, w), std::max(v, w), 2);
        return a;
    }
    return std::nullopt;
}

std::optional<RuleApplication> rule11(const MultiGraph& g, int k, const VertexSet& s, int mutation) {
    (void)k;
    if (s.empty()) return std::nullopt;
    Modulator m = classify_tree_side(g, s);
    std::vector<const VertexSet*> comps;
    for (const VertexSet& c : m.v1_components) {
        bool touches = false;
        for (VertexId u : c)
            for (const auto& [w, mult] : g.neighbors(u)) touches = touches || set_contains(s, w);
        if (touches) comps.push_back(&c);
    }
    if (comps.size() < 3 * s.size()) return std::nullopt;
    BipartiteGraph h(static_cast<int>(s.size()), static_cast<int>(comps.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < comps.size(); ++j) {
            bool adj = false;
            for (VertexId u : *comps[j]) adj = adj || g.adjacent(s[i], u);
            if (adj) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    BipartiteExpansion e = q_expansion_classic(h, 3);
    if (e.a_hat.empty()) return std::nullopt;
    VertexSet doomed;
    for (int i : e.a_hat) doomed.push_back(s[i]);
    const int drop = static_cast<int>(doomed.size()) + (mutation == 11 ? 1 : 0);
    return deletion(11, doomed, -drop);
}

std::optional<RuleApplication> rule12(const MultiGraph& g, int k, const VertexSet& s, int mutation) {
    if (s.empty()) return std::nullopt;
    const std::size_t need = static_cast<std::size_t>(6 * k + 5);
    for (const CliquePartition& p : v1_partitions(g, s)) {
        for (VertexId v : s) {
            std::set<int> hit;
            for (const auto& [w, mult] : g.neighbors(v))
                if (int c = p.clique_of(w); c >= 0) hit.insert(c);
            if (hit.size() >= need) return deletion(12, {v}, mutation == 12 ? -2 : -1);
        }
    }
    return std::nullopt;
}

std::optional<RuleApplication> rule13(const MultiGraph& g, int k, const VertexSet& s, int mutation, bool strict) {
    const VertexSet touched = open_neighborhood(g, s);
    const std::size_t run_needed = static_cast<std::size_t>(14 * k + 5);
    for (const CliquePartition& p : v1_partitions(g, s)) {
        const std::size_t t = p.size();
        auto clean = [&](std::size_t i) {
            for (VertexId u : p.clique(i))
                if (set_contains(touched, u)) return false;
            return true;
        };
        std::size_t a = 0;
        while (a < t) {
            if (!clean(a)) {
                ++a;
                continue;
            }
            std::size_t b = a;
            while (b + 1 < t && clean(b + 1)) ++b;
            const std::size_t i = a + static_cast<std::size_t>(7 * k);
            if (b - a + 1 >= run_needed && i + 5 < t) {
                VertexSet comp = p.ordering();
                normalize(comp);
                MultiGraph block = g.induced(comp);
                const VertexId x = p.clique(i).front();
                const VertexId y = p.clique(i + 5).front();
                VertexSet sep = minimum_vertex_separator(block, x, y);
                for (std::size_t l = i + 1; l <= i + 3; ++l) {
                    VertexSet kl = p.clique(l);
                    normalize(kl);
                    if (!set_intersection(kl, sep).empty()) continue;
                    auto [left, right] = attachments(g, p, l);
                    RuleApplication r = deletion(13, kl);
                    if (mutation != 13)
                        for (VertexId u : left)
                            for (VertexId w : right)
                                if (!g.adjacent(u, w)) r.edge_changes.emplace_back(std::min(u, w), std::max(u, w), 1);
                    return r;
                }
                if (strict)
                    throw std::logic_error("rule 13: separator " + join(sep) + " meets cliques " +
                                           std::to_string(i + 1) + ".." + std::to_string(i + 3));
            }
            a = b + 1;
        }
    }
    return std::nullopt;
}

std::optional<RuleApplication> rule14(const MultiGraph& g, int k, const VertexSet& s, int mutation) {
    for (const CliquePartition& p : v1_partitions(g, s)) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            MarkingLedger ledger = mark_clique(g, k, s, p, i);
            VertexSet clique = p.clique(i);
            normalize(clique);
            VertexSet doomed = set_difference(clique, ledger.marked);
            // The mutated rule spares one unmarked vertex.
            if (mutation == 14 && !doomed.empty()) doomed.pop_back();
            if (!doomed.empty()) return deletion(14, doomed);
        }
    }
    return std::nullopt;
}

std::tuple<int, std::size_t, std::size_t> potential(const MultiGraph& g, int k) {
    return {k, g.num_vertices(), g.total_multiplicity()};
}

bool touches(const RuleApplication& a, const VertexSet& s) {
    for (VertexId v : a.deleted)
        if (set_contains(s, v)) return true;
    for (const auto& [u, w, m] : a.edge_changes)
        if (set_contains(s, u) || set_contains(s, w)) return true;
    return false;
}

}  // namespace

void apply_change(MultiGraph& g, int& k, const RuleApplication& a) {
    g.delete_vertices(a.deleted);
    for (const auto& [u, v, m] : a.edge_changes) g.set_multiplicity(u, v, m);
    k += a.k_delta;
}

BaseSet compute_base_set(const MultiGraph& g, int k, const KernelOptions& opts) {
    BaseSet b;
    if (opts.bootstrap == BootstrapMode::Exact) {
        BootstrapResult r = bootstrap_modulator(g, k, opts.limits);
        if (r.decided_no) {
            b.decided_no = true;
            return b;
        }
        b.greedy = r.greedy;
        b.bootstrap = r.modulator;
    } else {
        b.greedy = true;
        b.bootstrap = greedy_modulator(g);
    }
    SetFamily reduced = sunflower_reduce(enumerate_small_obstructions(g), k, 6);
    VertexSet covered;
    for (const VertexSet& f : reduced) covered.insert(covered.end(), f.begin(), f.end());
    normalize(covered);
    const std::uint64_t cap = sunflower_bound(6, k);
    if (cap <= std::numeric_limits<std::uint64_t>::max() / 6 && covered.size() > 6 * cap)
        throw std::logic_error("base set: reduced family covers too many vertices");
    if (!b.greedy && b.bootstrap.size() > static_cast<std::size_t>(k))
        throw std::logic_error("base set: bootstrap modulator exceeds the budget");
    b.s = set_union(covered, b.bootstrap);
    if (!is_pitg(delete_vertices(g, b.s)).yes()) throw std::logic_error("base set: G - S is not a (proper interval, tree)-graph");
    return b;
}

Modulator classify_tree_side(const MultiGraph& g, const VertexSet& s_in) {
    Modulator m;
    m.s = s_in;
    normalize(m.s);
    const MultiGraph rest = delete_vertices(g, m.s);
    for (VertexSet& comp : connected_components(rest)) {
        switch (classify_component(rest, comp).kind) {
            case ComponentClass::Kind::Tree: m.v2_components.push_back(std::move(comp)); break;
            case ComponentClass::Kind::ProperInterval: m.v1_components.push_back(std::move(comp)); break;
            case ComponentClass::Kind::Neither:
                throw std::invalid_argument("modulator: component " + join(comp) + " of G - S is neither tree nor proper interval");
        }
    }
    for (const VertexSet& c : m.v1_components) m.v1.insert(m.v1.end(), c.begin(), c.end());
    for (const VertexSet& c : m.v2_components) m.v2.insert(m.v2.end(), c.begin(), c.end());
    normalize(m.v1);
    normalize(m.v2);
    m.f1 = set_intersection(open_neighborhood(g, m.s), m.v2);
    m.f2 = set_difference(m.v2, m.f1);

    for (const VertexSet& tree : m.v2_components) {
        // Steiner tree of the F1 vertices: strip non-F1 leaves until none remain.
        std::map<VertexId, int> deg;
        std::set<VertexId> alive(tree.begin(), tree.end());
        std::deque<VertexId> queue;
        for (VertexId v : tree) {
            deg[v] = static_cast<int>(rest.neighbors(v).size());
            if (deg[v] <= 1 && !set_contains(m.f1, v)) queue.push_back(v);
        }
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            if (!alive.erase(v)) continue;
            for (const auto& [w, mult] : rest.neighbors(v))
                if (alive.count(w) && --deg[w] <= 1 && !set_contains(m.f1, w)) queue.push_back(w);
        }
        std::set<VertexId> special;
        for (VertexId v : alive) {
            if (set_contains(m.f1, v)) {
                special.insert(v);
                continue;
            }
            m.f3.push_back(v);
            if (deg[v] >= 3) {
                m.f3_critical.push_back(v);
                special.insert(v);
            }
        }
        std::set<VertexId> hooks;
        for (VertexId w : alive) {
            if (special.count(w)) continue;
            std::vector<VertexSet> hangers;
            for (const auto& [u, mult] : rest.neighbors(w))
                if (!alive.count(u)) hangers.push_back(reach(rest, u, {w}));
            if (hangers.empty()) continue;
            hooks.insert(w);
            m.hangers[w] = std::move(hangers);
        }
        // Walk every path between consecutive special vertices.
        for (VertexId from : special)
            for (const auto& [first, mult] : rest.neighbors(from)) {
                if (!alive.count(first)) continue;
                Segment seg{from, 0, {}};
                VertexId prev = from;
                VertexId cur = first;
                while (!special.count(cur)) {
                    if (hooks.count(cur)) seg.hooks.push_back(cur);
                    VertexId next = cur;
                    for (const auto& [w, m2] : rest.neighbors(cur))
                        if (w != prev && alive.count(w)) next = w;
                    prev = cur;
                    cur = next;
                }
                seg.to = cur;
                if (seg.from > seg.to) continue;
                for (std::size_t i = 0; i < seg.hooks.size(); ++i) {
                    if (i == 0 || i + 1 == seg.hooks.size())
                        m.good_hooks.push_back(seg.hooks[i]);
                    else
                        m.bad_hooks.push_back(seg.hooks[i]);
                }
            }
    }
    normalize(m.f3);
    normalize(m.f3_critical);
    normalize(m.good_hooks);
    normalize(m.bad_hooks);
    return m;
}

std::vector<PendantTree> pendant_trees(const MultiGraph& g) {
    std::vector<PendantTree> out;
    for (VertexId x : g.vertices()) {
        const VertexSet nbrs = g.neighbor_set(x);
        if (nbrs.size() < 2) continue;
        std::set<VertexId> done;
        for (VertexId u : nbrs) {
            if (done.count(u)) continue;
            VertexSet c = reach(g, u, {x});
            done.insert(c.begin(), c.end());
            if (set_intersection(c, nbrs).size() == nbrs.size()) continue;
            VertexSet with_x = c;
            with_x.push_back(x);
            normalize(with_x);
            if (inner_multiplicity(g, with_x) != c.size()) continue;
            out.push_back({x, std::move(c)});
        }
    }
    return out;
}

std::vector<CliquePartition> v1_partitions(const MultiGraph& g, const VertexSet& s) {
    Modulator m = classify_tree_side(g, s);
    std::vector<CliquePartition> out;
    for (const VertexSet& comp : m.v1_components) {
        MultiGraph sub = g.induced(comp);
        auto ordering = proper_interval_ordering(sub);
        const auto* order = std::get_if<std::vector<VertexId>>(&ordering);
        if (!order) throw std::logic_error("V1 component " + join(comp) + " has no proper interval ordering");
        out.push_back(build_clique_partition(sub, *order));
    }
    return out;
}

std::size_t eta_bound(int k, std::size_t s_size) {
    const std::size_t kk = static_cast<std::size_t>(k);
    std::size_t sum = 0;
    std::size_t choose = 1;
    for (std::size_t i = 1; i <= 3; ++i) {
        choose = i <= s_size ? choose * (s_size - i + 1) / i : 0;
        sum += (std::size_t{1} << i) * choose;
    }
    return 2 * (kk + 3) * sum + 6 * s_size * (kk + 1) * (kk + 3);
}

MarkingLedger mark_clique(const MultiGraph& g, int k, const VertexSet& s, const CliquePartition& p, std::size_t index) {
    const std::vector<VertexId>& clique = p.clique(index);
    const std::size_t k1 = static_cast<std::size_t>(k) + 1;
    const std::size_t k3 = static_cast<std::size_t>(k) + 3;
    MarkingLedger ledger;
    std::set<VertexId> marked;
    auto first = [](const std::vector<VertexId>& seq, std::size_t count) {
        return std::vector<VertexId>(seq.begin(), seq.begin() + std::min(count, seq.size()));
    };
    auto last = [](const std::vector<VertexId>& seq, std::size_t count) {
        return std::vector<VertexId>(seq.end() - std::min(count, seq.size()), seq.end());
    };
    auto mark = [&](const std::vector<VertexId>& vs, std::size_t& tally) {
        marked.insert(vs.begin(), vs.end());
        tally += vs.size();
    };
    auto filter = [&](const std::vector<VertexId>& seq, auto&& keep) {
        std::vector<VertexId> out;
        for (VertexId u : seq)
            if (keep(u)) out.push_back(u);
        return out;
    };

    // Step 1: every pattern of adjacency to at most three modulator vertices.
    const std::size_t max_z = std::min<std::size_t>(3, s.size());
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= max_z; ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            for (unsigned f = 0; f < (1u << size); ++f) {
                auto matches = [&](VertexId u) {
                    for (std::size_t i = 0; i < size; ++i)
                        if (g.adjacent(u, s[pick[i]]) != (((f >> i) & 1u) != 0)) return false;
                    return true;
                };
                std::vector<VertexId> seq = filter(clique, matches);
                mark(first(seq, k3), ledger.step1);
                mark(last(seq, k3), ledger.step1);
            }
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == s.size() - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    for (VertexId x : s) {
        auto adj_x = [&](VertexId u) { return g.adjacent(u, x); };
        auto non_adj_x = [&](VertexId u) { return !g.adjacent(u, x); };
        if (index > 0) {
            const std::vector<VertexId>& pv = p.clique(index - 1);
            for (VertexId y : last(filter(pv, non_adj_x), k1)) {
                auto common = [&](VertexId u) { return g.adjacent(u, x) && g.adjacent(u, y); };
                mark(last(filter(clique, common), k3), ledger.step2);
            }
            const std::vector<VertexId> nbrs = filter(pv, adj_x);
            for (VertexId y : last(nbrs, k1)) {
                auto only_y = [&](VertexId u) { return g.adjacent(u, y) && !g.adjacent(u, x); };
                mark(last(filter(clique, only_y), k3), ledger.step3);
            }
            for (VertexId y : first(nbrs, k1)) {
                auto only_x = [&](VertexId u) { return g.adjacent(u, x) && !g.adjacent(u, y); };
                mark(first(filter(clique, only_x), k1), ledger.step4);
            }
        }
        if (index + 1 < p.size()) {
            const std::vector<VertexId>& nt = p.clique(index + 1);
            for (VertexId z : first(filter(nt, non_adj_x), k1)) {
                auto common = [&](VertexId u) { return g.adjacent(u, x) && g.adjacent(u, z); };
                mark(first(filter(clique, common), k3), ledger.step2);
            }
            const std::vector<VertexId> nbrs = filter(nt, adj_x);
            for (VertexId z : first(nbrs, k1)) {
                auto only_z = [&](VertexId u) { return g.adjacent(u, z) && !g.adjacent(u, x); };
                mark(first(filter(clique, only_z), k3), ledger.step3);
            }
            for (VertexId z : last(nbrs, k1)) {
                auto only_x = [&](VertexId u) { return g.adjacent(u, x) && !g.adjacent(u, z); };
                mark(last(filter(clique, only_x), k3), ledger.step4);
            }
        }
    }
    ledger.marked.assign(marked.begin(), marked.end());
    return ledger;
}

VertexSet minimum_vertex_separator(const MultiGraph& g, VertexId x, VertexId y) {
    if (x == y || g.adjacent(x, y)) throw std::invalid_argument("separator: endpoints must be distinct and non-adjacent");
    const VertexSet vs = g.vertices();
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    const int inf = static_cast<int>(vs.size()) + 1;
    std::vector<std::vector<Arc>> net(2 * vs.size());
    auto add_arc = [&](int a, int b, int cap) {
        net[a].push_back({b, cap, static_cast<int>(net[b].size())});
        net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
    };
    // Vertex i splits into in = 2i and out = 2i + 1.
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const bool terminal = vs[i] == x || vs[i] == y;
        add_arc(2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1, terminal ? inf : 1);
    }
    for (const auto& [u, w, m] : g.edges()) {
        add_arc(2 * index[u] + 1, 2 * index[w], inf);
        add_arc(2 * index[w] + 1, 2 * index[u], inf);
    }
    const int source = 2 * index.at(x) + 1;
    const int sink = 2 * index.at(y);
    auto residual_reach = [&](std::vector<std::pair<int, int>>* via) {
        std::vector<char> seen(net.size(), 0);
        if (via) via->assign(net.size(), {-1, -1});
        std::deque<int> queue{source};
        seen[source] = 1;
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (std::size_t e = 0; e < net[a].size(); ++e) {
                const Arc& arc = net[a][e];
                if (arc.cap <= 0 || seen[arc.to]) continue;
                seen[arc.to] = 1;
                if (via) (*via)[arc.to] = {a, static_cast<int>(e)};
                queue.push_back(arc.to);
            }
        }
        return seen;
    };
    while (true) {
        std::vector<std::pair<int, int>> via;
        if (!residual_reach(&via)[sink]) break;
        for (int a = sink; a != source; a = via[a].first) {
            Arc& arc = net[via[a].first][via[a].second];
            arc.cap -= 1;
            net[a][arc.rev].cap += 1;
        }
    }
    const std::vector<char> seen = residual_reach(nullptr);
    VertexSet out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (seen[2 * i] && !seen[2 * i + 1]) out.push_back(vs[i]);
    return out;
}

std::optional<RuleApplication> find_rule(int rule, const MultiGraph& g, int k, const VertexSet& s, int mutation,
                                         bool strict) {
    switch (rule) {
        case 1: return rule1(g, mutation);
        case 2: return rule2(g, mutation);
        case 3: return rule3(g, k, mutation);
        case 4: return rule4(g, mutation);
        case 5: return rule5(g, mutation);
        case 6: return rule6(g, mutation);
        case 7: return rule7(g, mutation);
        case 8: return rule8(g, s, mutation);
        case 9: return rule9(g, k, s, mutation);
        case 10: return rule10(g, k, s, mutation, strict);
        case 11: return rule11(g, k, s, mutation);
        case 12: return rule12(g, k, s, mutation);
        case 13: return rule13(g, k, s, mutation, strict);
        case 14: return rule14(g, k, s, mutation);
        default: throw std::invalid_argument("unknown rule " + std::to_string(rule));
    }
}

KernelInstance kernelize(const MultiGraph& g, int k, const KernelOptions& opts) {
    if (k < 0) throw std::invalid_argument("kernelize: negative budget");
    KernelInstance ki;
    ki.graph = g;
    ki.k = k;
    bool s_valid = false;
    auto refresh = [&] {
        BaseSet b = compute_base_set(ki.graph, ki.k, opts);
        RuleApplication a;
        a.base_set = b.s;
        a.greedy_base = b.greedy;
        a.decided_no = b.decided_no;
        ki.trace.push_back(std::move(a));
        ki.decided_no = b.decided_no;
        ki.base_set = b.s;
        s_valid = !b.decided_no;
        return s_valid;
    };
    if (!refresh()) return ki;
    const bool strict = opts.mutation == 0;
    std::size_t steps = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int r = 1; r <= kRuleCount && !changed; ++r) {
            if (r >= 8 && !s_valid && !refresh()) return ki;
            std::optional<RuleApplication> app = find_rule(r, ki.graph, ki.k, ki.base_set, opts.mutation, strict);
            if (!app) continue;
            if (++steps > opts.max_steps) throw std::logic_error("kernelize: step limit reached");
            const auto before_potential = potential(ki.graph, ki.k);
            const int k_before = ki.k;
            MultiGraph before;
            if (opts.observer) before = ki.graph;
            apply_change(ki.graph, ki.k, *app);
            ki.trace.push_back(*app);
            if (opts.observer) opts.observer(*app, before, k_before, ki.graph, ki.k);
            if (ki.k < 0) {
                ki.k = 0;
                ki.decided_no = true;
                return ki;
            }
            if (!(potential(ki.graph, ki.k) < before_potential))
                throw std::logic_error("kernelize: rule " + std::to_string(r) + " did not decrease the potential");
            if (touches(*app, ki.base_set)) s_valid = false;
            changed = true;
        }
    }
    return ki;
}

KernelInstance replay(const MultiGraph& g, int k, const std::vector<RuleApplication>& trace) {
    KernelInstance ki;
    ki.graph = g;
    ki.k = k;
    ki.trace = trace;
    for (const RuleApplication& a : trace) {
        if (a.rule == 0) {
            ki.base_set = a.base_set;
            if (a.decided_no) {
                ki.decided_no = true;
                break;
            }
            continue;
        }
        apply_change(ki.graph, ki.k, a);
        if (ki.k < 0) {
            ki.k = 0;
            ki.decided_no = true;
            break;
        }
    }
    return ki;
}

AuditReport audit_irreducible(const KernelInstance& ki) {
    AuditReport report;
    if (ki.decided_no) return report;
    const MultiGraph& g = ki.graph;
    const int k = ki.k;
    const VertexSet& s = ki.base_set;
    auto fail = [&](const std::string& why) { report.failures.push_back(why); };

    for (const auto& [u, v, m] : g.edges())
        if (m > 2) fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " has multiplicity " + std::to_string(m));
    for (VertexId v : g.vertices()) {
        int doubles = 0;
        for (const auto& [w, m] : g.neighbors(v)) doubles += m >= 2 ? 1 : 0;
        if (doubles > k) fail("vertex " + std::to_string(v) + " has " + std::to_string(doubles) + " double-edge neighbours");
    }
    for (const DegreeTwoPath& p : find_degree2_paths(g)) {
        const std::size_t limit = p.kind == PathKind::Tail ? 2 : 4;
        if (p.length() > limit)
            fail(std::string(to_string(p.kind)) + " path of " + std::to_string(p.length()) + " vertices");
    }
    std::map<VertexId, int> per_attachment;
    for (const PendantTree& pt : pendant_trees(g)) {
        ++per_attachment[pt.attachment];
        bool is_path = true;
        for (VertexId v : pt.vertices) is_path = is_path && g.degree(v) <= 2;
        if (!is_path && pt.vertices.size() > 5)
            fail("pendant tree at " + std::to_string(pt.attachment) + " keeps " + std::to_string(pt.vertices.size()) + " vertices");
    }
    for (const auto& [x, count] : per_attachment)
        if (count > 3) fail(std::to_string(count) + " pendant trees at " + std::to_string(x));
    for (const VertexSet& comp : connected_components(g))
        if (classify_component(g, comp).kind != ComponentClass::Kind::Neither) fail("clean component " + join(comp));

    Modulator m;
    try {
        m = classify_tree_side(g, s);
    } catch (const std::exception& e) {
        fail(std::string("modulator: ") + e.what());
        return report;
    }
    for (VertexId w : m.bad_hooks) fail("bad hook " + std::to_string(w) + " keeps its hangers");
    std::size_t f1_cap = 0;
    for (VertexId v : s) {
        FlowerResult fr = v_flower_or_hitting_set(flower_graph(g, v, m), v, 4 * k + 2);
        if (fr.is_flower) {
            fail("flower of order " + std::to_string(fr.petals.size()) + " at " + std::to_string(v));
            continue;
        }
        f1_cap += 7 * (s.size() + fr.hitting_set.size()) + 4;
    }
    if (m.f1.size() > f1_cap) fail("|F1| = " + std::to_string(m.f1.size()) + " exceeds " + std::to_string(f1_cap));
    const std::size_t v2_cap = m.f1.empty() ? 0 : 108 * m.f1.size() - 54;
    if (m.v2.size() > v2_cap) fail("|V2| = " + std::to_string(m.v2.size()) + " exceeds " + std::to_string(v2_cap));
    const std::size_t eta = eta_bound(k, s.size());
    for (const CliquePartition& p : v1_partitions(g, s))
        for (const auto& clique : p.cliques())
            if (clique.size() > eta)
                fail("clique of " + std::to_string(clique.size()) + " exceeds eta = " + std::to_string(eta));
    for (int r = 1; r <= kRuleCount; ++r) {
        try {
            if (find_rule(r, g, k, s, 0, false)) fail("rule " + std::to_string(r) + " still applies");
        } catch (const std::exception& e) {
            fail("rule " + std::to_string(r) + " failed: " + e.what());
        }
    }
    return report;
}

}  // namespace pitvd
