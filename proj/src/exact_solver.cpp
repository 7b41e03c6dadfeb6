#include "pitvd/exact_solver.hpp"

#include <algorithm>
#include <string>

#include "pitvd/indexed_graph.hpp"
#include "pitvd/recognition.hpp"

namespace pitvd {

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // out * (n - k + i) / i stays integral at every step.
        unsigned __int128 next = static_cast<unsigned __int128>(out) * (n - k + i) / i;
        if (next > cap) return cap + 1;
        out = static_cast<std::uint64_t>(next);
    }
    return out;
}

void guard(const MultiGraph& g, int k, const SolverLimits& limits) {
    if (!within_scale(g, k, limits))
        throw ScaleGuardError("exact solver refuses n=" + std::to_string(g.num_vertices()) + " k=" + std::to_string(k));
}

// Vertices any solution must meet at least once.
std::vector<int> branch_set(const IndexedGraph& ig, const Obstruction& obs) {
    std::vector<int> out;
    for (VertexId v : obs.vertex_set()) out.push_back(ig.index_of(v));
    return out;
}

bool search(const IndexedGraph& g, int k, std::vector<VertexId>& chosen) {
    auto obs = detail::pitg_obstruction(g);
    if (!obs) return true;
    if (k == 0) return false;
    for (int i : branch_set(g, *obs)) {
        chosen.push_back(g.ids[i]);
        if (search(g.without(i), k - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool within_scale(const MultiGraph& g, int k, const SolverLimits& limits) {
    if (k < 0) return true;
    if (k > limits.max_k) return false;
    const std::size_t n = g.num_vertices();
    if (n <= limits.max_n) return true;
    return binomial_capped(n, static_cast<std::uint64_t>(k), limits.subset_cap) <= limits.subset_cap;
}

Decision decide(const MultiGraph& g, int k, const SolverLimits& limits) {
    if (k < 0) return {};
    guard(g, k, limits);
    IndexedGraph ig(g);
    std::vector<VertexId> chosen;
    Decision d;
    d.yes = search(ig, k, chosen);
    if (d.yes) {
        d.solution = chosen;
        normalize(d.solution);
    }
    return d;
}

Decision decide_by_enumeration(const MultiGraph& g, int k, const SolverLimits& limits) {
    if (k < 0) return {};
    guard(g, k, limits);
    const VertexSet vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    IndexedGraph full(g);
    for (int size = 0; size <= std::min(k, n); ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::vector<int> keep;
            std::size_t p = 0;
            for (int i = 0; i < n; ++i) {
                if (p < pick.size() && pick[p] == i) {
                    ++p;
                    continue;
                }
                keep.push_back(i);
            }
            if (!detail::pitg_obstruction(full.induced(keep))) {
                Decision d;
                d.yes = true;
                for (int i : pick) d.solution.push_back(vs[i]);
                return d;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {};
}

VertexSet minimum_deletion(const MultiGraph& g, const SolverLimits& limits) {
    for (int k = 0;; ++k) {
        Decision d = decide(g, k, limits);
        if (d.yes) return d.solution;
    }
}

VertexSet greedy_modulator(const MultiGraph& g) {
    MultiGraph rest = g;
    VertexSet out;
    while (true) {
        PitgVerdict verdict = is_pitg(rest);
        if (verdict.yes()) break;
        const Obstruction& obs = *verdict.obstruction;
        VertexSet drop;
        switch (obs.kind) {
            case ObstructionKind::DoubleEdge: drop = {obs.vertices[0]}; break;
            case ObstructionKind::Hole: drop = {obs.vertices[0]}; break;
            case ObstructionKind::ClawTrianglePair: drop = {obs.vertices[0]}; break;
            default: drop = obs.vertex_set(); break;
        }
        normalize(drop);
        rest.delete_vertices(drop);
        out = set_union(out, drop);
    }
    return out;
}

BootstrapResult bootstrap_modulator(const MultiGraph& g, int k, const SolverLimits& limits) {
    BootstrapResult r;
    if (k < 0) {
        r.decided_no = true;
        return r;
    }
    if (within_scale(g, k, limits)) {
        Decision d = decide(g, k, limits);
        r.decided_no = !d.yes;
        r.modulator = d.solution;
        return r;
    }
    r.greedy = true;
    r.modulator = greedy_modulator(g);
    return r;
}

bool is_solution(const MultiGraph& g, int k, const VertexSet& solution) {
    if (static_cast<long>(solution.size()) > k) return false;
    for (VertexId v : solution)
        if (!g.has_vertex(v)) return false;
    VertexSet s = solution;
    normalize(s);
    if (s.size() != solution.size()) return false;
    return is_pitg(delete_vertices(g, s)).yes();
}

}  // namespace pitvd
