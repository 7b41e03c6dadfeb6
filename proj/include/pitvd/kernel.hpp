#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pitvd/clique_partition.hpp"
#include "pitvd/exact_solver.hpp"
#include "pitvd/multigraph.hpp"

namespace pitvd {

constexpr int kRuleCount = 14;

// One step of the pipeline. Rule 0 records a base-set computation and
// changes nothing. Replaying applies deletions first, then edge changes.
struct RuleApplication {
    int rule = 0;
    VertexSet deleted;
    std::vector<std::tuple<VertexId, VertexId, int>> edge_changes;  // (u, v, new multiplicity)
    int k_delta = 0;
    VertexSet base_set;        // rule 0 only
    bool greedy_base = false;  // rule 0 only
    bool decided_no = false;   // rule 0 only: the bootstrap rejected
};

void apply_change(MultiGraph& g, int& k, const RuleApplication& a);

struct KernelInstance {
    MultiGraph graph;
    int k = 0;
    bool decided_no = false;
    std::vector<RuleApplication> trace;
    VertexSet base_set;  // modulator in force at the fixpoint
};

enum class BootstrapMode {
    Exact,   // exact search inside the scale guard; rejects no-instances
    Greedy,  // greedy obstruction deletion; never rejects
};

using RuleObserver = std::function<void(const RuleApplication&, const MultiGraph& before, int k_before,
                                        const MultiGraph& after, int k_after)>;

struct KernelOptions {
    BootstrapMode bootstrap = BootstrapMode::Exact;
    SolverLimits limits;
    int mutation = 0;  // rule whose action is deliberately perturbed; tests only
    RuleObserver observer;
    std::size_t max_steps = 1'000'000;
};

struct BaseSet {
    bool decided_no = false;
    bool greedy = false;
    VertexSet bootstrap;  // the modulator from the solver
    VertexSet s;          // bootstrap plus the reduced small-obstruction sets
};

BaseSet compute_base_set(const MultiGraph& g, int k, const KernelOptions& opts = {});

// Tree side of G - S.
struct Modulator {
    VertexSet s;
    VertexSet v1, v2;
    std::vector<VertexSet> v1_components, v2_components;
    VertexSet f1, f2, f3, f3_critical;
    VertexSet good_hooks, bad_hooks;
    std::map<VertexId, std::vector<VertexSet>> hangers;  // per hook
};

Modulator classify_tree_side(const MultiGraph& g, const VertexSet& s);

struct PendantTree {
    VertexId attachment = 0;
    VertexSet vertices;
};

// Components C of G - x with C + x a simple tree, where x also has a
// neighbour outside C. Sorted by attachment, then by smallest vertex.
std::vector<PendantTree> pendant_trees(const MultiGraph& g);

// Rule `rule` (1..14) as a change description, or nullopt when it does not
// apply. Rules 8..14 read the modulator `s`. With `strict`, a rule whose
// guarantees fail on an instance irreducible for the earlier rules throws
// std::logic_error instead of declining.
std::optional<RuleApplication> find_rule(int rule, const MultiGraph& g, int k, const VertexSet& s, int mutation = 0,
                                         bool strict = false);

std::size_t eta_bound(int k, std::size_t s_size);

struct MarkingLedger {
    VertexSet marked;
    std::size_t step1 = 0;  // marks contributed by each step before overlap
    std::size_t step2 = 0;
    std::size_t step3 = 0;
    std::size_t step4 = 0;
};

MarkingLedger mark_clique(const MultiGraph& g, int k, const VertexSet& s, const CliquePartition& p, std::size_t index);

// Clique partitions of the components of G[V1].
std::vector<CliquePartition> v1_partitions(const MultiGraph& g, const VertexSet& s);

// Minimum vertex separator between non-adjacent x and y inside g, the one
// closest to x.
VertexSet minimum_vertex_separator(const MultiGraph& g, VertexId x, VertexId y);

KernelInstance kernelize(const MultiGraph& g, int k, const KernelOptions& opts = {});

// Applies a trace to the original instance.
KernelInstance replay(const MultiGraph& g, int k, const std::vector<RuleApplication>& trace);

struct AuditReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Postconditions of a fixpoint kernel.
AuditReport audit_irreducible(const KernelInstance& ki);

}  // namespace pitvd
