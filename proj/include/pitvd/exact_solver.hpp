#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pitvd/multigraph.hpp"

namespace pitvd {

struct SolverLimits {
    std::size_t max_n = 20;
    int max_k = 6;
    // Instances with more vertices are still accepted when C(n, k) stays
    // below this.
    std::uint64_t subset_cap = 10'000'000;
};

class ScaleGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Decision {
    bool yes = false;
    VertexSet solution;  // meaningful when yes
};

bool within_scale(const MultiGraph& g, int k, const SolverLimits& limits);

// Obstruction-guided branching. Throws ScaleGuardError outside the limits.
Decision decide(const MultiGraph& g, int k, const SolverLimits& limits = {});

// Plain subset enumeration in order of size; the reference for decide().
Decision decide_by_enumeration(const MultiGraph& g, int k, const SolverLimits& limits = {});

VertexSet minimum_deletion(const MultiGraph& g, const SolverLimits& limits = {});

struct BootstrapResult {
    bool decided_no = false;
    bool greedy = false;  // true when the scale guard forced the fallback
    VertexSet modulator;
};

// Exact within the scale guard; beyond it, greedy obstruction deletion.
BootstrapResult bootstrap_modulator(const MultiGraph& g, int k, const SolverLimits& limits = {});

// Greedy obstruction deletion: a valid modulator with no size guarantee.
VertexSet greedy_modulator(const MultiGraph& g);

// True when `solution` has at most k vertices of g and g - solution passes is_pitg.
bool is_solution(const MultiGraph& g, int k, const VertexSet& solution);

}  // namespace pitvd
