#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pitvd/kernel.hpp"
#include "pitvd/multigraph.hpp"

namespace pitvd {

struct Instance {
    MultiGraph graph;
    int k = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * Text format:
 *
 *   c <comment>
 *   p pitvd <n> <m> <k>
 *   e <u> <v> <multiplicity>      (m lines, labels 1..n)
 *
 * Label i becomes vertex id i-1 unless a `c map <label> <id>` comment names
 * another id. Repeated edge records add up.
 */
Instance parse_instance(std::string_view text);

// Labels vertices 1..n in id order and records the ids as `c map` lines, so
// parse_instance(serialize_instance(g, k)) returns g itself.
std::string serialize_instance(const MultiGraph& g, int k);

struct GeneratorParams {
    std::size_t n = 10;
    double density = 0.3;
    // Chance that an edge is parallel; parallel edges get multiplicity 2 or 3.
    double double_rate = 0.1;
    std::uint64_t seed = 1;
};

// Each pair becomes an edge independently. Deterministic in the seed.
MultiGraph generate_multigraph(const GeneratorParams& params);

// mt19937_64 with hand-rolled mappings, so streams match across standard
// libraries (the std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // Uniform in [0, 1) with 53 bits.
    double uniform();
    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

// Vertex ids are written as 1-based labels.
nlohmann::json trace_to_json(const std::vector<RuleApplication>& trace);
std::vector<RuleApplication> trace_from_json(const nlohmann::json& j);

}  // namespace pitvd
