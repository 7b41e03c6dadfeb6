#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pitvd/kernel.hpp"
#include "pitvd/multigraph.hpp"

namespace pitvd {

struct RandomInstance {
    MultiGraph graph;
    int k = 0;
    double density = 0;
    std::uint64_t seed = 0;
};

// Instance `index` of the seeded random corpus: n <= max_n, density cycling
// through 0.15, 0.3 and 0.5, 10% parallel edges, k <= max_k.
RandomInstance random_instance(std::uint64_t seed, std::size_t index, std::size_t max_n = 12, int max_k = 4);

struct VerifyOptions {
    std::size_t count = 100;
    std::size_t max_n = 12;
    int max_k = 4;
    std::uint64_t seed = 1;
    KernelOptions kernel;
};

struct VerifyRecord {
    std::size_t index = 0;
    bool pass = false;
    bool input_yes = false;
    bool kernel_yes = false;
    std::size_t n_before = 0;
    std::size_t n_after = 0;
    int k_after = 0;
    bool decided_no = false;
    std::string error;  // set when kernelize or the solver threw
};

// Compares decide(input) with decide(kernel) on every corpus instance.
std::vector<VerifyRecord> run_verify(const VerifyOptions& opts);

std::string format_record(const VerifyRecord& r);

}  // namespace pitvd
