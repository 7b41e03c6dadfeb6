#include "pitvd/harness.hpp"

#include <sstream>

#include "pitvd/exact_solver.hpp"
#include "pitvd/io.hpp"

namespace pitvd {

RandomInstance random_instance(std::uint64_t seed, std::size_t index, std::size_t max_n, int max_k) {
    static constexpr double kDensities[] = {0.15, 0.3, 0.5};
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + index);
    RandomInstance out;
    const std::size_t low = std::min<std::size_t>(4, max_n);
    const std::size_t n = low + static_cast<std::size_t>(rng.below(max_n - low + 1));
    out.k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_k) + 1));
    out.density = kDensities[index % 3];
    out.seed = rng.next();
    out.graph = generate_multigraph({n, out.density, 0.1, out.seed});
    return out;
}

std::vector<VerifyRecord> run_verify(const VerifyOptions& opts) {
    std::vector<VerifyRecord> out;
    for (std::size_t i = 0; i < opts.count; ++i) {
        RandomInstance inst = random_instance(opts.seed, i, opts.max_n, opts.max_k);
        VerifyRecord r;
        r.index = i;
        r.n_before = inst.graph.num_vertices();
        try {
            r.input_yes = decide(inst.graph, inst.k, opts.kernel.limits).yes;
            KernelInstance ki = kernelize(inst.graph, inst.k, opts.kernel);
            r.decided_no = ki.decided_no;
            r.n_after = ki.graph.num_vertices();
            r.k_after = ki.k;
            r.kernel_yes = !ki.decided_no && decide(ki.graph, ki.k, opts.kernel.limits).yes;
            r.pass = r.input_yes == r.kernel_yes;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_record(const VerifyRecord& r) {
    std::ostringstream out;
    out << "instance " << r.index << ": " << (r.pass ? "pass" : "FAIL");
    if (!r.error.empty()) {
        out << " error: " << r.error;
        return out.str();
    }
    out << " input=" << (r.input_yes ? "yes" : "no") << " kernel=" << (r.decided_no ? "decided-no" : r.kernel_yes ? "yes" : "no")
        << " n=" << r.n_before << "->" << r.n_after << " k'=" << r.k_after;
    return out.str();
}

}  // namespace pitvd
