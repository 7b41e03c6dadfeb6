#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pitvd/harness.hpp"
#include "pitvd/io.hpp"
#include "pitvd/kernel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNo = 20;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct SolverFlags {
    std::size_t max_n = 20;
    int max_k = 6;
    int mutation = 0;
    std::string bootstrap = "exact";

    void attach(CLI::App* app) {
        app->add_option("--max-n", max_n, "Scale guard: vertex count for the exact solver");
        app->add_option("--max-k", max_k, "Scale guard: budget for the exact solver");
        app->add_option("--mutation-test", mutation, "Perturb the action of one rule (1-14)")->check(CLI::Range(0, 14));
        app->add_option("--bootstrap", bootstrap, "Modulator bootstrap")->check(CLI::IsMember({"exact", "greedy"}));
    }

    pitvd::KernelOptions options() const {
        pitvd::KernelOptions o;
        o.limits.max_n = max_n;
        o.limits.max_k = max_k;
        o.mutation = mutation;
        o.bootstrap = bootstrap == "greedy" ? pitvd::BootstrapMode::Greedy : pitvd::BootstrapMode::Exact;
        return o;
    }
};

void print_stats(const pitvd::Instance& input, const pitvd::KernelInstance& ki) {
    std::map<int, int> histogram;
    for (const auto& a : ki.trace)
        if (a.rule > 0) ++histogram[a.rule];
    std::cerr << "c vertices " << input.graph.num_vertices() << " -> " << ki.graph.num_vertices() << '\n';
    std::cerr << "c edges " << input.graph.num_edges() << " -> " << ki.graph.num_edges() << '\n';
    std::cerr << "c budget " << input.k << " -> " << ki.k << '\n';
    for (const auto& [rule, count] : histogram) std::cerr << "c rule " << rule << ": " << count << '\n';
    std::cerr << "c result " << (ki.decided_no ? "decided-no" : "kernel") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernelization for deletion to proper interval and tree components"};
    app.require_subcommand(1);

    std::string input_path, output_path, trace_path;
    bool stats = false;
    SolverFlags kernel_flags;
    auto* kernelize_cmd = app.add_subcommand("kernelize", "Reduce an instance to a kernel");
    kernelize_cmd->add_option("input", input_path, "Instance file, or - for stdin")->required();
    kernelize_cmd->add_option("-o,--output", output_path, "Kernel file (default stdout)");
    kernelize_cmd->add_option("--trace", trace_path, "Write the rule trace as JSON");
    kernelize_cmd->add_flag("--stats", stats, "Print counts and a rule histogram to stderr");
    kernel_flags.attach(kernelize_cmd);

    std::size_t count = 100, vertices = 12;
    int budget = 4;
    std::uint64_t seed = 1;
    bool quiet = false;
    SolverFlags verify_flags;
    auto* verify_cmd = app.add_subcommand("verify", "Check decide(input) = decide(kernel) on random instances");
    verify_cmd->add_option("--count", count, "Number of instances");
    verify_cmd->add_option("--vertices", vertices, "Largest instance size");
    verify_cmd->add_option("--budget", budget, "Largest budget");
    verify_cmd->add_option("--seed", seed, "Corpus seed");
    verify_cmd->add_flag("--quiet", quiet, "Only print the summary");
    verify_flags.attach(verify_cmd);

    pitvd::GeneratorParams gen;
    int gen_k = 2;
    std::string gen_output;
    auto* generate_cmd = app.add_subcommand("generate", "Write a random instance");
    generate_cmd->add_option("--n", gen.n, "Vertex count");
    generate_cmd->add_option("--density", gen.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--double-rate", gen.double_rate, "Share of parallel edges")->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--seed", gen.seed, "Generator seed");
    generate_cmd->add_option("--k", gen_k, "Budget written to the header")->check(CLI::NonNegativeNumber);
    generate_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");

    std::string replay_input, replay_trace, replay_output;
    auto* replay_cmd = app.add_subcommand("replay", "Apply a trace to an instance");
    replay_cmd->add_option("input", replay_input, "Instance file")->required();
    replay_cmd->add_option("trace", replay_trace, "Trace JSON")->required();
    replay_cmd->add_option("-o,--output", replay_output, "Kernel file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*kernelize_cmd) {
            pitvd::Instance input;
            try {
                input = pitvd::parse_instance(read_file(input_path));
            } catch (const pitvd::ParseError& e) {
                std::cerr << "parse error: " << e.what() << '\n';
                return kExitParse;
            }
            pitvd::KernelInstance ki = pitvd::kernelize(input.graph, input.k, kernel_flags.options());
            if (!trace_path.empty()) write_output(trace_path, pitvd::trace_to_json(ki.trace).dump(1) + "\n");
            if (stats) print_stats(input, ki);
            if (ki.decided_no) {
                std::cerr << "decided-no\n";
                return kExitNo;
            }
            write_output(output_path, pitvd::serialize_instance(ki.graph, ki.k));
            return kExitOk;
        }
        if (*verify_cmd) {
            pitvd::VerifyOptions opts;
            opts.count = count;
            opts.max_n = vertices;
            opts.max_k = budget;
            opts.seed = seed;
            opts.kernel = verify_flags.options();
            std::size_t failed = 0;
            for (const auto& r : pitvd::run_verify(opts)) {
                if (!r.pass) ++failed;
                if (!quiet) std::cout << pitvd::format_record(r) << '\n';
            }
            std::cout << "summary: " << count - failed << "/" << count << " pass\n";
            return failed == 0 ? kExitOk : kExitFailure;
        }
        if (*generate_cmd) {
            pitvd::MultiGraph g = pitvd::generate_multigraph(gen);
            std::ostringstream text;
            text << "c generated n=" << gen.n << " density=" << gen.density << " double-rate=" << gen.double_rate
                 << " seed=" << gen.seed << '\n'
                 << pitvd::serialize_instance(g, gen_k);
            write_output(gen_output, text.str());
            return kExitOk;
        }
        if (*replay_cmd) {
            pitvd::Instance input;
            try {
                input = pitvd::parse_instance(read_file(replay_input));
            } catch (const pitvd::ParseError& e) {
                std::cerr << "parse error: " << e.what() << '\n';
                return kExitParse;
            }
            auto trace = pitvd::trace_from_json(nlohmann::json::parse(read_file(replay_trace)));
            pitvd::KernelInstance ki = pitvd::replay(input.graph, input.k, trace);
            if (ki.decided_no) {
                std::cerr << "decided-no\n";
                return kExitNo;
            }
            write_output(replay_output, pitvd::serialize_instance(ki.graph, ki.k));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
