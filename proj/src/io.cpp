#include "pitvd/io.hpp"

#include <map>
#include <set>
#include <sstream>

namespace pitvd {

namespace {

long long parse_int(const std::string& token, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
    }
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0, k = 0;
    std::map<long long, VertexId> label_to_id;
    std::vector<std::tuple<long long, long long, long long, std::size_t>> records;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream fields(raw);
        std::string tag;
        if (!(fields >> tag)) continue;
        std::vector<std::string> rest;
        for (std::string t; fields >> t;) rest.push_back(t);
        if (tag == "c") {
            if (rest.size() == 3 && rest[0] == "map") {
                long long label = parse_int(rest[1], line_no, "label");
                long long id = parse_int(rest[2], line_no, "vertex id");
                if (id < 0 || id > 0xffffffffLL) throw ParseError(line_no, "vertex id out of range");
                label_to_id[label] = static_cast<VertexId>(id);
            }
            continue;
        }
        if (tag == "p") {
            if (have_header) throw ParseError(line_no, "second problem line");
            if (rest.size() != 4 || rest[0] != "pitvd") throw ParseError(line_no, "expected 'p pitvd <n> <m> <k>'");
            n = parse_int(rest[1], line_no, "vertex count");
            m = parse_int(rest[2], line_no, "edge count");
            k = parse_int(rest[3], line_no, "budget");
            if (n < 0 || m < 0 || k < 0) throw ParseError(line_no, "negative header field");
            if (k > 1'000'000'000) throw ParseError(line_no, "budget too large");
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw ParseError(line_no, "edge before problem line");
            if (rest.size() != 3) throw ParseError(line_no, "expected 'e <u> <v> <multiplicity>'");
            long long u = parse_int(rest[0], line_no, "label");
            long long v = parse_int(rest[1], line_no, "label");
            long long mult = parse_int(rest[2], line_no, "multiplicity");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "label out of range");
            if (u == v) throw ParseError(line_no, "self-loop");
            if (mult < 1 || mult > 1'000'000) throw ParseError(line_no, "multiplicity out of range");
            records.emplace_back(u, v, mult, line_no);
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(line_no, "missing problem line");
    if (static_cast<long long>(records.size()) != m)
        throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " + std::to_string(records.size()));

    std::vector<VertexId> ids(static_cast<std::size_t>(n));
    std::set<VertexId> used;
    for (long long label = 1; label <= n; ++label) {
        auto it = label_to_id.find(label);
        VertexId id = it == label_to_id.end() ? static_cast<VertexId>(label - 1) : it->second;
        if (!used.insert(id).second) throw ParseError(line_no, "two labels map to vertex id " + std::to_string(id));
        ids[static_cast<std::size_t>(label - 1)] = id;
    }
    Instance out;
    out.k = static_cast<int>(k);
    for (VertexId id : used) out.graph.add_vertex(id);
    for (const auto& [u, v, mult, line] : records) {
        (void)line;
        out.graph.add_edge(ids[static_cast<std::size_t>(u - 1)], ids[static_cast<std::size_t>(v - 1)], static_cast<int>(mult));
    }
    return out;
}

std::string serialize_instance(const MultiGraph& g, int k) {
    const VertexSet vs = g.vertices();
    std::map<VertexId, std::size_t> label;
    for (std::size_t i = 0; i < vs.size(); ++i) label[vs[i]] = i + 1;
    std::ostringstream out;
    const auto edges = g.edges();
    out << "p pitvd " << vs.size() << ' ' << edges.size() << ' ' << k << '\n';
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] != i) out << "c map " << i + 1 << ' ' << vs[i] << '\n';
    for (const auto& [u, v, m] : edges) out << "e " << label[u] << ' ' << label[v] << ' ' << m << '\n';
    return out.str();
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
    // Rejection sampling keeps the result exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
}

MultiGraph generate_multigraph(const GeneratorParams& params) {
    Rng rng(params.seed);
    MultiGraph g(params.n);
    for (VertexId u = 0; u < params.n; ++u)
        for (VertexId v = u + 1; v < params.n; ++v) {
            if (!rng.chance(params.density)) continue;
            int mult = 1;
            if (rng.chance(params.double_rate)) mult = 2 + static_cast<int>(rng.below(2));
            g.add_edge(u, v, mult);
        }
    return g;
}

nlohmann::json trace_to_json(const std::vector<RuleApplication>& trace) {
    auto labels = [](const VertexSet& vs) {
        nlohmann::json arr = nlohmann::json::array();
        for (VertexId v : vs) arr.push_back(static_cast<std::uint64_t>(v) + 1);
        return arr;
    };
    nlohmann::json out = nlohmann::json::array();
    for (const RuleApplication& a : trace) {
        nlohmann::json j;
        if (a.rule == 0) {
            j["rule"] = "base-set";
            j["base_set"] = labels(a.base_set);
            j["greedy"] = a.greedy_base;
            j["decided_no"] = a.decided_no;
        } else {
            j["rule"] = a.rule;
            j["deleted"] = labels(a.deleted);
            nlohmann::json edges = nlohmann::json::array();
            for (const auto& [u, v, m] : a.edge_changes)
                edges.push_back({static_cast<std::uint64_t>(u) + 1, static_cast<std::uint64_t>(v) + 1, m});
            j["edges"] = edges;
            j["k_delta"] = a.k_delta;
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<RuleApplication> trace_from_json(const nlohmann::json& j) {
    auto ids = [](const nlohmann::json& arr) {
        VertexSet out;
        for (const auto& x : arr) out.push_back(static_cast<VertexId>(x.get<std::uint64_t>() - 1));
        normalize(out);
        return out;
    };
    std::vector<RuleApplication> out;
    for (const auto& entry : j) {
        RuleApplication a;
        if (entry.at("rule").is_string()) {
            if (entry.at("rule").get<std::string>() != "base-set") throw std::invalid_argument("trace: unknown rule tag");
            a.base_set = ids(entry.at("base_set"));
            a.greedy_base = entry.value("greedy", false);
            a.decided_no = entry.value("decided_no", false);
        } else {
            a.rule = entry.at("rule").get<int>();
            if (a.rule < 1 || a.rule > kRuleCount) throw std::invalid_argument("trace: rule id out of range");
            a.deleted = ids(entry.at("deleted"));
            for (const auto& e : entry.at("edges"))
                a.edge_changes.emplace_back(static_cast<VertexId>(e.at(0).get<std::uint64_t>() - 1),
                                            static_cast<VertexId>(e.at(1).get<std::uint64_t>() - 1), e.at(2).get<int>());
            a.k_delta = entry.at("k_delta").get<int>();
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace pitvd
