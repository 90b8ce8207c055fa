#include "uskyline/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <queue>
#include <sstream>
#include <utility>

namespace uskyline {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

void validate_edge_attributes(double weight, double prob, std::size_t line) {
    if (!(weight > 0.0)) {
        throw ValidationError("edge weight must be positive, got " + std::to_string(weight) +
                              (line ? " (line " + std::to_string(line) + ")" : ""));
    }
    if (!(prob > 0.0) || prob > 1.0) {
        throw ValidationError("edge probability must lie in (0,1], got " + std::to_string(prob) +
                              (line ? " (line " + std::to_string(line) + ")" : ""));
    }
}

}  // namespace

UncertainGraph::UncertainGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : UncertainGraph(vertex_count, std::move(edges), {}) {}

UncertainGraph::UncertainGraph(std::size_t vertex_count, std::vector<Edge> edges,
                               std::vector<OriginalId> original_ids) {
    if (original_ids.empty()) {
        original_ids.resize(vertex_count);
        for (std::size_t v = 0; v < vertex_count; ++v) original_ids[v] = v;
    }
    if (original_ids.size() != vertex_count) {
        throw ArgumentError("original id table size does not match vertex count");
    }

    std::unordered_map<std::uint64_t, bool> seen;
    seen.reserve(edges.size());
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw ArgumentError("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw ValidationError("self-loops are not allowed");
        }
        validate_edge_attributes(e.weight, e.prob, 0);
        if (!seen.emplace(pair_key(e.u, e.v), true).second) {
            ++duplicates_collapsed_;
            continue;
        }
        edges_.push_back(e);
    }

    original_ids_ = std::move(original_ids);
    original_to_compact_.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        original_to_compact_.emplace(original_ids_[v], static_cast<VertexId>(v));
    }
    build_adjacency(vertex_count);
}

void UncertainGraph::build_adjacency(std::size_t vertex_count) {
    adjacency_offsets_.assign(vertex_count + 1, 0);
    for (const Edge& e : edges_) {
        ++adjacency_offsets_[e.u + 1];
        ++adjacency_offsets_[e.v + 1];
    }
    for (std::size_t v = 1; v <= vertex_count; ++v) {
        adjacency_offsets_[v] += adjacency_offsets_[v - 1];
    }
    incident_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        incident_[cursor[edges_[e].u]++] = e;
        incident_[cursor[edges_[e].v]++] = e;
    }
}

void UncertainGraph::require_vertex(VertexId v) const {
    if (!has_vertex(v)) {
        throw LookupError("unknown vertex id " + std::to_string(v));
    }
}

bool UncertainGraph::has_edge(VertexId a, VertexId b) const {
    require_vertex(a);
    require_vertex(b);
    if (degree(b) < degree(a)) std::swap(a, b);
    for (EdgeId e : incident_edges(a)) {
        if (edges_[e].other(a) == b) return true;
    }
    return false;
}

std::optional<VertexId> UncertainGraph::find_original(OriginalId id) const {
    auto it = original_to_compact_.find(id);
    if (it == original_to_compact_.end()) return std::nullopt;
    return it->second;
}

UncertainGraph UncertainGraph::load_edge_list(const std::filesystem::path& path,
                                              std::optional<double> default_weight,
                                              std::optional<double> default_prob) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open edge list file: " + path.string());
    }

    std::vector<Edge> edges;
    std::vector<OriginalId> original_ids;
    std::unordered_map<OriginalId, VertexId> compact;
    std::unordered_map<std::uint64_t, bool> seen;
    std::size_t duplicates = 0;

    auto intern = [&](OriginalId id) {
        auto [it, inserted] = compact.emplace(id, static_cast<VertexId>(original_ids.size()));
        if (inserted) original_ids.push_back(id);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() < 2 || tokens.size() > 4) {
            throw ParseError("expected 2-4 fields, got " + std::to_string(tokens.size()), line_no);
        }

        auto parse_id = [&](const std::string& s) -> OriginalId {
            OriginalId value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc() || ptr != s.data() + s.size()) {
                throw ParseError("vertex id is not a non-negative integer: '" + s + "'", line_no);
            }
            return value;
        };
        auto parse_real = [&](const std::string& s, const char* what) -> double {
            char* end = nullptr;
            const double value = std::strtod(s.c_str(), &end);
            if (end != s.c_str() + s.size() || s.empty()) {
                throw ParseError(std::string("cannot parse ") + what + ": '" + s + "'", line_no);
            }
            return value;
        };

        const OriginalId ou = parse_id(tokens[0]);
        const OriginalId ov = parse_id(tokens[1]);
        if (ou == ov) {
            throw ParseError("self-loop rejected (" + tokens[0] + " " + tokens[1] + ")", line_no);
        }

        double weight;
        if (tokens.size() >= 3) {
            weight = parse_real(tokens[2], "weight");
        } else if (default_weight) {
            weight = *default_weight;
        } else {
            throw ConfigError("line " + std::to_string(line_no) +
                              " has no weight column and no default weight was given");
        }
        double prob;
        if (tokens.size() >= 4) {
            prob = parse_real(tokens[3], "probability");
        } else if (default_prob) {
            prob = *default_prob;
        } else {
            throw ConfigError("line " + std::to_string(line_no) +
                              " has no probability column and no default probability was given");
        }
        validate_edge_attributes(weight, prob, line_no);

        const VertexId u = intern(ou);
        const VertexId v = intern(ov);
        if (!seen.emplace(pair_key(u, v), true).second) {
            ++duplicates;
            continue;
        }
        edges.push_back(Edge{u, v, weight, prob});
    }

    UncertainGraph graph(original_ids.size(), std::move(edges), std::move(original_ids));
    graph.duplicates_collapsed_ = duplicates;
    return graph;
}

void UncertainGraph::save_edge_list(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot open output file: " + path.string());
    }
    out << std::setprecision(17);
    for (const Edge& e : edges_) {
        out << original_ids_[e.u] << ' ' << original_ids_[e.v] << ' ' << e.weight << ' '
            << e.prob << '\n';
    }
    if (!out) {
        throw ConfigError("failed while writing " + path.string());
    }
}

GraphStats stats(const UncertainGraph& graph) {
    GraphStats s;
    s.n = graph.vertex_count();
    s.m = graph.edge_count();
    const double n = static_cast<double>(s.n);
    const double m = static_cast<double>(s.m);
    s.density = s.n > 1 ? 2.0 * m / (n * (n - 1.0)) : 0.0;
    s.avg_degree = s.n > 0 ? 2.0 * m / n : 0.0;
    for (VertexId v = 0; v < s.n; ++v) {
        s.max_degree = std::max(s.max_degree, graph.degree(v));
    }
    return s;
}

UncertainGraph synthesize_attributes(const UncertainGraph& graph, RandomSeed seed,
                                     double prob_lo, double prob_hi,
                                     double weight_lo, double weight_hi) {
    if (!(prob_lo < prob_hi) || prob_hi > 1.0 || prob_lo < 0.0) {
        throw ConfigError("probability range must satisfy 0 <= lo < hi <= 1");
    }
    if (!(weight_lo < weight_hi) || !(weight_lo > 0.0)) {
        throw ConfigError("weight range must satisfy 0 < lo < hi");
    }

    std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
    Rng rng(seed);
    for (Edge& e : edges) {
        e.weight = rng.uniform_real(weight_lo, weight_hi);
        e.prob = rng.uniform_real_open_low(prob_lo, prob_hi);
    }
    std::vector<OriginalId> originals(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) originals[v] = graph.original_id(v);
    return UncertainGraph(graph.vertex_count(), std::move(edges), std::move(originals));
}

std::vector<VertexId> two_hop_neighbors(const UncertainGraph& graph, VertexId v) {
    if (!graph.has_vertex(v)) {
        throw LookupError("unknown vertex id " + std::to_string(v));
    }
    std::vector<VertexId> result;
    std::vector<bool> visited(graph.vertex_count(), false);
    visited[v] = true;
    std::vector<VertexId> frontier{v};
    for (int hop = 0; hop < 2; ++hop) {
        std::vector<VertexId> next;
        for (VertexId cur : frontier) {
            for (EdgeId e : graph.incident_edges(cur)) {
                const VertexId w = graph.edge(e).other(cur);
                if (!visited[w]) {
                    visited[w] = true;
                    next.push_back(w);
                    result.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace uskyline
