#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "uskyline/errors.hpp"
#include "uskyline/random.hpp"

namespace uskyline {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using OriginalId = std::uint64_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 1.0;   // > 0
    double prob = 1.0;     // in (0, 1]

    VertexId other(VertexId from) const { return from == u ? v : u; }
};

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    double density = 0.0;     // 2m / (n(n-1))
    double avg_degree = 0.0;  // 2m / n
    std::size_t max_degree = 0;
};

// Simple, finite, undirected graph whose edges carry a positive weight and an
// existence probability in (0,1]. Vertex ids are compacted to 0..n-1 internally;
// the original ids from the input file are kept for all external I/O.
// Immutable after construction, safe to share across threads.
class UncertainGraph {
public:
    UncertainGraph() = default;

    // Builds a graph over vertices 0..vertex_count-1. Rejects self-loops,
    // out-of-range vertex ids, nonpositive weights and probabilities outside
    // (0,1]. Duplicate undirected edges are collapsed keeping the first.
    UncertainGraph(std::size_t vertex_count, std::vector<Edge> edges);

    // Same, with explicit original ids (one per compact vertex).
    UncertainGraph(std::size_t vertex_count, std::vector<Edge> edges,
                   std::vector<OriginalId> original_ids);

    // Parses a whitespace-separated edge list: `u v [weight] [prob]` per line,
    // `#`-prefixed comment lines and blank lines ignored. Missing weight/prob
    // columns are filled from the defaults; a missing default for an absent
    // column is a ConfigError. Vertex ids are compacted in order of first
    // appearance.
    static UncertainGraph load_edge_list(const std::filesystem::path& path,
                                         std::optional<double> default_weight = std::nullopt,
                                         std::optional<double> default_prob = std::nullopt);

    // Writes 4-column `u v weight prob` lines using original ids, with enough
    // precision that reloading reproduces the doubles exactly.
    void save_edge_list(const std::filesystem::path& path) const;

    std::size_t vertex_count() const { return adjacency_offsets_.empty() ? 0 : adjacency_offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    bool has_vertex(VertexId v) const { return v < vertex_count(); }

    // Edge ids incident to v.
    std::span<const EdgeId> incident_edges(VertexId v) const {
        return {incident_.data() + adjacency_offsets_[v],
                incident_.data() + adjacency_offsets_[v + 1]};
    }

    std::size_t degree(VertexId v) const {
        return adjacency_offsets_[v + 1] - adjacency_offsets_[v];
    }

    bool has_edge(VertexId a, VertexId b) const;

    OriginalId original_id(VertexId v) const { return original_ids_[v]; }
    std::optional<VertexId> find_original(OriginalId id) const;

    // Number of duplicate input edges that were collapsed during construction.
    std::size_t duplicates_collapsed() const { return duplicates_collapsed_; }

private:
    void build_adjacency(std::size_t vertex_count);
    void require_vertex(VertexId v) const;

    std::vector<Edge> edges_;
    std::vector<EdgeId> incident_;                 // CSR payload
    std::vector<std::size_t> adjacency_offsets_;   // CSR offsets, size n+1
    std::vector<OriginalId> original_ids_;
    std::unordered_map<OriginalId, VertexId> original_to_compact_;
    std::size_t duplicates_collapsed_ = 0;

    friend GraphStats stats(const UncertainGraph&);
};

GraphStats stats(const UncertainGraph& graph);

// Overwrites every edge's weight and probability with fresh uniform draws:
// weight from [weight_lo, weight_hi), prob from (prob_lo, prob_hi].
// Deterministic per (topology, seed, ranges); returns a new graph.
UncertainGraph synthesize_attributes(const UncertainGraph& graph, RandomSeed seed,
                                     double prob_lo = 0.0, double prob_hi = 1.0,
                                     double weight_lo = 10.0, double weight_hi = 100.0);

// All vertices at unweighted hop-distance 1 or 2 from v, excluding v. Sorted.
std::vector<VertexId> two_hop_neighbors(const UncertainGraph& graph, VertexId v);

}  // namespace uskyline
