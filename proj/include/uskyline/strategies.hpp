#pragma once

#include <string>

#include "uskyline/graph.hpp"
#include "uskyline/pruning.hpp"
#include "uskyline/random.hpp"

namespace uskyline {

// Query-vertex selection: the seed vertex comes from a uniform draw over the
// strategy's pool, the remaining k-1 from its two-hop neighborhood.
enum class StrategyKind {
    Rand,            // pool: all vertices
    HighDegree,      // pool: degree > degree_threshold
    HighClustering,  // pool: clustering coefficient > clustering_threshold
};

std::string to_string(StrategyKind kind);
StrategyKind strategy_from_string(const std::string& name);

struct StrategyConfig {
    StrategyKind kind = StrategyKind::Rand;
    std::size_t query_size = 2;  // k
    std::size_t degree_threshold = 0;
    double clustering_threshold = 0.0;
    RandomSeed seed;
    std::size_t max_attempts = 100;
};

// Local clustering coefficient: 2 * (triangles through v) / (deg(v)(deg(v)-1)),
// zero when deg(v) < 2. Topology only; probabilities ignored.
double clustering_coefficient(const UncertainGraph& graph, VertexId v);

// Draws k query vertices per the configured strategy. When the seed vertex's
// two-hop neighborhood has fewer than k-1 vertices, retries with a fresh seed
// vertex up to max_attempts, then raises SelectionInfeasibleError.
QuerySet select_queries(const UncertainGraph& graph, const StrategyConfig& config);

}  // namespace uskyline
