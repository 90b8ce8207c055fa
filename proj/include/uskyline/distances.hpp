#pragma once

#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "uskyline/graph.hpp"
#include "uskyline/pruning.hpp"
#include "uskyline/sampling.hpp"

namespace uskyline {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

// |CS| x |Q| matrix of candidate-to-query distances, row-major. Entries are
// nonnegative; +infinity marks pairs disconnected under the chosen semantics.
struct DistanceMatrix {
    std::vector<VertexId> candidates;  // row order
    std::vector<VertexId> queries;     // column order
    std::vector<double> values;

    std::size_t rows() const { return candidates.size(); }
    std::size_t cols() const { return queries.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * cols() + j]; }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * cols(), cols()};
    }
};

// Accumulated shortest-path-distance distribution for one vertex pair. Worlds
// where the pair is disconnected feed a distinguished bucket that competes in
// the argmax.
struct ShortestDistanceDistribution {
    std::map<double, double> buckets;  // finite distance -> accumulated mass
    double disconnected_mass = 0.0;

    void add(double distance, double mass);
    double total_mass() const;

    // The distance with maximum mass. Ties break toward the smallest finite
    // distance; the disconnected bucket wins only when strictly heaviest, in
    // which case the result is +infinity.
    double majority() const;

    // Two largest masses (disconnected included), descending; absent -> 0.
    std::pair<double, double> top_two_masses() const;
};

// How much mass each sampled world contributes to the distribution:
// GenerationProbability adds the world's own generation probability,
// Frequency adds 1/|samples| (the empirical estimator).
enum class WeightingMode { GenerationProbability, Frequency };

struct MajorityDistanceConfig {
    std::size_t sample_count = 1000;  // |R| drawn by callers that own sampling
    WeightingMode weighting = WeightingMode::GenerationProbability;
    // Tie-break (smallest finite distance wins) and the disconnected policy
    // (distinguished bucket competing in the argmax) are fixed by design.
};

// Simple u-v paths with at most max_hops edges, annotated with total weight
// and the raw product of edge probabilities.
struct BoundedPath {
    std::vector<EdgeId> edges;
    double length = 0.0;
    double raw_prob = 1.0;
};

struct BoundedPathSet {
    VertexId source = 0;
    VertexId target = 0;
    std::size_t max_hops = 0;
    std::vector<BoundedPath> paths;
};

// Two ways to aggregate a bounded path set into one distance:
//  - ProductWeighted: each path weighs in with the product of its edge
//    probabilities, normalized across the path set; result is the weighted
//    mean of path lengths.
//  - SumWeighted: per path, sum the edge probabilities and the
//    probability-weighted edge weights; result is the ratio of the two totals.
enum class ExpectedFormula { ProductWeighted, SumWeighted };

struct ExpectedDistanceConfig {
    std::size_t max_hops = 4;
    ExpectedFormula formula = ExpectedFormula::ProductWeighted;
};

// Deterministic weighted shortest-path distance with every edge present;
// probabilities ignored. +infinity when disconnected.
double shortest_distance(const UncertainGraph& graph, VertexId source, VertexId target);

// Single-source distances to every vertex, indexed by vertex id.
std::vector<double> shortest_distances_from(const UncertainGraph& graph, VertexId source);

// Per-world shortest distances from u to v accumulated into a distribution.
ShortestDistanceDistribution majority_distribution(const UncertainGraph& graph,
                                                   const SampleSet& samples, VertexId u,
                                                   VertexId v,
                                                   const MajorityDistanceConfig& config);

double majority_distance(const UncertainGraph& graph, const SampleSet& samples, VertexId u,
                         VertexId v, const MajorityDistanceConfig& config);

// Batch form: one masked single-source sweep per world, distributions for all
// targets at once. Equivalent to per-pair calls sourced at `source`.
std::vector<ShortestDistanceDistribution> majority_distributions_from(
    const UncertainGraph& graph, const SampleSet& samples, VertexId source,
    std::span<const VertexId> targets, const MajorityDistanceConfig& config);

// Exact distribution over the full world enumeration (edge-count limited).
ShortestDistanceDistribution exact_majority_distribution(const UncertainGraph& graph, VertexId u,
                                                         VertexId v);
double exact_majority_distance(const UncertainGraph& graph, VertexId u, VertexId v);

// All simple u-v paths with at most max_hops edges, via depth-limited
// traversal with on-path vertex marking.
BoundedPathSet enumerate_paths(const UncertainGraph& graph, VertexId u, VertexId v,
                               std::size_t max_hops);

// Aggregated bounded-path distance between u and v; +infinity when no path
// within the hop bound exists.
double expected_distance(const UncertainGraph& graph, VertexId u, VertexId v,
                         const ExpectedDistanceConfig& config);

// Batch form: one bounded traversal from `source`, distances to every vertex.
std::vector<double> expected_distances_from(const UncertainGraph& graph, VertexId source,
                                            const ExpectedDistanceConfig& config);

// Majority-distance matrix over the given samples.
DistanceMatrix build_distance_matrix(const UncertainGraph& graph, const CandidateSet& candidates,
                                     const QuerySet& queries, const SampleSet& samples,
                                     const MajorityDistanceConfig& config);

// Expected-distance matrix.
DistanceMatrix build_distance_matrix(const UncertainGraph& graph, const CandidateSet& candidates,
                                     const QuerySet& queries,
                                     const ExpectedDistanceConfig& config);

}  // namespace uskyline
