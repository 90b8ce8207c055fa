#pragma once

#include <cstdint>
#include <vector>

#include "uskyline/graph.hpp"
#include "uskyline/random.hpp"

namespace uskyline {

// Fixed-size bitset over a graph's edge indices.
class EdgeMask {
public:
    EdgeMask() = default;
    explicit EdgeMask(std::size_t size, bool value = false)
        : size_(size), blocks_((size + 63) / 64, value ? ~0ULL : 0ULL) {
        trim();
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1ULL; }

    void set(std::size_t i, bool value) {
        const std::uint64_t bit = 1ULL << (i & 63);
        if (value)
            blocks_[i >> 6] |= bit;
        else
            blocks_[i >> 6] &= ~bit;
    }

    std::size_t count() const;

    bool operator==(const EdgeMask&) const = default;

private:
    void trim() {
        if (size_ % 64 != 0 && !blocks_.empty()) {
            blocks_.back() &= (1ULL << (size_ % 64)) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

// One deterministic subgraph of an uncertain graph: the edges marked present
// keep the parent graph's weights. log_prob is the log of the world's
// generation probability.
struct WorldSample {
    EdgeMask edge_mask;
    double log_prob = 0.0;
};

// A collection of sampled (or exhaustively enumerated) worlds with their
// generation probabilities; probs[i] == exp(samples[i].log_prob).
struct SampleSet {
    std::vector<WorldSample> samples;
    std::vector<double> probs;

    std::size_t size() const { return samples.size(); }
};

// Generation probability of the world selected by `mask`: the product of
// included-edge probabilities times the complements of the excluded ones.
// Accumulated in log space so million-edge graphs do not underflow.
double world_probability(const UncertainGraph& graph, const EdgeMask& mask);
double world_log_probability(const UncertainGraph& graph, const EdgeMask& mask);

// Draws `count` independent worlds, each edge present with its own probability.
// Internally sharded with per-shard derived seeds, so the result depends only
// on (graph, count, seed).
SampleSet draw_samples(const UncertainGraph& graph, std::size_t count, RandomSeed seed);

// All 2^m worlds of a graph with at most `kEnumerationEdgeLimit` edges.
inline constexpr std::size_t kEnumerationEdgeLimit = 20;
SampleSet enumerate_worlds(const UncertainGraph& graph);

struct ReliabilityMode {
    enum Kind { Exact, MonteCarlo } kind = Exact;
    std::size_t sample_count = 0;
    RandomSeed seed;

    static ReliabilityMode exact() { return {Exact, 0, {}}; }
    static ReliabilityMode monte_carlo(std::size_t count, RandomSeed seed) {
        return {MonteCarlo, count, seed};
    }
};

// Probability that u and v are connected across the possible-world
// distribution. Exact mode sums world probabilities over the full enumeration;
// Monte Carlo mode returns the connected fraction of sampled worlds.
double reliability(const UncertainGraph& graph, VertexId u, VertexId v, ReliabilityMode mode);

// True when u and v are connected using only the edges present in `mask`.
bool connected_in_world(const UncertainGraph& graph, const EdgeMask& mask, VertexId u, VertexId v);

}  // namespace uskyline
