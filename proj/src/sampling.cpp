#include "uskyline/sampling.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "uskyline/errors.hpp"

namespace uskyline {

namespace {

constexpr std::size_t kShardSize = 4096;

// Union-find over vertex ids, used for connectivity inside a single world.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }

    VertexId find(VertexId x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
};

void require_mask_size(const UncertainGraph& graph, const EdgeMask& mask) {
    if (mask.size() != graph.edge_count()) {
        throw ArgumentError("edge mask length " + std::to_string(mask.size()) +
                            " does not match edge count " + std::to_string(graph.edge_count()));
    }
}

}  // namespace

std::size_t EdgeMask::count() const {
    std::size_t total = 0;
    for (std::uint64_t block : blocks_) total += std::popcount(block);
    return total;
}

double world_log_probability(const UncertainGraph& graph, const EdgeMask& mask) {
    require_mask_size(graph, mask);
    double log_prob = 0.0;
    const auto edges = graph.edges();
    for (EdgeId e = 0; e < edges.size(); ++e) {
        log_prob += mask.test(e) ? std::log(edges[e].prob) : std::log1p(-edges[e].prob);
    }
    return log_prob;
}

double world_probability(const UncertainGraph& graph, const EdgeMask& mask) {
    return std::exp(world_log_probability(graph, mask));
}

SampleSet draw_samples(const UncertainGraph& graph, std::size_t count, RandomSeed seed) {
    if (count == 0) {
        throw ArgumentError("sample count must be at least 1");
    }
    const std::size_t m = graph.edge_count();
    const auto edges = graph.edges();

    SampleSet set;
    set.samples.reserve(count);
    set.probs.reserve(count);
    for (std::size_t shard = 0; shard * kShardSize < count; ++shard) {
        Rng rng(derive_seed(seed, shard));
        const std::size_t shard_end = std::min(count, (shard + 1) * kShardSize);
        for (std::size_t i = shard * kShardSize; i < shard_end; ++i) {
            WorldSample sample{EdgeMask(m), 0.0};
            for (EdgeId e = 0; e < m; ++e) {
                if (rng.bernoulli(edges[e].prob)) {
                    sample.edge_mask.set(e, true);
                    sample.log_prob += std::log(edges[e].prob);
                } else {
                    sample.log_prob += std::log1p(-edges[e].prob);
                }
            }
            set.probs.push_back(std::exp(sample.log_prob));
            set.samples.push_back(std::move(sample));
        }
    }
    return set;
}

SampleSet enumerate_worlds(const UncertainGraph& graph) {
    const std::size_t m = graph.edge_count();
    if (m > kEnumerationEdgeLimit) {
        throw LimitError("exhaustive world enumeration supports at most " +
                         std::to_string(kEnumerationEdgeLimit) + " edges, graph has " +
                         std::to_string(m));
    }
    const auto edges = graph.edges();
    SampleSet set;
    const std::size_t world_count = std::size_t{1} << m;
    set.samples.reserve(world_count);
    set.probs.reserve(world_count);
    for (std::size_t bits = 0; bits < world_count; ++bits) {
        WorldSample sample{EdgeMask(m), 0.0};
        for (EdgeId e = 0; e < m; ++e) {
            if ((bits >> e) & 1) {
                sample.edge_mask.set(e, true);
                sample.log_prob += std::log(edges[e].prob);
            } else {
                sample.log_prob += std::log1p(-edges[e].prob);
            }
        }
        set.probs.push_back(std::exp(sample.log_prob));
        set.samples.push_back(std::move(sample));
    }
    return set;
}

bool connected_in_world(const UncertainGraph& graph, const EdgeMask& mask, VertexId u,
                        VertexId v) {
    require_mask_size(graph, mask);
    DisjointSets sets(graph.vertex_count());
    const auto edges = graph.edges();
    for (EdgeId e = 0; e < edges.size(); ++e) {
        if (mask.test(e)) sets.unite(edges[e].u, edges[e].v);
    }
    return sets.find(u) == sets.find(v);
}

double reliability(const UncertainGraph& graph, VertexId u, VertexId v, ReliabilityMode mode) {
    if (!graph.has_vertex(u) || !graph.has_vertex(v)) {
        throw LookupError("reliability endpoints must be graph vertices");
    }
    if (u == v) {
        throw ArgumentError("reliability requires two distinct vertices");
    }

    if (mode.kind == ReliabilityMode::Exact) {
        const SampleSet worlds = enumerate_worlds(graph);
        double total = 0.0;
        for (std::size_t i = 0; i < worlds.size(); ++i) {
            if (connected_in_world(graph, worlds.samples[i].edge_mask, u, v)) {
                total += worlds.probs[i];
            }
        }
        return total;
    }

    const SampleSet sampled = draw_samples(graph, mode.sample_count, mode.seed);
    std::size_t connected = 0;
    for (const WorldSample& sample : sampled.samples) {
        if (connected_in_world(graph, sample.edge_mask, u, v)) ++connected;
    }
    return static_cast<double>(connected) / static_cast<double>(sampled.size());
}

}  // namespace uskyline
