#include "uskyline/distances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <thread>

#include "uskyline/errors.hpp"

namespace uskyline {

namespace {

// Reusable Dijkstra workspace. Distance entries are invalidated with a stamp
// counter so back-to-back runs over many sampled worlds avoid O(n) resets.
class ShortestPathEngine {
public:
    explicit ShortestPathEngine(const UncertainGraph& graph)
        : graph_(graph),
          dist_(graph.vertex_count(), 0.0),
          stamp_of_(graph.vertex_count(), 0),
          target_mark_(graph.vertex_count(), 0) {}

    // Single-source sweep from `source` over the edges present in `mask`
    // (all edges when null). When `targets` is nonempty the sweep stops as
    // soon as every target is settled.
    void run(VertexId source, const EdgeMask* mask, std::span<const VertexId> targets = {}) {
        ++stamp_;
        heap_.clear();
        std::size_t remaining = targets.size();
        for (VertexId t : targets) target_mark_[t] = stamp_;

        relax(source, 0.0);
        while (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
            const auto [d, u] = heap_.back();
            heap_.pop_back();
            if (d > distance(u)) continue;  // stale entry
            if (remaining > 0 && target_mark_[u] == stamp_) {
                target_mark_[u] = 0;
                if (--remaining == 0) return;
            }
            for (EdgeId e : graph_.incident_edges(u)) {
                if (mask != nullptr && !mask->test(e)) continue;
                const Edge& edge = graph_.edge(e);
                relax(edge.other(u), d + edge.weight);
            }
        }
    }

    double distance(VertexId v) const {
        return stamp_of_[v] == stamp_ ? dist_[v] : kInfiniteDistance;
    }

private:
    void relax(VertexId v, double d) {
        if (d < distance(v)) {
            dist_[v] = d;
            stamp_of_[v] = stamp_;
            heap_.emplace_back(d, v);
            std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
        }
    }

    const UncertainGraph& graph_;
    std::vector<double> dist_;
    std::vector<std::uint64_t> stamp_of_;
    std::vector<std::uint64_t> target_mark_;
    std::vector<std::pair<double, VertexId>> heap_;
    std::uint64_t stamp_ = 0;
};

void require_vertices(const UncertainGraph& graph, std::initializer_list<VertexId> vertices) {
    for (VertexId v : vertices) {
        if (!graph.has_vertex(v)) {
            throw LookupError("unknown vertex id " + std::to_string(v));
        }
    }
}

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Depth-limited traversal over simple paths starting at `source`. The visitor
// runs once per path (i.e. once per vertex entered), receiving the endpoint,
// the running weight sum, the running probability product, the per-path sums
// used by the SumWeighted formula, and the edge stack. When `only_target` is
// set, expansion stops below the target: no simple path ending at the target
// continues through it.
template <typename Visitor>
void walk_simple_paths(const UncertainGraph& graph, VertexId source, std::size_t max_hops,
                       VertexId only_target, Visitor&& visit) {
    struct Frame {
        VertexId vertex;
        std::size_t next_incident;
    };
    std::vector<Frame> stack{{source, 0}};
    std::vector<bool> on_path(graph.vertex_count(), false);
    on_path[source] = true;

    std::vector<EdgeId> path_edges;
    // Prefix sums per depth; recomputed identically on every visit so results
    // do not depend on backtracking order.
    std::vector<double> len_prefix{0.0};
    std::vector<double> prob_prefix{1.0};
    std::vector<double> prob_sum_prefix{0.0};
    std::vector<double> prob_weight_prefix{0.0};

    while (!stack.empty()) {
        Frame& frame = stack.back();
        const auto incident = graph.incident_edges(frame.vertex);
        if (path_edges.size() == max_hops || frame.next_incident == incident.size()) {
            on_path[frame.vertex] = false;
            stack.pop_back();
            if (!path_edges.empty()) {
                path_edges.pop_back();
                len_prefix.pop_back();
                prob_prefix.pop_back();
                prob_sum_prefix.pop_back();
                prob_weight_prefix.pop_back();
            }
            continue;
        }
        const EdgeId e = incident[frame.next_incident++];
        const Edge& edge = graph.edge(e);
        const VertexId next = edge.other(frame.vertex);
        if (on_path[next]) continue;

        path_edges.push_back(e);
        len_prefix.push_back(len_prefix.back() + edge.weight);
        prob_prefix.push_back(prob_prefix.back() * edge.prob);
        prob_sum_prefix.push_back(prob_sum_prefix.back() + edge.prob);
        prob_weight_prefix.push_back(prob_weight_prefix.back() + edge.prob * edge.weight);

        visit(next, len_prefix.back(), prob_prefix.back(), prob_sum_prefix.back(),
              prob_weight_prefix.back(), std::span<const EdgeId>(path_edges));

        if (next == only_target) {
            // Simple paths cannot revisit the target, so nothing below it can
            // end there; undo the push instead of descending.
            path_edges.pop_back();
            len_prefix.pop_back();
            prob_prefix.pop_back();
            prob_sum_prefix.pop_back();
            prob_weight_prefix.pop_back();
            continue;
        }
        on_path[next] = true;
        stack.push_back({next, 0});
    }
}

// Per-endpoint accumulator shared by the pairwise and batch expected-distance
// forms. ProductWeighted normalizes in a second pass so a lone path yields its
// exact length.
struct PathAccumulator {
    std::vector<std::pair<double, double>> product_terms;  // (length, raw prob)
    double prob_sum_total = 0.0;
    double prob_weight_total = 0.0;

    void add(ExpectedFormula formula, double length, double raw_prob, double prob_sum,
             double prob_weight_sum) {
        if (formula == ExpectedFormula::ProductWeighted) {
            product_terms.emplace_back(length, raw_prob);
        } else {
            prob_sum_total += prob_sum;
            prob_weight_total += prob_weight_sum;
        }
    }

    bool empty(ExpectedFormula formula) const {
        return formula == ExpectedFormula::ProductWeighted ? product_terms.empty()
                                                           : prob_sum_total == 0.0;
    }

    double finish(ExpectedFormula formula) const {
        if (empty(formula)) return kInfiniteDistance;
        if (formula == ExpectedFormula::SumWeighted) {
            return prob_weight_total / prob_sum_total;
        }
        double denominator = 0.0;
        for (const auto& [length, prob] : product_terms) denominator += prob;
        double result = 0.0;
        for (const auto& [length, prob] : product_terms) result += length * (prob / denominator);
        return result;
    }
};

void require_samples(const UncertainGraph& graph, const SampleSet& samples) {
    if (samples.size() == 0) {
        throw ArgumentError("sample set is empty");
    }
    if (samples.samples.front().edge_mask.size() != graph.edge_count()) {
        throw ArgumentError("sample set was drawn from a different graph (edge count mismatch)");
    }
}

// Runs fn(j) for every column index, spreading columns across threads. Each
// column writes a disjoint slice, so the result is schedule-independent.
void for_each_column(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    if (count <= 1 || hw <= 1) {
        for (std::size_t j = 0; j < count; ++j) fn(j);
        return;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        futures.push_back(std::async(std::launch::async, fn, j));
    }
    for (auto& f : futures) f.get();
}

void validate_matrix_inputs(const UncertainGraph& graph, const CandidateSet& candidates,
                            const QuerySet& queries) {
    if (candidates.vertices.empty() || queries.vertices.empty()) {
        throw ArgumentError("distance matrix needs nonempty candidate and query sets");
    }
    for (VertexId c : candidates.vertices) {
        if (!graph.has_vertex(c)) throw LookupError("candidate vertex not in graph");
        if (queries.contains(c)) {
            throw ArgumentError("candidate and query sets overlap at vertex " +
                                std::to_string(c));
        }
    }
    for (VertexId q : queries.vertices) {
        if (!graph.has_vertex(q)) throw LookupError("query vertex not in graph");
    }
}

}  // namespace

void ShortestDistanceDistribution::add(double distance, double mass) {
    if (std::isinf(distance)) {
        disconnected_mass += mass;
    } else {
        buckets[distance] += mass;
    }
}

double ShortestDistanceDistribution::total_mass() const {
    double total = disconnected_mass;
    for (const auto& [d, mass] : buckets) total += mass;
    return total;
}

double ShortestDistanceDistribution::majority() const {
    double best_distance = kInfiniteDistance;
    double best_mass = -1.0;
    for (const auto& [d, mass] : buckets) {  // ascending: first max wins ties
        if (mass > best_mass) {
            best_mass = mass;
            best_distance = d;
        }
    }
    if (disconnected_mass > best_mass) return kInfiniteDistance;
    return best_distance;
}

std::pair<double, double> ShortestDistanceDistribution::top_two_masses() const {
    double first = 0.0, second = 0.0;
    auto offer = [&](double mass) {
        if (mass > first) {
            second = first;
            first = mass;
        } else if (mass > second) {
            second = mass;
        }
    };
    for (const auto& [d, mass] : buckets) offer(mass);
    if (disconnected_mass > 0.0) offer(disconnected_mass);
    return {first, second};
}

double shortest_distance(const UncertainGraph& graph, VertexId source, VertexId target) {
    require_vertices(graph, {source, target});
    if (source == target) return 0.0;
    ShortestPathEngine engine(graph);
    const VertexId targets[] = {target};
    engine.run(source, nullptr, targets);
    return engine.distance(target);
}

std::vector<double> shortest_distances_from(const UncertainGraph& graph, VertexId source) {
    require_vertices(graph, {source});
    ShortestPathEngine engine(graph);
    engine.run(source, nullptr);
    std::vector<double> result(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) result[v] = engine.distance(v);
    return result;
}

std::vector<ShortestDistanceDistribution> majority_distributions_from(
    const UncertainGraph& graph, const SampleSet& samples, VertexId source,
    std::span<const VertexId> targets, const MajorityDistanceConfig& config) {
    require_vertices(graph, {source});
    for (VertexId t : targets) require_vertices(graph, {t});
    require_samples(graph, samples);

    ShortestPathEngine engine(graph);
    std::vector<ShortestDistanceDistribution> result(targets.size());
    const double frequency_mass = 1.0 / static_cast<double>(samples.size());
    for (std::size_t r = 0; r < samples.size(); ++r) {
        engine.run(source, &samples.samples[r].edge_mask, targets);
        const double mass = config.weighting == WeightingMode::Frequency ? frequency_mass
                                                                         : samples.probs[r];
        for (std::size_t i = 0; i < targets.size(); ++i) {
            result[i].add(engine.distance(targets[i]), mass);
        }
    }
    return result;
}

ShortestDistanceDistribution majority_distribution(const UncertainGraph& graph,
                                                   const SampleSet& samples, VertexId u,
                                                   VertexId v,
                                                   const MajorityDistanceConfig& config) {
    if (u == v) {
        throw ArgumentError("majority distance requires two distinct vertices");
    }
    const VertexId targets[] = {v};
    return std::move(majority_distributions_from(graph, samples, u, targets, config).front());
}

double majority_distance(const UncertainGraph& graph, const SampleSet& samples, VertexId u,
                         VertexId v, const MajorityDistanceConfig& config) {
    return majority_distribution(graph, samples, u, v, config).majority();
}

ShortestDistanceDistribution exact_majority_distribution(const UncertainGraph& graph, VertexId u,
                                                         VertexId v) {
    if (u == v) {
        throw ArgumentError("majority distance requires two distinct vertices");
    }
    const SampleSet worlds = enumerate_worlds(graph);
    MajorityDistanceConfig config;
    config.sample_count = worlds.size();
    config.weighting = WeightingMode::GenerationProbability;
    const VertexId targets[] = {v};
    return std::move(majority_distributions_from(graph, worlds, u, targets, config).front());
}

double exact_majority_distance(const UncertainGraph& graph, VertexId u, VertexId v) {
    return exact_majority_distribution(graph, u, v).majority();
}

BoundedPathSet enumerate_paths(const UncertainGraph& graph, VertexId u, VertexId v,
                               std::size_t max_hops) {
    require_vertices(graph, {u, v});
    if (u == v) {
        throw ArgumentError("path enumeration requires two distinct vertices");
    }
    if (max_hops < 1) {
        throw ArgumentError("max_hops must be at least 1");
    }
    BoundedPathSet set;
    set.source = u;
    set.target = v;
    set.max_hops = max_hops;
    walk_simple_paths(graph, u, max_hops, v,
                      [&](VertexId endpoint, double length, double raw_prob, double, double,
                          std::span<const EdgeId> edges) {
                          if (endpoint != v) return;
                          BoundedPath path;
                          path.edges.assign(edges.begin(), edges.end());
                          path.length = length;
                          path.raw_prob = raw_prob;
                          set.paths.push_back(std::move(path));
                      });
    return set;
}

double expected_distance(const UncertainGraph& graph, VertexId u, VertexId v,
                         const ExpectedDistanceConfig& config) {
    require_vertices(graph, {u, v});
    if (u == v) {
        throw ArgumentError("expected distance requires two distinct vertices");
    }
    PathAccumulator acc;
    walk_simple_paths(graph, u, config.max_hops, v,
                      [&](VertexId endpoint, double length, double raw_prob, double prob_sum,
                          double prob_weight_sum, std::span<const EdgeId>) {
                          if (endpoint != v) return;
                          acc.add(config.formula, length, raw_prob, prob_sum, prob_weight_sum);
                      });
    return acc.finish(config.formula);
}

std::vector<double> expected_distances_from(const UncertainGraph& graph, VertexId source,
                                            const ExpectedDistanceConfig& config) {
    require_vertices(graph, {source});
    std::vector<PathAccumulator> acc(graph.vertex_count());
    walk_simple_paths(graph, source, config.max_hops, kNoVertex,
                      [&](VertexId endpoint, double length, double raw_prob, double prob_sum,
                          double prob_weight_sum, std::span<const EdgeId>) {
                          acc[endpoint].add(config.formula, length, raw_prob, prob_sum,
                                            prob_weight_sum);
                      });
    std::vector<double> result(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        result[v] = acc[v].finish(config.formula);
    }
    result[source] = 0.0;
    return result;
}

DistanceMatrix build_distance_matrix(const UncertainGraph& graph, const CandidateSet& candidates,
                                     const QuerySet& queries, const SampleSet& samples,
                                     const MajorityDistanceConfig& config) {
    validate_matrix_inputs(graph, candidates, queries);
    require_samples(graph, samples);

    DistanceMatrix matrix;
    matrix.candidates = candidates.vertices;
    matrix.queries = queries.vertices;
    matrix.values.assign(matrix.rows() * matrix.cols(), 0.0);

    // One masked sweep per (world, query); sourcing at the query side makes a
    // column cost |R| Dijkstra runs instead of |R| * |CS|.
    for_each_column(matrix.cols(), [&](std::size_t j) {
        const auto distributions = majority_distributions_from(
            graph, samples, queries.vertices[j], candidates.vertices, config);
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            matrix.at(i, j) = distributions[i].majority();
        }
    });
    return matrix;
}

DistanceMatrix build_distance_matrix(const UncertainGraph& graph, const CandidateSet& candidates,
                                     const QuerySet& queries,
                                     const ExpectedDistanceConfig& config) {
    validate_matrix_inputs(graph, candidates, queries);

    DistanceMatrix matrix;
    matrix.candidates = candidates.vertices;
    matrix.queries = queries.vertices;
    matrix.values.assign(matrix.rows() * matrix.cols(), 0.0);

    for_each_column(matrix.cols(), [&](std::size_t j) {
        const auto distances = expected_distances_from(graph, queries.vertices[j], config);
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            matrix.at(i, j) = distances[matrix.candidates[i]];
        }
    });
    return matrix;
}

}  // namespace uskyline
