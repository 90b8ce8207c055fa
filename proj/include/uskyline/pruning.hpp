#pragma once

#include <unordered_map>
#include <vector>

#include "uskyline/graph.hpp"

namespace uskyline {

// The query vertices. Nonempty, distinct, all present in the graph; the order
// fixes the column order of every distance matrix built from it.
struct QuerySet {
    std::vector<VertexId> vertices;

    std::size_t size() const { return vertices.size(); }
    bool contains(VertexId v) const {
        for (VertexId q : vertices)
            if (q == v) return true;
        return false;
    }
};

// Validates and builds a QuerySet from raw ids.
QuerySet make_query_set(const UncertainGraph& graph, std::vector<VertexId> vertices);

// Data vertices surviving pruning, in ascending id order, together with the
// reachability dictionary built during the BFS stage (data vertex -> query
// vertices that reach it). Every surviving vertex is reached by all queries.
struct CandidateSet {
    std::vector<VertexId> vertices;
    std::unordered_map<VertexId, std::vector<VertexId>> reach_map;

    std::size_t size() const { return vertices.size(); }
};

struct PruneConfig {
    double distance_threshold = 400.0;
    bool skip_distance_pruning = false;
};

// Keeps exactly the data vertices reachable from every query vertex in the
// underlying deterministic graph (all edges treated as present).
CandidateSet bfs_prune(const UncertainGraph& graph, const QuerySet& queries);

// Removes every candidate whose deterministic weighted shortest-path distance
// to some query vertex exceeds the threshold. One single-source sweep per query.
CandidateSet distance_prune(const UncertainGraph& graph, const CandidateSet& candidates,
                            const QuerySet& queries, const PruneConfig& config);

// Both stages composed; the distance stage is skipped when configured.
CandidateSet prune(const UncertainGraph& graph, const QuerySet& queries,
                   const PruneConfig& config);

}  // namespace uskyline
