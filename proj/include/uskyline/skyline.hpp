#pragma once

#include <span>
#include <vector>

#include "uskyline/distances.hpp"

namespace uskyline {

// The non-dominated candidates together with their surviving matrix rows,
// both in candidate (row) order.
struct SkylineResult {
    std::vector<VertexId> vertices;
    std::vector<std::vector<double>> matrix_rows;

    std::size_t size() const { return vertices.size(); }
};

// True iff a is coordinatewise <= b and strictly smaller somewhere
// (minimization; +infinity compares larger than any finite value and equal to
// itself). Entries must be NaN-free.
bool dominates(std::span<const double> a, std::span<const double> b);

// Block-nested-loop skyline: stream rows through a window of currently
// non-dominated rows. Duplicate rows are mutually non-dominating and all kept.
SkylineResult bnl_skyline(const DistanceMatrix& matrix);

// All-pairs dominance filter; the O(|CS|^2) oracle for bnl_skyline.
SkylineResult naive_skyline(const DistanceMatrix& matrix);

}  // namespace uskyline
