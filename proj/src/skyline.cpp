#include "uskyline/skyline.hpp"

#include <algorithm>

#include "uskyline/errors.hpp"

namespace uskyline {

namespace {

SkylineResult gather(const DistanceMatrix& matrix, const std::vector<std::size_t>& row_ids) {
    SkylineResult result;
    result.vertices.reserve(row_ids.size());
    result.matrix_rows.reserve(row_ids.size());
    for (std::size_t i : row_ids) {
        result.vertices.push_back(matrix.candidates[i]);
        const auto row = matrix.row(i);
        result.matrix_rows.emplace_back(row.begin(), row.end());
    }
    return result;
}

}  // namespace

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ArgumentError("dominance requires vectors of equal length");
    }
    bool strictly_better = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strictly_better = true;
    }
    return strictly_better;
}

SkylineResult bnl_skyline(const DistanceMatrix& matrix) {
    std::vector<std::size_t> window;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        const auto incoming = matrix.row(i);
        bool incoming_dominated = false;
        for (std::size_t w : window) {
            if (dominates(matrix.row(w), incoming)) {
                incoming_dominated = true;
                break;
            }
        }
        if (incoming_dominated) continue;
        std::erase_if(window,
                      [&](std::size_t w) { return dominates(incoming, matrix.row(w)); });
        window.push_back(i);
    }
    return gather(matrix, window);
}

SkylineResult naive_skyline(const DistanceMatrix& matrix) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < matrix.rows() && !dominated; ++j) {
            dominated = j != i && dominates(matrix.row(j), matrix.row(i));
        }
        if (!dominated) kept.push_back(i);
    }
    return gather(matrix, kept);
}

}  // namespace uskyline
