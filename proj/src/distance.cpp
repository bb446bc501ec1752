#include "nsg/distance.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nsg/errors.hpp"
#include "nsg/indices_oracle.hpp"
#include "nsg/kernels.hpp"

namespace nsg {

ScaledWalkMatrix::ScaledWalkMatrix(int n, std::vector<double> column_major)
    : n_(n), data_(std::move(column_major)) {
    if (data_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error("walk matrix data size does not match vertex count");
}

ScaledWalkMatrix scaled_walk_matrix(const SimpleGraph& g) {
    const int n = g.vertex_count();
    const int max_deg = g.max_degree();
    if (max_deg == 0) throw NoEdgesError("scaled walk matrix needs at least one edge");
    const double inv_delta = 1.0 / static_cast<double>(max_deg);
    std::vector<double> data(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    double* col = data.data();
    for (int v = 0; v < n; ++v) col[v] = 1.0;
    for (int i = 1; i < n; ++i) {
        const double* prev = col;
        col = data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
        for (int v = 1; v <= n; ++v) {
            double acc = 0.0;
            for (int w : g.neighbors(v)) acc += prev[w - 1];
            col[v - 1] = acc * inv_delta;
        }
    }
    return {n, std::move(data)};
}

ScaledWalkMatrix nsg_walk_vectors(const CompactCreationSequence& a) {
    const int n = a.vertex_count();
    const int r = a.cell_count();
    const QuotientMatrix q = quotient_matrix(a);
    // Every connected NSG has a dominating last cell, so Delta = n - 1.
    const double inv_delta = 1.0 / static_cast<double>(n - 1);
    std::vector<double> cell_walk(static_cast<std::size_t>(r), 1.0);
    std::vector<double> next(static_cast<std::size_t>(r));
    std::vector<double> data(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double* col = data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
        std::size_t offset = 0;
        for (int c = 1; c <= r; ++c) {
            const std::size_t size = static_cast<std::size_t>(a.cell(c));
            const double value = cell_walk[static_cast<std::size_t>(c - 1)];
            for (std::size_t k = 0; k < size; ++k) col[offset + k] = value;
            offset += size;
        }
        if (i + 1 < n) {
            for (int row = 0; row < r; ++row)
                next[static_cast<std::size_t>(row)] =
                    kernels::dot(q.values.data() + static_cast<std::size_t>(row) *
                                                       static_cast<std::size_t>(r),
                                 cell_walk.data(), static_cast<std::size_t>(r)) *
                    inv_delta;
            cell_walk.swap(next);
        }
    }
    return {n, std::move(data)};
}

double walk_distance(const ScaledWalkMatrix& w1, const ScaledWalkMatrix& w2) {
    if (w1.vertex_count() != w2.vertex_count())
        throw SizeMismatchError("walk distance needs equal vertex counts, got " +
                                std::to_string(w1.vertex_count()) + " and " +
                                std::to_string(w2.vertex_count()));
    return std::sqrt(
        kernels::sum_sq_diff(w1.data().data(), w2.data().data(), w1.data().size()));
}

double walk_distance(const SimpleGraph& g1, const SimpleGraph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw SizeMismatchError("walk distance needs equal vertex counts, got " +
                                std::to_string(g1.vertex_count()) + " and " +
                                std::to_string(g2.vertex_count()));
    return walk_distance(scaled_walk_matrix(g1), scaled_walk_matrix(g2));
}

double spectral_distance(std::span<const double> s1, std::span<const double> s2) {
    if (s1.size() != s2.size())
        throw SizeMismatchError("spectral distance needs equal vertex counts, got " +
                                std::to_string(s1.size()) + " and " +
                                std::to_string(s2.size()));
    return std::sqrt(kernels::sum_sq_diff(s1.data(), s2.data(), s1.size()));
}

double spectral_distance(const SimpleGraph& g1, const SimpleGraph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw SizeMismatchError("spectral distance needs equal vertex counts, got " +
                                std::to_string(g1.vertex_count()) + " and " +
                                std::to_string(g2.vertex_count()));
    const auto s1 = oracle_spectrum(g1);
    const auto s2 = oracle_spectrum(g2);
    return spectral_distance(s1, s2);
}

}  // namespace nsg
