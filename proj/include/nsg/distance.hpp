#pragma once

#include <span>
#include <vector>

#include "nsg/creation.hpp"
#include "nsg/graph.hpp"

namespace nsg {

// Column i (0-based, i < n) holds the scaled walk vector A^i j / Delta^i,
// where j is the all-one vector and Delta the graph's maximum degree.
// Column 0 is therefore all ones. Stored column-major.
class ScaledWalkMatrix {
public:
    ScaledWalkMatrix(int n, std::vector<double> column_major);

    int vertex_count() const { return n_; }
    double at(int v, int i) const {  // vertex 1-based, walk length 0-based
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(v - 1)];
    }
    std::span<const double> column(int i) const {
        return {data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_),
                static_cast<std::size_t>(n_)};
    }
    std::span<const double> data() const { return data_; }

private:
    int n_ = 0;
    std::vector<double> data_;
};

// Iterative w_0 = j, w_{i+1} = A w_i / Delta. NoEdgesError when Delta = 0.
ScaledWalkMatrix scaled_walk_matrix(const SimpleGraph& g);

// Same matrix for a realized NSG, computed in cell space through the
// quotient relation A X = X Q: walk vectors are constant on cells, so each
// power costs O(r^2) instead of O(n + m).
ScaledWalkMatrix nsg_walk_vectors(const CompactCreationSequence& a);

// Frobenius distance between two scaled walk matrices. Pairs vertex i of
// one graph with vertex i of the other, so it depends on vertex order.
double walk_distance(const ScaledWalkMatrix& w1, const ScaledWalkMatrix& w2);
double walk_distance(const SimpleGraph& g1, const SimpleGraph& g2);

// Euclidean distance between non-increasing eigenvalue vectors; invariant
// under vertex relabeling of either input.
double spectral_distance(std::span<const double> s1, std::span<const double> s2);
double spectral_distance(const SimpleGraph& g1, const SimpleGraph& g2);

}  // namespace nsg
