#pragma once

#include <cstdint>
#include <vector>

#include "nsg/graph.hpp"

namespace nsg {

// All-pairs BFS hop distances. Unreachable pairs keep the sentinel -1.
// This module is the slow trusted baseline: definitions only, no shortcuts.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const SimpleGraph& g);

    int vertex_count() const { return n_; }
    int at(int u, int v) const {  // 1-based
        return d_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v - 1)];
    }
    bool connected() const { return connected_; }

private:
    int n_ = 0;
    bool connected_ = true;
    std::vector<int> d_;
};

double oracle_entropy(const SimpleGraph& g);  // EmptyGraphError when |E| = 0
double oracle_randic(const SimpleGraph& g);

// Distance-based indices; DisconnectedError on disconnected input.
std::int64_t oracle_wiener(const SimpleGraph& g);
std::int64_t oracle_szeged(const SimpleGraph& g);
std::int64_t oracle_copi(const SimpleGraph& g);
std::int64_t oracle_szeged(const SimpleGraph& g, const DistanceMatrix& d);
std::int64_t oracle_copi(const SimpleGraph& g, const DistanceMatrix& d);

// Adjacency eigenvalues, non-increasing (cyclic Jacobi).
std::vector<double> oracle_spectrum(const SimpleGraph& g);

double oracle_estrada(const SimpleGraph& g);
double oracle_gutman(const SimpleGraph& g);
double oracle_resolvent(const SimpleGraph& g);

}  // namespace nsg
