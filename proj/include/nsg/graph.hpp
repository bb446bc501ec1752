#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nsg {

// An unordered edge {u, v} with u < v, vertices 1-based.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n: no self-loops, no parallel
// edges. Edges keep insertion order (the "file order" used by the walk
// distance); adjacency lists are maintained alongside.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    // Returns false when the edge is already present. Throws Error on a
    // self-loop or an endpoint outside 1..n.
    bool add_edge(int u, int v);

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;
    std::span<const int> neighbors(int v) const;
    std::span<const Edge> edges() const { return edges_; }

    bool connected() const;

    // Equal vertex count and edge set (insertion order ignored).
    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

}  // namespace nsg
