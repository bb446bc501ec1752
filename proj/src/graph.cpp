#include "nsg/graph.hpp"

#include <algorithm>
#include <string>

#include "nsg/errors.hpp"

namespace nsg {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0)) {
    if (n < 1) throw Error("graph needs at least one vertex, got " + std::to_string(n));
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw Error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

bool SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return false;
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
    adj_[static_cast<std::size_t>(u - 1)].push_back(v);
    adj_[static_cast<std::size_t>(v - 1)].push_back(u);
    return true;
}

bool SimpleGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<std::size_t>(u - 1)];
    const auto& b = adj_[static_cast<std::size_t>(v - 1)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    const int target = a.size() <= b.size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v - 1)].size());
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::span<const int> SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v - 1)];
}

bool SimpleGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj_[static_cast<std::size_t>(u - 1)]) {
            if (!seen[static_cast<std::size_t>(w - 1)]) {
                seen[static_cast<std::size_t>(w - 1)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    auto ea = a.edges_;
    auto eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

}  // namespace nsg
