#pragma once

// Shared helpers for the test suites: random sequence generation and the
// brute-force NSG characterization check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "nsg/anneal.hpp"
#include "nsg/creation.hpp"
#include "nsg/graph.hpp"

namespace nsg::testutil {

// absolute-tolerance comparison (doctest's Approx is relative-only)
inline bool near(double a, double b, double abs_tol) { return std::abs(a - b) <= abs_tol; }

inline CreationSequence random_creation(int n, Rng& rng) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n - 1; ++i)
        bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng.uniform_index(2));
    bits.back() = 1;
    return CreationSequence::from_bits(std::move(bits));
}

inline CompactCreationSequence random_compact(int n_min, int n_max, Rng& rng) {
    const int n = n_min + static_cast<int>(rng.uniform_index(
                              static_cast<std::uint64_t>(n_max - n_min + 1)));
    return compact_from_full(random_creation(n, rng));
}

// Forbidden-subgraph characterization: no induced P4, C4 or 2K2 over any
// four vertices. Quadratic in C(n,4); fine for n <= 12.
inline bool is_nsg_by_brute_force(const SimpleGraph& g) {
    const int n = g.vertex_count();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    const int quad[4] = {a, b, c, d};
                    int edges = 0;
                    int deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(quad[i], quad[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    // induced 2K2: two disjoint edges
                    if (edges == 2 && deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1)
                        return false;
                    // induced P4: three edges forming a path (degrees 1,1,2,2)
                    if (edges == 3) {
                        int ones = 0, twos = 0;
                        for (int i = 0; i < 4; ++i) {
                            if (deg[i] == 1) ++ones;
                            if (deg[i] == 2) ++twos;
                        }
                        if (ones == 2 && twos == 2) return false;
                    }
                    // induced C4: four edges, all degrees 2
                    if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                        return false;
                }
    return true;
}

}  // namespace nsg::testutil
