#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nsg/creation.hpp"

namespace nsg {

// Cell-sum tables shared by the index formulas, built once per sequence in
// O(r). Level accessors are 1-based with k in 1..r/2; reading k = r/2 + 1
// gives 0, so "next level" terms need no branches.
//
//   delta(k)    suffix sum of clique cells a_{2j}, j >= k (kappa in the
//               edge-count formula is the same quantity)
//   gamma(k)    suffix sum of co-clique cells a_{2j-1}, j >= k
//   epsilon(k)  prefix sum of co-clique cells, j <= k
//   zeta(k)     prefix sum of clique cells, j <= k
//   eta(k)      suffix sum of a_{2j} * epsilon(j), j >= k
class PrefixSums {
public:
    explicit PrefixSums(const CompactCreationSequence& a);

    int half() const { return half_; }  // r/2
    std::int64_t delta(int k) const { return delta_[static_cast<std::size_t>(k)]; }
    std::int64_t kappa(int k) const { return delta(k); }
    std::int64_t gamma(int k) const { return gamma_[static_cast<std::size_t>(k)]; }
    std::int64_t epsilon(int k) const { return epsilon_[static_cast<std::size_t>(k)]; }
    std::int64_t zeta(int k) const { return zeta_[static_cast<std::size_t>(k)]; }
    std::int64_t eta(int k) const { return eta_[static_cast<std::size_t>(k)]; }

    std::int64_t clique_vertices() const { return delta(1); }     // delta_1
    std::int64_t coclique_vertices() const { return gamma(1); }   // gamma_1

private:
    int half_ = 0;
    std::vector<std::int64_t> delta_, gamma_, epsilon_, zeta_, eta_;
};

// Degree shared by every vertex of each cell, 1-based in the cell index.
struct CellDegrees {
    std::vector<std::int64_t> rho;
    std::int64_t at(int i) const { return rho[static_cast<std::size_t>(i - 1)]; }
};

// Every operation takes an optional precomputed PrefixSums; the plain
// overloads rebuild it, which keeps one-off calls convenient while batch
// callers (the annealer, the all-index report) share one table.

std::int64_t edge_count(const CompactCreationSequence& a, const PrefixSums& ps);
std::int64_t edge_count(const CompactCreationSequence& a);

double entropy(const CompactCreationSequence& a, const PrefixSums& ps);
double entropy(const CompactCreationSequence& a);

CellDegrees cell_degrees(const CompactCreationSequence& a, const PrefixSums& ps);
CellDegrees cell_degrees(const CompactCreationSequence& a);

double randic(const CompactCreationSequence& a, const PrefixSums& ps);
double randic(const CompactCreationSequence& a);

std::int64_t wiener(const CompactCreationSequence& a, const PrefixSums& ps);
std::int64_t wiener(const CompactCreationSequence& a);

std::int64_t szeged(const CompactCreationSequence& a, const PrefixSums& ps);
std::int64_t szeged(const CompactCreationSequence& a);

std::int64_t copi(const CompactCreationSequence& a, const PrefixSums& ps);
std::int64_t copi(const CompactCreationSequence& a);

// Full adjacency spectrum assembled from the r quotient eigenvalues plus
// the two non-main eigenvalues: -1 with multiplicity delta_1 - r/2 and 0
// with multiplicity gamma_1 - r/2. Non-increasing, exactly n values.
std::vector<double> nsg_spectrum(const CompactCreationSequence& a, const PrefixSums& ps);
std::vector<double> nsg_spectrum(const CompactCreationSequence& a);

double estrada(const CompactCreationSequence& a, const PrefixSums& ps,
               std::span<const double> main_eigenvalues);
double estrada(const CompactCreationSequence& a);

double gutman_energy(const CompactCreationSequence& a, const PrefixSums& ps,
                     std::span<const double> main_eigenvalues);
double gutman_energy(const CompactCreationSequence& a);

double resolvent_energy(const CompactCreationSequence& a, const PrefixSums& ps,
                        std::span<const double> main_eigenvalues);
double resolvent_energy(const CompactCreationSequence& a);

}  // namespace nsg
