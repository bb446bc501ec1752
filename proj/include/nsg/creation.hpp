#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/graph.hpp"

namespace nsg {

// Construction code c_1..c_n of a connected nested split graph: bit i is 1
// when vertex i was added dominating, 0 when added isolated. A connected
// NSG always has c_1 = 0 and c_n = 1, so the n-2 interior bits identify
// the graph (its minimum representation).
class CreationSequence {
public:
    static CreationSequence from_bits(std::vector<std::uint8_t> bits);

    // Parses "011000101". By default the string holds only the interior
    // bits c_2..c_{n-1}; with full_form it holds all n bits and must start
    // with 0 and end with 1.
    static CreationSequence from_string(std::string_view s, bool full_form = false);

    int vertex_count() const { return static_cast<int>(bits_.size()); }
    int bit(int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    std::span<const std::uint8_t> bits() const { return bits_; }

    // Copy with bit i inverted. Only interior positions 2..n-1 are legal.
    CreationSequence flipped(int i) const;

    std::string to_string(bool full_form = false) const;

    friend bool operator==(const CreationSequence&, const CreationSequence&) = default;

private:
    CreationSequence() = default;
    std::vector<std::uint8_t> bits_;
};

// Run-length form a_1..a_r of a creation sequence. Odd cells (1-based) are
// co-cliques, even cells cliques; r is even and every cell is non-empty.
class CompactCreationSequence {
public:
    static CompactCreationSequence from_cells(std::vector<std::int64_t> cells);
    static CompactCreationSequence from_string(std::string_view csv);  // "1,2,1,1,5,2"

    int cell_count() const { return static_cast<int>(cells_.size()); }  // r
    int vertex_count() const { return n_; }
    std::int64_t cell(int i) const { return cells_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    std::span<const std::int64_t> cells() const { return cells_; }

    std::string to_string() const;

    friend bool operator==(const CompactCreationSequence& a, const CompactCreationSequence& b) {
        return a.cells_ == b.cells_;
    }

private:
    CompactCreationSequence() = default;
    std::vector<std::int64_t> cells_;
    int n_ = 0;
};

CompactCreationSequence compact_from_full(const CreationSequence& c);
CreationSequence full_from_compact(const CompactCreationSequence& a);

// Canonical repair of a perturbed cell vector: expand the runs by
// positional parity (empty runs vanish, merging their neighbours), force
// the first bit to 0, recompact. Returns nullopt when the repaired code
// would end in a 0 bit, i.e. the graph would lack a dominating last vertex.
std::optional<CompactCreationSequence> try_normalize(std::span<const std::int64_t> raw_cells);

// Throwing form of try_normalize (DisconnectedError on a trailing 0).
CompactCreationSequence normalize(std::span<const std::int64_t> raw_cells);

// Realizes the code as a graph: vertices i < j are adjacent iff c_j = 1.
SimpleGraph adjacency_from_creation(const CreationSequence& c);
SimpleGraph realize(const CompactCreationSequence& a);

// r x r quotient matrix of the NSG's equitable cell partition; entry (i, j)
// is the number of neighbours a vertex of cell i has in cell j.
struct QuotientMatrix {
    int r = 0;
    std::vector<double> values;          // row-major
    std::vector<std::int64_t> cells;
    double at(int i, int j) const {      // 1-based
        return values[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r) +
                      static_cast<std::size_t>(j - 1)];
    }
};

QuotientMatrix quotient_matrix(const CompactCreationSequence& a);

// Eigenvalues of the quotient matrix, non-increasing. These are exactly the
// main eigenvalues of the realized adjacency matrix. Q itself is not
// symmetric, but with D = diag(a) the product D^{1/2} Q D^{-1/2} is, so a
// symmetric solver applies.
std::vector<double> quotient_eigenvalues(const CompactCreationSequence& a);

}  // namespace nsg
