#include "nsg/creation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nsg/errors.hpp"
#include "nsg/jacobi.hpp"

namespace nsg {

namespace {

void validate_bits(const std::vector<std::uint8_t>& bits) {
    if (bits.size() < 2)
        throw InvalidSequenceError("creation sequence needs at least 2 bits, got " +
                                   std::to_string(bits.size()));
    for (std::uint8_t b : bits)
        if (b > 1) throw InvalidSequenceError("creation sequence bits must be 0 or 1");
    if (bits.front() != 0)
        throw InvalidSequenceError("creation sequence must start with 0 (isolated first vertex)");
    if (bits.back() != 1)
        throw InvalidSequenceError("creation sequence must end with 1 (dominating last vertex)");
}

}  // namespace

CreationSequence CreationSequence::from_bits(std::vector<std::uint8_t> bits) {
    validate_bits(bits);
    CreationSequence c;
    c.bits_ = std::move(bits);
    return c;
}

CreationSequence CreationSequence::from_string(std::string_view s, bool full_form) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size() + 2);
    if (!full_form) bits.push_back(0);
    for (char ch : s) {
        if (ch == '0')
            bits.push_back(0);
        else if (ch == '1')
            bits.push_back(1);
        else
            throw InvalidSequenceError(std::string("unexpected character '") + ch +
                                       "' in bit string");
    }
    if (!full_form) bits.push_back(1);
    return from_bits(std::move(bits));
}

CreationSequence CreationSequence::flipped(int i) const {
    const int n = vertex_count();
    if (i < 2 || i > n - 1)
        throw InvalidSequenceError("only interior bits 2.." + std::to_string(n - 1) +
                                   " may be flipped, got " + std::to_string(i));
    CreationSequence c(*this);
    c.bits_[static_cast<std::size_t>(i - 1)] ^= 1;
    return c;
}

std::string CreationSequence::to_string(bool full_form) const {
    std::string s;
    const std::size_t begin = full_form ? 0 : 1;
    const std::size_t end = full_form ? bits_.size() : bits_.size() - 1;
    s.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) s.push_back(bits_[i] ? '1' : '0');
    return s;
}

CompactCreationSequence CompactCreationSequence::from_cells(std::vector<std::int64_t> cells) {
    if (cells.size() < 2 || cells.size() % 2 != 0)
        throw InvalidSequenceError("cell count must be even and at least 2, got " +
                                   std::to_string(cells.size()));
    std::int64_t n = 0;
    for (std::int64_t a : cells) {
        if (a < 1) throw InvalidSequenceError("every cell must hold at least one vertex");
        n += a;
    }
    if (n > std::numeric_limits<int>::max())
        throw InvalidSequenceError("vertex count " + std::to_string(n) + " too large");
    CompactCreationSequence a;
    a.cells_ = std::move(cells);
    a.n_ = static_cast<int>(n);
    return a;
}

CompactCreationSequence CompactCreationSequence::from_string(std::string_view csv) {
    std::vector<std::int64_t> cells;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        const std::string_view tok = csv.substr(pos, comma - pos);
        if (tok.empty()) throw InvalidSequenceError("empty cell entry in \"" + std::string(csv) + "\"");
        std::int64_t value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw InvalidSequenceError(std::string("unexpected character '") + ch +
                                           "' in cell list");
            value = value * 10 + (ch - '0');
            if (value > std::numeric_limits<int>::max())
                throw InvalidSequenceError("cell size too large in \"" + std::string(csv) + "\"");
        }
        cells.push_back(value);
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return from_cells(std::move(cells));
}

std::string CompactCreationSequence::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(cells_[i]);
    }
    return s;
}

CompactCreationSequence compact_from_full(const CreationSequence& c) {
    std::vector<std::int64_t> cells;
    const auto bits = c.bits();
    std::size_t i = 0;
    while (i < bits.size()) {
        std::size_t j = i;
        while (j < bits.size() && bits[j] == bits[i]) ++j;
        cells.push_back(static_cast<std::int64_t>(j - i));
        i = j;
    }
    return CompactCreationSequence::from_cells(std::move(cells));
}

CreationSequence full_from_compact(const CompactCreationSequence& a) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(a.vertex_count()));
    for (int i = 1; i <= a.cell_count(); ++i) {
        const std::uint8_t value = static_cast<std::uint8_t>(i % 2 == 0);  // even cells are 1-runs
        bits.insert(bits.end(), static_cast<std::size_t>(a.cell(i)), value);
    }
    return CreationSequence::from_bits(std::move(bits));
}

std::optional<CompactCreationSequence> try_normalize(std::span<const std::int64_t> raw_cells) {
    std::int64_t n = 0;
    for (std::int64_t a : raw_cells) {
        if (a < 0) throw InvalidSequenceError("cell sizes may not be negative");
        n += a;
    }
    if (n < 2)
        throw InvalidSequenceError("normalization needs at least 2 vertices, got " +
                                   std::to_string(n));
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < raw_cells.size(); ++i) {
        const std::uint8_t value = static_cast<std::uint8_t>(i % 2 == 1);
        bits.insert(bits.end(), static_cast<std::size_t>(raw_cells[i]), value);
    }
    bits.front() = 0;  // the first constructed vertex is isolated either way
    if (bits.back() != 1) return std::nullopt;
    return compact_from_full(CreationSequence::from_bits(std::move(bits)));
}

CompactCreationSequence normalize(std::span<const std::int64_t> raw_cells) {
    auto result = try_normalize(raw_cells);
    if (!result)
        throw DisconnectedError("normalized sequence ends in an isolated vertex");
    return *std::move(result);
}

SimpleGraph adjacency_from_creation(const CreationSequence& c) {
    const int n = c.vertex_count();
    SimpleGraph g(n);
    for (int j = 2; j <= n; ++j) {
        if (c.bit(j)) {
            for (int i = 1; i < j; ++i) g.add_edge(i, j);
        }
    }
    return g;
}

SimpleGraph realize(const CompactCreationSequence& a) {
    return adjacency_from_creation(full_from_compact(a));
}

QuotientMatrix quotient_matrix(const CompactCreationSequence& a) {
    const int r = a.cell_count();
    QuotientMatrix q;
    q.r = r;
    q.cells.assign(a.cells().begin(), a.cells().end());
    q.values.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0.0);
    auto set = [&](int i, int j, double v) {
        q.values[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r) +
                 static_cast<std::size_t>(j - 1)] = v;
    };
    for (int k = 1; k <= r / 2; ++k) {
        // Row 2k-1: a co-clique vertex at level k sees every clique at
        // level k or above and nothing else.
        for (int j = k; j <= r / 2; ++j) set(2 * k - 1, 2 * j, static_cast<double>(a.cell(2 * j)));
        // Row 2k: a clique vertex at level k sees co-cliques at level k or
        // below, whole cliques everywhere, and its own cell minus itself.
        for (int j = 1; j <= k; ++j)
            set(2 * k, 2 * j - 1, static_cast<double>(a.cell(2 * j - 1)));
        for (int j = 1; j <= r / 2; ++j)
            set(2 * k, 2 * j, static_cast<double>(a.cell(2 * j)) - (j == k ? 1.0 : 0.0));
    }
    return q;
}

std::vector<double> quotient_eigenvalues(const CompactCreationSequence& a) {
    const QuotientMatrix q = quotient_matrix(a);
    const int r = q.r;
    // S = D^{-1/2} (D Q) D^{-1/2} with D = diag(a); D Q is the symmetric
    // cell-to-cell edge-count matrix, so S is symmetric and similar to Q.
    std::vector<double> s(q.values.size());
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            const double scale = std::sqrt(static_cast<double>(a.cell(i)) /
                                           static_cast<double>(a.cell(j)));
            s[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r) +
              static_cast<std::size_t>(j - 1)] = q.at(i, j) * scale;
        }
    }
    return jacobi_eigenvalues(std::move(s), r, 1e-10);
}

}  // namespace nsg
