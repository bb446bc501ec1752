#include "nsg/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "nsg/errors.hpp"
#include "nsg/indices_fast.hpp"
#include "nsg/indices_oracle.hpp"
#include "nsg/kernels.hpp"

namespace nsg {

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;  // multiple of bound
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
}

double temperature(const Schedule& schedule, std::int64_t t) {
    const double exponent =
        static_cast<double>(t) / static_cast<double>(schedule.steps - 1);
    return schedule.t0 * std::pow(schedule.t1 / schedule.t0, exponent);
}

bool accept(double delta_e, double temp, double u) {
    if (delta_e < 0.0) return true;
    return u < std::exp(-delta_e / temp);
}

CreationSequence initial_state(int n, Rng& rng) {
    if (n < 2) throw InvalidSequenceError("a creation sequence needs at least 2 vertices");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n - 1; ++i)
        bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng.uniform_index(2));
    bits.back() = 1;
    return CreationSequence::from_bits(std::move(bits));
}

CreationSequence perturb_hamming(const CreationSequence& c, Rng& rng) {
    const int n = c.vertex_count();
    if (n < 3) throw NoNeighborsError("no interior bit to flip for n = " + std::to_string(n));
    const int j = 2 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n - 2)));
    return c.flipped(j);
}

std::vector<int> edge_flip_positions(const CreationSequence& c) {
    const int n = c.vertex_count();
    std::vector<int> positions;
    positions.push_back(2);
    for (int i = 3; i <= n - 2; ++i)
        if (c.bit(i) != c.bit(i - 1) || c.bit(i) != c.bit(i + 1)) positions.push_back(i);
    if (n - 1 > 2) positions.push_back(n - 1);
    return positions;
}

CreationSequence perturb_edge(const CreationSequence& c, Rng& rng) {
    const int n = c.vertex_count();
    if (n < 3) throw NoNeighborsError("no interior bit to flip for n = " + std::to_string(n));
    const auto positions = edge_flip_positions(c);
    const int j = positions[static_cast<std::size_t>(
        rng.uniform_index(static_cast<std::uint64_t>(positions.size())))];
    return c.flipped(j);
}

std::vector<CompactCreationSequence> move_neighbors(const CompactCreationSequence& a) {
    const int r = a.cell_count();
    std::vector<CompactCreationSequence> neighbors;
    std::vector<std::int64_t> raw(a.cells().begin(), a.cells().end());

    // Displace one vertex from cell j to a cell at most two away.
    for (int j = 1; j <= r; ++j) {
        for (int offset : {-2, -1, 1, 2}) {
            const int k = j + offset;
            if (k < 1 || k > r) continue;
            raw[static_cast<std::size_t>(j - 1)] -= 1;
            raw[static_cast<std::size_t>(k - 1)] += 1;
            if (auto candidate = try_normalize(raw)) neighbors.push_back(*std::move(candidate));
            raw[static_cast<std::size_t>(j - 1)] += 1;
            raw[static_cast<std::size_t>(k - 1)] -= 1;
        }
    }

    // Split moves: take two vertices from a cell near either end and open
    // two new size-1 cells at that end.
    std::vector<std::int64_t> grown;
    for (int j : {1, 2}) {
        if (j > r || a.cell(j) < 2) continue;
        grown.assign({1, 1});
        grown.insert(grown.end(), raw.begin(), raw.end());
        grown[static_cast<std::size_t>(j + 1)] -= 2;
        if (auto candidate = try_normalize(grown)) neighbors.push_back(*std::move(candidate));
    }
    for (int j : {r - 1, r}) {
        if (j < 1 || a.cell(j) < 2) continue;
        grown.assign(raw.begin(), raw.end());
        grown[static_cast<std::size_t>(j - 1)] -= 2;
        grown.push_back(1);
        grown.push_back(1);
        if (auto candidate = try_normalize(grown)) neighbors.push_back(*std::move(candidate));
    }
    return neighbors;
}

CompactCreationSequence perturb_move(const CompactCreationSequence& a, Rng& rng) {
    if (a.vertex_count() < 3)
        throw NoNeighborsError("no moves for n = " + std::to_string(a.vertex_count()));
    const auto neighbors = move_neighbors(a);
    if (neighbors.empty()) throw NoNeighborsError("move neighbourhood is empty");
    return neighbors[static_cast<std::size_t>(
        rng.uniform_index(static_cast<std::uint64_t>(neighbors.size())))];
}

SpectralEnergy::SpectralEnergy(const SimpleGraph& target)
    : target_spectrum_(oracle_spectrum(target)) {}

double SpectralEnergy::operator()(const CompactCreationSequence& a) {
    return spectral_distance(nsg_spectrum(a), target_spectrum_);
}

WalkEnergy::WalkEnergy(const SimpleGraph& target) : target_walks_(scaled_walk_matrix(target)) {}

double WalkEnergy::operator()(const CompactCreationSequence& a) {
    const int n = a.vertex_count();
    const int r = a.cell_count();
    if (n != target_walks_.vertex_count())
        throw SizeMismatchError("candidate has " + std::to_string(n) + " vertices, target " +
                                std::to_string(target_walks_.vertex_count()));
    const QuotientMatrix q = quotient_matrix(a);
    const double inv_delta = 1.0 / static_cast<double>(n - 1);
    cell_walk_.assign(static_cast<std::size_t>(r), 1.0);
    next_.resize(static_cast<std::size_t>(r));
    // Walk vectors are cell-constant, so the Frobenius difference against
    // the target reduces to per-cell segments of each target column.
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* col = target_walks_.column(i).data();
        std::size_t offset = 0;
        for (int c = 1; c <= r; ++c) {
            const std::size_t size = static_cast<std::size_t>(a.cell(c));
            acc += kernels::sum_sq_diff_const(col + offset, size,
                                              cell_walk_[static_cast<std::size_t>(c - 1)]);
            offset += size;
        }
        if (i + 1 < n) {
            for (int row = 0; row < r; ++row)
                next_[static_cast<std::size_t>(row)] =
                    kernels::dot(q.values.data() + static_cast<std::size_t>(row) *
                                                       static_cast<std::size_t>(r),
                                 cell_walk_.data(), static_cast<std::size_t>(r)) *
                    inv_delta;
            cell_walk_.swap(next_);
        }
    }
    return std::sqrt(acc);
}

namespace {

struct State {
    CreationSequence code;
    CompactCreationSequence cells;
    double energy = 0.0;
};

}  // namespace

AnnealResult anneal(const SimpleGraph& target, const AnnealConfig& config) {
    const int n = target.vertex_count();
    if (n < 3)
        throw NoNeighborsError("annealing needs at least 3 vertices, got " + std::to_string(n));
    if (config.schedule.steps < 2 || config.schedule.t0 <= config.schedule.t1 ||
        config.schedule.t1 <= 0.0)
        throw Error("schedule needs t0 > t1 > 0 and at least 2 steps");

    std::optional<WalkEnergy> walk_energy;
    std::optional<SpectralEnergy> spectral_energy;
    if (config.metric == Metric::walk)
        walk_energy.emplace(target);
    else
        spectral_energy.emplace(target);
    auto energy = [&](const CompactCreationSequence& a) {
        return walk_energy ? (*walk_energy)(a) : (*spectral_energy)(a);
    };

    Rng rng(config.seed);
    CreationSequence start_code = initial_state(n, rng);
    CompactCreationSequence start_cells = compact_from_full(start_code);
    State current{std::move(start_code), std::move(start_cells), 0.0};
    current.energy = energy(current.cells);

    AnnealResult result{current.cells, current.energy, current.cells, current.energy, {}};

    const std::int64_t steps = config.schedule.steps;
    const std::int64_t window = config.window > 0 ? config.window : std::max<std::int64_t>(steps / 100, 1);
    std::int64_t window_accepted = 0;
    std::int64_t window_improved = 0;
    std::int64_t window_count = 0;

    State candidate = current;
    for (std::int64_t t = 0; t < steps; ++t) {
        const double temp = temperature(config.schedule, t);
        switch (config.scheme) {
            case Scheme::hamming:
                candidate.code = perturb_hamming(current.code, rng);
                candidate.cells = compact_from_full(candidate.code);
                break;
            case Scheme::edge:
                candidate.code = perturb_edge(current.code, rng);
                candidate.cells = compact_from_full(candidate.code);
                break;
            case Scheme::move:
                candidate.cells = perturb_move(current.cells, rng);
                candidate.code = full_from_compact(candidate.cells);
                break;
        }
        candidate.energy = energy(candidate.cells);
        const double delta_e = candidate.energy - current.energy;
        if (delta_e < 0.0) ++window_improved;
        if (accept(delta_e, temp, rng.uniform_real())) {
            current = candidate;
            ++window_accepted;
            if (current.energy < result.best_energy) {
                result.best = current.cells;
                result.best_energy = current.energy;
            }
        }
        ++window_count;
        if (window_count == window || t == steps - 1) {
            result.timeline.push_back({t + 1, temp, current.energy, result.best_energy,
                                       static_cast<double>(window_accepted) /
                                           static_cast<double>(window_count),
                                       static_cast<double>(window_improved) /
                                           static_cast<double>(window_count)});
            window_accepted = 0;
            window_improved = 0;
            window_count = 0;
        }
    }

    result.final_state = current.cells;
    result.final_energy = current.energy;
    return result;
}

}  // namespace nsg
