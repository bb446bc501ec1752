#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nsg/creation.hpp"
#include "nsg/distance.hpp"
#include "nsg/graph.hpp"

namespace nsg {

// Uniform source with an explicit draw algorithm on top of std::mt19937_64,
// so identical seeds reproduce bit-for-bit across standard libraries
// (std::uniform_*_distribution leaves the algorithm implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t uniform_index(std::uint64_t bound);

    // [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

struct Schedule {
    double t0 = 100.0;
    double t1 = 1e-7;
    std::int64_t steps = 1'000'000;
};

// Geometric schedule T(t) = T0 (T1/T0)^{t/(N-1)}: log-linear in the step,
// hitting both endpoints exactly.
double temperature(const Schedule& schedule, std::int64_t t);

// Metropolis rule: always accept an energy drop, otherwise accept when
// u < exp(-delta_e / temp). Ties (delta_e = 0) are always accepted.
bool accept(double delta_e, double temp, double u);

enum class Scheme { hamming, edge, move };
enum class Metric { walk, spectral };

struct AnnealConfig {
    Scheme scheme = Scheme::hamming;
    Metric metric = Metric::spectral;
    Schedule schedule;
    std::uint64_t seed = 1;
    std::int64_t window = 0;  // telemetry window; 0 picks steps/100
};

struct TimelineRecord {
    std::int64_t step = 0;  // 1-based index of the last step in the window
    double temperature = 0.0;
    double current_energy = 0.0;
    double best_energy = 0.0;
    double acceptance_rate = 0.0;   // accepted moves / window size
    double improvement_rate = 0.0;  // moves with delta_e < 0 / window size
};

struct AnnealResult {
    CompactCreationSequence best;
    double best_energy = 0.0;
    CompactCreationSequence final_state;  // where the chain ended
    double final_energy = 0.0;
    std::vector<TimelineRecord> timeline;
};

// Uniformly random interior bits; the endpoints are fixed by the code.
CreationSequence initial_state(int n, Rng& rng);

// One bit flip at a uniform interior position (Hamming distance one).
CreationSequence perturb_hamming(const CreationSequence& c, Rng& rng);

// Interior positions the `edge` scheme may flip: both ends of the interior
// plus any position differing from a neighbour bit.
std::vector<int> edge_flip_positions(const CreationSequence& c);
CreationSequence perturb_edge(const CreationSequence& c, Rng& rng);

// Every state reachable by one `move` perturbation: one vertex displaced to
// a cell at most two away, plus the end splits that carve off two new
// single-vertex cells. Candidates whose repaired code would be
// disconnected are excluded. Order is deterministic.
std::vector<CompactCreationSequence> move_neighbors(const CompactCreationSequence& a);
CompactCreationSequence perturb_move(const CompactCreationSequence& a, Rng& rng);

// Energy models: distance from a fixed target graph, evaluated through the
// cell-space fast paths. Instances carry scratch buffers, so share one per
// thread, not across threads.
class SpectralEnergy {
public:
    explicit SpectralEnergy(const SimpleGraph& target);
    double operator()(const CompactCreationSequence& a);

private:
    std::vector<double> target_spectrum_;
};

class WalkEnergy {
public:
    explicit WalkEnergy(const SimpleGraph& target);  // NoEdgesError on edgeless target
    double operator()(const CompactCreationSequence& a);

private:
    ScaledWalkMatrix target_walks_;
    std::vector<double> cell_walk_, next_;
};

AnnealResult anneal(const SimpleGraph& target, const AnnealConfig& config);

}  // namespace nsg
