#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "nsg/anneal.hpp"
#include "nsg/creation.hpp"
#include "nsg/distance.hpp"
#include "nsg/errors.hpp"

using namespace nsg;
using testutil::near;

namespace {

CreationSequence bits(std::string_view full) {
    return CreationSequence::from_string(full, true);
}

CompactCreationSequence seq(std::string_view csv) {
    return CompactCreationSequence::from_string(csv);
}

std::set<std::string> neighbor_keys_hamming(const CreationSequence& c) {
    std::set<std::string> keys;
    for (int j = 2; j <= c.vertex_count() - 1; ++j) keys.insert(c.flipped(j).to_string(true));
    return keys;
}

std::set<std::string> neighbor_keys_edge(const CreationSequence& c) {
    std::set<std::string> keys;
    for (int j : edge_flip_positions(c)) keys.insert(c.flipped(j).to_string(true));
    return keys;
}

}  // namespace

TEST_CASE("geometric schedule hits both endpoints") {
    const Schedule s{100.0, 1e-7, 1'000'000};
    CHECK(temperature(s, 0) == doctest::Approx(100.0));
    CHECK(temperature(s, s.steps - 1) == doctest::Approx(1e-7));
    // halfway in step index = halfway in log space, ~3.162e-3 here
    CHECK(near(temperature(s, (s.steps - 1) / 2), 3.162e-3, 0.5e-6));

    const Schedule odd{100.0, 1e-7, 1'000'001};  // exact midpoint step exists
    CHECK(temperature(odd, (odd.steps - 1) / 2) ==
          doctest::Approx(std::pow(10.0, -2.5)).epsilon(1e-12));
}

TEST_CASE("acceptance rule") {
    CHECK(accept(-1.0, 1.0, 0.999999));
    CHECK(accept(-1e-12, 1e-30, 0.999999));
    CHECK(accept(0.0, 1.0, 0.5));      // exp(0) = 1 > u
    CHECK(!accept(1.0, 0.1, 0.5));     // exp(-10) ~ 4.5e-5
    for (double u : {1e-300, 1e-100, 1e-10, 0.5}) CHECK(!accept(1.0, 1e-12, u));
}

TEST_CASE("rng determinism and range") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next() == b.next());
        const double ua = a.uniform_real();
        const double ub = b.uniform_real();
        CHECK(ua == ub);
        CHECK(ua >= 0.0);
        CHECK(ua < 1.0);
        CHECK(a.uniform_index(7) == b.uniform_index(7));
    }
}

TEST_CASE("initial state") {
    Rng rng(1);
    CHECK(compact_from_full(initial_state(2, rng)) == seq("1,1"));
    Rng r1(5), r2(5);
    CHECK(initial_state(9, r1) == initial_state(9, r2));
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = initial_state(10, rng);
        CHECK(c.bit(1) == 0);
        CHECK(c.bit(10) == 1);
        CHECK(adjacency_from_creation(c).connected());
    }
}

TEST_CASE("hamming perturbation flips one interior bit") {
    const auto k5 = bits("01111");
    CHECK(k5.flipped(2) == bits("00111"));
    CHECK(k5.flipped(3) == bits("01011"));

    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = testutil::random_creation(8, rng);
        const auto next = perturb_hamming(c, rng);
        int differing = 0;
        for (int i = 1; i <= 8; ++i) differing += c.bit(i) != next.bit(i);
        CHECK(differing == 1);
        CHECK(next.bit(1) == 0);
        CHECK(next.bit(8) == 1);
    }

    Rng r(3);
    CHECK_THROWS_AS(perturb_hamming(bits("01"), r), NoNeighborsError);
    CHECK_THROWS_AS(perturb_edge(bits("01"), r), NoNeighborsError);
}

TEST_CASE("edge scheme flip positions") {
    CHECK(edge_flip_positions(bits("00111")) == std::vector<int>{2, 3, 4});
    CHECK(edge_flip_positions(bits("01111")) == std::vector<int>{2, 4});
    CHECK(edge_flip_positions(bits("001")) == std::vector<int>{2});
    // every flip position set contains both interior ends
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = testutil::random_creation(10, rng);
        const auto positions = edge_flip_positions(c);
        CHECK(std::find(positions.begin(), positions.end(), 2) != positions.end());
        CHECK(std::find(positions.begin(), positions.end(), 9) != positions.end());
    }
}

TEST_CASE("edge neighbourhood is a subset of the hamming neighbourhood") {
    Rng rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        const auto c = testutil::random_creation(
            3 + static_cast<int>(rng.uniform_index(10)), rng);
        const auto hamming = neighbor_keys_hamming(c);
        for (const auto& key : neighbor_keys_edge(c)) CHECK(hamming.count(key) == 1);
    }
}

TEST_CASE("move neighbourhood of K5") {
    const auto neighbors = move_neighbors(seq("1,4"));
    std::set<std::string> keys;
    for (const auto& a : neighbors) keys.insert(a.to_string());
    // vertex moved 2->1, the self-repairing move 1->2, and the two splits
    CHECK(keys == std::set<std::string>{"1,4", "2,3", "1,1,1,2", "1,2,1,1"});
}

TEST_CASE("move excludes candidates that lose the dominating tail") {
    // moving the single vertex of the last cell leaves the code ending in 0
    const auto neighbors = move_neighbors(seq("1,1,1,1"));
    for (const auto& a : neighbors) {
        CHECK(a.vertex_count() == 4);
        CHECK(full_from_compact(a).bit(4) == 1);
    }
    const std::vector<std::int64_t> raw{1, 2, 1, 0};
    CHECK(!try_normalize(raw).has_value());
}

TEST_CASE("all schemes produce valid connected NSGs of the same order") {
    Rng rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_index(10));
        const auto c = testutil::random_creation(n, rng);
        for (const auto& key : neighbor_keys_hamming(c)) {
            const auto g = adjacency_from_creation(CreationSequence::from_string(key, true));
            CHECK(g.vertex_count() == n);
            CHECK(g.connected());
            CHECK(testutil::is_nsg_by_brute_force(g));
        }
        for (const auto& a : move_neighbors(compact_from_full(c))) {
            CHECK(a.vertex_count() == n);
            const auto g = realize(a);
            CHECK(g.connected());
            CHECK(testutil::is_nsg_by_brute_force(g));
        }
    }
}

TEST_CASE("hamming flips reach any state within n-2 steps") {
    // flip graph over interior bits for n = 7: breadth-first from each state
    const int n = 7;
    const int interior = n - 2;
    const int states = 1 << interior;
    std::vector<int> depth(static_cast<std::size_t>(states));
    for (int start = 0; start < states; ++start) {
        std::fill(depth.begin(), depth.end(), -1);
        depth[static_cast<std::size_t>(start)] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        int seen = 1;
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int b = 0; b < interior; ++b) {
                const int w = u ^ (1 << b);
                if (depth[static_cast<std::size_t>(w)] < 0) {
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    CHECK(depth[static_cast<std::size_t>(w)] <= n - 2);
                    frontier.push(w);
                    ++seen;
                }
            }
        }
        CHECK(seen == states);
    }
}

TEST_CASE("energy models match the module-level distances") {
    Rng rng(7);
    const auto target = realize(seq("1,2,1,1,5,2"));
    WalkEnergy walk(target);
    SpectralEnergy spectral(target);
    CHECK_THROWS_AS(walk(seq("1,4")), SizeMismatchError);
    CHECK_THROWS_AS(spectral(seq("1,4")), SizeMismatchError);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = testutil::random_compact(12, 12, rng);
        CHECK(near(walk(a),
                   walk_distance(scaled_walk_matrix(target), nsg_walk_vectors(a)), 1e-12));
        CHECK(near(spectral(a), spectral_distance(target, realize(a)), 1e-7));
    }
}

TEST_CASE("annealing is deterministic and tracks the best state") {
    const auto target = realize(seq("1,1,1,1,7,1"));
    AnnealConfig config;
    config.scheme = Scheme::move;
    config.metric = Metric::spectral;
    config.schedule = {10.0, 1e-4, 3000};
    config.seed = 12345;
    const auto r1 = anneal(target, config);
    const auto r2 = anneal(target, config);
    CHECK(r1.best == r2.best);
    CHECK(r1.best_energy == r2.best_energy);
    CHECK(r1.final_state == r2.final_state);
    REQUIRE(r1.timeline.size() == r2.timeline.size());
    for (std::size_t i = 0; i < r1.timeline.size(); ++i) {
        CHECK(r1.timeline[i].step == r2.timeline[i].step);
        CHECK(r1.timeline[i].current_energy == r2.timeline[i].current_energy);
        CHECK(r1.timeline[i].best_energy == r2.timeline[i].best_energy);
        CHECK(r1.timeline[i].acceptance_rate == r2.timeline[i].acceptance_rate);
    }
    // best-energy series never rises and rates stay in [0, 1]
    double last = std::numeric_limits<double>::infinity();
    std::int64_t last_step = 0;
    for (const auto& rec : r1.timeline) {
        CHECK(rec.best_energy <= last);
        last = rec.best_energy;
        CHECK(rec.step > last_step);
        last_step = rec.step;
        CHECK(rec.acceptance_rate >= 0.0);
        CHECK(rec.acceptance_rate <= 1.0);
        CHECK(rec.improvement_rate >= 0.0);
        CHECK(rec.improvement_rate <= 1.0);
    }
}

TEST_CASE("early windows accept nearly everything at T0 = 100") {
    const auto target = realize(seq("1,1,1,1,7,1"));
    AnnealConfig config;
    config.scheme = Scheme::hamming;
    config.metric = Metric::spectral;
    config.schedule = {100.0, 1e-7, 20'000};
    config.seed = 4;
    const auto result = anneal(target, config);
    REQUIRE(!result.timeline.empty());
    // the chain starts as an unbiased random walk: acceptance ~1, about
    // half of the proposed moves lower the energy
    CHECK(result.timeline.front().acceptance_rate >= 0.95);
    CHECK(result.timeline.front().improvement_rate >= 0.25);
    CHECK(result.timeline.front().improvement_rate <= 0.75);
    // and freezes out by the end
    CHECK(result.timeline.back().acceptance_rate <= 0.2);
}

TEST_CASE("annealing finds K5 exactly") {
    SimpleGraph k5(5);
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) k5.add_edge(u, v);
    for (Scheme scheme : {Scheme::hamming, Scheme::edge, Scheme::move}) {
        AnnealConfig config;
        config.scheme = scheme;
        config.metric = Metric::spectral;
        config.schedule = {100.0, 1e-7, 2000};
        config.seed = 7;
        const auto result = anneal(k5, config);
        CHECK(result.best == seq("1,4"));
        CHECK(result.best_energy <= 1e-6);
    }
}

TEST_CASE("annealing rejects bad input") {
    SimpleGraph k2(2);
    k2.add_edge(1, 2);
    AnnealConfig config;
    CHECK_THROWS_AS(anneal(k2, config), NoNeighborsError);

    SimpleGraph edgeless(4);
    config.metric = Metric::walk;
    CHECK_THROWS_AS(anneal(edgeless, config), NoEdgesError);

    SimpleGraph p3(3);
    p3.add_edge(1, 2);
    p3.add_edge(2, 3);
    config.metric = Metric::spectral;
    config.schedule = {1e-7, 100.0, 1000};  // inverted
    CHECK_THROWS_AS(anneal(p3, config), Error);
}
