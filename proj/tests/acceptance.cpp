// Acceptance suite: one self-contained check per release criterion, each
// printing a PASS/FAIL line. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "nsg/anneal.hpp"
#include "nsg/creation.hpp"
#include "nsg/distance.hpp"
#include "nsg/edgelist.hpp"
#include "nsg/graph.hpp"
#include "nsg/indices_fast.hpp"
#include "nsg/indices_oracle.hpp"
#include "nsg/report.hpp"

using namespace nsg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds = -1.0) {
    std::string line = ok ? "[PASS]" : "[FAIL]";
    line += " criterion " + std::to_string(criterion) + ": " + what;
    if (seconds >= 0.0) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), " (%.2fs)", seconds);
        line += buffer;
    }
    std::cout << line << '\n';
    if (!ok) ++failures;
}

bool sig4_match(double got, double printed) {
    const double tol = 0.5 * std::pow(10.0, std::floor(std::log10(std::abs(printed))) - 3);
    return std::abs(got - printed) <= tol;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- criterion 1: published index values at printed precision ----
void criterion_golden_indices() {
    const auto start = Clock::now();
    struct Row {
        const char* a;
        std::int64_t m;
        double h, r;
        std::int64_t w, sz, copi_v;
        double ee, ge, re;
        bool all;  // some rows only publish the first three values
    };
    const Row rows[] = {
        {"1,1,1,1,7,1", 15, 3.907, 4.087, 117, 121, 106, 63.36, 11.09, 1.021, true},
        {"1,2,1,1,5,2", 28, 4.807, 5.010, 0, 0, 0, 0, 0, 0, false},
        {"1,2,2,1,7,1", 21, 4.392, 0, 161, 175, 154, 136.9, 14.08, 1.019, true},
    };
    bool ok = true;
    for (const Row& row : rows) {
        const auto a = CompactCreationSequence::from_string(row.a);
        const PrefixSums ps(a);
        ok = ok && edge_count(a, ps) == row.m;
        ok = ok && sig4_match(entropy(a, ps), row.h);
        if (row.r != 0) ok = ok && sig4_match(randic(a, ps), row.r);
        if (row.all) {
            const auto eigs = quotient_eigenvalues(a);
            ok = ok && wiener(a, ps) == row.w;
            ok = ok && szeged(a, ps) == row.sz;
            ok = ok && copi(a, ps) == row.copi_v;
            ok = ok && sig4_match(estrada(a, ps, eigs), row.ee);
            ok = ok && sig4_match(gutman_energy(a, ps, eigs), row.ge);
            ok = ok && sig4_match(resolvent_energy(a, ps, eigs), row.re);
        }
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 0.1;  // stated budget: milliseconds
    report(1, ok, "published index values reproduce at 4 significant figures", elapsed);
}

// ---- criterion 2: fast indices equal the oracle on 1000 random codes ----
void criterion_oracle_equivalence() {
    const auto start = Clock::now();
    Rng rng(20240601);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const auto a = testutil::random_compact(2, 40, rng);
        const auto g = realize(a);
        const PrefixSums ps(a);
        const auto eigs = quotient_eigenvalues(a);
        ok = ok && edge_count(a, ps) == g.edge_count();
        ok = ok && wiener(a, ps) == oracle_wiener(g);
        ok = ok && szeged(a, ps) == oracle_szeged(g);
        ok = ok && copi(a, ps) == oracle_copi(g);
        ok = ok && std::abs(entropy(a, ps) - oracle_entropy(g)) <= 1e-8;
        ok = ok && std::abs(randic(a, ps) - oracle_randic(g)) <= 1e-8;
        const double ee = oracle_estrada(g);
        const double ge = oracle_gutman(g);
        const double re = oracle_resolvent(g);
        ok = ok && std::abs(estrada(a, ps, eigs) - ee) <= 1e-6 * std::max(1.0, std::abs(ee));
        ok = ok && std::abs(gutman_energy(a, ps, eigs) - ge) <= 1e-6 * std::max(1.0, std::abs(ge));
        ok = ok && std::abs(resolvent_energy(a, ps, eigs) - re) <=
                       1e-6 * std::max(1.0, std::abs(re));
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 60.0;
    report(2, ok, "fast indices equal the oracle on 1000 random codes, n in 2..40", elapsed);
}

// ---- criterion 3: spectrum assembly from the quotient matrix ----
void criterion_spectrum_assembly() {
    const auto start = Clock::now();
    Rng rng(20240602);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const auto a = testutil::random_compact(2, 40, rng);
        const auto fast = nsg_spectrum(a);
        const auto slow = oracle_spectrum(realize(a));
        ok = ok && fast.size() == static_cast<std::size_t>(a.vertex_count());
        ok = ok && fast.size() == slow.size();
        double sum = 0.0, sum_sq = 0.0;
        for (std::size_t i = 0; ok && i < fast.size(); ++i) {
            ok = std::abs(fast[i] - slow[i]) <= 1e-8;
            sum += fast[i];
            sum_sq += fast[i] * fast[i];
        }
        ok = ok && std::abs(sum) <= 1e-8;
        ok = ok && std::abs(sum_sq - 2.0 * static_cast<double>(edge_count(a))) <= 1e-6;
    }
    report(3, ok, "assembled NSG spectrum multiset-matches the adjacency spectrum",
           seconds_since(start));
}

// ---- criterion 4: perturbation validity, containment, reachability ----
void criterion_perturbations() {
    const auto start = Clock::now();
    bool ok = true;
    for (int n = 3; n <= 10 && ok; ++n) {
        const int interior = n - 2;
        for (int code = 0; code < (1 << interior) && ok; ++code) {
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
            for (int b = 0; b < interior; ++b)
                bits[static_cast<std::size_t>(b + 1)] =
                    static_cast<std::uint8_t>((code >> b) & 1);
            bits.back() = 1;
            const auto c = CreationSequence::from_bits(std::move(bits));

            std::set<std::string> hamming_set;
            for (int j = 2; j <= n - 1; ++j) {
                const auto neighbor = c.flipped(j);
                const auto g = adjacency_from_creation(neighbor);
                ok = ok && g.vertex_count() == n && g.connected() &&
                     testutil::is_nsg_by_brute_force(g);
                hamming_set.insert(neighbor.to_string(true));
            }
            for (int j : edge_flip_positions(c)) {
                const auto neighbor = c.flipped(j);
                ok = ok && hamming_set.count(neighbor.to_string(true)) == 1;
            }
            for (const auto& a : move_neighbors(compact_from_full(c))) {
                ok = ok && a.vertex_count() == n;
                const auto g = realize(a);
                ok = ok && g.connected() && testutil::is_nsg_by_brute_force(g);
            }
        }
        // flip-graph diameter over the interior bits is at most n - 2
        const int states = 1 << interior;
        std::vector<int> depth(static_cast<std::size_t>(states));
        for (int s = 0; s < states && ok; ++s) {
            std::fill(depth.begin(), depth.end(), -1);
            depth[static_cast<std::size_t>(s)] = 0;
            std::queue<int> frontier;
            frontier.push(s);
            while (!frontier.empty()) {
                const int u = frontier.front();
                frontier.pop();
                for (int b = 0; b < interior; ++b) {
                    const int w = u ^ (1 << b);
                    if (depth[static_cast<std::size_t>(w)] < 0) {
                        depth[static_cast<std::size_t>(w)] =
                            depth[static_cast<std::size_t>(u)] + 1;
                        frontier.push(w);
                    }
                }
            }
            for (int d : depth) ok = ok && d >= 0 && d <= n - 2;
        }
    }
    report(4, ok,
           "every neighbour over n <= 10 is a valid connected NSG; edge set within hamming "
           "set; flip diameter <= n-2",
           seconds_since(start));
}

// ---- criterion 5: spectral self-approximation converges ----
void criterion_self_approximation() {
    const auto start = Clock::now();
    const auto target = realize(CompactCreationSequence::from_string("1,1,1,1,7,1"));
    bool ok = true;
    for (Scheme scheme : {Scheme::hamming, Scheme::edge, Scheme::move}) {
        int hits = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            AnnealConfig config;
            config.scheme = scheme;
            config.metric = Metric::spectral;
            config.schedule = {100.0, 1e-7, 100'000};
            config.seed = seed;
            if (anneal(target, config).best_energy <= 1e-6) ++hits;
        }
        ok = ok && hits >= 9;
    }
    report(5, ok, "annealing toward an NSG target reaches energy <= 1e-6 in >= 9/10 runs",
           seconds_since(start));
}

// ---- criterion 6: distance function properties ----
void criterion_distances() {
    const auto start = Clock::now();
    bool ok = true;
    const auto g = realize(CompactCreationSequence::from_string("1,2,2,1,7,1"));
    ok = ok && walk_distance(g, g) == 0.0;
    ok = ok && spectral_distance(g, g) == 0.0;

    Rng rng(20240606);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const auto a = testutil::random_compact(3, 20, rng);
        const auto base = realize(a);
        const int n = base.vertex_count();
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(i + 1)));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        SimpleGraph shuffled(n);
        for (const Edge& e : base.edges())
            shuffled.add_edge(perm[static_cast<std::size_t>(e.u - 1)],
                              perm[static_cast<std::size_t>(e.v - 1)]);
        ok = ok && spectral_distance(base, shuffled) <= 1e-8;
    }

    for (int trial = 0; trial < 500 && ok; ++trial) {
        const auto a = testutil::random_compact(2, 40, rng);
        const auto fast = nsg_walk_vectors(a);
        const auto slow = scaled_walk_matrix(realize(a));
        double max_err = 0.0;
        for (int i = 0; i < a.vertex_count(); ++i)
            for (int v = 1; v <= a.vertex_count(); ++v)
                max_err = std::max(max_err, std::abs(fast.at(v, i) - slow.at(v, i)));
        ok = ok && max_err <= 1e-9;
    }
    report(6, ok,
           "distances vanish on identical input; spectral distance is relabel-invariant; "
           "cell-space walk vectors match the oracle on 500 codes",
           seconds_since(start));
}

// ---- criterion 7: full pipeline on externally supplied network data ----
void criterion_external_pipeline() {
    const char* path = std::getenv("NSG_GEANT_EDGELIST");
    if (!path) {
        std::cout << "[SKIP] criterion 7: reference network data is not bundled; "
                     "set NSG_GEANT_EDGELIST to an edge-list file to run the full "
                     "1e6-step pipeline under its 30-minute budget\n";
        return;
    }
    const auto start = Clock::now();
    const auto parsed = read_edge_list_file(path);
    AnnealConfig config;
    config.scheme = Scheme::hamming;
    config.metric = Metric::spectral;
    config.schedule = {100.0, 1e-7, 1'000'000};
    config.seed = 1;
    const auto result = anneal(parsed.graph, config);
    const double elapsed = seconds_since(start);
    const bool ok = elapsed < 1800.0 && result.best_energy >= 0.0;
    report(7, ok, "1e6-step pipeline on supplied network data inside 30 minutes", elapsed);
}

// ---- criterion 8: byte-identical outputs for identical (input, config, seed) ----
std::pair<std::string, std::string> run_pipeline(const std::string& text) {
    const auto parsed = parse_edge_list(text);
    AnnealConfig config;
    config.scheme = Scheme::move;
    config.metric = Metric::spectral;
    config.schedule = {100.0, 1e-7, 10'000};
    config.seed = 99;
    const auto start = Clock::now();
    const auto result = anneal(parsed.graph, config);

    RunReport rep;
    rep.input = "fixture";
    rep.digest = graph_digest(parsed.graph);
    rep.n = parsed.graph.vertex_count();
    rep.config = config;
    rep.best_compact = result.best.to_string();
    rep.best_energy = result.best_energy;
    rep.final_compact = result.final_state.to_string();
    rep.final_energy = result.final_energy;
    rep.input_indices = oracle_index_values(parsed.graph);
    rep.nsg_indices = fast_index_values(result.best);
    rep.wall_seconds = seconds_since(start);  // differs between runs on purpose

    std::ostringstream report_out, timeline_out;
    write_report_csv(report_out, rep);
    write_timeline_csv(timeline_out, result.timeline);
    return {report_out.str(), timeline_out.str()};
}

std::string strip_last_column(const std::string& csv) {
    std::string out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        const auto comma = line.rfind(',');
        out += line.substr(0, comma);
        out += '\n';
    }
    return out;
}

void criterion_determinism() {
    const auto start = Clock::now();
    // a 12-vertex target graph that is not itself an NSG
    const std::string text = "1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n11 12\n"
                             "12 1\n1 7\n";
    const auto first = run_pipeline(text);
    const auto second = run_pipeline(text);
    const bool ok = strip_last_column(first.first) == strip_last_column(second.first) &&
                    first.second == second.second;
    report(8, ok, "re-running with an identical seed reproduces report and timeline CSVs",
           seconds_since(start));
}

}  // namespace

int main() {
    criterion_golden_indices();
    criterion_oracle_equivalence();
    criterion_spectrum_assembly();
    criterion_perturbations();
    criterion_self_approximation();
    criterion_distances();
    criterion_external_pipeline();
    criterion_determinism();
    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures;
}
