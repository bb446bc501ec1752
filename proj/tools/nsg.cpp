// Command-line front end: approximate a graph by a nested split graph via
// simulated annealing, compute graph indices, measure graph distances, and
// validate creation codes.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nsg/anneal.hpp"
#include "nsg/creation.hpp"
#include "nsg/distance.hpp"
#include "nsg/edgelist.hpp"
#include "nsg/errors.hpp"
#include "nsg/graph.hpp"
#include "nsg/indices_fast.hpp"
#include "nsg/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

void print_warnings(const nsg::ParsedGraph& parsed) {
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
}

void print_index_table(std::ostream& out, const nsg::IndexValues& v, bool csv) {
    auto int_cell = [](const std::optional<std::int64_t>& x) {
        return x ? std::to_string(*x) : std::string("na");
    };
    auto real_cell = [csv](const std::optional<double>& x) {
        if (!x) return std::string("na");
        return csv ? nsg::format_full(*x) : nsg::format_significant(*x, 4);
    };
    if (csv) {
        out << "edges,entropy,randic,wiener,szeged,copi,estrada,gutman,resolvent\n";
        out << int_cell(v.edges) << ',' << real_cell(v.entropy) << ',' << real_cell(v.randic)
            << ',' << int_cell(v.wiener) << ',' << int_cell(v.szeged) << ','
            << int_cell(v.copi) << ',' << real_cell(v.estrada) << ',' << real_cell(v.gutman)
            << ',' << real_cell(v.resolvent) << '\n';
        return;
    }
    out << "edges      " << int_cell(v.edges) << '\n'
        << "entropy    " << real_cell(v.entropy) << '\n'
        << "randic     " << real_cell(v.randic) << '\n'
        << "wiener     " << int_cell(v.wiener) << '\n'
        << "szeged     " << int_cell(v.szeged) << '\n'
        << "copi       " << int_cell(v.copi) << '\n'
        << "estrada    " << real_cell(v.estrada) << '\n'
        << "gutman     " << real_cell(v.gutman) << '\n'
        << "resolvent  " << real_cell(v.resolvent) << '\n';
}

struct ApproximateArgs {
    std::string input;
    std::string metric = "spectral";
    std::string scheme = "hamming";
    double t0 = 100.0;
    double t1 = 1e-7;
    std::int64_t steps = 1'000'000;
    std::int64_t window = 0;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> seeds;
    std::string out_prefix = "nsg_run";
};

nsg::RunReport run_one(const nsg::ParsedGraph& parsed, const ApproximateArgs& args,
                       std::uint64_t seed, std::vector<nsg::TimelineRecord>& timeline) {
    nsg::AnnealConfig config;
    config.metric = nsg::metric_from_name(args.metric);
    config.scheme = nsg::scheme_from_name(args.scheme);
    config.schedule = {args.t0, args.t1, args.steps};
    config.seed = seed;
    config.window = args.window;

    const auto start = Clock::now();
    nsg::AnnealResult result = nsg::anneal(parsed.graph, config);
    const double wall = std::chrono::duration<double>(Clock::now() - start).count();

    nsg::RunReport report;
    report.input = args.input;
    report.digest = nsg::graph_digest(parsed.graph);
    report.n = parsed.graph.vertex_count();
    report.config = config;
    report.best_compact = result.best.to_string();
    report.best_energy = result.best_energy;
    report.final_compact = result.final_state.to_string();
    report.final_energy = result.final_energy;
    report.input_indices = nsg::oracle_index_values(parsed.graph);
    report.nsg_indices = nsg::fast_index_values(result.best);
    report.wall_seconds = wall;
    timeline = std::move(result.timeline);
    return report;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw nsg::Error("cannot write \"" + path + "\"");
    out << content;
}

int cmd_approximate(const ApproximateArgs& args) {
    const auto parsed = nsg::read_edge_list_file(args.input);
    print_warnings(parsed);

    std::vector<std::uint64_t> seeds = args.seeds;
    if (seeds.empty()) seeds.push_back(args.seed);

    struct RunOutput {
        nsg::RunReport report;
        std::vector<nsg::TimelineRecord> timeline;
    };
    std::vector<std::optional<RunOutput>> outputs(seeds.size());
    std::vector<std::exception_ptr> errors(seeds.size());

    // Independent chains; the shared target graph is immutable.
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        workers.emplace_back([&, i] {
            try {
                std::vector<nsg::TimelineRecord> timeline;
                nsg::RunReport report = run_one(parsed, args, seeds[i], timeline);
                outputs[i] = RunOutput{std::move(report), std::move(timeline)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);

    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const RunOutput& run = *outputs[i];
        const std::string stem = seeds.size() == 1
                                     ? args.out_prefix
                                     : args.out_prefix + "-seed" + std::to_string(seeds[i]);
        std::ostringstream report_out, timeline_out;
        nsg::write_report_csv(report_out, run.report);
        nsg::write_timeline_csv(timeline_out, run.timeline);
        write_file(stem + ".report.csv", report_out.str());
        write_file(stem + ".timeline.csv", timeline_out.str());
        std::cout << "seed " << seeds[i] << ": best a = [" << run.report.best_compact
                  << "], energy = " << nsg::format_significant(run.report.best_energy, 6)
                  << ", wall = " << nsg::format_significant(run.report.wall_seconds, 3)
                  << "s -> " << stem << ".report.csv\n";
    }
    return 0;
}

int cmd_indices(const std::string& compact, const std::string& graph_path,
                const std::string& mode, bool csv) {
    nsg::IndexValues values;
    if (!compact.empty()) {
        const auto a = nsg::CompactCreationSequence::from_string(compact);
        values = mode == "oracle" ? nsg::oracle_index_values(nsg::realize(a))
                                  : nsg::fast_index_values(a);
    } else {
        const auto parsed = nsg::read_edge_list_file(graph_path);
        print_warnings(parsed);
        values = nsg::oracle_index_values(parsed.graph);
        if (!values.wiener)
            std::cerr << "warning: graph is disconnected; distance-based indices are "
                         "unavailable\n";
    }
    print_index_table(std::cout, values, csv);
    return 0;
}

int cmd_distance(const std::string& path1, const std::string& path2,
                 const std::string& metric) {
    const auto g1 = nsg::read_edge_list_file(path1);
    const auto g2 = nsg::read_edge_list_file(path2);
    print_warnings(g1);
    print_warnings(g2);
    const double d = metric == "walk" ? nsg::walk_distance(g1.graph, g2.graph)
                                      : nsg::spectral_distance(g1.graph, g2.graph);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", d);
    std::cout << buffer << '\n';
    return 0;
}

int cmd_validate(const std::string& code, bool full_bits) {
    nsg::CompactCreationSequence a = [&] {
        if (code.find(',') != std::string::npos)
            return nsg::CompactCreationSequence::from_string(code);
        return nsg::compact_from_full(nsg::CreationSequence::from_string(code, full_bits));
    }();
    const auto c = nsg::full_from_compact(a);
    std::cout << "valid: yes\n"
              << "n: " << a.vertex_count() << '\n'
              << "r: " << a.cell_count() << '\n'
              << "compact: " << a.to_string() << '\n'
              << "bits: " << c.to_string() << '\n'
              << "bits_full: " << c.to_string(true) << '\n'
              << "edges: " << nsg::edge_count(a) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nested split graph approximation of simple undirected graphs"};
    app.require_subcommand(1);

    ApproximateArgs approx;
    auto* approximate = app.add_subcommand(
        "approximate", "Anneal toward the closest nested split graph");
    approximate->add_option("input", approx.input, "edge-list file of the target graph")
        ->required();
    approximate->add_option("--distance", approx.metric, "walk|spectral")
        ->check(CLI::IsMember({"walk", "spectral"}))
        ->capture_default_str();
    approximate->add_option("--perturbation", approx.scheme, "hamming|edge|move")
        ->check(CLI::IsMember({"hamming", "edge", "move"}))
        ->capture_default_str();
    approximate->add_option("--t0", approx.t0, "initial temperature")->capture_default_str();
    approximate->add_option("--t1", approx.t1, "final temperature")->capture_default_str();
    approximate->add_option("--steps", approx.steps, "annealing steps")->capture_default_str();
    approximate->add_option("--window", approx.window,
                            "telemetry window in steps (0 = steps/100)");
    approximate->add_option("--seed", approx.seed, "random seed")->capture_default_str();
    approximate->add_option("--seeds", approx.seeds,
                            "run one chain per seed (comma separated), in parallel")
        ->delimiter(',');
    approximate->add_option("--out", approx.out_prefix, "output file prefix")
        ->capture_default_str();

    std::string compact, graph_path, mode = "fast";
    bool csv = false;
    auto* indices = app.add_subcommand("indices", "Compute the eight graph indices");
    auto* compact_opt =
        indices->add_option("--compact", compact, "compact creation sequence, e.g. 1,2,1,1,5,2");
    indices->add_option("--graph", graph_path, "edge-list file (oracle computation)")
        ->excludes(compact_opt);
    indices->add_option("--mode", mode, "fast|oracle (compact input only)")
        ->check(CLI::IsMember({"fast", "oracle"}));
    indices->add_flag("--csv", csv, "machine-readable output at full precision");

    std::string dist_path1, dist_path2, metric = "spectral";
    auto* distance = app.add_subcommand("distance", "Distance between two graphs");
    distance->add_option("first", dist_path1, "edge-list file")->required();
    distance->add_option("second", dist_path2, "edge-list file")->required();
    distance->add_option("--metric", metric, "walk|spectral")
        ->check(CLI::IsMember({"walk", "spectral"}))
        ->capture_default_str();

    std::string code;
    bool full_bits = false;
    auto* validate = app.add_subcommand("validate", "Check a creation code, print its forms");
    validate->add_option("code", code,
                         "compact form with commas, otherwise interior bits")
        ->required();
    validate->add_flag("--full", full_bits, "bit string includes the leading 0 and trailing 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code_out = app.exit(e);
        return code_out == 0 ? 0 : 1;
    }

    try {
        if (approximate->parsed()) return cmd_approximate(approx);
        if (indices->parsed()) {
            if (compact.empty() == graph_path.empty()) {
                std::cerr << "indices needs exactly one of --compact or --graph\n";
                return 1;
            }
            return cmd_indices(compact, graph_path, mode, csv);
        }
        if (distance->parsed()) return cmd_distance(dist_path1, dist_path2, metric);
        if (validate->parsed()) return cmd_validate(code, full_bits);
    } catch (const nsg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
