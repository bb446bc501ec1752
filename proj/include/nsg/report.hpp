#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "nsg/anneal.hpp"
#include "nsg/creation.hpp"
#include "nsg/graph.hpp"

namespace nsg {

// The eight indices plus the edge count. Distance-based entries stay empty
// for disconnected graphs (the graph is still reported otherwise).
struct IndexValues {
    std::optional<std::int64_t> edges;
    std::optional<double> entropy;
    std::optional<double> randic;
    std::optional<std::int64_t> wiener;
    std::optional<std::int64_t> szeged;
    std::optional<std::int64_t> copi;
    std::optional<double> estrada;
    std::optional<double> gutman;
    std::optional<double> resolvent;
};

IndexValues fast_index_values(const CompactCreationSequence& a);
IndexValues oracle_index_values(const SimpleGraph& g);

struct RunReport {
    std::string input;
    std::uint64_t digest = 0;
    int n = 0;
    AnnealConfig config;
    std::string best_compact;
    double best_energy = 0.0;
    std::string final_compact;
    double final_energy = 0.0;
    IndexValues input_indices;   // oracle values of the target
    IndexValues nsg_indices;     // fast values of the best NSG
    double wall_seconds = 0.0;   // excluded from determinism comparisons
};

// Single header + single data row; wall_time_s is the last column so
// determinism checks can strip it. Reals at full precision.
void write_report_csv(std::ostream& out, const RunReport& report);

// Header: step,temperature,current_energy,best_energy,acceptance_rate,improvement_rate
void write_timeline_csv(std::ostream& out, std::span<const TimelineRecord> timeline);

std::string_view scheme_name(Scheme s);
std::string_view metric_name(Metric m);
Scheme scheme_from_name(std::string_view name);    // throws Error on unknown
Metric metric_from_name(std::string_view name);

// Shortest decimal form that round-trips a double.
std::string format_full(double value);

// Fixed number of significant digits, the style of the human tables.
std::string format_significant(double value, int digits);

}  // namespace nsg
