#include "nsg/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "nsg/errors.hpp"
#include "nsg/indices_fast.hpp"
#include "nsg/indices_oracle.hpp"

namespace nsg {

IndexValues fast_index_values(const CompactCreationSequence& a) {
    const PrefixSums ps(a);
    const std::vector<double> main_eigs = quotient_eigenvalues(a);
    IndexValues v;
    v.edges = edge_count(a, ps);
    v.entropy = entropy(a, ps);
    v.randic = randic(a, ps);
    v.wiener = wiener(a, ps);
    v.szeged = szeged(a, ps);
    v.copi = copi(a, ps);
    v.estrada = estrada(a, ps, main_eigs);
    v.gutman = gutman_energy(a, ps, main_eigs);
    v.resolvent = resolvent_energy(a, ps, main_eigs);
    return v;
}

IndexValues oracle_index_values(const SimpleGraph& g) {
    IndexValues v;
    v.edges = g.edge_count();
    if (g.edge_count() > 0) v.entropy = oracle_entropy(g);
    v.randic = oracle_randic(g);
    const DistanceMatrix d(g);
    if (d.connected()) {
        std::int64_t w = 0;
        for (int u = 1; u <= g.vertex_count(); ++u)
            for (int x = u + 1; x <= g.vertex_count(); ++x) w += d.at(u, x);
        v.wiener = w;
        v.szeged = oracle_szeged(g, d);
        v.copi = oracle_copi(g, d);
    }
    const std::vector<double> spectrum = oracle_spectrum(g);
    double ee = 0.0, ge = 0.0, re = 0.0;
    const double n = static_cast<double>(g.vertex_count());
    for (double lambda : spectrum) {
        ee += std::exp(lambda);
        ge += std::abs(lambda);
        re += 1.0 / (n - lambda);
    }
    v.estrada = ee;
    v.gutman = ge;
    v.resolvent = re;
    return v;
}

std::string format_full(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string format_significant(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
}

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::hamming: return "hamming";
        case Scheme::edge: return "edge";
        case Scheme::move: return "move";
    }
    return "?";
}

std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::walk: return "walk";
        case Metric::spectral: return "spectral";
    }
    return "?";
}

Scheme scheme_from_name(std::string_view name) {
    if (name == "hamming") return Scheme::hamming;
    if (name == "edge") return Scheme::edge;
    if (name == "move") return Scheme::move;
    throw Error("unknown perturbation scheme \"" + std::string(name) + "\"");
}

Metric metric_from_name(std::string_view name) {
    if (name == "walk") return Metric::walk;
    if (name == "spectral") return Metric::spectral;
    throw Error("unknown distance metric \"" + std::string(name) + "\"");
}

namespace {

void append_index_cells(std::string& row, const IndexValues& v) {
    auto put_int = [&row](const std::optional<std::int64_t>& x) {
        row += ',';
        row += x ? std::to_string(*x) : std::string("na");
    };
    auto put_real = [&row](const std::optional<double>& x) {
        row += ',';
        row += x ? format_full(*x) : std::string("na");
    };
    put_int(v.edges);
    put_real(v.entropy);
    put_real(v.randic);
    put_int(v.wiener);
    put_int(v.szeged);
    put_int(v.copi);
    put_real(v.estrada);
    put_real(v.gutman);
    put_real(v.resolvent);
}

}  // namespace

void write_report_csv(std::ostream& out, const RunReport& report) {
    out << "input,digest,n,metric,scheme,t0,t1,steps,seed,window,"
           "best_a,best_energy,final_a,final_energy,"
           "orig_edges,orig_entropy,orig_randic,orig_wiener,orig_szeged,orig_copi,"
           "orig_estrada,orig_gutman,orig_resolvent,"
           "nsg_edges,nsg_entropy,nsg_randic,nsg_wiener,nsg_szeged,nsg_copi,"
           "nsg_estrada,nsg_gutman,nsg_resolvent,wall_time_s\n";
    char digest[32];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(report.digest));
    std::string row;
    row += report.input;
    row += ',';
    row += digest;
    row += ',';
    row += std::to_string(report.n);
    row += ',';
    row += metric_name(report.config.metric);
    row += ',';
    row += scheme_name(report.config.scheme);
    row += ',';
    row += format_full(report.config.schedule.t0);
    row += ',';
    row += format_full(report.config.schedule.t1);
    row += ',';
    row += std::to_string(report.config.schedule.steps);
    row += ',';
    row += std::to_string(report.config.seed);
    row += ',';
    row += std::to_string(report.config.window);
    row += ",\"";
    row += report.best_compact;
    row += "\",";
    row += format_full(report.best_energy);
    row += ",\"";
    row += report.final_compact;
    row += "\",";
    row += format_full(report.final_energy);
    append_index_cells(row, report.input_indices);
    append_index_cells(row, report.nsg_indices);
    row += ',';
    row += format_full(report.wall_seconds);
    out << row << '\n';
}

void write_timeline_csv(std::ostream& out, std::span<const TimelineRecord> timeline) {
    out << "step,temperature,current_energy,best_energy,acceptance_rate,improvement_rate\n";
    for (const TimelineRecord& rec : timeline) {
        out << rec.step << ',' << format_full(rec.temperature) << ','
            << format_full(rec.current_energy) << ',' << format_full(rec.best_energy) << ','
            << format_full(rec.acceptance_rate) << ',' << format_full(rec.improvement_rate)
            << '\n';
    }
}

}  // namespace nsg
