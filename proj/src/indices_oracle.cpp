#include "nsg/indices_oracle.hpp"

#include <cmath>
#include <queue>

#include "nsg/errors.hpp"
#include "nsg/jacobi.hpp"

namespace nsg {

DistanceMatrix::DistanceMatrix(const SimpleGraph& g) {
    n_ = g.vertex_count();
    d_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (int s = 1; s <= n_; ++s) {
        auto* row = d_.data() + static_cast<std::size_t>(s - 1) * static_cast<std::size_t>(n_);
        row[s - 1] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int w : g.neighbors(u)) {
                if (row[w - 1] < 0) {
                    row[w - 1] = row[u - 1] + 1;
                    frontier.push(w);
                }
            }
        }
        for (int v = 1; v <= n_; ++v)
            if (row[v - 1] < 0) connected_ = false;
    }
}

double oracle_entropy(const SimpleGraph& g) {
    if (g.edge_count() == 0) throw EmptyGraphError("entropy needs at least one edge");
    return std::log2(static_cast<double>(g.edge_count()));
}

double oracle_randic(const SimpleGraph& g) {
    double r = 0.0;
    for (const Edge& e : g.edges())
        r += 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) *
                             static_cast<double>(g.degree(e.v)));
    return r;
}

std::int64_t oracle_wiener(const SimpleGraph& g) {
    const DistanceMatrix d(g);
    if (!d.connected()) throw DisconnectedError("Wiener index needs a connected graph");
    std::int64_t w = 0;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v) w += d.at(u, v);
    return w;
}

namespace {

// nu(u, v): vertices strictly closer to u than to v. Ties count for neither.
std::int64_t closer_count(const DistanceMatrix& d, int u, int v) {
    std::int64_t count = 0;
    for (int w = 1; w <= d.vertex_count(); ++w)
        if (d.at(u, w) < d.at(v, w)) ++count;
    return count;
}

}  // namespace

std::int64_t oracle_szeged(const SimpleGraph& g, const DistanceMatrix& d) {
    if (!d.connected()) throw DisconnectedError("Szeged index needs a connected graph");
    std::int64_t sz = 0;
    for (const Edge& e : g.edges()) sz += closer_count(d, e.u, e.v) * closer_count(d, e.v, e.u);
    return sz;
}

std::int64_t oracle_copi(const SimpleGraph& g, const DistanceMatrix& d) {
    if (!d.connected()) throw DisconnectedError("Co-PI index needs a connected graph");
    std::int64_t c = 0;
    for (const Edge& e : g.edges())
        c += std::abs(closer_count(d, e.u, e.v) - closer_count(d, e.v, e.u));
    return c;
}

std::int64_t oracle_szeged(const SimpleGraph& g) { return oracle_szeged(g, DistanceMatrix(g)); }

std::int64_t oracle_copi(const SimpleGraph& g) { return oracle_copi(g, DistanceMatrix(g)); }

std::vector<double> oracle_spectrum(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (const Edge& e : g.edges()) {
        a[static_cast<std::size_t>(e.u - 1) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(e.v - 1)] = 1.0;
        a[static_cast<std::size_t>(e.v - 1) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(e.u - 1)] = 1.0;
    }
    return jacobi_eigenvalues(std::move(a), n, 1e-12 * n);
}

double oracle_estrada(const SimpleGraph& g) {
    double ee = 0.0;
    for (double lambda : oracle_spectrum(g)) ee += std::exp(lambda);
    return ee;
}

double oracle_gutman(const SimpleGraph& g) {
    double ge = 0.0;
    for (double lambda : oracle_spectrum(g)) ge += std::abs(lambda);
    return ge;
}

double oracle_resolvent(const SimpleGraph& g) {
    const double n = static_cast<double>(g.vertex_count());
    double re = 0.0;
    for (double lambda : oracle_spectrum(g)) re += 1.0 / (n - lambda);
    return re;
}

}  // namespace nsg
