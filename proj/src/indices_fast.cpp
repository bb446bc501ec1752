#include "nsg/indices_fast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError(std::string(what) + " exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

// a_{2k-1} and a_{2k}, k = 1..r/2
std::int64_t odd_cell(const CompactCreationSequence& a, int k) { return a.cell(2 * k - 1); }
std::int64_t even_cell(const CompactCreationSequence& a, int k) { return a.cell(2 * k); }

}  // namespace

PrefixSums::PrefixSums(const CompactCreationSequence& a) {
    half_ = a.cell_count() / 2;
    const std::size_t len = static_cast<std::size_t>(half_) + 2;
    delta_.assign(len, 0);
    gamma_.assign(len, 0);
    eta_.assign(len, 0);
    epsilon_.assign(len, 0);
    zeta_.assign(len, 0);
    for (int k = 1; k <= half_; ++k) {
        epsilon_[static_cast<std::size_t>(k)] =
            epsilon_[static_cast<std::size_t>(k - 1)] + odd_cell(a, k);
        zeta_[static_cast<std::size_t>(k)] =
            zeta_[static_cast<std::size_t>(k - 1)] + even_cell(a, k);
    }
    for (int k = half_; k >= 1; --k) {
        delta_[static_cast<std::size_t>(k)] =
            delta_[static_cast<std::size_t>(k + 1)] + even_cell(a, k);
        gamma_[static_cast<std::size_t>(k)] =
            gamma_[static_cast<std::size_t>(k + 1)] + odd_cell(a, k);
        eta_[static_cast<std::size_t>(k)] =
            eta_[static_cast<std::size_t>(k + 1)] +
            even_cell(a, k) * epsilon_[static_cast<std::size_t>(k)];
    }
}

std::int64_t edge_count(const CompactCreationSequence& a, const PrefixSums& ps) {
    // m = kappa_1 (kappa_1 - 1)/2 + sum_k a_{2k-1} kappa_k
    Wide m = Wide(ps.kappa(1)) * (ps.kappa(1) - 1) / 2;
    for (int k = 1; k <= ps.half(); ++k) m += Wide(odd_cell(a, k)) * ps.kappa(k);
    return narrow(m, "edge count");
}

std::int64_t edge_count(const CompactCreationSequence& a) { return edge_count(a, PrefixSums(a)); }

double entropy(const CompactCreationSequence& a, const PrefixSums& ps) {
    return std::log2(static_cast<double>(edge_count(a, ps)));
}

double entropy(const CompactCreationSequence& a) { return entropy(a, PrefixSums(a)); }

CellDegrees cell_degrees(const CompactCreationSequence& a, const PrefixSums& ps) {
    CellDegrees d;
    d.rho.resize(static_cast<std::size_t>(a.cell_count()));
    for (int k = 1; k <= ps.half(); ++k) {
        d.rho[static_cast<std::size_t>(2 * k - 2)] = ps.delta(k);
        d.rho[static_cast<std::size_t>(2 * k - 1)] = ps.epsilon(k) + ps.delta(1) - 1;
    }
    return d;
}

CellDegrees cell_degrees(const CompactCreationSequence& a) {
    return cell_degrees(a, PrefixSums(a));
}

double randic(const CompactCreationSequence& a, const PrefixSums& ps) {
    const int h = ps.half();
    const CellDegrees deg = cell_degrees(a, ps);
    // alpha_i = a_i / sqrt(rho_i); beta_k = sum_{j>=k} alpha_{2j}
    std::vector<double> alpha(static_cast<std::size_t>(a.cell_count()) + 1);
    for (int i = 1; i <= a.cell_count(); ++i)
        alpha[static_cast<std::size_t>(i)] =
            static_cast<double>(a.cell(i)) / std::sqrt(static_cast<double>(deg.at(i)));
    std::vector<double> beta(static_cast<std::size_t>(h) + 2, 0.0);
    for (int k = h; k >= 1; --k)
        beta[static_cast<std::size_t>(k)] =
            beta[static_cast<std::size_t>(k + 1)] + alpha[static_cast<std::size_t>(2 * k)];
    double r = 0.0;
    for (int k = 1; k <= h; ++k)
        r += alpha[static_cast<std::size_t>(2 * k - 1)] * beta[static_cast<std::size_t>(k)];
    for (int k = 1; k <= h - 1; ++k)
        r += alpha[static_cast<std::size_t>(2 * k)] * beta[static_cast<std::size_t>(k + 1)];
    for (int k = 1; k <= h; ++k) {
        const std::int64_t ak = even_cell(a, k);
        r += static_cast<double>(ak) * static_cast<double>(ak - 1) /
             (2.0 * static_cast<double>(deg.at(2 * k)));
    }
    return r;
}

double randic(const CompactCreationSequence& a) { return randic(a, PrefixSums(a)); }

std::int64_t wiener(const CompactCreationSequence& a, const PrefixSums& ps) {
    const int h = ps.half();
    Wide w = 0;
    for (int k = 1; k <= h; ++k) {
        const Wide odd = odd_cell(a, k);
        const Wide even = even_cell(a, k);
        w += odd * (odd - 1 + ps.delta(k));
        w += even * (even - 1) / 2;
    }
    for (int k = 1; k <= h - 1; ++k) {
        w += Wide(2) * odd_cell(a, k) * ps.gamma(k + 1);
        w += Wide(even_cell(a, k)) * (ps.delta(k + 1) + 2 * ps.gamma(k + 1));
    }
    return narrow(w, "Wiener index");
}

std::int64_t wiener(const CompactCreationSequence& a) { return wiener(a, PrefixSums(a)); }

std::int64_t szeged(const CompactCreationSequence& a, const PrefixSums& ps) {
    const int h = ps.half();
    Wide sz = 0;
    for (int k = 1; k <= h; ++k) {
        const Wide even = even_cell(a, k);
        sz += even * (even - 1) / 2;
    }
    for (int k = 1; k <= h - 1; ++k)
        sz += Wide(even_cell(a, k)) *
              (Wide(ps.delta(k + 1)) * (1 - ps.epsilon(k)) + ps.eta(k + 1));
    sz += Wide(odd_cell(a, 1)) * ps.eta(1);
    for (int k = 2; k <= h; ++k)
        sz += Wide(odd_cell(a, k)) * (Wide(ps.eta(k)) + Wide(ps.delta(k)) * ps.zeta(k - 1));
    return narrow(sz, "Szeged index");
}

std::int64_t szeged(const CompactCreationSequence& a) { return szeged(a, PrefixSums(a)); }

std::int64_t copi(const CompactCreationSequence& a, const PrefixSums& ps) {
    const int h = ps.half();
    Wide c = 0;
    for (int k = 1; k <= h - 1; ++k)
        c += Wide(even_cell(a, k)) *
             (Wide(ps.eta(k + 1)) - Wide(ps.delta(k + 1)) * ps.epsilon(k));
    c += Wide(odd_cell(a, 1)) * (ps.eta(1) - ps.delta(1));
    for (int k = 2; k <= h; ++k)
        c += Wide(odd_cell(a, k)) *
             (Wide(ps.delta(k)) * (ps.zeta(k - 1) - 1) + ps.eta(k));
    return narrow(c, "Co-PI index");
}

std::int64_t copi(const CompactCreationSequence& a) { return copi(a, PrefixSums(a)); }

std::vector<double> nsg_spectrum(const CompactCreationSequence& a, const PrefixSums& ps) {
    std::vector<double> spectrum = quotient_eigenvalues(a);
    const std::int64_t minus_one = ps.clique_vertices() - ps.half();
    const std::int64_t zeros = ps.coclique_vertices() - ps.half();
    spectrum.reserve(spectrum.size() + static_cast<std::size_t>(minus_one + zeros));
    // quotient eigenvalues are sorted non-increasing; merge the two
    // constant blocks at their ordered positions
    auto zero_pos = std::lower_bound(spectrum.begin(), spectrum.end(), 0.0, std::greater<>());
    spectrum.insert(zero_pos, static_cast<std::size_t>(zeros), 0.0);
    auto minus_pos = std::lower_bound(spectrum.begin(), spectrum.end(), -1.0, std::greater<>());
    spectrum.insert(minus_pos, static_cast<std::size_t>(minus_one), -1.0);
    return spectrum;
}

std::vector<double> nsg_spectrum(const CompactCreationSequence& a) {
    return nsg_spectrum(a, PrefixSums(a));
}

double estrada(const CompactCreationSequence&, const PrefixSums& ps,
               std::span<const double> main_eigenvalues) {
    const double minus_one = static_cast<double>(ps.clique_vertices() - ps.half());
    const double zeros = static_cast<double>(ps.coclique_vertices() - ps.half());
    double ee = minus_one * std::exp(-1.0) + zeros;
    for (double lambda : main_eigenvalues) ee += std::exp(lambda);
    return ee;
}

double estrada(const CompactCreationSequence& a) {
    return estrada(a, PrefixSums(a), quotient_eigenvalues(a));
}

double gutman_energy(const CompactCreationSequence&, const PrefixSums& ps,
                     std::span<const double> main_eigenvalues) {
    double ge = static_cast<double>(ps.clique_vertices() - ps.half());
    for (double lambda : main_eigenvalues) ge += std::abs(lambda);
    return ge;
}

double gutman_energy(const CompactCreationSequence& a) {
    return gutman_energy(a, PrefixSums(a), quotient_eigenvalues(a));
}

double resolvent_energy(const CompactCreationSequence& a, const PrefixSums& ps,
                        std::span<const double> main_eigenvalues) {
    const double n = static_cast<double>(a.vertex_count());
    double re = static_cast<double>(ps.clique_vertices() - ps.half()) / (n + 1.0) +
                static_cast<double>(ps.coclique_vertices() - ps.half()) / n;
    for (double lambda : main_eigenvalues) re += 1.0 / (n - lambda);
    return re;
}

double resolvent_energy(const CompactCreationSequence& a) {
    return resolvent_energy(a, PrefixSums(a), quotient_eigenvalues(a));
}

}  // namespace nsg
