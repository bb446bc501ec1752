#include "nsg/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "nsg/kernels.hpp"

namespace nsg {

namespace {

double off_diagonal_norm(const double* a, int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc += a[static_cast<std::size_t>(i) * n + j] *
                               a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(acc);
}

}  // namespace

void jacobi_eigenvalues_inplace(double* a, int n, double off_threshold,
                                std::vector<double>& eigenvalues) {
    const auto at = [a, n](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a, n) > off_threshold; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Rows are contiguous; columns follow by symmetry of the update.
                kernels::plane_rotation(a + static_cast<std::size_t>(p) * n,
                                        a + static_cast<std::size_t>(q) * n,
                                        static_cast<std::size_t>(n), c, s);
                for (int i = 0; i < n; ++i) {
                    const double aip = at(i, p);
                    const double aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }
    eigenvalues.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eigenvalues[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double off_threshold) {
    std::vector<double> eigenvalues;
    jacobi_eigenvalues_inplace(a.data(), n, off_threshold, eigenvalues);
    return eigenvalues;
}

}  // namespace nsg
