#pragma once

#include <cstddef>
#include <string_view>

// Hot arithmetic loops shared by the distance functions and the eigensolver.
// Every kernel exists as a scalar reference and, on x86-64 builds, an AVX2
// variant; the dispatched entry points pick the widest supported variant at
// first use. NSG_KERNELS=scalar|avx2 in the environment overrides the pick,
// and set_backend() does the same programmatically (used by the equivalence
// tests).

namespace nsg::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
bool supports(Backend b);
void set_backend(Backend b);  // throws Error when unsupported
std::string_view backend_name(Backend b);

// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

// sum_i (x[i] - y[i])^2
double sum_sq_diff(const double* x, const double* y, std::size_t n);

// sum_i (x[i] - v)^2
double sum_sq_diff_const(const double* x, std::size_t n, double v);

// In-place Givens rotation of two rows: (x, y) <- (c x - s y, s x + c y).
void plane_rotation(double* x, double* y, std::size_t n, double c, double s);

// Scalar reference implementations, always available.
namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double sum_sq_diff(const double* x, const double* y, std::size_t n);
double sum_sq_diff_const(const double* x, std::size_t n, double v);
void plane_rotation(double* x, double* y, std::size_t n, double c, double s);
}  // namespace scalar

}  // namespace nsg::kernels
