#pragma once

#include <vector>

namespace nsg {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. `a` is
// row-major n*n and is consumed. Sweeps run until the off-diagonal
// Frobenius norm drops below `off_threshold` (or 100 sweeps, the rounding
// floor for any sane input). Result is sorted non-increasing.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double off_threshold);

// Same, writing into `eigenvalues` without allocating when capacity allows.
void jacobi_eigenvalues_inplace(double* a, int n, double off_threshold,
                                std::vector<double>& eigenvalues);

}  // namespace nsg
