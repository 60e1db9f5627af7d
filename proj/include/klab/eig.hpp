#pragma once

#include <vector>

#include "klab/matrix.hpp"

namespace klab::mat {

struct EigResult {
  std::vector<double> values;  // ascending
  CMat vectors;                // columns are eigenvectors, same order
};

// Cyclic complex Jacobi for Hermitian input. Off-diagonal threshold 1e-14
// (relative to the initial Frobenius mass), at most 30 sweeps.
EigResult hermitian_eig(const CMat& A);

// Singular values in descending order via eigenvalues of A*A.
std::vector<double> singular_values(const CMat& A);

}  // namespace klab::mat
