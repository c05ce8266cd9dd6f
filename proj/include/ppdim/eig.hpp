#pragma once

#include <vector>

#include "ppdim/complex_matrix.hpp"

namespace ppdim {

struct EigResult {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are the eigenvectors, unitary
};

// Cyclic Jacobi for Hermitian matrices. The matrices in this library are
// small (a few hundred at most), so robustness beats asymptotics here.
EigResult hermitian_eig(const ComplexMatrix& a);

// Largest |eigenvalue| of a Hermitian matrix (the operator norm).
double hermitian_operator_norm(const ComplexMatrix& a);

// Number of eigenvalues of a PSD matrix above the threshold.
std::size_t rank_by_threshold(const ComplexMatrix& psd, double threshold);

}  // namespace ppdim
