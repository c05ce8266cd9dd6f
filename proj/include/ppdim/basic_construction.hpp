#pragma once

#include <vector>

#include "ppdim/star_subalgebra.hpp"

namespace ppdim {

// Jones basic construction of small ⊂ big, realized on the trace Hilbert
// space L²(big). The represented copy of big acts by left multiplication on
// the coordinates of big's orthonormal basis; the Jones projection is the
// orthogonal projection onto the closure of small.
struct BasicConstruction {
  StarSubalgebra represented_big;
  StarSubalgebra represented_small;
  ComplexMatrix jones_projection;
  StarSubalgebra tower;  // <big, e1>

  // Left-multiplication matrix of an element of big on L²(big).
  ComplexMatrix represent(const ComplexMatrix& x) const;

  // Retained so represent() can form <b_i, x b_j>.
  std::vector<ComplexMatrix> big_basis;
  TraceForm ambient_trace;
};

BasicConstruction basic_construction(const StarSubalgebra& small, const StarSubalgebra& big,
                                     double tol = config().tolerance);

// Unital inclusion of multi-matrix algebras, described by its inclusion
// matrix: rows index the summands of the big algebra, columns the summands of
// the small one. small_dims are the matrix sizes of the small summands
// (defaulting to 1 each); they fix the unital normalization of the trace
// vector.
struct InclusionData {
  std::vector<std::vector<long long>> inclusion_matrix;
  std::vector<long long> small_dims;  // empty = all ones
};

struct MarkovTraceResult {
  std::vector<double> trace_vector;  // on the small-algebra summands
  double modulus = 0.0;              // ||Lambda||^2
  double residual = 0.0;             // relative eigen-equation residual
};

// The unique Markov trace of a connected inclusion: the Perron-Frobenius
// eigenvector of Λᵗ Λ, normalized so the induced state is unital. Throws on
// disconnected inclusions.
MarkovTraceResult markov_trace(const InclusionData& inclusion, double tol = config().tolerance);

}  // namespace ppdim
