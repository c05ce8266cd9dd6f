#pragma once

#include <string>
#include <vector>

#include "ppdim/star_subalgebra.hpp"

namespace ppdim {

// (N ⊂ P, Q ⊂ M) with a shared ambient normalized trace. N ⊆ P ⊆ M and
// N ⊆ Q ⊆ M are validated on construction.
struct QuadrupleOfAlgebras {
  StarSubalgebra N, P, Q, M;

  std::size_t ambient_dim() const { return M.ambient_dim(); }
  void validate(double tol = config().tolerance) const;
};

struct CommutingSquareReport {
  double residual_pq = 0.0;  // max ||E_P E_Q x - E_N x|| over the test basis
  double residual_qp = 0.0;
  std::size_t worst_index = 0;  // basis element achieving the worst residual
  bool commuting = false;
};

struct NondegeneracyReport {
  std::size_t span_dim = 0;
  std::size_t required_dim = 0;
  bool nondegenerate = false;
};

struct BasisTransferReport {
  bool precondition_ok = false;  // q commuting + b a basis for P over N
  std::string precondition_failure;
  double orthonormality_residual = 0.0;  // E_Q(b_i* b_j) vs delta_ij
  double completeness_residual = 0.0;    // x = sum b_j E_Q(b_j* x) on M
  bool pass = false;
};

// E_P E_Q = E_Q E_P = E_N, evaluated on the full matrix-unit basis of the
// ambient algebra when M is all of it, otherwise on M's stored basis.
CommutingSquareReport is_commuting_square(const QuadrupleOfAlgebras& q,
                                          double tol = config().tolerance);

// dim span{ p q } = dim M as a vector space.
NondegeneracyReport is_nondegenerate(const QuadrupleOfAlgebras& q,
                                     double tol = config().tolerance);

// A basis for P over N is a basis for M over Q across a commuting square.
BasisTransferReport basis_transfer_check(const QuadrupleOfAlgebras& q,
                                         const std::vector<ComplexMatrix>& b,
                                         double tol = config().tolerance);

}  // namespace ppdim
