#pragma once

#include <vector>

#include "ppdim/commuting_square.hpp"
#include "ppdim/complex_matrix.hpp"

namespace ppdim {

// Complex Hadamard matrix: unimodular entries with u u* = n 1.
struct HadamardMatrix {
  std::size_t order = 0;
  ComplexMatrix matrix;

  // The unitary normalization u / sqrt(n); this is what conjugations and the
  // tower recursion use.
  ComplexMatrix unitary() const;
};

struct HadamardReport {
  double unimodularity_residual = 0.0;  // max | |u_ij| - 1 |
  double gram_residual = 0.0;           // || u u* - n 1 ||_max
  bool pass = false;
};

struct BiunitaryReport {
  double unitarity_residual = 0.0;
  double block_transpose_residual = 0.0;  // unitarity of the block transpose
  bool pass = false;
};

// Entry (j, k) = ω^{jk}, ω = exp(2πi/n).
HadamardMatrix fourier_hadamard(std::size_t n);
HadamardMatrix tensor_hadamard(const HadamardMatrix& a, const HadamardMatrix& b);

HadamardReport verify_hadamard(const ComplexMatrix& m, double tol = config().tolerance);

// Block transpose on M_n ⊗ M_k: entry (αa, βb) -> entry (βa, αb).
ComplexMatrix block_transpose(const ComplexMatrix& w, std::size_t n, std::size_t k);

BiunitaryReport verify_biunitary(const ComplexMatrix& w, std::size_t n, std::size_t k,
                                 double tol = config().tolerance);

// (ℂ ⊂ Δ_n, u Δ_n u* ⊂ M_n) for a Hadamard u; throws when u fails
// verify_hadamard.
QuadrupleOfAlgebras spin_square(const HadamardMatrix& u, double tol = config().tolerance);

// (ℂ ⊂ M_n ⊗ ℂ, Ad_v(ℂ ⊗ M_k) ⊂ M_n ⊗ M_k) for a bi-unitary v.
QuadrupleOfAlgebras vertex_square(const ComplexMatrix& v, std::size_t n, std::size_t k,
                                  double tol = config().tolerance);

// Tower of stage unitaries over a Hadamard matrix:
//   u_0 = u/sqrt(n),  u_{2k+1} = (1_n ⊗ u_{2k})(D_u ⊗ 1_{n^k}),
//   u_{2k} = u_{2k-1}(u_0 ⊗ 1_{n^k}),
// with D_u the diagonal unitary carrying the conjugated Hadamard entries.
struct SpinTower {
  HadamardMatrix u;
  ComplexMatrix d_u;
  std::vector<ComplexMatrix> stages;  // u_0 .. u_K

  double worst_unitarity_residual() const;
};

// Throws when n^K exceeds the dimension cap.
SpinTower spin_tower(const HadamardMatrix& u, std::size_t stages,
                     double tol = config().tolerance,
                     std::size_t dimension_cap = config().dimension_cap);

}  // namespace ppdim
