#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppdim/basic_construction.hpp"
#include "ppdim/star_subalgebra.hpp"

namespace ppdim {

// A candidate Pimsner-Popa basis for ambient over sub. The optional density
// replaces the ambient trace state by x -> tr(density x)/n in the scalar
// conditional expectation; it is only meaningful when sub is the scalars and
// is how the Markov trace of ℂ ⊂ A enters for skewed abelian embeddings.
struct BasisCandidate {
  std::vector<ComplexMatrix> elements;
  StarSubalgebra sub;
  StarSubalgebra ambient;
  std::optional<ComplexMatrix> density;

  // E relative to sub (orthogonal projection), or the weighted scalar state
  // when a density is attached.
  ComplexMatrix expect(const ComplexMatrix& x) const;
};

struct FlagReport {
  double residual = 0.0;
  bool pass = false;
};

struct BasisReport {
  FlagReport right_complete;
  FlagReport left_complete;
  FlagReport right_orthonormal;
  FlagReport left_orthonormal;
  FlagReport unitary;
  bool two_sided = false;  // right + left orthonormal basis
};

// Residuals for every basis flavor, evaluated exhaustively on the ambient
// algebra's basis. Flags are computed, never trusted.
BasisReport verify_basis(const BasisCandidate& b, double tol = config().tolerance);

struct MuReport {
  double sum_identity_residual = 0.0;   // sum_k λ_k e1 λ_k* vs 1
  double unitarity_residual = 0.0;      // worst μ_j
  double orthonormality_residual = 0.0; // E_N(μ_s* μ_t) vs δ_st 1
  double pair_identity_residual = 0.0;  // μ_s*μ_t vs sum_u ω^{(t-s)u} λ_u e1 λ_u*
};

// From a two-sided orthonormal basis {λ_k} of M over N and the Jones
// projection of N ⊂ M, the n unitaries μ_j = Σ_k ω^{jk} λ_k e1 λ_k* in the
// tower, E_N-orthonormal there. Throws when the preconditions fail or when
// Σ λ e1 λ* != 1.
std::vector<ComplexMatrix> mu_unitaries(const BasisCandidate& b, const BasicConstruction& bc,
                                        double tol = config().tolerance,
                                        MuReport* report = nullptr);

// Unitary orthonormal basis of A over the scalars, with respect to the
// Markov trace of ℂ ⊂ A: Weyl unitaries when A is simple, character
// diagonals when A is abelian. Throws for anything else.
BasisCandidate unitary_onb_scalar_inclusion(const StarSubalgebra& a,
                                            double tol = config().tolerance,
                                            std::uint64_t seed = config().seed);

// || Σ_j m_j* m_j || for a verified right orthonormal basis; an upper
// witness for the orthonormal-basis invariant d_ob.
double d_ob_value(const BasisCandidate& b, double tol = config().tolerance);

struct PartialSumReport {
  double projection_residual = 0.0;   // worst over m of idempotency+hermiticity
  double expectation_residual = 0.0;  // worst over m of E_M(s_m) vs (m/n) 1
};

// s_m = Σ_{i<=m} λ_i e1 λ_i* for m = 1..n: each a projection in the tower
// with E_M-value m/n.
PartialSumReport partial_sum_projections(const BasisCandidate& b, const BasicConstruction& bc,
                                         double tol = config().tolerance);

}  // namespace ppdim
