#pragma once

#include <optional>
#include <vector>

#include "ppdim/complex_matrix.hpp"
#include "ppdim/config.hpp"

namespace ppdim {

// The normalized trace on M_n: tr(1) = 1. All trace inner products in the
// library are taken with respect to this normalization.
struct TraceForm {
  std::size_t ambient_dim = 0;

  cplx value(const ComplexMatrix& x) const { return x.normalized_trace(); }

  // <a, b> = tr(a* b) / n
  cplx inner(const ComplexMatrix& a, const ComplexMatrix& b) const {
    return frobenius_inner(a, b) / static_cast<double>(ambient_dim);
  }

  double norm(const ComplexMatrix& a) const {
    return a.frobenius_norm() / std::sqrt(static_cast<double>(ambient_dim));
  }
};

// A unital *-subalgebra of M_n, stored as a spanning set orthonormal under
// the normalized trace inner product. The stored basis is what every
// conditional expectation projects onto, so the constructor insists on
// orthonormality.
class StarSubalgebra {
 public:
  StarSubalgebra() = default;

  // Orthonormalizes the span (modified Gram-Schmidt with reorthogonalization,
  // drop threshold tol * ambient_dim) without checking multiplicative
  // closure. generate_subalgebra is the way to get a closed algebra from
  // arbitrary generators.
  static StarSubalgebra from_spanning(std::size_t ambient_dim,
                                      const std::vector<ComplexMatrix>& spanning,
                                      double tol = config().tolerance);

  static StarSubalgebra scalars(std::size_t ambient_dim);
  static StarSubalgebra diagonal(std::size_t ambient_dim);
  static StarSubalgebra full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return trace_.ambient_dim; }
  const TraceForm& trace() const { return trace_; }
  std::size_t vs_dim() const { return basis_.size(); }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  bool contains_unit() const { return contains_unit_; }

  // Orthogonal projection onto the span under the trace inner product; for a
  // *-closed span containing the unit this is the trace-preserving
  // conditional expectation.
  ComplexMatrix expect(const ComplexMatrix& x) const;

  bool contains(const ComplexMatrix& x, double tol = config().tolerance) const;
  bool contains_algebra(const StarSubalgebra& other, double tol = config().tolerance) const;

  // max_ij || b_i b_j - E(b_i b_j) ||_F over the basis; zero for an honest
  // algebra.
  double closure_residual() const;
  // max deviation of the Gram matrix from the identity.
  double gram_residual() const;
  // max_i || b_i* - E(b_i*) ||_F.
  double adjoint_residual() const;

  // Orthonormal basis of the center { x in A : xb = bx for all b in A }.
  std::vector<ComplexMatrix> center(double tol = config().tolerance) const;

 private:
  TraceForm trace_;
  std::vector<ComplexMatrix> basis_;
  bool contains_unit_ = false;
};

// Trace-preserving conditional expectation onto the subalgebra. Checks the
// input dimension and the orthonormality of the stored basis.
ComplexMatrix conditional_expectation(const StarSubalgebra& sub, const ComplexMatrix& x,
                                      double tol = config().tolerance);

// Smallest unital *-algebra containing the generators, as an orthonormal
// spanning set: iterated span closure under products and adjoints, with rank
// detection at threshold tol * ambient_dim.
StarSubalgebra generate_subalgebra(const std::vector<ComplexMatrix>& generators,
                                   std::size_t ambient_dim, double tol = config().tolerance);

// Gram-Schmidt helper shared by the algebra constructors: returns an
// orthonormal (under TraceForm) subset spanning the input, dropping
// components below the threshold.
std::vector<ComplexMatrix> orthonormalize(const TraceForm& trace,
                                          const std::vector<ComplexMatrix>& vectors,
                                          double drop_threshold);

}  // namespace ppdim
