#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ppdim/config.hpp"
#include "ppdim/kernels.hpp"

namespace ppdim {

using cplx = std::complex<double>;

// Dense square complex matrix, the universal carrier for the matrix-level
// part of the library. Row-major storage; products and reductions go through
// the kernels layer.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, cplx(0.0, 0.0)) {}
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  // Matrix unit E_{ij}.
  static ComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  const cplx* data() const { return e_.data(); }
  cplx* data() { return e_.data(); }

  ComplexMatrix adjoint() const;
  cplx trace() const;             // unnormalized
  cplx normalized_trace() const;  // trace / dim

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  double max_abs() const { return kernels::max_abs(e_.data(), e_.size()); }
  double frobenius_norm() const;

  bool is_hermitian(double tol = config().tolerance) const;
  bool is_unitary(double tol = config().tolerance) const;
  bool is_projection(double tol = config().tolerance) const;

  // Residuals behind the predicates, for reports.
  double hermiticity_residual() const;   // || a - a* ||_max
  double unitarity_residual() const;     // || a* a - 1 ||_max
  double idempotency_residual() const;   // || a a - a ||_max

 private:
  std::size_t dim_;
  std::vector<cplx> e_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Frobenius inner product sum_ij conj(a_ij) b_ij = Tr(a* b), unnormalized.
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ppdim
