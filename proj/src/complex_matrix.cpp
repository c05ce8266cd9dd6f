#include "ppdim/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ppdim {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), e_(std::move(entries)) {
  if (e_.size() != dim * dim) throw std::invalid_argument("entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix m(dim);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  kernels::adjoint(e_.data(), out.data(), dim_);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

cplx ComplexMatrix::normalized_trace() const {
  return trace() / static_cast<double>(dim_);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : e_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  ComplexMatrix c(a.dim_);
  kernels::gemm_nn(a.data(), b.data(), c.data(), a.dim_);
  return c;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::frobenius_sq(e_.data(), dim_));
}

double ComplexMatrix::hermiticity_residual() const {
  ComplexMatrix adj = adjoint();
  return kernels::max_abs_diff(e_.data(), adj.data(), e_.size());
}

double ComplexMatrix::unitarity_residual() const {
  ComplexMatrix g(dim_);
  kernels::gemm_hn(e_.data(), e_.data(), g.data(), dim_);
  ComplexMatrix id = identity(dim_);
  return kernels::max_abs_diff(g.data(), id.data(), g.e_.size());
}

double ComplexMatrix::idempotency_residual() const {
  ComplexMatrix sq(dim_);
  kernels::gemm_nn(e_.data(), e_.data(), sq.data(), dim_);
  return kernels::max_abs_diff(sq.data(), e_.data(), e_.size());
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_residual() < tol; }
bool ComplexMatrix::is_unitary(double tol) const { return unitarity_residual() < tol; }

bool ComplexMatrix::is_projection(double tol) const {
  return hermiticity_residual() < tol && idempotency_residual() < tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return kernels::max_abs_diff(a.data(), b.data(), a.dim() * a.dim());
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix d = a;
  d -= b;
  return d.frobenius_norm();
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return kernels::dot(a.data(), b.data(), a.dim());
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) out(na + i, na + j) = b(i, j);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace ppdim
