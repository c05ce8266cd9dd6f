#include "ppdim/star_subalgebra.hpp"

#include <cmath>
#include <stdexcept>

#include "ppdim/eig.hpp"

namespace ppdim {

std::vector<ComplexMatrix> orthonormalize(const TraceForm& trace,
                                          const std::vector<ComplexMatrix>& vectors,
                                          double drop_threshold) {
  std::vector<ComplexMatrix> basis;
  for (const ComplexMatrix& v : vectors) {
    ComplexMatrix w = v;
    // Two MGS passes; the second pass removes the round-off left by the
    // first when the input is nearly dependent.
    for (int pass = 0; pass < 2; ++pass)
      for (const ComplexMatrix& b : basis) w -= b * trace.inner(b, w);
    const double nrm = trace.norm(w);
    if (nrm <= drop_threshold) continue;
    w *= cplx(1.0 / nrm, 0.0);
    basis.push_back(std::move(w));
  }
  return basis;
}

StarSubalgebra StarSubalgebra::from_spanning(std::size_t ambient_dim,
                                             const std::vector<ComplexMatrix>& spanning,
                                             double tol) {
  StarSubalgebra a;
  a.trace_ = TraceForm{ambient_dim};
  for (const auto& m : spanning)
    if (m.dim() != ambient_dim) throw std::invalid_argument("spanning element has wrong dimension");
  a.basis_ = orthonormalize(a.trace_, spanning, tol * static_cast<double>(ambient_dim));
  ComplexMatrix id = ComplexMatrix::identity(ambient_dim);
  a.contains_unit_ = a.contains(id, std::max(tol, 1e-8));
  return a;
}

StarSubalgebra StarSubalgebra::scalars(std::size_t n) {
  StarSubalgebra a;
  a.trace_ = TraceForm{n};
  a.basis_ = {ComplexMatrix::identity(n)};
  a.contains_unit_ = true;
  return a;
}

StarSubalgebra StarSubalgebra::diagonal(std::size_t n) {
  StarSubalgebra a;
  a.trace_ = TraceForm{n};
  const double s = std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) a.basis_.push_back(ComplexMatrix::unit(n, i, i) * cplx(s, 0.0));
  a.contains_unit_ = true;
  return a;
}

StarSubalgebra StarSubalgebra::full(std::size_t n) {
  StarSubalgebra a;
  a.trace_ = TraceForm{n};
  const double s = std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.basis_.push_back(ComplexMatrix::unit(n, i, j) * cplx(s, 0.0));
  a.contains_unit_ = true;
  return a;
}

ComplexMatrix StarSubalgebra::expect(const ComplexMatrix& x) const {
  ComplexMatrix out(trace_.ambient_dim);
  for (const ComplexMatrix& b : basis_) out += b * trace_.inner(b, x);
  return out;
}

bool StarSubalgebra::contains(const ComplexMatrix& x, double tol) const {
  if (x.dim() != trace_.ambient_dim) return false;
  const double scale = std::max(1.0, trace_.norm(x));
  return trace_.norm(x - expect(x)) <= tol * static_cast<double>(trace_.ambient_dim) * scale;
}

bool StarSubalgebra::contains_algebra(const StarSubalgebra& other, double tol) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (const ComplexMatrix& b : other.basis_)
    if (!contains(b, tol)) return false;
  return true;
}

double StarSubalgebra::closure_residual() const {
  double worst = 0.0;
  for (const ComplexMatrix& a : basis_)
    for (const ComplexMatrix& b : basis_) {
      ComplexMatrix p = a * b;
      worst = std::max(worst, trace_.norm(p - expect(p)));
    }
  return worst;
}

double StarSubalgebra::gram_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      cplx g = trace_.inner(basis_[i], basis_[j]);
      if (i == j) g -= 1.0;
      worst = std::max(worst, std::abs(g));
    }
  return worst;
}

double StarSubalgebra::adjoint_residual() const {
  double worst = 0.0;
  for (const ComplexMatrix& b : basis_) {
    ComplexMatrix adj = b.adjoint();
    worst = std::max(worst, trace_.norm(adj - expect(adj)));
  }
  return worst;
}

std::vector<ComplexMatrix> StarSubalgebra::center(double tol) const {
  const std::size_t m = basis_.size();
  if (m == 0) return {};
  // x = sum c_i b_i is central iff sum_i c_i [b_i, b_j] = 0 for all j.
  // Assemble the PSD Gram of that linear map and read off its kernel.
  std::vector<std::vector<ComplexMatrix>> comm(m);
  for (std::size_t i = 0; i < m; ++i) {
    comm[i].reserve(m);
    for (std::size_t j = 0; j < m; ++j) comm[i].push_back(commutator(basis_[i], basis_[j]));
  }
  ComplexMatrix gram(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      cplx acc(0.0, 0.0);
      for (std::size_t j = 0; j < m; ++j) acc += trace_.inner(comm[i][j], comm[k][j]);
      gram(i, k) = acc;
    }
  EigResult eig = hermitian_eig(gram);
  const double thresh = tol * static_cast<double>(trace_.ambient_dim) * static_cast<double>(m);
  std::vector<ComplexMatrix> central;
  for (std::size_t c = 0; c < m; ++c) {
    if (eig.values[c] > thresh) continue;
    ComplexMatrix z(trace_.ambient_dim);
    for (std::size_t i = 0; i < m; ++i) z += basis_[i] * eig.vectors(i, c);
    central.push_back(std::move(z));
  }
  return orthonormalize(trace_, central, tol * static_cast<double>(trace_.ambient_dim));
}

ComplexMatrix conditional_expectation(const StarSubalgebra& sub, const ComplexMatrix& x,
                                      double tol) {
  if (x.dim() != sub.ambient_dim())
    throw std::invalid_argument("conditional_expectation: dimension mismatch");
  if (sub.gram_residual() > std::max(tol * static_cast<double>(sub.ambient_dim()), 1e-8))
    throw std::invalid_argument("conditional_expectation: basis is not orthonormal");
  return sub.expect(x);
}

StarSubalgebra generate_subalgebra(const std::vector<ComplexMatrix>& generators,
                                   std::size_t ambient_dim, double tol) {
  const double drop = tol * static_cast<double>(ambient_dim);
  TraceForm trace{ambient_dim};

  std::vector<ComplexMatrix> seed;
  seed.push_back(ComplexMatrix::identity(ambient_dim));
  for (const ComplexMatrix& g : generators) {
    if (g.dim() != ambient_dim) throw std::invalid_argument("generator has wrong dimension");
    seed.push_back(g);
    seed.push_back(g.adjoint());
  }
  std::vector<ComplexMatrix> basis = orthonormalize(trace, seed, drop);

  // Span closure: multiply every pair, keep new directions (and their
  // adjoints, so the span stays *-closed at every stage). The dimension grows
  // strictly each round and is bounded by ambient_dim^2.
  const std::size_t max_dim = ambient_dim * ambient_dim;
  bool grew = true;
  while (grew && basis.size() < max_dim) {
    grew = false;
    const std::size_t frozen = basis.size();
    for (std::size_t i = 0; i < frozen && basis.size() < max_dim; ++i) {
      for (std::size_t j = 0; j < frozen && basis.size() < max_dim; ++j) {
        ComplexMatrix w = basis[i] * basis[j];
        for (int pass = 0; pass < 2; ++pass)
          for (const ComplexMatrix& b : basis) w -= b * trace.inner(b, w);
        const double nrm = trace.norm(w);
        if (nrm <= drop) continue;
        w *= cplx(1.0 / nrm, 0.0);
        ComplexMatrix wadj = w.adjoint();
        basis.push_back(std::move(w));
        for (int pass = 0; pass < 2; ++pass)
          for (const ComplexMatrix& b : basis) wadj -= b * trace.inner(b, wadj);
        const double anrm = trace.norm(wadj);
        if (anrm > drop) {
          wadj *= cplx(1.0 / anrm, 0.0);
          basis.push_back(std::move(wadj));
        }
        grew = true;
      }
    }
  }

  StarSubalgebra out = StarSubalgebra::from_spanning(ambient_dim, basis, tol);
  if (!out.contains_unit())
    throw std::runtime_error("generated span lost the unit (rank detection failure)");
  return out;
}

}  // namespace ppdim
