#include "ppdim/commuting_square.hpp"

#include <cmath>
#include <stdexcept>

namespace ppdim {

namespace {

// Test family for expectation identities: the matrix units when M is the
// full ambient algebra (deterministic and exhaustive), M's basis otherwise.
std::vector<ComplexMatrix> test_basis(const QuadrupleOfAlgebras& q) {
  const std::size_t n = q.ambient_dim();
  if (q.M.vs_dim() == n * n) {
    std::vector<ComplexMatrix> units;
    units.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) units.push_back(ComplexMatrix::unit(n, i, j));
    return units;
  }
  return q.M.basis();
}

}  // namespace

void QuadrupleOfAlgebras::validate(double tol) const {
  const std::size_t n = M.ambient_dim();
  if (N.ambient_dim() != n || P.ambient_dim() != n || Q.ambient_dim() != n)
    throw std::invalid_argument("quadruple: mixed ambient dimensions");
  const double t = std::max(tol, 1e-8);
  if (!P.contains_algebra(N, t) || !Q.contains_algebra(N, t))
    throw std::invalid_argument("quadruple: N is not contained in both P and Q");
  if (!M.contains_algebra(P, t) || !M.contains_algebra(Q, t))
    throw std::invalid_argument("quadruple: P, Q are not contained in M");
}

CommutingSquareReport is_commuting_square(const QuadrupleOfAlgebras& q, double tol) {
  q.validate(tol);
  CommutingSquareReport rep;
  const auto xs = test_basis(q);
  const TraceForm& tr = q.M.trace();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const ComplexMatrix en = q.N.expect(xs[k]);
    const double rpq = tr.norm(q.P.expect(q.Q.expect(xs[k])) - en);
    const double rqp = tr.norm(q.Q.expect(q.P.expect(xs[k])) - en);
    if (std::max(rpq, rqp) > std::max(rep.residual_pq, rep.residual_qp)) rep.worst_index = k;
    rep.residual_pq = std::max(rep.residual_pq, rpq);
    rep.residual_qp = std::max(rep.residual_qp, rqp);
  }
  rep.commuting = rep.residual_pq < tol && rep.residual_qp < tol;
  return rep;
}

NondegeneracyReport is_nondegenerate(const QuadrupleOfAlgebras& q, double tol) {
  q.validate(tol);
  std::vector<ComplexMatrix> products;
  products.reserve(q.P.vs_dim() * q.Q.vs_dim());
  for (const ComplexMatrix& p : q.P.basis())
    for (const ComplexMatrix& r : q.Q.basis()) products.push_back(p * r);
  auto onb = orthonormalize(q.M.trace(), products, tol * static_cast<double>(q.ambient_dim()));
  NondegeneracyReport rep;
  rep.span_dim = onb.size();
  rep.required_dim = q.M.vs_dim();
  rep.nondegenerate = rep.span_dim == rep.required_dim;
  return rep;
}

BasisTransferReport basis_transfer_check(const QuadrupleOfAlgebras& q,
                                         const std::vector<ComplexMatrix>& b, double tol) {
  BasisTransferReport rep;
  auto square = is_commuting_square(q, tol);
  if (!square.commuting) {
    rep.precondition_failure = "quadruple is not a commuting square";
    return rep;
  }

  // b must be an orthonormal basis for P over N: E_N(b_i* b_j) = delta and
  // x = sum_j b_j E_N(b_j* x) on P.
  const TraceForm& tr = q.M.trace();
  double pre_resid = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      ComplexMatrix g = q.N.expect(b[i].adjoint() * b[j]);
      if (i == j) g -= ComplexMatrix::identity(q.ambient_dim());
      pre_resid = std::max(pre_resid, tr.norm(g));
    }
  for (const ComplexMatrix& x : q.P.basis()) {
    ComplexMatrix rec(q.ambient_dim());
    for (const ComplexMatrix& lam : b) rec += lam * q.N.expect(lam.adjoint() * x);
    pre_resid = std::max(pre_resid, tr.norm(rec - x));
  }
  if (pre_resid >= tol) {
    rep.precondition_failure = "b is not an orthonormal basis for P over N";
    return rep;
  }
  rep.precondition_ok = true;

  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      ComplexMatrix g = q.Q.expect(b[i].adjoint() * b[j]);
      if (i == j) g -= ComplexMatrix::identity(q.ambient_dim());
      rep.orthonormality_residual = std::max(rep.orthonormality_residual, tr.norm(g));
    }
  for (const ComplexMatrix& x : test_basis(q)) {
    ComplexMatrix rec(q.ambient_dim());
    for (const ComplexMatrix& lam : b) rec += lam * q.Q.expect(lam.adjoint() * x);
    rep.completeness_residual = std::max(rep.completeness_residual, tr.norm(rec - x));
  }
  rep.pass = rep.orthonormality_residual < tol && rep.completeness_residual < tol;
  return rep;
}

}  // namespace ppdim
