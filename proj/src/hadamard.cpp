#include "ppdim/hadamard.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ppdim {

ComplexMatrix HadamardMatrix::unitary() const {
  return matrix * cplx(1.0 / std::sqrt(static_cast<double>(order)), 0.0);
}

HadamardMatrix fourier_hadamard(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fourier_hadamard: order must be positive");
  ComplexMatrix m(n);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      // j*k mod n keeps the argument small for large orders.
      const double th = w * static_cast<double>((j * k) % n);
      m(j, k) = cplx(std::cos(th), std::sin(th));
    }
  return HadamardMatrix{n, std::move(m)};
}

HadamardMatrix tensor_hadamard(const HadamardMatrix& a, const HadamardMatrix& b) {
  return HadamardMatrix{a.order * b.order, tensor(a.matrix, b.matrix)};
}

HadamardReport verify_hadamard(const ComplexMatrix& m, double tol) {
  HadamardReport rep;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rep.unimodularity_residual =
          std::max(rep.unimodularity_residual, std::abs(std::abs(m(i, j)) - 1.0));
  ComplexMatrix gram(n);
  kernels::gemm_nh(m.data(), m.data(), gram.data(), n);
  gram -= ComplexMatrix::identity(n) * cplx(static_cast<double>(n), 0.0);
  rep.gram_residual = gram.max_abs();
  rep.pass = rep.unimodularity_residual < tol && rep.gram_residual < tol;
  return rep;
}

ComplexMatrix block_transpose(const ComplexMatrix& w, std::size_t n, std::size_t k) {
  if (w.dim() != n * k) throw std::invalid_argument("block_transpose: dimension is not n*k");
  ComplexMatrix out(n * k);
  for (std::size_t alpha = 0; alpha < n; ++alpha)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t beta = 0; beta < n; ++beta)
        for (std::size_t b = 0; b < k; ++b)
          out(alpha * k + a, beta * k + b) = w(beta * k + a, alpha * k + b);
  return out;
}

BiunitaryReport verify_biunitary(const ComplexMatrix& w, std::size_t n, std::size_t k,
                                 double tol) {
  BiunitaryReport rep;
  rep.unitarity_residual = w.unitarity_residual();
  rep.block_transpose_residual = block_transpose(w, n, k).unitarity_residual();
  rep.pass = rep.unitarity_residual < tol && rep.block_transpose_residual < tol;
  return rep;
}

QuadrupleOfAlgebras spin_square(const HadamardMatrix& u, double tol) {
  auto rep = verify_hadamard(u.matrix, tol);
  if (!rep.pass) throw std::invalid_argument("spin_square: matrix is not complex Hadamard");
  const std::size_t n = u.order;
  const ComplexMatrix uu = u.unitary();
  const ComplexMatrix uadj = uu.adjoint();
  std::vector<ComplexMatrix> conj_units;
  conj_units.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    conj_units.push_back(uu * ComplexMatrix::unit(n, i, i) * uadj);

  QuadrupleOfAlgebras q;
  q.N = StarSubalgebra::scalars(n);
  q.P = StarSubalgebra::diagonal(n);
  q.Q = StarSubalgebra::from_spanning(n, conj_units, tol);
  q.M = StarSubalgebra::full(n);
  q.validate(tol);
  return q;
}

QuadrupleOfAlgebras vertex_square(const ComplexMatrix& v, std::size_t n, std::size_t k,
                                  double tol) {
  auto rep = verify_biunitary(v, n, k, tol);
  if (!rep.pass) throw std::invalid_argument("vertex_square: matrix is not bi-unitary");
  const std::size_t d = n * k;
  const ComplexMatrix vadj = v.adjoint();

  std::vector<ComplexMatrix> left;  // M_n ⊗ 1
  left.reserve(n * n);
  const ComplexMatrix idk = ComplexMatrix::identity(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) left.push_back(tensor(ComplexMatrix::unit(n, i, j), idk));

  std::vector<ComplexMatrix> right;  // Ad_v(1 ⊗ M_k)
  right.reserve(k * k);
  const ComplexMatrix idn = ComplexMatrix::identity(n);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      right.push_back(v * tensor(idn, ComplexMatrix::unit(k, a, b)) * vadj);

  QuadrupleOfAlgebras q;
  q.N = StarSubalgebra::scalars(d);
  q.P = StarSubalgebra::from_spanning(d, left, tol);
  q.Q = StarSubalgebra::from_spanning(d, right, tol);
  q.M = StarSubalgebra::full(d);
  q.validate(tol);
  return q;
}

double SpinTower::worst_unitarity_residual() const {
  double worst = d_u.unitarity_residual();
  for (const ComplexMatrix& s : stages) worst = std::max(worst, s.unitarity_residual());
  return worst;
}

SpinTower spin_tower(const HadamardMatrix& u, std::size_t stages, double tol,
                     std::size_t dimension_cap) {
  auto rep = verify_hadamard(u.matrix, tol);
  if (!rep.pass) throw std::invalid_argument("spin_tower: matrix is not complex Hadamard");
  const std::size_t n = u.order;

  // Resource guard: n^K against the cap, computed without overflow.
  {
    std::size_t pw = 1;
    for (std::size_t s = 0; s < stages; ++s) {
      if (pw > dimension_cap / n)
        throw std::length_error("spin_tower: n^K exceeds the dimension cap");
      pw *= n;
    }
    if (pw > dimension_cap) throw std::length_error("spin_tower: n^K exceeds the dimension cap");
  }

  SpinTower tower;
  tower.u = u;
  const ComplexMatrix u0 = u.unitary();

  // D_u: diagonal with entry conj(u_ij) at position (i, j); unimodular
  // Hadamard entries make it unitary.
  tower.d_u = ComplexMatrix(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tower.d_u(i * n + j, i * n + j) = std::conj(u.matrix(i, j));

  tower.stages.push_back(u0);
  ComplexMatrix id_power = ComplexMatrix::identity(1);  // 1_{n^{floor(idx/2)}}
  for (std::size_t idx = 1; idx <= stages; ++idx) {
    if (idx % 2 == 0) id_power = ComplexMatrix::identity(id_power.dim() * n);
    const ComplexMatrix& prev = tower.stages.back();
    ComplexMatrix next = idx % 2 == 1
                             ? tensor(ComplexMatrix::identity(n), prev) * tensor(tower.d_u, id_power)
                             : prev * tensor(u0, id_power);
    if (next.dim() > dimension_cap)
      throw std::length_error("spin_tower: stage dimension exceeds the dimension cap");
    tower.stages.push_back(std::move(next));
  }

  if (tower.worst_unitarity_residual() >= tol)
    throw std::runtime_error("spin_tower: stage unitarity residual exceeds tolerance");
  return tower;
}

}  // namespace ppdim
