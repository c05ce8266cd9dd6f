#include "ppdim/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ppdim {

namespace {

double offdiag_sq(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
  return 2.0 * s;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  if (n == 0) throw std::invalid_argument("empty matrix");

  // Work on the Hermitian part; callers pass matrices that are Hermitian up
  // to round-off anyway.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1e-300, a.frobenius_norm());
  // Quadratic convergence stalls at the round-off floor ~eps * scale per
  // entry; stopping at 1e-26 * scale^2 keeps every consumer far below its
  // 1e-10 tolerance without spinning on unreachable sweeps.
  const double stop = 1e-26 * scale * scale;
  const double skip = 1e-15 * scale;

  for (int sweep = 0; sweep < 60 && offdiag_sq(a) > stop; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double m = std::abs(apq);
        if (m <= skip) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase that makes the pivot real, then a classical Jacobi angle.
        const cplx phase = apq / m;
        const double tau = (aqq - app) / (2.0 * m);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;

        // A <- G* A G with G = [[c, s], [-conj(s), c]] acting on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigResult out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

double hermitian_operator_norm(const ComplexMatrix& a) {
  EigResult e = hermitian_eig(a);
  return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
}

std::size_t rank_by_threshold(const ComplexMatrix& psd, double threshold) {
  EigResult e = hermitian_eig(psd);
  std::size_t r = 0;
  for (double lam : e.values)
    if (lam > threshold) ++r;
  return r;
}

}  // namespace ppdim
