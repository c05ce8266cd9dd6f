#include "ppdim/pimsner_popa.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ppdim/eig.hpp"

namespace ppdim {

ComplexMatrix BasisCandidate::expect(const ComplexMatrix& x) const {
  if (!density) return sub.expect(x);
  if (sub.vs_dim() != 1)
    throw std::invalid_argument("weighted state only supported over the scalars");
  const std::size_t n = sub.ambient_dim();
  cplx phi = frobenius_inner(density->adjoint(), x) / static_cast<double>(n);
  return ComplexMatrix::identity(n) * phi;
}

BasisReport verify_basis(const BasisCandidate& b, double tol) {
  const std::size_t n = b.ambient.ambient_dim();
  const TraceForm& tr = b.ambient.trace();
  for (const ComplexMatrix& lam : b.elements) {
    if (lam.dim() != n) throw std::invalid_argument("verify_basis: element dimension mismatch");
    if (!b.ambient.contains(lam, std::max(tol, 1e-8)))
      throw std::invalid_argument("verify_basis: element outside the ambient algebra");
  }

  BasisReport rep;
  const ComplexMatrix id = ComplexMatrix::identity(n);

  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    for (std::size_t j = 0; j < b.elements.size(); ++j) {
      ComplexMatrix right = b.expect(b.elements[i].adjoint() * b.elements[j]);
      ComplexMatrix left = b.expect(b.elements[i] * b.elements[j].adjoint());
      if (i == j) {
        right -= id;
        left -= id;
      }
      rep.right_orthonormal.residual = std::max(rep.right_orthonormal.residual, tr.norm(right));
      rep.left_orthonormal.residual = std::max(rep.left_orthonormal.residual, tr.norm(left));
    }
  }

  for (const ComplexMatrix& x : b.ambient.basis()) {
    ComplexMatrix right(n), left(n);
    for (const ComplexMatrix& lam : b.elements) {
      right += lam * b.expect(lam.adjoint() * x);
      left += b.expect(x * lam) * lam.adjoint();
    }
    rep.right_complete.residual = std::max(rep.right_complete.residual, tr.norm(right - x));
    rep.left_complete.residual = std::max(rep.left_complete.residual, tr.norm(left - x));
  }

  for (const ComplexMatrix& lam : b.elements)
    rep.unitary.residual = std::max(rep.unitary.residual, lam.unitarity_residual());

  rep.right_complete.pass = rep.right_complete.residual < tol;
  rep.left_complete.pass = rep.left_complete.residual < tol;
  rep.right_orthonormal.pass = rep.right_orthonormal.residual < tol;
  rep.left_orthonormal.pass = rep.left_orthonormal.residual < tol;
  rep.unitary.pass = rep.unitary.residual < tol;
  rep.two_sided = rep.right_complete.pass && rep.left_complete.pass &&
                  rep.right_orthonormal.pass && rep.left_orthonormal.pass;
  return rep;
}

std::vector<ComplexMatrix> mu_unitaries(const BasisCandidate& b, const BasicConstruction& bc,
                                        double tol, MuReport* report) {
  auto flags = verify_basis(b, tol);
  if (!flags.two_sided)
    throw std::invalid_argument("mu_unitaries: basis is not two-sided orthonormal");

  const std::size_t n = b.elements.size();
  const std::size_t v = bc.big_basis.size();
  const ComplexMatrix& e1 = bc.jones_projection;

  std::vector<ComplexMatrix> terms;  // λ_k e1 λ_k* in the tower
  terms.reserve(n);
  ComplexMatrix total(v);
  for (const ComplexMatrix& lam : b.elements) {
    ComplexMatrix lhat = bc.represent(lam);
    ComplexMatrix t = lhat * e1 * lhat.adjoint();
    total += t;
    terms.push_back(std::move(t));
  }

  MuReport rep;
  rep.sum_identity_residual = max_abs_diff(total, ComplexMatrix::identity(v));
  if (rep.sum_identity_residual >= std::max(tol, 1e-8) * static_cast<double>(n)) {
    if (report) *report = rep;
    throw std::invalid_argument("mu_unitaries: sum λ e1 λ* is not the identity (not a basis)");
  }

  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<ComplexMatrix> mus;
  mus.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix mu(v);
    for (std::size_t k = 0; k < n; ++k) {
      const double th = w * static_cast<double>((j * k) % n);
      mu += terms[k] * cplx(std::cos(th), std::sin(th));
    }
    rep.unitarity_residual = std::max(rep.unitarity_residual, mu.unitarity_residual());
    mus.push_back(std::move(mu));
  }

  const TraceForm tower_trace{v};
  const ComplexMatrix idv = ComplexMatrix::identity(v);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      ComplexMatrix prod = mus[s].adjoint() * mus[t];

      ComplexMatrix expected(v);
      for (std::size_t u = 0; u < n; ++u) {
        const double th = w * static_cast<double>(((t + n - s) * u) % n);
        expected += terms[u] * cplx(std::cos(th), std::sin(th));
      }
      rep.pair_identity_residual =
          std::max(rep.pair_identity_residual, tower_trace.norm(prod - expected));

      ComplexMatrix en = bc.represented_small.expect(prod);
      if (s == t) en -= idv;
      rep.orthonormality_residual = std::max(rep.orthonormality_residual, tower_trace.norm(en));
    }

  if (report) *report = rep;
  return mus;
}

namespace {

// Deterministic pseudo-random Hermitian element of the span.
ComplexMatrix random_hermitian_in(const StarSubalgebra& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix h(a.ambient_dim());
  for (const ComplexMatrix& b : a.basis()) {
    const cplx c(dist(rng), dist(rng));
    h += b * c;
    h += b.adjoint() * std::conj(c);
  }
  return h * cplx(0.5, 0.0);
}

// Spectral projections of a Hermitian element, eigenvalues clustered at a
// gap scale. For a generic element of the algebra these are the sought
// minimal (or masa) projections.
std::vector<ComplexMatrix> spectral_projections(const ComplexMatrix& h, double gap) {
  EigResult eig = hermitian_eig(h);
  const std::size_t n = h.dim();
  std::vector<ComplexMatrix> projections;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && eig.values[i] - eig.values[i - 1] < gap) continue;
    ComplexMatrix p(n);
    for (std::size_t c = start; c < i; ++c)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          p(r, s) += eig.vectors(r, c) * std::conj(eig.vectors(s, c));
    projections.push_back(std::move(p));
    start = i;
  }
  return projections;
}

// Partial isometry factor of x via its polar decomposition. The cutoff is
// relative to the top singular value: eigen-noise on x*x turns into spurious
// singular values of order sqrt(eps), which an absolute cutoff would keep.
ComplexMatrix polar_isometry(const ComplexMatrix& x, double relative_cut) {
  const std::size_t n = x.dim();
  ComplexMatrix gram(n);
  kernels::gemm_hn(x.data(), x.data(), gram.data(), n);  // x* x
  EigResult eig = hermitian_eig(gram);
  const double top = std::sqrt(std::max(0.0, eig.values.back()));
  ComplexMatrix out(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double sv = std::sqrt(std::max(0.0, eig.values[c]));
    if (sv <= relative_cut * top) continue;
    // u_c = x v_c / sv; accumulate u_c v_c*.
    std::vector<cplx> vcol(n), ucol(n, cplx(0, 0));
    for (std::size_t r = 0; r < n; ++r) vcol[r] = eig.vectors(r, c);
    for (std::size_t r = 0; r < n; ++r) {
      cplx acc(0, 0);
      for (std::size_t k = 0; k < n; ++k) acc += x(r, k) * vcol[k];
      ucol[r] = acc / sv;
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) out(r, s) += ucol[r] * std::conj(vcol[s]);
  }
  return out;
}

}  // namespace

BasisCandidate unitary_onb_scalar_inclusion(const StarSubalgebra& a, double tol,
                                            std::uint64_t seed) {
  if (!a.contains_unit())
    throw std::invalid_argument("unitary_onb_scalar_inclusion: algebra must be unital");
  const std::size_t n = a.ambient_dim();
  const std::size_t d = a.vs_dim();
  const auto center = a.center(tol);

  BasisCandidate out;
  out.sub = StarSubalgebra::scalars(n);
  out.ambient = a;

  if (center.size() == 1 && d > 1) {
    // Simple: A ≅ M_m with m = sqrt(dim). Build matrix units from the
    // spectral projections of a generic Hermitian element, then the Weyl
    // pair X (cyclic shift) and Z (character diagonal).
    const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
    if (m * m != d) throw std::invalid_argument("simple algebra with non-square dimension");
    ComplexMatrix h = random_hermitian_in(a, seed);
    auto ps = spectral_projections(h, 1e-6);
    if (ps.size() != m)
      throw std::runtime_error("generic element failed to separate the masa (retry with a new seed)");

    ComplexMatrix g = random_hermitian_in(a, seed + 1);
    std::vector<ComplexMatrix> e1j(m);  // e_{1j}
    e1j[0] = ps[0];
    for (std::size_t j = 1; j < m; ++j) {
      ComplexMatrix v = polar_isometry(ps[0] * g * ps[j], 1e-6);
      if (max_abs_diff(v * v.adjoint(), ps[0]) > 1e-7 || max_abs_diff(v.adjoint() * v, ps[j]) > 1e-7)
        throw std::runtime_error("matrix-unit extraction failed (retry with a new seed)");
      e1j[j] = std::move(v);
    }

    ComplexMatrix x_shift(n), z_diag(n);
    const double w = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
      // e_{j+1, j} = e_{1,j+1}* e_{1,j}
      x_shift += e1j[(j + 1) % m].adjoint() * e1j[j];
      z_diag += (e1j[j].adjoint() * e1j[j]) * cplx(std::cos(w * j), std::sin(w * j));
    }

    std::vector<ComplexMatrix> xp(m), zp(m);
    xp[0] = ComplexMatrix::identity(n);
    zp[0] = ComplexMatrix::identity(n);
    for (std::size_t k = 1; k < m; ++k) {
      xp[k] = xp[k - 1] * x_shift;
      zp[k] = zp[k - 1] * z_diag;
    }
    for (std::size_t ax = 0; ax < m; ++ax)
      for (std::size_t bz = 0; bz < m; ++bz) out.elements.push_back(xp[ax] * zp[bz]);
    return out;
  }

  if (center.size() == d) {
    // Abelian: characters of Z_d against the minimal projections. The Markov
    // trace of ℂ ⊂ A weighs every minimal projection equally, which differs
    // from the ambient trace when their ranks differ; hand the basis the
    // matching density.
    ComplexMatrix h = random_hermitian_in(a, seed);
    auto ps = spectral_projections(h, 1e-6);
    if (ps.size() != d)
      throw std::runtime_error("generic element failed to separate the characters");

    const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix u(n);
      for (std::size_t k = 0; k < d; ++k)
        u += ps[k] * cplx(std::cos(w * ((j * k) % d)), std::sin(w * ((j * k) % d)));
      out.elements.push_back(std::move(u));
    }
    ComplexMatrix density(n);
    for (const ComplexMatrix& p : ps) {
      const double rank = p.trace().real();
      density += p * cplx(static_cast<double>(n) / (static_cast<double>(d) * rank), 0.0);
    }
    out.density = std::move(density);
    return out;
  }

  throw std::invalid_argument(
      "unitary_onb_scalar_inclusion: algebra is neither simple nor abelian");
}

double d_ob_value(const BasisCandidate& b, double tol) {
  auto rep = verify_basis(b, tol);
  if (!rep.right_complete.pass || !rep.right_orthonormal.pass)
    throw std::invalid_argument("d_ob_value: not a right orthonormal basis");
  ComplexMatrix s(b.ambient.ambient_dim());
  for (const ComplexMatrix& m : b.elements) s += m.adjoint() * m;
  return hermitian_operator_norm(s);
}

PartialSumReport partial_sum_projections(const BasisCandidate& b, const BasicConstruction& bc,
                                         double tol) {
  auto flags = verify_basis(b, tol);
  if (!flags.right_orthonormal.pass || !flags.right_complete.pass)
    throw std::invalid_argument("partial_sum_projections: not a right orthonormal basis");

  const std::size_t n = b.elements.size();
  const std::size_t v = bc.big_basis.size();
  PartialSumReport rep;
  ComplexMatrix sum(v);
  const ComplexMatrix idv = ComplexMatrix::identity(v);
  for (std::size_t m = 1; m <= n; ++m) {
    ComplexMatrix lhat = bc.represent(b.elements[m - 1]);
    sum += lhat * bc.jones_projection * lhat.adjoint();
    rep.projection_residual = std::max(
        rep.projection_residual, std::max(sum.idempotency_residual(), sum.hermiticity_residual()));
    ComplexMatrix em = bc.represented_big.expect(sum);
    em -= idv * cplx(static_cast<double>(m) / static_cast<double>(n), 0.0);
    rep.expectation_residual = std::max(rep.expectation_residual, TraceForm{v}.norm(em));
  }
  return rep;
}

}  // namespace ppdim
