#include "ppdim/projection_sums.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ppdim/eig.hpp"

namespace ppdim {

namespace {

const Rational kOne(1);

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

// N * beta as an integer, or nullopt.
std::optional<long long> integral_total(const Rational& beta, long long N) {
  Rational total = beta * Rational(N);
  if (!total.is_integer()) return std::nullopt;
  return to_ll(total.num());
}

}  // namespace

void ProjectionTuple::compute_residuals() {
  residuals = {};
  if (projections.empty()) return;
  const std::size_t n = dim();
  ComplexMatrix sum(n);
  for (const ComplexMatrix& p : projections) {
    residuals.idempotency = std::max(residuals.idempotency, p.idempotency_residual());
    residuals.hermiticity = std::max(residuals.hermiticity, p.hermiticity_residual());
    sum += p;
  }
  sum -= ComplexMatrix::identity(n) * cplx(beta.to_double(), 0.0);
  residuals.sum = sum.max_abs();
}

std::vector<long long> ProjectionTuple::ranks(double threshold) const {
  std::vector<long long> out;
  for (const ComplexMatrix& p : projections)
    out.push_back(static_cast<long long>(rank_by_threshold(p, threshold)));
  return out;
}

bool ProjectionTuple::valid(double tol) const {
  return residuals.idempotency < tol && residuals.hermiticity < tol && residuals.sum < tol;
}

ProjectionTuple complement_tuple(const ProjectionTuple& t) {
  ProjectionTuple out;
  out.beta = Rational(static_cast<long long>(t.projections.size())) - t.beta;
  const ComplexMatrix id = ComplexMatrix::identity(t.dim());
  for (const ComplexMatrix& p : t.projections) out.projections.push_back(id - p);
  out.compute_residuals();
  return out;
}

FeasibilityResult feasibility(long long r, const Rational& beta, long long N) {
  if (r < 1 || N < 1) throw std::invalid_argument("feasibility: r >= 1 and N >= 1 required");
  if (beta < Rational(0)) return {false, "beta negative"};
  if (!integral_total(beta, N)) return {false, "N*beta not an integer"};
  auto sigma = sigma_membership(beta, r);
  if (!sigma.member) return {false, "beta outside Sigma_r: " + sigma.witness};
  return {true, "beta in Sigma_r (" + sigma.witness + "), N*beta integral"};
}

namespace {

// r' coplanar rank-one projections p_j = (1 + cos(2pi j/r') s1 + sin s2)/2
// summing to (r'/2) 1 on C^2.
std::vector<ComplexMatrix> equiangular_dim2(long long count) {
  std::vector<ComplexMatrix> out;
  for (long long j = 0; j < count; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
    ComplexMatrix p(2);
    p(0, 0) = 0.5 * (1.0 + std::cos(th));
    p(1, 1) = 0.5 * (1.0 - std::cos(th));
    p(0, 1) = 0.5 * std::sin(th);
    p(1, 0) = 0.5 * std::sin(th);
    out.push_back(std::move(p));
  }
  return out;
}

ProjectionTuple assemble(std::vector<ComplexMatrix> ps, Rational beta) {
  ProjectionTuple t;
  t.projections = std::move(ps);
  t.beta = std::move(beta);
  t.compute_residuals();
  return t;
}

ProjectionTuple tensor_lift(const ProjectionTuple& t, long long copies) {
  ProjectionTuple out;
  out.beta = t.beta;
  const ComplexMatrix id = ComplexMatrix::identity(static_cast<std::size_t>(copies));
  for (const ComplexMatrix& p : t.projections) out.projections.push_back(tensor(id, p));
  out.compute_residuals();
  return out;
}

}  // namespace

std::optional<ProjectionTuple> exact_construct(long long r, const Rational& beta, long long N) {
  auto feas = feasibility(r, beta, N);
  if (!feas.feasible) throw std::domain_error("exact_construct: infeasible: " + feas.reason);

  const std::size_t dim = static_cast<std::size_t>(N);
  if (beta.is_integer()) {
    // s identities and r - s zeros.
    const long long s = to_ll(beta.num());
    std::vector<ComplexMatrix> ps;
    for (long long j = 0; j < r; ++j)
      ps.push_back(j < s ? ComplexMatrix::identity(dim) : ComplexMatrix::zero(dim));
    return assemble(std::move(ps), beta);
  }

  if (beta.den() == 2 && N % 2 == 0) {
    // beta = s + 3/2 with the fractional part carried by the 120-degree
    // configuration; feasibility already pinned beta to [3/2, r - 3/2].
    const Rational s_rat = beta - Rational(3, 2);
    if (!s_rat.is_integer() || s_rat < Rational(0)) return std::nullopt;
    const long long s = to_ll(s_rat.num());
    if (3 + s > r) return std::nullopt;
    std::vector<ComplexMatrix> ps = equiangular_dim2(3);
    for (long long j = 0; j < s; ++j) ps.push_back(ComplexMatrix::identity(2));
    while (static_cast<long long>(ps.size()) < r) ps.push_back(ComplexMatrix::zero(2));
    ProjectionTuple base = assemble(std::move(ps), beta);
    return N == 2 ? base : tensor_lift(base, N / 2);
  }

  return std::nullopt;  // outside the closed-form moves; solve_sum is next
}

namespace {

// Rank profiles: partitions of total into r parts bounded by N. The full
// set is generated before sorting, so the balanced profiles (smallest max
// rank) really do come first; the limit only truncates the tail.
std::vector<std::vector<long long>> enumerate_profiles(long long r, long long total, long long N,
                                                       int limit) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long remaining, long long parts_left, long long max_part) -> void {
    if (out.size() >= 200000) return;  // pathological-input guard
    if (parts_left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (long long k = std::min(max_part, remaining); k >= 0; --k) {
      if (remaining - k > (parts_left - 1) * k) continue;  // can't fill the rest
      cur.push_back(k);
      self(self, remaining - k, parts_left - 1, k);
      cur.pop_back();
    }
  };
  rec(rec, total, r, N);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (out.size() > static_cast<std::size_t>(limit)) out.resize(static_cast<std::size_t>(limit));
  return out;
}

// Nearest projection of the given rank: spectral truncation of the Hermitian
// part.
ComplexMatrix project_to_rank(const ComplexMatrix& x, long long rank) {
  const std::size_t n = x.dim();
  if (rank <= 0) return ComplexMatrix::zero(n);
  if (rank >= static_cast<long long>(n)) return ComplexMatrix::identity(n);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
  EigResult eig = hermitian_eig(h);
  ComplexMatrix p(n);
  for (std::size_t c = n - static_cast<std::size_t>(rank); c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) p(a, b) += eig.vectors(a, c) * std::conj(eig.vectors(b, c));
  return p;
}

struct RestartOutcome {
  double residual = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  std::vector<ComplexMatrix> ps;
};

RestartOutcome run_restart(long long r, double beta, long long N,
                           const std::vector<long long>& ranks, std::uint64_t seed,
                           int max_iterations, double tol) {
  const std::size_t n = static_cast<std::size_t>(N);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<ComplexMatrix> ps;
  for (long long k : ranks) {
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
    ps.push_back(project_to_rank(g, k));
  }

  const ComplexMatrix target = ComplexMatrix::identity(n) * cplx(beta, 0.0);
  RestartOutcome best;
  best.seed = seed;
  for (int it = 0; it < max_iterations; ++it) {
    // Affine step: recenter the sum, then restore each member to its
    // fixed-rank projection manifold.
    ComplexMatrix sum(n);
    for (const ComplexMatrix& p : ps) sum += p;
    ComplexMatrix correction = (sum - target) * cplx(1.0 / static_cast<double>(r), 0.0);
    for (std::size_t i = 0; i < ps.size(); ++i)
      ps[i] = project_to_rank(ps[i] - correction, ranks[i]);

    ComplexMatrix sum2(n);
    for (const ComplexMatrix& p : ps) sum2 += p;
    const double resid = max_abs_diff(sum2, target);
    // Plateaus hundreds of iterations long occur before the contraction
    // regime, so there is no early stall exit; the iteration budget governs.
    if (resid < best.residual) {
      best.residual = resid;
      best.ps = ps;
    }
    if (resid < tol) {
      // Polish: keep alternating while it still helps, to land well below
      // the convergence gate.
      for (int extra = 0; extra < 40; ++extra) {
        ComplexMatrix s(n);
        for (const ComplexMatrix& p : ps) s += p;
        ComplexMatrix corr = (s - target) * cplx(1.0 / static_cast<double>(r), 0.0);
        for (std::size_t i = 0; i < ps.size(); ++i)
          ps[i] = project_to_rank(ps[i] - corr, ranks[i]);
        ComplexMatrix s2(n);
        for (const ComplexMatrix& p : ps) s2 += p;
        const double r2 = max_abs_diff(s2, target);
        if (r2 >= best.residual) break;
        best.residual = r2;
        best.ps = ps;
      }
      break;
    }
  }
  return best;
}

}  // namespace

ProjectionTuple solve_sum(long long r, const Rational& beta, long long N,
                          const SolveOptions& opts) {
  auto feas = feasibility(r, beta, N);
  if (!feas.feasible) throw std::domain_error("solve_sum: infeasible: " + feas.reason);
  const long long total = *integral_total(beta, N);

  std::vector<std::vector<long long>> profiles;
  if (opts.profile) {
    long long sum = 0;
    for (long long k : opts.profile->ranks) {
      if (k < 0 || k > N) throw std::invalid_argument("solve_sum: rank out of range");
      sum += k;
    }
    if (static_cast<long long>(opts.profile->ranks.size()) != r || sum != total)
      throw std::invalid_argument("solve_sum: profile does not match (r, beta, N)");
    profiles.push_back(opts.profile->ranks);
  } else {
    profiles = enumerate_profiles(r, total, N, opts.max_profiles);
  }

  const double beta_d = beta.to_double();
  RestartOutcome best;
  for (const auto& ranks : profiles) {
    const int chunk = 4;
    for (int base = 0; base < opts.restarts; base += chunk) {
      const int count = std::min(chunk, opts.restarts - base);
      std::vector<RestartOutcome> outcomes(count);
#pragma omp parallel for schedule(dynamic, 1)
      for (int s = 0; s < count; ++s)
        outcomes[s] = run_restart(r, beta_d, N, ranks, opts.seed + base + s,
                                  opts.max_iterations, opts.solver_tolerance);
      // Deterministic merge: residual first, seed breaks ties.
      for (const auto& oc : outcomes)
        if (oc.residual < best.residual ||
            (oc.residual == best.residual && oc.seed < best.seed))
          best = oc;
      if (best.residual < opts.solver_tolerance) break;
    }
    if (best.residual < opts.solver_tolerance) break;
  }

  if (best.residual >= opts.solver_tolerance)
    throw std::runtime_error("solve_sum: not-found (restart budget exhausted; instance is "
                             "feasible but the search did not converge)");

  ProjectionTuple out;
  out.projections = std::move(best.ps);
  out.beta = beta;
  out.compute_residuals();
  return out;
}

namespace {

// Harmonic frame: r rank-ones on C^N with sum (r/N) 1, from any N rows of
// the r-point discrete Fourier matrix.
std::vector<ComplexMatrix> harmonic_frame(long long r, long long N) {
  std::vector<ComplexMatrix> out;
  const double w = 2.0 * std::numbers::pi / static_cast<double>(r);
  for (long long j = 0; j < r; ++j) {
    std::vector<cplx> v(static_cast<std::size_t>(N));
    for (long long t = 0; t < N; ++t)
      v[static_cast<std::size_t>(t)] =
          cplx(std::cos(w * static_cast<double>((j * t) % r)),
               std::sin(w * static_cast<double>((j * t) % r))) /
          std::sqrt(static_cast<double>(N));
    ComplexMatrix p(static_cast<std::size_t>(N));
    for (std::size_t a = 0; a < static_cast<std::size_t>(N); ++a)
      for (std::size_t b = 0; b < static_cast<std::size_t>(N); ++b)
        p(a, b) = v[a] * std::conj(v[b]);
    out.push_back(std::move(p));
  }
  return out;
}

// The (2,1,1,1) instance on C^3 with beta = 5/3: three unit vectors with the
// circulant Gram (1 on the diagonal, 1/3 off) have frame operator
// diag(5/3, 2/3, 2/3), and the rank-two complement of e_0 tops it up.
std::vector<ComplexMatrix> witness_21113() {
  const double w = 2.0 * std::numbers::pi / 3.0;
  const double lam[3] = {5.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
  // columns m_j of diag(sqrt(lam)) F3^H
  std::vector<ComplexMatrix> out;
  ComplexMatrix p0 = ComplexMatrix::identity(3);
  p0(0, 0) = 0.0;
  out.push_back(p0);
  for (int j = 0; j < 3; ++j) {
    std::vector<cplx> m(3);
    for (int a = 0; a < 3; ++a)
      m[a] = std::sqrt(lam[a] / 3.0) * cplx(std::cos(w * a * j), -std::sin(w * a * j));
    ComplexMatrix p(3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) p(a, b) = m[a] * std::conj(m[b]);
    out.push_back(std::move(p));
  }
  return out;
}

OracleResult oracle_dim1(long long r, const Rational& beta) {
  OracleResult res;
  if (!beta.is_integer() || beta < Rational(0) || beta > Rational(r)) {
    res.sketch = "projections on C are 0 or 1, so the sum is an integer in [0, r]";
    return res;
  }
  res.feasible = true;
  res.sketch = "integer beta: that many 1s and the rest 0s";
  const long long s = to_ll(beta.num());
  std::vector<ComplexMatrix> ps;
  for (long long j = 0; j < r; ++j) {
    ComplexMatrix p(1);
    p(0, 0) = j < s ? 1.0 : 0.0;
    ps.push_back(std::move(p));
  }
  res.witness = assemble(std::move(ps), beta);
  return res;
}

OracleResult oracle_dim2(long long r, const Rational& beta) {
  // A projection on C^2 is 0, 1, or (1 + unit-vector . sigma)/2; summing e
  // identities and s rank-ones gives (e + s/2) 1 iff the s unit vectors
  // cancel, which happens exactly when s != 1.
  OracleResult res;
  const auto total = integral_total(beta, 2);
  if (!total) {
    res.sketch = "2*beta is not an integer: trace obstruction";
    return res;
  }
  if (beta < Rational(0) || beta > Rational(r)) {
    res.sketch = "beta outside [0, r]";
    return res;
  }
  if (beta.is_integer()) {
    const long long s = to_ll(beta.num());
    res.feasible = true;
    res.sketch = "integer beta: identities plus zeros";
    std::vector<ComplexMatrix> ps;
    for (long long j = 0; j < r; ++j)
      ps.push_back(j < s ? ComplexMatrix::identity(2) : ComplexMatrix::zero(2));
    res.witness = assemble(std::move(ps), beta);
    return res;
  }
  // Half-odd beta: s odd >= 3 rank-ones with vanishing vector sum plus
  // e = beta - s/2 identities; minimal s = 3 forces 3/2 <= beta <= r - 3/2.
  if (beta >= Rational(3, 2) && beta <= Rational(r) - Rational(3, 2)) {
    const long long e = to_ll((beta - Rational(3, 2)).num());
    res.feasible = true;
    res.sketch = "half-odd beta in [3/2, r-3/2]: 120-degree triple, " + std::to_string(e) +
                 " identities, zeros";
    std::vector<ComplexMatrix> ps = equiangular_dim2(3);
    for (long long j = 0; j < e; ++j) ps.push_back(ComplexMatrix::identity(2));
    while (static_cast<long long>(ps.size()) < r) ps.push_back(ComplexMatrix::zero(2));
    res.witness = assemble(std::move(ps), beta);
    return res;
  }
  res.sketch = "half-odd beta outside [3/2, r-3/2]: a single rank-one cannot be scalar and "
               "fewer than three unit vectors cannot cancel";
  return res;
}

// Base decisions for dimension-3 profiles whose parts are all 1 or 2, for at
// most four parts. true entries carry witnesses below.
bool dim3_base_feasible(const std::vector<long long>& parts, std::string& why,
                        std::optional<std::vector<ComplexMatrix>>& witness) {
  // parts is sorted descending.
  const auto is = [&](std::initializer_list<long long> p) {
    return parts == std::vector<long long>(p);
  };
  if (parts.empty()) {
    why = "empty sum = 0";
    witness = std::vector<ComplexMatrix>{};
    return true;
  }
  if (is({1}) || is({2})) {
    why = "a single rank-1 or rank-2 projection is never scalar on C^3";
    return false;
  }
  if (is({1, 1})) {
    why = "rank(p+q) <= 2 but (2/3)1 has rank 3";
    return false;
  }
  if (is({2, 1})) {
    why = "p + (1-p) = 1 with rank(1-p) = 1";
    ComplexMatrix p = ComplexMatrix::identity(3);
    p(2, 2) = 0.0;
    ComplexMatrix q(3);
    q(2, 2) = 1.0;
    witness = std::vector<ComplexMatrix>{p, q};
    return true;
  }
  if (is({2, 2})) {
    why = "q = (4/3)1 - p would have eigenvalues {4/3, 1/3}";
    return false;
  }
  if (is({1, 1, 1})) {
    why = "three orthogonal rank-ones sum to 1";
    witness = std::vector<ComplexMatrix>();
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix p(3);
      p(j, j) = 1.0;
      witness->push_back(std::move(p));
    }
    return true;
  }
  if (is({2, 1, 1})) {
    why = "writing 1-p = ww*, the two rank-ones would need to sum to the rank-3 matrix "
          "(1/3)1 + ww*";
    return false;
  }
  if (is({2, 2, 1})) {
    why = "complement of (2, 1, 1) with beta 4/3";
    return false;
  }
  if (is({2, 2, 2})) {
    why = "complement of three orthogonal rank-ones";
    witness = std::vector<ComplexMatrix>();
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix p = ComplexMatrix::identity(3);
      p(j, j) = 0.0;
      witness->push_back(std::move(p));
    }
    return true;
  }
  if (is({1, 1, 1, 1})) {
    why = "harmonic tight frame of four vectors";
    witness = harmonic_frame(4, 3);
    return true;
  }
  if (is({2, 1, 1, 1})) {
    why = "circulant-Gram triple with frame operator diag(5/3,2/3,2/3) plus 1 - e0 e0*";
    witness = witness_21113();
    return true;
  }
  if (is({2, 2, 1, 1})) {
    why = "p, 1-p, q, 1-q";
    ComplexMatrix p = ComplexMatrix::identity(3);
    p(2, 2) = 0.0;
    ComplexMatrix pc(3);
    pc(2, 2) = 1.0;
    ComplexMatrix q = ComplexMatrix::identity(3);
    q(0, 0) = 0.0;
    ComplexMatrix qc(3);
    qc(0, 0) = 1.0;
    witness = std::vector<ComplexMatrix>{p, q, pc, qc};
    return true;
  }
  if (is({2, 2, 2, 1})) {
    why = "complement of (2, 1, 1, 1)";
    auto w = witness_21113();
    witness = std::vector<ComplexMatrix>();
    for (const auto& p : w) witness->push_back(ComplexMatrix::identity(3) - p);
    return true;
  }
  if (is({2, 2, 2, 2})) {
    why = "complement of the four-vector harmonic frame";
    auto w = harmonic_frame(4, 3);
    witness = std::vector<ComplexMatrix>();
    for (const auto& p : w) witness->push_back(ComplexMatrix::identity(3) - p);
    return true;
  }
  why = "profile outside the r <= 4 case table";
  return false;
}

OracleResult oracle_dim3(long long r, const Rational& beta) {
  if (r > 4)
    throw std::invalid_argument("brute_force_oracle: dimension 3 case analysis covers r <= 4");
  OracleResult res;
  const auto total = integral_total(beta, 3);
  if (!total) {
    res.sketch = "3*beta is not an integer: trace obstruction";
    return res;
  }
  if (beta < Rational(0) || beta > Rational(r)) {
    res.sketch = "beta outside [0, r]";
    return res;
  }

  // Enumerate rank profiles; strip identities/zeros, then consult the
  // {1,2}-rank case table.
  auto profiles = enumerate_profiles(r, *total, 3, 1 << 20);
  std::string reasons;
  for (const auto& prof : profiles) {
    std::vector<long long> middle;
    long long identities = 0;
    for (long long k : prof) {
      if (k == 3)
        ++identities;
      else if (k > 0)
        middle.push_back(k);
    }
    std::string why;
    std::optional<std::vector<ComplexMatrix>> wit;
    if (dim3_base_feasible(middle, why, wit)) {
      res.feasible = true;
      res.sketch = "profile (";
      for (std::size_t j = 0; j < prof.size(); ++j)
        res.sketch += (j ? "," : "") + std::to_string(prof[j]);
      res.sketch += "): " + why;
      std::vector<ComplexMatrix> ps = std::move(*wit);
      for (long long j = 0; j < identities; ++j) ps.push_back(ComplexMatrix::identity(3));
      while (static_cast<long long>(ps.size()) < r) ps.push_back(ComplexMatrix::zero(3));
      res.witness = assemble(std::move(ps), beta);
      return res;
    }
    reasons += (reasons.empty() ? "" : "; ") + why;
  }
  res.sketch = profiles.empty() ? "no rank profile matches the trace" : reasons;
  return res;
}

}  // namespace

OracleResult brute_force_oracle(long long r, const Rational& beta, long long N) {
  if (r < 1) throw std::invalid_argument("brute_force_oracle: r >= 1 required");
  switch (N) {
    case 1:
      return oracle_dim1(r, beta);
    case 2:
      return oracle_dim2(r, beta);
    case 3:
      return oracle_dim3(r, beta);
    default:
      throw std::invalid_argument("brute_force_oracle: only N <= 3 is supported");
  }
}

LambdaCertificate certify_lambda_element(long long n, long long k, const ProjectionTuple& base,
                                         long long i, double tol) {
  if (n < 3) throw std::invalid_argument("certify_lambda_element: n >= 3 required");
  if (i < 0 || i > 2 * n - 4)
    throw std::invalid_argument("certify_lambda_element: i outside 0..2n-4");
  if (base.projections.size() != 4)
    throw std::invalid_argument("certify_lambda_element: base tuple must have four members");
  std::size_t want = 1;
  for (long long s = 0; s < k; ++s) want *= 4;
  if (base.dim() != want)
    throw std::invalid_argument("certify_lambda_element: base dimension is not 4^k");
  if (!base.valid(std::max(tol, 1e-7)))
    throw std::invalid_argument("certify_lambda_element: base tuple residuals exceed tolerance");

  LambdaCertificate cert;
  cert.n = n;
  cert.stage_k = k;
  cert.i = i;
  cert.alpha = base.beta / Rational(4);
  cert.alpha_prime = (base.beta + Rational(i)) / Rational(2 * n);
  cert.base = base;
  cert.tolerance = tol;

  // Blockwise E(q~_i) = ((4 alpha + i)/2n) 1: the 2n diagonal blocks are
  // 1 x p_j (j = 1..4), i identities and zeros, and tensoring with the
  // identity leaves the max-norm residual of sum p_j - 4 alpha 1 unchanged.
  cert.expectation_residual = base.residuals.sum / (2.0 * static_cast<double>(n));

  cert.in_band_spin = band_contains(Rational(2 * n), cert.alpha_prime);
  cert.in_band_vertex = band_contains(Rational(4 * n * n), cert.alpha_prime);
  return cert;
}

bool revalidate(const LambdaCertificate& cert, double tol) {
  if (cert.n < 3 || cert.i < 0 || cert.i > 2 * cert.n - 4) return false;
  ProjectionTuple base = cert.base;
  base.compute_residuals();
  if (!base.valid(std::max(tol, 1e-7))) return false;
  if (cert.alpha != base.beta / Rational(4)) return false;
  if (cert.alpha_prime != (base.beta + Rational(cert.i)) / Rational(2 * cert.n)) return false;
  if (cert.in_band_spin != band_contains(Rational(2 * cert.n), cert.alpha_prime)) return false;
  if (cert.in_band_vertex != band_contains(Rational(4 * cert.n * cert.n), cert.alpha_prime))
    return false;
  const double expect_resid = base.residuals.sum / (2.0 * static_cast<double>(cert.n));
  return expect_resid <= std::max(cert.expectation_residual * 1.0001, 1e-7);
}

}  // namespace ppdim
