#include "ppdim/lambda_sets.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace ppdim {

namespace {

const Rational kZero(0), kOne(1), kTwo(2), kHalf(1, 2);

// alpha (r - alpha) compared against r decides the closed interval
// [rt, r - rt] of Σ_r exactly; the same comparison against 1 (after scaling)
// decides the band.
bool interval_contains(const Rational& alpha, long long r) {
  return alpha * (Rational(r) - alpha) >= Rational(r);
}

std::optional<Rational> ladder_step(long long n, const Rational& x) {
  const Rational den = Rational(n - 1) - x;
  if (den.is_zero()) return std::nullopt;  // pole
  return kOne + kOne / den;
}

std::vector<Rational> ladder_orbit(long long n, Rational start, std::size_t depth) {
  std::vector<Rational> out{start};
  for (std::size_t s = 1; s < depth; ++s) {
    auto next = ladder_step(n, out.back());
    if (!next || *next <= out.back()) break;  // pole or finite orbit (n <= 3)
    out.push_back(*next);
  }
  return out;
}

}  // namespace

bool band_contains(const Rational& index, const Rational& alpha) {
  if (index <= Rational(4)) throw std::domain_error("band_contains: index must exceed 4");
  if (alpha < kZero || alpha > kOne)
    throw std::domain_error("band_contains: alpha must lie in [0, 1]");
  return alpha * (kOne - alpha) > kOne / index;
}

Ladder lambda_ladder(long long n, std::size_t depth) {
  if (n < 3) throw std::invalid_argument("lambda_ladder: n >= 3 required");
  if (depth < 1) throw std::invalid_argument("lambda_ladder: depth >= 1 required");
  return Ladder{ladder_orbit(n, kZero, depth), ladder_orbit(n, kOne, depth)};
}

Rational phi4_apply(const Rational& x) { return kOne + kOne / (Rational(3) - x); }

Rational phi4_closed_form(std::uint64_t k) {
  return Rational(BigInt(2) * k + 1, BigInt(k) + 1);
}

Rational phi4_iterate(std::uint64_t k) {
  Rational x = kOne;
  for (std::uint64_t s = 0; s < k; ++s) x = phi4_apply(x);
  return x;
}

SigmaResult sigma_membership(const Rational& alpha, long long r) {
  if (r < 1) throw std::invalid_argument("sigma_membership: r >= 1 required");
  if (alpha < kZero) return {false, "negative"};
  if (alpha > Rational(r)) return {false, "exceeds r"};
  if (interval_contains(alpha, r)) return {true, "interval [rt, r-rt]"};

  // After the interval test, alpha sits strictly below rt or strictly above
  // r - rt. Infinite ladders increase toward rt <= r/2, so a scan terminates
  // whenever its target is at most r/2: either a term hits the target or one
  // passes it. Targets beyond r/2 are unreachable and are skipped; the
  // reflected target covers them because Σ_r is symmetric.
  const Rational reflected = Rational(r) - alpha;
  const char* names[4] = {"ladder from 0", "ladder from 1", "reflected ladder from 0",
                          "reflected ladder from 1"};
  int which = 0;
  for (const Rational& target : {alpha, alpha, reflected, reflected}) {
    Rational x = (which % 2 == 0) ? kZero : kOne;
    if (target * kTwo <= Rational(r) || r <= 3) {  // r <= 3: finite orbits, always safe
      for (;;) {
        if (x == target) return {true, names[which]};
        if (x > target) break;
        auto next = ladder_step(r, x);
        if (!next || *next <= x) break;
        x = *next;
      }
    }
    ++which;
  }
  return {false, "between ladder terms / outside interval"};
}

namespace {

void push_with_complement(std::vector<LambdaFamilyElement>& out, LambdaFamilyElement elem) {
  LambdaFamilyElement comp = elem;
  comp.value = kOne - elem.value;
  comp.family = "complement-of-" + elem.family;
  comp.provenance = "complement closure";
  out.push_back(std::move(elem));
  if (out.back().value != comp.value) out.push_back(std::move(comp));
}

bool safe_band(const Rational& index, const Rational& alpha) {
  if (index <= Rational(4)) return false;  // band empty
  return band_contains(index, alpha);
}

}  // namespace

std::vector<LambdaFamilyElement> known_families(const SpinModel& model) {
  const long long n = model.n;
  if (n < 2) throw std::invalid_argument("spin model order must be >= 2");
  const Rational index(n);
  const bool band_ok = n > 4;
  std::vector<LambdaFamilyElement> out;

  for (long long k = 0; k <= n; ++k) {
    LambdaFamilyElement e;
    e.value = Rational(k, n);
    e.family = "multiples";
    e.provenance = "rank-k diagonal projections across the spin grid";
    e.in_band = safe_band(index, e.value);
    e.covered = band_ok;
    if (!band_ok) e.notes.push_back("order <= 4: band statement out of the proven range");
    push_with_complement(out, std::move(e));
  }

  {
    LambdaFamilyElement e;
    e.value = Rational((n + 1) / 2, n);
    e.family = "midpoint";
    e.provenance = "floor((n+1)/2)/n, the in-band witness";
    e.in_band = safe_band(index, e.value);
    e.covered = band_ok;
    push_with_complement(out, std::move(e));
  }

  for (long long k = 1; k <= n; ++k) {
    LambdaFamilyElement e;
    e.value = Rational(1, k);
    e.family = "reciprocal";
    e.provenance = "index amplification by k/n";
    e.in_band = safe_band(index, e.value);
    e.covered = band_ok && k >= 2 && k <= n - 2;  // proven in-band range
    push_with_complement(out, std::move(e));
  }
  return out;
}

std::vector<LambdaFamilyElement> known_families(const VertexModel& model) {
  const long long n = model.n;
  if (n < 2) throw std::invalid_argument("vertex model order must be >= 2");
  const Rational index(static_cast<long long>(n) * n);
  const bool band_ok = n > 2;  // index n^2 > 4
  std::vector<LambdaFamilyElement> out;

  for (long long k = 0; k <= n; ++k) {
    LambdaFamilyElement e;
    e.value = Rational(k, n);
    e.family = "multiples";
    e.provenance = "rank-k projections in the first vertex grid stage";
    e.in_band = safe_band(index, e.value);
    e.covered = band_ok;
    push_with_complement(out, std::move(e));
  }

  {
    LambdaFamilyElement e;
    e.value = Rational((n + 1) / 2, n);
    e.family = "midpoint";
    e.provenance = "floor((n+1)/2)/n, the in-band witness";
    e.in_band = safe_band(index, e.value);
    e.covered = band_ok;
    push_with_complement(out, std::move(e));
  }

  for (long long k = 1; k <= n; ++k) {
    LambdaFamilyElement e;
    e.value = Rational(1, n * k);
    e.family = "reciprocal";
    e.provenance = "index amplification by k/n in the vertex model";
    e.in_band = safe_band(index, e.value);
    e.covered = band_ok && k >= 1 && k <= n - 1;
    // The printed complement family (nk-1)/k exceeds 1 and cannot be a
    // relative dimension; complement closure yields 1 - 1/(nk) instead.
    e.notes.push_back("complement emitted as 1 - 1/(nk)");
    push_with_complement(out, std::move(e));
  }
  return out;
}

std::vector<LambdaFamilyElement> known_families(const UnitaryOnbModel& model) {
  const long long n = model.n;
  if (n < 1) throw std::invalid_argument("unitary basis size must be >= 1");
  std::vector<LambdaFamilyElement> out;
  for (long long m = 0; m <= n; ++m) {
    LambdaFamilyElement e;
    e.value = Rational(m, n);
    e.family = "multiples";
    e.provenance = "partial sums of u e1 u* over a unitary orthonormal basis";
    e.in_band = n > 4 && safe_band(Rational(n), e.value);
    e.covered = true;
    push_with_complement(out, std::move(e));
  }
  return out;
}

std::vector<GammaElement> gamma_sequence(long long n, long long i, long long m_lo,
                                         long long m_hi) {
  if (n < 3) throw std::invalid_argument("gamma_sequence: n >= 3 required");
  if (i < 0 || i > 2 * n - 4) throw std::invalid_argument("gamma_sequence: i out of range");
  if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("gamma_sequence: bad m range");

  const Rational spin_index(2 * n);
  const Rational vertex_index(4 * n * n);
  const Rational limit(BigInt(2 + i), BigInt(2 * n));
  std::vector<GammaElement> out;
  for (long long m = m_lo; m <= m_hi; ++m) {
    GammaElement g;
    g.m = m;
    g.i = i;
    // 4 alpha_m = 2 - 2^{-m}; gamma = (4 alpha_m + i) / (2n).
    const Rational four_alpha = kTwo - Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(m));
    g.value = (four_alpha + Rational(i)) / Rational(2 * n);
    g.limit = limit;
    g.in_band_spin = band_contains(spin_index, g.value);
    g.in_band_vertex = band_contains(vertex_index, g.value);
    out.push_back(std::move(g));
  }
  return out;
}

PopaOrbit popa_orbit(const Rational& index, const Rational& seed, std::size_t steps) {
  if (index <= Rational(4)) throw std::domain_error("popa_orbit: index must exceed 4");
  if (seed >= kHalf || !band_contains(index, seed))
    throw std::domain_error("popa_orbit: seed must lie strictly inside (t, 1/2)");
  PopaOrbit orbit;
  orbit.index = index;
  orbit.values.push_back(seed);
  const Rational lambda = kOne / index;
  for (std::size_t s = 0; s < steps; ++s) {
    const Rational& x = orbit.values.back();
    orbit.values.push_back(lambda / (kOne - x));
  }
  return orbit;
}

ZetaMatrix zeta_matrix(long long n, long long i, long long m_lo, long long m_hi,
                       long long k_max) {
  if (n < 3) throw std::invalid_argument("zeta_matrix: n >= 3 required");
  if (k_max < 0) throw std::invalid_argument("zeta_matrix: k_max >= 0 required");
  auto gammas = gamma_sequence(n, i, m_lo, m_hi);

  const Rational lambda(1, 2 * n);
  ZetaMatrix zm;
  zm.n = n;
  zm.i = i;
  zm.m_lo = m_lo;
  std::map<std::pair<BigInt, BigInt>, int> seen;
  zm.pairwise_distinct = true;
  for (const GammaElement& g : gammas) {
    std::vector<Rational> row{g.value};
    for (long long k = 1; k <= k_max; ++k) {
      const Rational& x = row.back();
      // G = g∘g, algebraically equal to (2n - 1/(1-x))^{-1}.
      const Rational gx = lambda / (kOne - x);
      row.push_back(lambda / (kOne - gx));
    }
    for (const Rational& v : row)
      if (!seen.emplace(std::make_pair(v.num(), v.den()), 1).second) zm.pairwise_distinct = false;
    zm.rows.push_back(std::move(row));
  }
  return zm;
}

}  // namespace ppdim
