#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppdim/rational.hpp"

namespace ppdim {

// The band (t, 1-t) for an inclusion of index > 4, where t(1-t) = 1/index
// and t < 1/2. Membership is the exact rational comparison
// alpha (1 - alpha) > 1/index; no floating point.
bool band_contains(const Rational& index, const Rational& alpha);

// One step of x -> 1 + 1/(n - 1 - x), the continued-fraction map behind the
// discrete spectrum ladders.
struct Ladder {
  std::vector<Rational> from_zero;
  std::vector<Rational> from_one;
};

// Orbits of 0 and 1 under the ladder map. A ladder stops early at a pole of
// the map or when monotonicity fails (which happens only for n <= 3, where
// the orbit is finite); otherwise it runs to the requested depth, strictly
// increasing.
Ladder lambda_ladder(long long n, std::size_t depth);

// Closed form (2k+1)/(k+1) for the k-fold iterate of Φ₄(x) = 1 + 1/(3-x)
// starting from 1.
Rational phi4_closed_form(std::uint64_t k);
Rational phi4_apply(const Rational& x);
Rational phi4_iterate(std::uint64_t k);  // literal iteration, for cross-checks

struct SigmaResult {
  bool member = false;
  std::string witness;  // which part matched, or the bracketing ladder terms
};

// Exact membership of alpha in Σ_r: the closed interval given by
// alpha (r - alpha) >= r plus both ladders and their reflections.
SigmaResult sigma_membership(const Rational& alpha, long long r);

struct LambdaFamilyElement {
  Rational value;
  std::string family;      // multiples | midpoint | reciprocal | ... | complement-of-X
  std::string provenance;  // construction the element comes from
  bool in_band = false;
  bool covered = true;  // parameter inside the construction's proven range
  std::vector<std::string> notes;
};

struct SpinModel {
  long long n;  // index n
};
struct VertexModel {
  long long n;  // index n^2
};
struct UnitaryOnbModel {
  long long n;  // basis size / index
};

std::vector<LambdaFamilyElement> known_families(const SpinModel& model);
std::vector<LambdaFamilyElement> known_families(const VertexModel& model);
std::vector<LambdaFamilyElement> known_families(const UnitaryOnbModel& model);

struct GammaElement {
  long long m = 0;
  long long i = 0;
  Rational value;  // (2 - 2^{-m} + i) / (2n)
  Rational limit;  // (2 + i) / (2n)
  bool in_band_spin = false;    // index 2n
  bool in_band_vertex = false;  // index (2n)^2
};

// γ_{m,i} for m in [m_lo, m_hi]; requires n >= 3 and 0 <= i <= 2n-4.
std::vector<GammaElement> gamma_sequence(long long n, long long i, long long m_lo,
                                         long long m_hi);

struct PopaOrbit {
  Rational index;
  std::vector<Rational> values;  // values[0] = seed; parity = position
};

// Exact iteration of g(x) = index^{-1} / (1 - x) from a seed strictly inside
// (t, 1/2); strictly decreasing, stays in the band.
PopaOrbit popa_orbit(const Rational& index, const Rational& seed, std::size_t steps);

struct ZetaMatrix {
  long long n = 0;
  long long i = 0;
  long long m_lo = 0;
  // rows[m - m_lo][k] = ζ^{(k)}_{m,i}, k = 0..k_max; column 0 is γ_{m,i}.
  std::vector<std::vector<Rational>> rows;
  bool pairwise_distinct = false;
};

// Column k holds the k-th iterate of the two-step Popa map
// G(x) = (2n - 1/(1-x))^{-1} = g(g(x)) applied to γ_{m,i}; every entry is an
// exact rational inside the band for index 2n.
ZetaMatrix zeta_matrix(long long n, long long i, long long m_lo, long long m_hi,
                       long long k_max);

}  // namespace ppdim
