#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppdim/complex_matrix.hpp"
#include "ppdim/lambda_sets.hpp"

namespace ppdim {

struct RankProfile {
  std::vector<long long> ranks;  // length r, each in [0, N], sum = N*beta
};

// r projections on C^N summing to beta * 1, with the residuals that certify
// it. Zero and identity count as projections throughout.
struct ProjectionTuple {
  std::vector<ComplexMatrix> projections;
  Rational beta;

  struct Residuals {
    double idempotency = 0.0;
    double hermiticity = 0.0;
    double sum = 0.0;  // || sum p_i - beta 1 ||_max
  } residuals;

  std::size_t dim() const { return projections.empty() ? 0 : projections.front().dim(); }
  void compute_residuals();
  std::vector<long long> ranks(double threshold = 0.5) const;  // spectral counting
  bool valid(double tol) const;
};

// Complementing every member solves the (r, r - beta) instance.
ProjectionTuple complement_tuple(const ProjectionTuple& t);

struct FeasibilityResult {
  bool feasible = false;
  std::string reason;  // which clause failed / which part of sigma matched
};

// beta * 1_N is a sum of r projections iff beta lies in Σ_r and N beta is a
// nonnegative integer.
FeasibilityResult feasibility(long long r, const Rational& beta, long long N);

// Closed-form constructions composed from: equiangular rank-ones on C²
// (beta = r'/2), zero/identity padding, direct sums, tensoring with the
// identity, and complements. Returns nullopt when the moves do not reach the
// instance (the solver is the fallback); throws on infeasible input.
std::optional<ProjectionTuple> exact_construct(long long r, const Rational& beta, long long N);

struct SolveOptions {
  std::uint64_t seed = 7;
  int restarts = 50;
  int max_iterations = 4000;
  double solver_tolerance = 1e-8;  // convergence gate, looser than the
                                   // verification tolerance; a polish pass
                                   // follows convergence
  std::optional<RankProfile> profile;
  int max_profiles = 64;
};

// Alternating minimization between the product of fixed-rank projection
// manifolds (spectral truncation of Hermitian parts) and the affine
// constraint sum p_i = beta 1. Deterministic for a fixed seed; restarts may
// run concurrently. Throws on infeasible input; reports not-found (distinct
// from infeasible) when the restart budget runs out.
ProjectionTuple solve_sum(long long r, const Rational& beta, long long N,
                          const SolveOptions& opts = {});

struct OracleResult {
  bool feasible = false;
  std::string sketch;  // chain of exact reductions that settled it
  std::optional<ProjectionTuple> witness;
};

// Independent exact decision for N <= 2 (any r) and N = 3 (r <= 4):
// projections in dimension <= 2 reduce to vector-sum conditions, dimension 3
// to a finite rank-profile case analysis with constructed witnesses.
OracleResult brute_force_oracle(long long r, const Rational& beta, long long N);

// Certificate that alpha' = (4 alpha + i) / (2n) sits in the stage-k grid of
// an index-2n model: the base tuple solves sum p_j = 4 alpha 1 on C^{4^k},
// and the lifted (q_1..q_4, i identities, zeros) tuple in Δ_{2n} ⊗ M has
// conditional expectation alpha' 1, checked blockwise without materializing
// the lifted dimension.
struct LambdaCertificate {
  long long n = 0;
  long long stage_k = 0;
  long long i = 0;
  Rational alpha;        // base grid element, beta / 4
  Rational alpha_prime;  // (4 alpha + i) / (2n)
  ProjectionTuple base;
  double expectation_residual = 0.0;
  bool in_band_spin = false;    // index 2n
  bool in_band_vertex = false;  // index (2n)^2
  double tolerance = 0.0;
  std::string provenance = "tensor lift with identity padding";
};

LambdaCertificate certify_lambda_element(long long n, long long k, const ProjectionTuple& base,
                                         long long i, double tol = config().tolerance);

// Re-runs every check a certificate claims; loading + revalidating is the
// round-trip the CLI relies on.
bool revalidate(const LambdaCertificate& cert, double tol = config().tolerance);

}  // namespace ppdim
