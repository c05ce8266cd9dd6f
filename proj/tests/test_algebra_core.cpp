#include <doctest.h>

#include <random>

#include "ppdim/basic_construction.hpp"
#include "ppdim/eig.hpp"
#include "ppdim/star_subalgebra.hpp"

using namespace ppdim;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(dist(rng), dist(rng));
  return m;
}

// Dimension of the commutant of a set of operators on C^d, via the kernel of
// X -> (X A_i - A_i X). Independent of the span-closure machinery.
std::size_t commutant_dim(const std::vector<ComplexMatrix>& ops, std::size_t d) {
  // Treat X as a vector in C^{d^2}; assemble the PSD form sum_i ||[X, A_i]||².
  const std::size_t dd = d * d;
  ComplexMatrix gram(dd);
  for (const ComplexMatrix& a : ops) {
    // [E_{rs}, A] has entries: row r picks A's row s, column s subtracts A's column r.
    std::vector<ComplexMatrix> cols;
    cols.reserve(dd);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        cols.push_back(commutator(ComplexMatrix::unit(d, r, s), a));
    for (std::size_t x = 0; x < dd; ++x)
      for (std::size_t y = 0; y < dd; ++y) gram(x, y) += frobenius_inner(cols[x], cols[y]);
  }
  return dd - rank_by_threshold(gram, 1e-8);
}

}  // namespace

TEST_CASE("conditional expectation onto the diagonal of M_2") {
  StarSubalgebra diag = StarSubalgebra::diagonal(2);
  ComplexMatrix x(2, {cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(4, 0)});
  ComplexMatrix e = conditional_expectation(diag, x);
  CHECK(max_abs_diff(e, ComplexMatrix::diagonal({cplx(1, 0), cplx(4, 0)})) < 1e-14);
}

TEST_CASE("conditional expectation onto the scalars is the trace") {
  StarSubalgebra sc = StarSubalgebra::scalars(3);
  ComplexMatrix x = random_matrix(3, 42);
  ComplexMatrix e = conditional_expectation(sc, x);
  CHECK(max_abs_diff(e, ComplexMatrix::identity(3) * x.normalized_trace()) < 1e-13);
}

TEST_CASE("block conditional expectation averages the diagonal blocks") {
  // Delta_2 (x) M_2 inside M_4, target C (x) M_2: E(x1, x2) = (x1 + x2)/2.
  std::vector<ComplexMatrix> span;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      span.push_back(tensor(ComplexMatrix::identity(2), ComplexMatrix::unit(2, a, b)));
  StarSubalgebra target = StarSubalgebra::from_spanning(4, span, 1e-10);

  ComplexMatrix x1 = random_matrix(2, 1), x2 = random_matrix(2, 2);
  ComplexMatrix x = tensor(ComplexMatrix::unit(2, 0, 0), x1) +
                    tensor(ComplexMatrix::unit(2, 1, 1), x2);
  ComplexMatrix avg = (x1 + x2) * cplx(0.5, 0.0);
  CHECK(max_abs_diff(target.expect(x), tensor(ComplexMatrix::identity(2), avg)) < 1e-13);
}

TEST_CASE("expectation laws on random inputs") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    StarSubalgebra s = StarSubalgebra::diagonal(3);
    ComplexMatrix x = random_matrix(3, 10 + seed), y = random_matrix(3, 20 + seed);
    ComplexMatrix ex = s.expect(x);
    CHECK(max_abs_diff(s.expect(ex), ex) < 1e-12);                       // idempotent
    CHECK(std::abs(ex.normalized_trace() - x.normalized_trace()) < 1e-12);  // trace-preserving
    // bimodule: E(a x b) = a E(x) b for a, b in the subalgebra
    ComplexMatrix a = s.expect(random_matrix(3, 30 + seed));
    ComplexMatrix b = s.expect(random_matrix(3, 40 + seed));
    CHECK(max_abs_diff(s.expect(a * x * b), a * ex * b) < 1e-11);
    // positivity: E(x* x) is PSD
    EigResult e = hermitian_eig(s.expect(x.adjoint() * x));
    CHECK(e.values.front() > -1e-11);
  }
}

TEST_CASE("generate_subalgebra: no generators gives the scalars") {
  StarSubalgebra a = generate_subalgebra({}, 3);
  CHECK(a.vs_dim() == 1);
  CHECK(a.contains_unit());
}

TEST_CASE("generate_subalgebra: E_12 generates all of M_2") {
  StarSubalgebra a = generate_subalgebra({ComplexMatrix::unit(2, 0, 1)}, 2);
  CHECK(a.vs_dim() == 4);
  CHECK(a.closure_residual() < 1e-10);
  CHECK(a.gram_residual() < 1e-10);
  CHECK(a.adjoint_residual() < 1e-10);
}

TEST_CASE("tower of the diagonal inclusion matches the commutant oracle") {
  for (std::size_t n : {2, 3}) {
    auto bc = basic_construction(StarSubalgebra::diagonal(n), StarSubalgebra::full(n));
    // Oracle: commutant of the right action of Delta_n on L²(M_n). Right
    // multiplication by E_kk is diagonal in the matrix-unit basis.
    const std::size_t v = n * n;
    std::vector<ComplexMatrix> right;
    for (std::size_t kk = 0; kk < n; ++kk) {
      ComplexMatrix r(v);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (j == kk) r(i * n + j, i * n + j) = 1.0;
      right.push_back(std::move(r));
    }
    CHECK(bc.tower.vs_dim() == commutant_dim(right, v));
    CHECK(bc.tower.vs_dim() == n * n * n);
  }
}

TEST_CASE("basic construction of the scalars inside the diagonal") {
  auto bc = basic_construction(StarSubalgebra::scalars(2), StarSubalgebra::diagonal(2));
  CHECK(bc.tower.vs_dim() == 4);          // = M_2 as a vector space
  CHECK(bc.tower.center().size() == 1);   // and it is a factor
  CHECK(bc.jones_projection.is_projection(1e-12));
}

TEST_CASE("E(e1) = 1/n for the diagonal inclusion") {
  for (std::size_t n : {2, 3, 4}) {
    auto bc = basic_construction(StarSubalgebra::diagonal(n), StarSubalgebra::full(n));
    ComplexMatrix e = bc.represented_big.expect(bc.jones_projection);
    ComplexMatrix want =
        ComplexMatrix::identity(n * n) * cplx(1.0 / static_cast<double>(n), 0.0);
    CHECK(max_abs_diff(e, want) < 1e-11);
  }
}

TEST_CASE("degenerate basic construction: small = big") {
  StarSubalgebra d = StarSubalgebra::diagonal(3);
  auto bc = basic_construction(d, d);
  CHECK(max_abs_diff(bc.jones_projection, ComplexMatrix::identity(3)) < 1e-12);
  CHECK(bc.tower.vs_dim() == d.vs_dim());
}

TEST_CASE("basic construction rejects non-inclusions") {
  CHECK_THROWS_AS(basic_construction(StarSubalgebra::full(2), StarSubalgebra::diagonal(2)),
                  std::invalid_argument);
}

TEST_CASE("markov trace of the diagonal inclusion") {
  // Delta_n in M_n: one big summand containing each small summand once.
  for (std::size_t n : {2, 5}) {
    InclusionData inc;
    inc.inclusion_matrix = {std::vector<long long>(n, 1)};
    auto mt = markov_trace(inc);
    CHECK(mt.modulus == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    for (double t : mt.trace_vector)
      CHECK(t == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-12));
    CHECK(mt.residual < 1e-10);
  }
}

TEST_CASE("markov trace of the scalar inclusion") {
  InclusionData inc;
  inc.inclusion_matrix = {{3}};
  auto mt = markov_trace(inc);
  CHECK(mt.modulus == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(mt.trace_vector[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("markov trace of the trivial inclusion") {
  InclusionData inc;
  inc.inclusion_matrix = {{1}};
  auto mt = markov_trace(inc);
  CHECK(mt.modulus == doctest::Approx(1.0));
  CHECK(mt.trace_vector[0] == doctest::Approx(1.0));
}

TEST_CASE("markov trace rejects disconnected inclusions") {
  InclusionData inc;
  inc.inclusion_matrix = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(markov_trace(inc), std::invalid_argument);
}

TEST_CASE("markov trace of a genuinely multi-summand inclusion") {
  // C^2 inside M_2 ⊕ M_3 with inclusion matrix [[1,1],[1,2]]:
  // ΛᵗΛ = [[2,3],[3,5]], modulus the larger eigenvalue.
  InclusionData inc;
  inc.inclusion_matrix = {{1, 1}, {1, 2}};
  auto mt = markov_trace(inc);
  const double expected = (7.0 + std::sqrt(45.0)) / 2.0;
  CHECK(mt.modulus == doctest::Approx(expected).epsilon(1e-10));
  CHECK(mt.residual < 1e-10);
}
