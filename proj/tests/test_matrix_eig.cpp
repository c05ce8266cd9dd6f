#include <doctest.h>

#include <random>

#include "ppdim/complex_matrix.hpp"
#include "ppdim/eig.hpp"

using namespace ppdim;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = dist(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = cplx(dist(rng), dist(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace

TEST_CASE("matrix predicates") {
  ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(id.is_unitary());
  CHECK(id.is_projection());
  CHECK(id.is_hermitian());

  ComplexMatrix e12 = ComplexMatrix::unit(2, 0, 1);
  CHECK(!e12.is_hermitian(1e-10));
  CHECK(!e12.is_unitary(1e-10));

  ComplexMatrix p(2);
  p(0, 0) = 1.0;
  CHECK(p.is_projection());
  CHECK(!p.is_unitary(1e-10));
}

TEST_CASE("tensor and direct sum shapes") {
  ComplexMatrix a = ComplexMatrix::unit(2, 0, 1);
  ComplexMatrix b = ComplexMatrix::identity(3);
  ComplexMatrix t = tensor(a, b);
  CHECK(t.dim() == 6);
  CHECK(t(0, 3) == cplx(1, 0));
  CHECK(t(2, 5) == cplx(1, 0));
  ComplexMatrix d = direct_sum(a, b);
  CHECK(d.dim() == 5);
  CHECK(d(0, 1) == cplx(1, 0));
  CHECK(d(3, 3) == cplx(1, 0));
}

TEST_CASE("hermitian eigensolver reconstructs the input") {
  for (std::size_t n : {1, 2, 5, 12, 30}) {
    ComplexMatrix h = random_hermitian(n, 500 + n);
    EigResult e = hermitian_eig(h);
    CHECK(e.vectors.is_unitary(1e-11));
    ComplexMatrix rec(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          rec(i, j) += e.values[c] * e.vectors(i, c) * std::conj(e.vectors(j, c));
    CHECK(max_abs_diff(rec, h) < 1e-11);
    for (std::size_t c = 1; c < n; ++c) CHECK(e.values[c - 1] <= e.values[c]);
  }
}

TEST_CASE("known eigenvalues") {
  // Pauli x on C^2: eigenvalues -1, 1.
  ComplexMatrix sx(2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  EigResult e = hermitian_eig(sx);
  CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hermitian_operator_norm(sx) == doctest::Approx(1.0));
}

TEST_CASE("rank by threshold on a PSD gram") {
  // vv* + ww* with independent v, w has rank 2.
  ComplexMatrix g(3);
  g(0, 0) = 2.0;
  g(1, 1) = 1.0;  // = diag(2,1,0)
  CHECK(rank_by_threshold(g, 1e-9) == 2);
  CHECK(rank_by_threshold(ComplexMatrix::zero(3), 1e-9) == 0);
  CHECK(rank_by_threshold(ComplexMatrix::identity(4), 1e-9) == 4);
}
