#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ppdim/commuting_square.hpp"
#include "ppdim/hadamard.hpp"

using namespace ppdim;

namespace {

// Character diagonals diag(w^{jk}), the unitary orthonormal basis of
// Delta_n over the scalars.
std::vector<ComplexMatrix> character_basis(std::size_t n) {
  std::vector<ComplexMatrix> out;
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix d(n);
    for (std::size_t k = 0; k < n; ++k) d(k, k) = cplx(std::cos(w * j * k), std::sin(w * j * k));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

TEST_CASE("spin squares commute, P = Q does not") {
  for (std::size_t n : {2, 3, 5}) {
    auto q = spin_square(fourier_hadamard(n));
    auto rep = is_commuting_square(q);
    CHECK(rep.commuting);
    CHECK(rep.residual_pq < 1e-11);
    CHECK(rep.residual_qp < 1e-11);
  }

  QuadrupleOfAlgebras bad;
  bad.N = StarSubalgebra::scalars(2);
  bad.P = StarSubalgebra::diagonal(2);
  bad.Q = StarSubalgebra::diagonal(2);
  bad.M = StarSubalgebra::full(2);
  CHECK(!is_commuting_square(bad).commuting);  // E_D E_D = E_D != E_C
}

TEST_CASE("P = M commutes exactly when Q = N") {
  QuadrupleOfAlgebras q;
  q.N = StarSubalgebra::diagonal(2);
  q.P = StarSubalgebra::full(2);
  q.Q = StarSubalgebra::diagonal(2);
  q.M = StarSubalgebra::full(2);
  CHECK(is_commuting_square(q).commuting);
}

TEST_CASE("commuting test is symmetric in P and Q") {
  auto q = spin_square(fourier_hadamard(3));
  QuadrupleOfAlgebras swapped = q;
  std::swap(swapped.P, swapped.Q);
  CHECK(is_commuting_square(q).commuting == is_commuting_square(swapped).commuting);
}

TEST_CASE("nondegeneracy") {
  auto q = spin_square(fourier_hadamard(4));
  auto nd = is_nondegenerate(q);
  CHECK(nd.nondegenerate);
  CHECK(nd.span_dim == 16);
  // Sanity bound: dim P * dim Q >= dim M when nondegenerate.
  CHECK(q.P.vs_dim() * q.Q.vs_dim() >= q.M.vs_dim());

  QuadrupleOfAlgebras degenerate;
  degenerate.N = StarSubalgebra::scalars(2);
  degenerate.P = StarSubalgebra::diagonal(2);
  degenerate.Q = StarSubalgebra::diagonal(2);
  degenerate.M = StarSubalgebra::full(2);
  auto bad = is_nondegenerate(degenerate);
  CHECK(!bad.nondegenerate);
  CHECK(bad.span_dim == 2);
}

TEST_CASE("basis transfer across spin squares") {
  for (std::size_t n : {2, 3, 4}) {
    auto q = spin_square(fourier_hadamard(n));
    auto rep = basis_transfer_check(q, character_basis(n));
    CHECK(rep.precondition_ok);
    CHECK(rep.pass);
    CHECK(rep.orthonormality_residual < 1e-11);
    CHECK(rep.completeness_residual < 1e-11);
  }
}

TEST_CASE("basis transfer trivial and failure modes") {
  // P = Q = N: the one-element basis {1} transfers trivially.
  QuadrupleOfAlgebras triv;
  triv.N = StarSubalgebra::scalars(2);
  triv.P = StarSubalgebra::scalars(2);
  triv.Q = StarSubalgebra::scalars(2);
  triv.M = StarSubalgebra::full(2);
  auto rep = basis_transfer_check(triv, {ComplexMatrix::identity(2)});
  CHECK(rep.precondition_ok);
  // {1} is a basis for P/N but not for M/Q here; the report reflects that.
  CHECK(!rep.pass);

  // Not a commuting square: flagged as a precondition failure, not a result.
  QuadrupleOfAlgebras bad;
  bad.N = StarSubalgebra::scalars(2);
  bad.P = StarSubalgebra::diagonal(2);
  bad.Q = StarSubalgebra::diagonal(2);
  bad.M = StarSubalgebra::full(2);
  auto rep2 = basis_transfer_check(bad, character_basis(2));
  CHECK(!rep2.precondition_ok);
  CHECK(rep2.precondition_failure == "quadruple is not a commuting square");

  // Commuting square but b is not a basis for P over N.
  auto q = spin_square(fourier_hadamard(2));
  auto rep3 = basis_transfer_check(q, {ComplexMatrix::identity(2), ComplexMatrix::identity(2)});
  CHECK(!rep3.precondition_ok);
  CHECK(rep3.precondition_failure == "b is not an orthonormal basis for P over N");
}

TEST_CASE("degenerate square where P = Q = N transfers trivially per the spec sense") {
  // (N ⊂ N, N ⊂ M) with N the scalars is a commuting square; the singleton
  // basis works on both levels when M = N too.
  QuadrupleOfAlgebras q;
  q.N = StarSubalgebra::scalars(3);
  q.P = StarSubalgebra::scalars(3);
  q.Q = StarSubalgebra::scalars(3);
  q.M = StarSubalgebra::scalars(3);
  auto rep = basis_transfer_check(q, {ComplexMatrix::identity(3)});
  CHECK(rep.precondition_ok);
  CHECK(rep.pass);
}
