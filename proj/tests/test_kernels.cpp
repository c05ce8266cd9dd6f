#include <doctest.h>

#include <random>
#include <vector>

#include "ppdim/kernels.hpp"

namespace k = ppdim::kernels;
using k::cplx;

namespace {

std::vector<cplx> random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> m(n * n);
  for (auto& v : m) v = cplx(dist(rng), dist(rng));
  return m;
}

// Textbook j-inner product, deliberately written differently from the
// kernels, as the reference.
std::vector<cplx> naive_gemm(const std::vector<cplx>& a, const std::vector<cplx>& b,
                             std::size_t n) {
  std::vector<cplx> c(n * n, cplx(0, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc(0, 0);
      for (std::size_t t = 0; t < n; ++t) acc += a[i * n + t] * b[t * n + j];
      c[i * n + j] = acc;
    }
  return c;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree bitwise") {
  for (std::size_t n : {1, 2, 7, 16, 64, 129}) {
    auto a = random_matrix(n, 100 + n);
    auto b = random_matrix(n, 200 + n);
    std::vector<cplx> cs(n * n), cp(n * n);

    k::serial::gemm_nn(a.data(), b.data(), cs.data(), n);
    k::parallel::gemm_nn(a.data(), b.data(), cp.data(), n);
    CHECK(cs == cp);

    k::serial::gemm_hn(a.data(), b.data(), cs.data(), n);
    k::parallel::gemm_hn(a.data(), b.data(), cp.data(), n);
    CHECK(cs == cp);

    k::serial::gemm_nh(a.data(), b.data(), cs.data(), n);
    k::parallel::gemm_nh(a.data(), b.data(), cp.data(), n);
    CHECK(cs == cp);

    k::serial::adjoint(a.data(), cs.data(), n);
    k::parallel::adjoint(a.data(), cp.data(), n);
    CHECK(cs == cp);

    CHECK(k::serial::dot(a.data(), b.data(), n) == k::parallel::dot(a.data(), b.data(), n));
    CHECK(k::serial::frobenius_sq(a.data(), n) == k::parallel::frobenius_sq(a.data(), n));
    CHECK(k::serial::max_abs(a.data(), n * n) == k::parallel::max_abs(a.data(), n * n));
    CHECK(k::serial::max_abs_diff(a.data(), b.data(), n * n) ==
          k::parallel::max_abs_diff(a.data(), b.data(), n * n));
  }
}

TEST_CASE("gemm matches the naive triple loop") {
  for (std::size_t n : {3, 8, 33}) {
    auto a = random_matrix(n, 300 + n);
    auto b = random_matrix(n, 400 + n);
    std::vector<cplx> c(n * n);
    k::gemm_nn(a.data(), b.data(), c.data(), n);
    auto ref = naive_gemm(a, b, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) worst = std::max(worst, std::abs(c[i] - ref[i]));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("gemm_hn and gemm_nh are adjoint-consistent with gemm_nn") {
  const std::size_t n = 17;
  auto a = random_matrix(n, 7);
  auto b = random_matrix(n, 8);
  std::vector<cplx> adj(n * n), via_adj(n * n), direct(n * n);

  k::adjoint(a.data(), adj.data(), n);
  k::gemm_nn(adj.data(), b.data(), via_adj.data(), n);
  k::gemm_hn(a.data(), b.data(), direct.data(), n);
  CHECK(k::max_abs_diff(via_adj.data(), direct.data(), n * n) < 1e-13);

  k::adjoint(b.data(), adj.data(), n);
  k::gemm_nn(a.data(), adj.data(), via_adj.data(), n);
  k::gemm_nh(a.data(), b.data(), direct.data(), n);
  CHECK(k::max_abs_diff(via_adj.data(), direct.data(), n * n) < 1e-13);
}

TEST_CASE("adjoint is an involution") {
  const std::size_t n = 23;
  auto a = random_matrix(n, 9);
  std::vector<cplx> once(n * n), twice(n * n);
  k::adjoint(a.data(), once.data(), n);
  k::adjoint(once.data(), twice.data(), n);
  CHECK(a == twice);
}
