// Throughput comparison between the serial reference kernels and the OpenMP
// ones, on the sizes the library actually runs at.

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "ppdim/kernels.hpp"

namespace {

using ppdim::kernels::cplx;

std::vector<cplx> random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> m(n * n);
  for (auto& v : m) v = cplx(dist(rng), dist(rng));
  return m;
}

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  std::printf("%6s %6s %14s %14s %9s %10s\n", "kernel", "n", "serial (ms)", "openmp (ms)",
              "speedup", "agree");
  for (std::size_t n : {32, 64, 128, 256, 512}) {
    auto a = random_matrix(n, 11 + n);
    auto b = random_matrix(n, 23 + n);
    std::vector<cplx> c1(n * n), c2(n * n);
    const int reps = n <= 128 ? 20 : 4;

    const double ts = time_ms([&] { ppdim::kernels::serial::gemm_nn(a.data(), b.data(), c1.data(), n); }, reps);
    const double tp = time_ms([&] { ppdim::kernels::parallel::gemm_nn(a.data(), b.data(), c2.data(), n); }, reps);
    const bool agree = c1 == c2;  // bitwise, by construction
    std::printf("%6s %6zu %14.3f %14.3f %8.2fx %10s\n", "gemm", n, ts, tp, ts / tp,
                agree ? "bitwise" : "MISMATCH");

    const double fs = time_ms([&] { (void)ppdim::kernels::serial::frobenius_sq(a.data(), n); }, reps * 10);
    const double fp = time_ms([&] { (void)ppdim::kernels::parallel::frobenius_sq(a.data(), n); }, reps * 10);
    const bool fagree =
        ppdim::kernels::serial::frobenius_sq(a.data(), n) ==
        ppdim::kernels::parallel::frobenius_sq(a.data(), n);
    std::printf("%6s %6zu %14.3f %14.3f %8.2fx %10s\n", "frob", n, fs, fp, fs / fp,
                fagree ? "bitwise" : "MISMATCH");
  }
  return 0;
}
