#include "ppdim/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

namespace ppdim::kernels {

namespace {

// One output row of c = a b, accumulating over k in ascending order.
inline void row_nn(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t i) {
  cplx* ci = c + i * n;
  std::fill(ci, ci + n, cplx(0.0, 0.0));
  const cplx* ai = a + i * n;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx aik = ai[k];
    if (aik == cplx(0.0, 0.0)) continue;
    const cplx* bk = b + k * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
  }
}

// One output row of c = a* b: c(i,j) = sum_k conj(a(k,i)) b(k,j).
inline void row_hn(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t i) {
  cplx* ci = c + i * n;
  std::fill(ci, ci + n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    const cplx aki = std::conj(a[k * n + i]);
    if (aki == cplx(0.0, 0.0)) continue;
    const cplx* bk = b + k * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] += aki * bk[j];
  }
}

// One output row of c = a b*: c(i,j) = sum_k a(i,k) conj(b(j,k)).
inline void row_nh(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t i) {
  cplx* ci = c + i * n;
  const cplx* ai = a + i * n;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx* bj = b + j * n;
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) acc += ai[k] * std::conj(bj[k]);
    ci[j] = acc;
  }
}

inline cplx dot_row(const cplx* a, const cplx* b, std::size_t n, std::size_t i) {
  cplx acc(0.0, 0.0);
  const cplx* ai = a + i * n;
  const cplx* bi = b + i * n;
  for (std::size_t j = 0; j < n; ++j) acc += std::conj(ai[j]) * bi[j];
  return acc;
}

inline double frob_row(const cplx* a, std::size_t n, std::size_t i) {
  double acc = 0.0;
  const cplx* ai = a + i * n;
  for (std::size_t j = 0; j < n; ++j) acc += std::norm(ai[j]);
  return acc;
}

}  // namespace

namespace serial {

void gemm_nn(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) row_nn(a, b, c, n, i);
}

void gemm_hn(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) row_hn(a, b, c, n, i);
}

void gemm_nh(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) row_nh(a, b, c, n, i);
}

void adjoint(const cplx* a, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = std::conj(a[j * n + i]);
}

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += dot_row(a, b, n, i);
  return acc;
}

double frobenius_sq(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += frob_row(a, n, i);
  return acc;
}

double max_abs(const cplx* a, std::size_t len) {
  double m = 0.0;
  for (std::size_t i = 0; i < len; ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t len) {
  double m = 0.0;
  for (std::size_t i = 0; i < len; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace serial

namespace parallel {

void gemm_nn(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    row_nn(a, b, c, n, static_cast<std::size_t>(i));
}

void gemm_hn(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    row_hn(a, b, c, n, static_cast<std::size_t>(i));
}

void gemm_nh(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    row_nh(a, b, c, n, static_cast<std::size_t>(i));
}

void adjoint(const cplx* a, cplx* c, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[static_cast<std::size_t>(i) * n + j] = std::conj(a[j * n + static_cast<std::size_t>(i)]);
}

// Row partials are combined in ascending row order, exactly as in the serial
// version, so the result is bitwise identical.
cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  std::vector<cplx> partial(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    partial[static_cast<std::size_t>(i)] = dot_row(a, b, n, static_cast<std::size_t>(i));
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += partial[i];
  return acc;
}

double frobenius_sq(const cplx* a, std::size_t n) {
  std::vector<double> partial(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    partial[static_cast<std::size_t>(i)] = frob_row(a, n, static_cast<std::size_t>(i));
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += partial[i];
  return acc;
}

double max_abs(const cplx* a, std::size_t len) {
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(len); ++i)
    m = std::max(m, std::abs(a[static_cast<std::size_t>(i)]));
  return m;
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t len) {
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(len); ++i)
    m = std::max(m, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
  return m;
}

}  // namespace parallel

std::size_t parallel_threshold() { return 64; }

#define PPDIM_DISPATCH(fn, size_expr, ...)              \
  do {                                                  \
    if ((size_expr) >= parallel_threshold())            \
      return parallel::fn(__VA_ARGS__);                 \
    return serial::fn(__VA_ARGS__);                     \
  } while (0)

void gemm_nn(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  PPDIM_DISPATCH(gemm_nn, n, a, b, c, n);
}
void gemm_hn(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  PPDIM_DISPATCH(gemm_hn, n, a, b, c, n);
}
void gemm_nh(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  PPDIM_DISPATCH(gemm_nh, n, a, b, c, n);
}
void adjoint(const cplx* a, cplx* c, std::size_t n) { PPDIM_DISPATCH(adjoint, n, a, c, n); }
cplx dot(const cplx* a, const cplx* b, std::size_t n) { PPDIM_DISPATCH(dot, n, a, b, n); }
double frobenius_sq(const cplx* a, std::size_t n) { PPDIM_DISPATCH(frobenius_sq, n, a, n); }
double max_abs(const cplx* a, std::size_t len) { PPDIM_DISPATCH(max_abs, len, a, len); }
double max_abs_diff(const cplx* a, const cplx* b, std::size_t len) {
  PPDIM_DISPATCH(max_abs_diff, len, a, b, len);
}

#undef PPDIM_DISPATCH

}  // namespace ppdim::kernels
