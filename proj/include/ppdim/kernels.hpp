#pragma once

#include <complex>
#include <cstddef>

namespace ppdim::kernels {

using cplx = std::complex<double>;

// Dense square-matrix kernels. Every kernel exists twice: a serial reference
// in kernels::serial and an OpenMP version in kernels::parallel. The
// parallel versions keep the per-element accumulation order of the serial
// ones, so the two agree bit for bit; the test suite asserts exact equality
// and tools/bench_kernels compares throughput.
//
// All matrices are row-major, dimension n x n.

namespace serial {

void gemm_nn(const cplx* a, const cplx* b, cplx* c, std::size_t n);  // c = a b
void gemm_hn(const cplx* a, const cplx* b, cplx* c, std::size_t n);  // c = a* b
void gemm_nh(const cplx* a, const cplx* b, cplx* c, std::size_t n);  // c = a b*
void adjoint(const cplx* a, cplx* c, std::size_t n);

// sum_i conj(a_i) b_i with row-blocked partials (rows of length n).
cplx dot(const cplx* a, const cplx* b, std::size_t n);
double frobenius_sq(const cplx* a, std::size_t n);
double max_abs(const cplx* a, std::size_t len);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t len);

}  // namespace serial

namespace parallel {

void gemm_nn(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void gemm_hn(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void gemm_nh(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void adjoint(const cplx* a, cplx* c, std::size_t n);
cplx dot(const cplx* a, const cplx* b, std::size_t n);
double frobenius_sq(const cplx* a, std::size_t n);
double max_abs(const cplx* a, std::size_t len);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t len);

}  // namespace parallel

// Size-dispatched entry points: parallel above the threshold, serial below.
std::size_t parallel_threshold();

void gemm_nn(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void gemm_hn(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void gemm_nh(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void adjoint(const cplx* a, cplx* c, std::size_t n);
cplx dot(const cplx* a, const cplx* b, std::size_t n);
double frobenius_sq(const cplx* a, std::size_t n);
double max_abs(const cplx* a, std::size_t len);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t len);

}  // namespace ppdim::kernels
