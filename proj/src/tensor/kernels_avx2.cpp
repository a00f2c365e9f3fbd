// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA variants. Compiled with -mavx2 -mfma in its own translation unit;
// only reachable through the dispatch table after a runtime CPUID check.
// Accumulation order over k matches the scalar reference; the j tail uses
// std::fma so every element of this variant is a single-rounded fma chain.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "hmi/tensor/kernels.hpp"

namespace hmi::kernels {
namespace {

void gemm_avx2(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n, double alpha, double beta) {
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    if (beta == 0.0) {
      for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    } else if (beta != 1.0) {
      const __m256d vb = _mm256_set1_pd(beta);
      std::size_t j = 0;
      for (; j < n4; j += 4) {
        _mm256_storeu_pd(crow + j, _mm256_mul_pd(_mm256_loadu_pd(crow + j), vb));
      }
      for (; j < n; ++j) crow[j] *= beta;
    }
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = alpha * a[i * k + p];
      const double* brow = b + p * n;
      const __m256d va = _mm256_set1_pd(aip);
      std::size_t j = 0;
      for (; j < n4; j += 4) {
        const __m256d acc = _mm256_loadu_pd(crow + j);
        _mm256_storeu_pd(crow + j,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + j), acc));
      }
      for (; j < n; ++j) crow[j] = std::fma(aip, brow[j], crow[j]);
    }
  }
}

void add_avx2(const double* x, const double* y, double* out, std::size_t n) {
  const std::size_t n4 = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] + y[i];
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    _mm256_storeu_pd(
        y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void relu_avx2(double* x, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    // andnot keeps the scalar semantics for -0.0 (x < 0 is false).
    const __m256d neg = _mm256_cmp_pd(v, zero, _CMP_LT_OQ);
    _mm256_storeu_pd(x + i, _mm256_andnot_pd(neg, v));
  }
  for (; i < n; ++i) {
    if (x[i] < 0.0) x[i] = 0.0;
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", gemm_avx2, add_avx2, axpy_avx2,
                                 relu_avx2};
  return table;
}

}  // namespace hmi::kernels

#endif  // x86_64
