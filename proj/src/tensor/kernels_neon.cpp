// SPDX-License-Identifier: Apache-2.0
//
// NEON variants for aarch64, where 128-bit SIMD is baseline.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

#include "hmi/tensor/kernels.hpp"

namespace hmi::kernels {
namespace {

void gemm_neon(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n, double alpha, double beta) {
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    if (beta == 0.0) {
      for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    } else if (beta != 1.0) {
      for (std::size_t j = 0; j < n; ++j) crow[j] *= beta;
    }
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = alpha * a[i * k + p];
      const double* brow = b + p * n;
      const float64x2_t va = vdupq_n_f64(aip);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const float64x2_t acc = vld1q_f64(crow + j);
        vst1q_f64(crow + j, vfmaq_f64(acc, va, vld1q_f64(brow + j)));
      }
      for (; j < n; ++j) crow[j] = std::fma(aip, brow[j], crow[j]);
    }
  }
}

void add_neon(const double* x, const double* y, double* out, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] + y[i];
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void relu_neon(double* x, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    const uint64x2_t neg = vcltq_f64(v, zero);
    vst1q_f64(x + i, vreinterpretq_f64_u64(vbicq_u64(vreinterpretq_u64_f64(v), neg)));
  }
  for (; i < n; ++i) {
    if (x[i] < 0.0) x[i] = 0.0;
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{"neon", gemm_neon, add_neon, axpy_neon,
                                 relu_neon};
  return table;
}

}  // namespace hmi::kernels

#endif  // __aarch64__
