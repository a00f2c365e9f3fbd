// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace hmi::kernels {

// Row-major f64 microkernels. Every variant implements the same contract as
// the scalar reference; gemm accumulates over k in ascending order, so a
// given variant produces identical bits for identical shapes regardless of
// call site or batching. Variants are selected once at startup (best
// supported by the CPU) and can be overridden with set_active() or the
// HMI_KERNELS environment variable.
struct KernelTable {
  const char* name;
  // c[m x n] := beta*c + alpha*(a[m x k] . b[k x n])
  void (*gemm_f64)(const double* a, const double* b, double* c, std::size_t m,
                   std::size_t k, std::size_t n, double alpha, double beta);
  // out = x + y
  void (*add_f64)(const double* x, const double* y, double* out, std::size_t n);
  // y += a*x
  void (*axpy_f64)(double a, const double* x, double* y, std::size_t n);
  // x = max(x, 0)
  void (*relu_f64)(double* x, std::size_t n);
};

const KernelTable& scalar_table();

// All variants runnable on this CPU; scalar is always first.
std::vector<const KernelTable*> available_tables();

const KernelTable& active();

// "scalar", "avx2", "neon". Returns false if the name is unknown or the CPU
// does not support the variant.
bool set_active(std::string_view name);

}  // namespace hmi::kernels
