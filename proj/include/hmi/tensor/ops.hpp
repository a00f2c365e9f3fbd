// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "hmi/tensor/matrix.hpp"

namespace hmi {

inline constexpr double kLayerNormEpsilon = 1e-5;

Matrix matmul(const Matrix& a, const Matrix& b);

// c := beta*c + alpha*(a . b)
void matmul_into(Matrix& c, const Matrix& a, const Matrix& b, double alpha,
                 double beta);

// out_i = beta*c_i + alpha*(a_i . b_i), each batch element independent.
MatrixBatch batched_matmul(const MatrixBatch& c, const MatrixBatch& a,
                           const MatrixBatch& b, double alpha, double beta);

Matrix relu(Matrix x);
void relu_inplace(Matrix& x);

Matrix add_bias(Matrix x, std::span<const double> bias);
void add_bias_inplace(Matrix& x, std::span<const double> bias);

// x += y
void add_inplace(Matrix& x, const Matrix& y);
Matrix add(const Matrix& x, const Matrix& y);

// Per-row zero mean / unit variance, then per-column affine gain/shift.
Matrix layer_norm(const Matrix& x, std::span<const double> gain,
                  std::span<const double> shift,
                  double epsilon = kLayerNormEpsilon);

Matrix softmax_rows(Matrix x);

}  // namespace hmi
