// SPDX-License-Identifier: Apache-2.0

#include "hmi/tensor/ops.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hmi/errors.hpp"
#include "hmi/tensor/kernels.hpp"

namespace hmi {
namespace {

void check_bias(const Matrix& x, std::span<const double> bias, const char* op) {
  if (bias.size() != x.cols()) {
    throw DimensionError(std::string(op) + ": bias length " +
                         std::to_string(bias.size()) + " != cols " +
                         std::to_string(x.cols()));
  }
}

}  // namespace

void matmul_into(Matrix& c, const Matrix& a, const Matrix& b, double alpha,
                 double beta) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
  }
  if (c.rows() != a.rows() || c.cols() != b.cols()) {
    throw DimensionError("matmul: output shape mismatch");
  }
  kernels::active().gemm_f64(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                             b.cols(), alpha, beta);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  matmul_into(c, a, b, 1.0, 0.0);
  return c;
}

MatrixBatch batched_matmul(const MatrixBatch& c, const MatrixBatch& a,
                           const MatrixBatch& b, double alpha, double beta) {
  if (a.size() != b.size() || a.size() != c.size()) {
    throw DimensionError("batched_matmul: batch counts differ");
  }
  MatrixBatch out = c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    matmul_into(out[i], a[i], b[i], alpha, beta);
  }
  return out;
}

void relu_inplace(Matrix& x) {
  kernels::active().relu_f64(x.data(), x.size());
}

Matrix relu(Matrix x) {
  relu_inplace(x);
  return x;
}

void add_bias_inplace(Matrix& x, std::span<const double> bias) {
  check_bias(x, bias, "add_bias");
  const auto& k = kernels::active();
  for (std::size_t r = 0; r < x.rows(); ++r) {
    auto row = x.row(r);
    k.add_f64(row.data(), bias.data(), row.data(), row.size());
  }
}

Matrix add_bias(Matrix x, std::span<const double> bias) {
  add_bias_inplace(x, bias);
  return x;
}

void add_inplace(Matrix& x, const Matrix& y) {
  if (!x.same_shape(y)) {
    throw DimensionError("add: shape mismatch");
  }
  kernels::active().add_f64(x.data(), y.data(), x.data(), x.size());
}

Matrix add(const Matrix& x, const Matrix& y) {
  Matrix out = x;
  add_inplace(out, y);
  return out;
}

Matrix layer_norm(const Matrix& x, std::span<const double> gain,
                  std::span<const double> shift, double epsilon) {
  check_bias(x, gain, "layer_norm gain");
  check_bias(x, shift, "layer_norm shift");
  const std::size_t n = x.cols();
  Matrix out(x.rows(), n);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const auto row = x.row(r);
    double mean = 0.0;
    for (double v : row) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : row) {
      const double d = v - mean;
      var += d * d;
    }
    var /= static_cast<double>(n);
    const double inv = 1.0 / std::sqrt(var + epsilon);
    auto orow = out.row(r);
    for (std::size_t j = 0; j < n; ++j) {
      orow[j] = (row[j] - mean) * inv * gain[j] + shift[j];
    }
  }
  return out;
}

Matrix softmax_rows(Matrix x) {
  for (std::size_t r = 0; r < x.rows(); ++r) {
    auto row = x.row(r);
    double mx = row[0];
    for (double v : row) mx = std::max(mx, v);
    double sum = 0.0;
    for (double& v : row) {
      v = std::exp(v - mx);
      sum += v;
    }
    for (double& v : row) v /= sum;
  }
  return x;
}

}  // namespace hmi
