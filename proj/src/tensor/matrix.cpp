// SPDX-License-Identifier: Apache-2.0

#include "hmi/tensor/matrix.hpp"

#include <utility>

#include "hmi/errors.hpp"

namespace hmi {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("matrix data length does not match rows*cols");
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw DimensionError("ragged initializer rows");
    }
    std::size_t j = 0;
    for (double v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

MatrixBatch::MatrixBatch(std::vector<Matrix> items) : items_(std::move(items)) {
  if (items_.empty()) {
    throw DimensionError("matrix batch must hold at least one element");
  }
  for (const Matrix& m : items_) {
    if (!m.same_shape(items_.front())) {
      throw DimensionError("matrix batch elements must share one shape");
    }
  }
}

MatrixBatch MatrixBatch::zeros(std::size_t batch, std::size_t rows,
                               std::size_t cols) {
  return MatrixBatch(std::vector<Matrix>(batch, Matrix(rows, cols)));
}

}  // namespace hmi
