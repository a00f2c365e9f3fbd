// SPDX-License-Identifier: Apache-2.0

#include "hmi/adapters/stacked.hpp"

#include <string>

#include "hmi/errors.hpp"
#include "hmi/tensor/ops.hpp"

namespace hmi::adapters {

StackedAdapters stack(std::span<const AdapterSet* const> sets,
                      std::uint32_t layer_index) {
  if (sets.empty()) {
    throw DimensionError("cannot stack an empty adapter list");
  }
  std::vector<Matrix> down, up;
  StackedAdapters out;
  out.layer_index = layer_index;
  down.reserve(sets.size());
  up.reserve(sets.size());
  const std::size_t d = sets.front()->layers.at(layer_index).w_down.rows();
  const std::size_t r = sets.front()->layers.at(layer_index).bottleneck();
  for (const AdapterSet* set : sets) {
    if (layer_index >= set->layers.size()) {
      throw DimensionError("layer index " + std::to_string(layer_index) +
                           " outside adapter set " + set->task_id);
    }
    const AdapterParams& p = set->layers[layer_index];
    if (p.w_down.rows() != d || p.bottleneck() != r) {
      throw DimensionError("adapter set " + set->task_id +
                           " has mismatched stacking shape");
    }
    down.push_back(p.w_down);
    up.push_back(p.w_up);
    out.b_down.push_back(p.b_down);
    out.b_up.push_back(p.b_up);
  }
  out.w_down = MatrixBatch(std::move(down));
  out.w_up = MatrixBatch(std::move(up));
  return out;
}

MatrixBatch batched_adapter_apply(const MatrixBatch& h, const StackedAdapters& s) {
  if (h.size() != s.w_down.size()) {
    throw DimensionError("activation batch and stacked adapter batch differ");
  }
  if (h.cols() != s.w_down.rows()) {
    throw DimensionError("activation width does not match adapter input width");
  }
  MatrixBatch mid = batched_matmul(MatrixBatch::zeros(h.size(), h.rows(), s.w_down.cols()),
                                   h, s.w_down, 1.0, 0.0);
  for (std::size_t i = 0; i < mid.size(); ++i) {
    add_bias_inplace(mid[i], s.b_down[i]);
    relu_inplace(mid[i]);
  }
  MatrixBatch out = batched_matmul(MatrixBatch::zeros(h.size(), h.rows(), h.cols()),
                                   mid, s.w_up, 1.0, 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    add_bias_inplace(out[i], s.b_up[i]);
    add_inplace(out[i], h[i]);
  }
  return out;
}

}  // namespace hmi::adapters
