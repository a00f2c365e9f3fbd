// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "hmi/adapters/adapter_set.hpp"
#include "hmi/tensor/matrix.hpp"

namespace hmi::adapters {

// One layer's adapter parameters stacked across the requests of a batch,
// order-preserving, ready for batched matrix multiplication.
struct StackedAdapters {
  std::uint32_t layer_index = 0;
  MatrixBatch w_down;                       // batch of d x r
  MatrixBatch w_up;                         // batch of r x d
  std::vector<std::vector<double>> b_down;  // batch of r
  std::vector<std::vector<double>> b_up;    // batch of d
};

// All sets must share d and r. layer_index must be valid for every set.
StackedAdapters stack(std::span<const AdapterSet* const> sets,
                      std::uint32_t layer_index);

// Element i equals adapter_apply(h_i, sets[i].layers[layer_index]) bit for
// bit: two batched products, bias, relu, skip connection, in the same
// per-element order as the scalar path.
MatrixBatch batched_adapter_apply(const MatrixBatch& h, const StackedAdapters& s);

}  // namespace hmi::adapters
