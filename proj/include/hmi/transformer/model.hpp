// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hmi/tensor/matrix.hpp"
#include "hmi/transformer/weights.hpp"

namespace hmi {

inline constexpr std::size_t kFullLength = std::numeric_limits<std::size_t>::max();

// up(relu(down(a))) + a. Zero parameters make this the identity.
Matrix adapter_apply(const Matrix& a, const AdapterParams& p);

// Multi-head scaled dot-product attention including the output projection.
// In causal mode position i attends to positions <= i; in encoder mode to
// every position < valid_len. Keys at or beyond valid_len are never read, so
// output rows below valid_len are invariant to padding rows above it.
Matrix attention(const Matrix& h, const LayerWeights& w, const ModelConfig& config,
                 std::size_t valid_len = kFullLength);

// w2 . relu(w1 . x + b1) + b2
Matrix ffn_forward(const Matrix& x, const LayerWeights& w);

// Post-norm residual layer. The adapter, when present, transforms the
// attention sublayer output before its residual layer norm.
Matrix layer_forward(const Matrix& h, const LayerWeights& w,
                     const AdapterParams* adapter, const ModelConfig& config,
                     std::size_t valid_len = kFullLength);

// Embeds a fragment (token + absolute position embeddings for positions
// 0..len-1) and runs the full lower stack. len must be in [1, max_fragment].
Matrix lower_stack_forward(const ModelArtifacts& model,
                           std::span<const std::uint32_t> tokens);

struct HeadOutput {
  HeadKind kind = HeadKind::cls_classify;
  int label = -1;              // argmax for cls_classify / lm_logits
  std::vector<double> scores;  // logits for cls_classify / lm_logits
  std::vector<int> tags;       // per-token labels for token_tag

  friend bool operator==(const HeadOutput&, const HeadOutput&) = default;
};

// cls_classify reads row 0; token_tag labels rows [0, valid_len);
// lm_logits projects row valid_len-1.
HeadOutput apply_head(const OutputHead& head, const Matrix& h,
                      std::size_t valid_len = kFullLength);

// Runs every higher layer with the per-layer adapters injected (entries may
// be null; an empty span means no adapters at all), then applies the head.
HeadOutput higher_stack_forward(const ModelArtifacts& model, Matrix h,
                                std::span<const AdapterParams* const> adapters,
                                const OutputHead& head);

}  // namespace hmi
