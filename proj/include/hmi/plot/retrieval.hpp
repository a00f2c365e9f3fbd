// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hmi/plot/version_tree.hpp"
#include "hmi/transformer/config.hpp"

namespace hmi::plot {

struct WindowRows {
  Matrix rows;                       // window_len x d
  std::vector<std::uint32_t> levels;  // sub-gram length that covered each row
};

// Resolves a fragment of 1..n tokens. If the whole fragment is stored, every
// row comes from it; otherwise each position takes the longest stored
// sub-gram containing it, preferring the leftmost among equals. Uni-grams
// always resolve through the root backstop.
WindowRows resolve_window(const VersionTree& tree, std::uint32_t version_id,
                          std::span<const std::uint32_t> tokens);

struct FallbackResult {
  Matrix reps;                        // n x d
  std::vector<std::uint32_t> levels;  // per position
};

// Exactly-n-token fragment lookup with bi/uni-gram backup.
FallbackResult fallback_retrieve(const VersionTree& tree, std::uint32_t version_id,
                                 std::span<const std::uint32_t> tokens);

// Approximates the lower-stack output for a whole sequence.
// encoder: sweeps n-token windows centered on every position and averages
// each token over the windows that contain it.
// causal: every position comes solely from the window ending at it,
// truncated at the sequence start; no averaging.
Matrix retrieve_sequence(const VersionTree& tree, std::uint32_t version_id,
                         std::span<const std::uint32_t> tokens, AttentionMode mode);

}  // namespace hmi::plot
