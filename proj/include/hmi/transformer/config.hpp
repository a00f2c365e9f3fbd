// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace hmi {

enum class AttentionMode : std::uint32_t { encoder = 0, causal = 1 };

struct ModelConfig {
  std::uint32_t hidden_size = 32;
  std::uint32_t heads = 4;
  std::uint32_t lower_layers = 6;
  std::uint32_t higher_layers = 6;
  std::uint32_t ffn_size = 64;
  std::uint32_t vocab_size = 1024;
  AttentionMode mode = AttentionMode::encoder;
  std::uint32_t max_fragment = 3;  // n
  std::uint32_t seed = 7;

  void validate() const;  // throws ConfigError

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

}  // namespace hmi
