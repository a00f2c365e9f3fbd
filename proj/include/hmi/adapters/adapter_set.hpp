// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hmi/transformer/weights.hpp"

namespace hmi::adapters {

// One tenant task's adapters, one per higher layer. Host-resident; the
// device pool accounts for them in float32 bytes.
struct AdapterSet {
  std::string task_id;
  std::vector<AdapterParams> layers;

  std::size_t parameter_count() const noexcept {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.parameter_count();
    return n;
  }
  std::size_t layer_byte_size(std::size_t layer) const noexcept {
    return layers[layer].parameter_count() * sizeof(float);
  }
  std::size_t byte_size() const noexcept { return parameter_count() * sizeof(float); }

  friend bool operator==(const AdapterSet&, const AdapterSet&) = default;
};

AdapterSet generate_adapter_set(const std::string& task_id, const ModelConfig& config,
                                std::uint32_t bottleneck, std::uint64_t seed);

// "ADP1" adapter file.
void save_adapter_set(const AdapterSet& set, const std::filesystem::path& path);
AdapterSet load_adapter_set(const std::filesystem::path& path);

}  // namespace hmi::adapters
