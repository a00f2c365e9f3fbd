// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hmi/rng.hpp"
#include "hmi/tensor/matrix.hpp"
#include "hmi/transformer/config.hpp"

namespace hmi {

struct LayerWeights {
  Matrix wq, wk, wv, wo;               // d x d
  std::vector<double> bq, bk, bv, bo;  // d
  Matrix w1;                           // d x ffn
  std::vector<double> b1;              // ffn
  Matrix w2;                           // ffn x d
  std::vector<double> b2;              // d
  std::vector<double> ln1_gain, ln1_shift, ln2_gain, ln2_shift;  // d

  friend bool operator==(const LayerWeights&, const LayerWeights&) = default;
};

// Bottleneck adapter for one transformer layer:
//   up(relu(down(a))) + a
struct AdapterParams {
  std::uint32_t layer_index = 0;
  Matrix w_down;               // d x r
  std::vector<double> b_down;  // r
  Matrix w_up;                 // r x d
  std::vector<double> b_up;    // d

  std::size_t bottleneck() const noexcept { return w_down.cols(); }
  std::size_t parameter_count() const noexcept {
    return w_down.size() + b_down.size() + w_up.size() + b_up.size();
  }

  friend bool operator==(const AdapterParams&, const AdapterParams&) = default;
};

enum class HeadKind : std::uint32_t { cls_classify = 0, token_tag = 1, lm_logits = 2 };

struct OutputHead {
  std::string task_id;
  HeadKind kind = HeadKind::cls_classify;
  Matrix w;                // d x labels
  std::vector<double> b;   // labels

  std::size_t labels() const noexcept { return b.size(); }

  friend bool operator==(const OutputHead&, const OutputHead&) = default;
};

// Shared transformer weights: lower stack feeds the offline table builder,
// higher stack serves online with injected adapters.
struct ModelArtifacts {
  ModelConfig config;
  Matrix token_embedding;     // vocab x d
  Matrix position_embedding;  // n x d
  std::vector<LayerWeights> lower;
  std::vector<LayerWeights> higher;

  friend bool operator==(const ModelArtifacts&, const ModelArtifacts&) = default;
};

// All generated weights are drawn from xoshiro256++(seed) in declaration
// order, uniform(-0.05, 0.05), quantized to float32 so artifacts survive the
// file format bit-exactly. Layer-norm gains are 1 + u, shifts u.
ModelArtifacts generate_model(const ModelConfig& config);
AdapterParams generate_adapter_params(const ModelConfig& config, std::uint32_t layer_index,
                                      std::uint32_t bottleneck, Xoshiro256pp& rng);
OutputHead generate_output_head(const std::string& task_id, HeadKind kind,
                                std::uint32_t labels, const ModelConfig& config,
                                std::uint64_t seed);

std::size_t layer_parameter_count(const ModelConfig& config);
std::size_t model_parameter_count(const ModelConfig& config);
std::size_t adapter_layer_parameter_count(const ModelConfig& config,
                                          std::uint32_t bottleneck);

// "HMI1" artifact container.
void save_model(const ModelArtifacts& model, const std::filesystem::path& path);
ModelArtifacts load_model(const std::filesystem::path& path);

}  // namespace hmi
