// SPDX-License-Identifier: Apache-2.0

#include "hmi/transformer/weights.hpp"

#include <string>

#include "hmi/errors.hpp"
#include "hmi/rng.hpp"

namespace hmi {
namespace {

double draw(Xoshiro256pp& rng) {
  return static_cast<double>(static_cast<float>(rng.uniform(-0.05, 0.05)));
}

Matrix draw_matrix(Xoshiro256pp& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (double& v : m.flat()) v = draw(rng);
  return m;
}

std::vector<double> draw_vector(Xoshiro256pp& rng, std::size_t n, double base = 0.0) {
  std::vector<double> v(n);
  for (double& x : v) {
    x = static_cast<double>(static_cast<float>(base + rng.uniform(-0.05, 0.05)));
  }
  return v;
}

LayerWeights draw_layer(Xoshiro256pp& rng, const ModelConfig& c) {
  const std::size_t d = c.hidden_size;
  const std::size_t f = c.ffn_size;
  LayerWeights w;
  w.wq = draw_matrix(rng, d, d);
  w.bq = draw_vector(rng, d);
  w.wk = draw_matrix(rng, d, d);
  w.bk = draw_vector(rng, d);
  w.wv = draw_matrix(rng, d, d);
  w.bv = draw_vector(rng, d);
  w.wo = draw_matrix(rng, d, d);
  w.bo = draw_vector(rng, d);
  w.w1 = draw_matrix(rng, d, f);
  w.b1 = draw_vector(rng, f);
  w.w2 = draw_matrix(rng, f, d);
  w.b2 = draw_vector(rng, d);
  w.ln1_gain = draw_vector(rng, d, 1.0);
  w.ln1_shift = draw_vector(rng, d);
  w.ln2_gain = draw_vector(rng, d, 1.0);
  w.ln2_shift = draw_vector(rng, d);
  return w;
}

}  // namespace

void ModelConfig::validate() const {
  if (hidden_size == 0 || heads == 0 || hidden_size % heads != 0) {
    throw ConfigError("hidden_size must be a positive multiple of heads");
  }
  if (lower_layers < 1 || higher_layers < 1) {
    throw ConfigError("lower_layers and higher_layers must both be >= 1");
  }
  if (ffn_size == 0 || vocab_size == 0) {
    throw ConfigError("ffn_size and vocab_size must be positive");
  }
  if (max_fragment != 1 && max_fragment != 2 && max_fragment != 3 &&
      max_fragment != 5) {
    throw ConfigError("max_fragment must be one of {1, 2, 3, 5}");
  }
}

ModelArtifacts generate_model(const ModelConfig& config) {
  config.validate();
  Xoshiro256pp rng(config.seed);
  ModelArtifacts m;
  m.config = config;
  m.token_embedding = draw_matrix(rng, config.vocab_size, config.hidden_size);
  m.position_embedding = draw_matrix(rng, config.max_fragment, config.hidden_size);
  m.lower.reserve(config.lower_layers);
  for (std::uint32_t i = 0; i < config.lower_layers; ++i) {
    m.lower.push_back(draw_layer(rng, config));
  }
  m.higher.reserve(config.higher_layers);
  for (std::uint32_t i = 0; i < config.higher_layers; ++i) {
    m.higher.push_back(draw_layer(rng, config));
  }
  return m;
}

AdapterParams generate_adapter_params(const ModelConfig& config,
                                      std::uint32_t layer_index,
                                      std::uint32_t bottleneck, Xoshiro256pp& rng) {
  if (bottleneck == 0 || bottleneck >= config.hidden_size) {
    throw ConfigError("adapter bottleneck must be in [1, hidden_size)");
  }
  AdapterParams p;
  p.layer_index = layer_index;
  p.w_down = draw_matrix(rng, config.hidden_size, bottleneck);
  p.b_down = draw_vector(rng, bottleneck);
  p.w_up = draw_matrix(rng, bottleneck, config.hidden_size);
  p.b_up = draw_vector(rng, config.hidden_size);
  return p;
}

OutputHead generate_output_head(const std::string& task_id, HeadKind kind,
                                std::uint32_t labels, const ModelConfig& config,
                                std::uint64_t seed) {
  if (labels < 1) {
    throw ConfigError("output head needs at least one label");
  }
  Xoshiro256pp rng(seed);
  OutputHead head;
  head.task_id = task_id;
  head.kind = kind;
  head.w = draw_matrix(rng, config.hidden_size, labels);
  head.b = draw_vector(rng, labels);
  return head;
}

std::size_t layer_parameter_count(const ModelConfig& c) {
  const std::size_t d = c.hidden_size;
  const std::size_t f = c.ffn_size;
  return 4 * (d * d + d) + (d * f + f) + (f * d + d) + 4 * d;
}

std::size_t model_parameter_count(const ModelConfig& c) {
  const std::size_t embeddings =
      std::size_t{c.vocab_size} * c.hidden_size + std::size_t{c.max_fragment} * c.hidden_size;
  return embeddings + (c.lower_layers + c.higher_layers) * layer_parameter_count(c);
}

std::size_t adapter_layer_parameter_count(const ModelConfig& c, std::uint32_t r) {
  const std::size_t d = c.hidden_size;
  return d * r + r + r * d + d;
}

}  // namespace hmi
