// SPDX-License-Identifier: Apache-2.0

#include "hmi/adapters/adapter_set.hpp"

#include "hmi/errors.hpp"
#include "hmi/io/binary.hpp"
#include "hmi/rng.hpp"

namespace hmi::adapters {

namespace {
constexpr char kMagic[4] = {'A', 'D', 'P', '1'};
}

AdapterSet generate_adapter_set(const std::string& task_id, const ModelConfig& config,
                                std::uint32_t bottleneck, std::uint64_t seed) {
  Xoshiro256pp rng(seed);
  AdapterSet set;
  set.task_id = task_id;
  set.layers.reserve(config.higher_layers);
  for (std::uint32_t l = 0; l < config.higher_layers; ++l) {
    set.layers.push_back(generate_adapter_params(config, l, bottleneck, rng));
  }
  return set;
}

void save_adapter_set(const AdapterSet& set, const std::filesystem::path& path) {
  if (set.layers.empty()) {
    throw ConfigError("adapter set has no layers");
  }
  const std::uint32_t d = static_cast<std::uint32_t>(set.layers.front().w_down.rows());
  const std::uint32_t r = static_cast<std::uint32_t>(set.layers.front().bottleneck());
  io::BinaryWriter w(path);
  w.magic(kMagic);
  w.str(set.task_id);
  w.u32(static_cast<std::uint32_t>(set.layers.size()));
  w.u32(d);
  w.u32(r);
  for (const AdapterParams& p : set.layers) {
    w.f32_from_f64(p.w_down.flat());
    w.f32_from_f64(p.b_down);
    w.f32_from_f64(p.w_up.flat());
    w.f32_from_f64(p.b_up);
  }
  w.close();
}

AdapterSet load_adapter_set(const std::filesystem::path& path) {
  io::BinaryReader r(path);
  r.magic(kMagic);
  AdapterSet set;
  set.task_id = r.str();
  const std::uint32_t layers = r.u32();
  const std::uint32_t d = r.u32();
  const std::uint32_t rank = r.u32();
  if (layers == 0 || d == 0 || rank == 0 || rank >= d) {
    throw FormatError("adapter header dimensions invalid", r.offset());
  }
  set.layers.reserve(layers);
  for (std::uint32_t l = 0; l < layers; ++l) {
    AdapterParams p;
    p.layer_index = l;
    p.w_down = Matrix(d, rank);
    r.f32_to_f64(p.w_down.flat());
    p.b_down.resize(rank);
    r.f32_to_f64(p.b_down);
    p.w_up = Matrix(rank, d);
    r.f32_to_f64(p.w_up.flat());
    p.b_up.resize(d);
    r.f32_to_f64(p.b_up);
    set.layers.push_back(std::move(p));
  }
  r.expect_end();
  return set;
}

}  // namespace hmi::adapters
