// SPDX-License-Identifier: Apache-2.0
//
// "HMI1" model container: 4-byte magic, config fields as little-endian
// 32-bit integers, then every weight matrix in declaration order as
// float32 row-major blobs.

#include "hmi/io/binary.hpp"
#include "hmi/transformer/weights.hpp"

namespace hmi {
namespace {

constexpr char kMagic[4] = {'H', 'M', 'I', '1'};

void write_layer(io::BinaryWriter& w, const LayerWeights& l) {
  w.f32_from_f64(l.wq.flat());
  w.f32_from_f64(l.bq);
  w.f32_from_f64(l.wk.flat());
  w.f32_from_f64(l.bk);
  w.f32_from_f64(l.wv.flat());
  w.f32_from_f64(l.bv);
  w.f32_from_f64(l.wo.flat());
  w.f32_from_f64(l.bo);
  w.f32_from_f64(l.w1.flat());
  w.f32_from_f64(l.b1);
  w.f32_from_f64(l.w2.flat());
  w.f32_from_f64(l.b2);
  w.f32_from_f64(l.ln1_gain);
  w.f32_from_f64(l.ln1_shift);
  w.f32_from_f64(l.ln2_gain);
  w.f32_from_f64(l.ln2_shift);
}

Matrix read_matrix(io::BinaryReader& r, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  r.f32_to_f64(m.flat());
  return m;
}

std::vector<double> read_vector(io::BinaryReader& r, std::size_t n) {
  std::vector<double> v(n);
  r.f32_to_f64(v);
  return v;
}

LayerWeights read_layer(io::BinaryReader& r, const ModelConfig& c) {
  const std::size_t d = c.hidden_size;
  const std::size_t f = c.ffn_size;
  LayerWeights l;
  l.wq = read_matrix(r, d, d);
  l.bq = read_vector(r, d);
  l.wk = read_matrix(r, d, d);
  l.bk = read_vector(r, d);
  l.wv = read_matrix(r, d, d);
  l.bv = read_vector(r, d);
  l.wo = read_matrix(r, d, d);
  l.bo = read_vector(r, d);
  l.w1 = read_matrix(r, d, f);
  l.b1 = read_vector(r, f);
  l.w2 = read_matrix(r, f, d);
  l.b2 = read_vector(r, d);
  l.ln1_gain = read_vector(r, d);
  l.ln1_shift = read_vector(r, d);
  l.ln2_gain = read_vector(r, d);
  l.ln2_shift = read_vector(r, d);
  return l;
}

}  // namespace

void save_model(const ModelArtifacts& m, const std::filesystem::path& path) {
  io::BinaryWriter w(path);
  w.magic(kMagic);
  const ModelConfig& c = m.config;
  w.u32(c.hidden_size);
  w.u32(c.heads);
  w.u32(c.lower_layers);
  w.u32(c.higher_layers);
  w.u32(c.ffn_size);
  w.u32(c.vocab_size);
  w.u32(static_cast<std::uint32_t>(c.mode));
  w.u32(c.max_fragment);
  w.u32(c.seed);
  w.f32_from_f64(m.token_embedding.flat());
  w.f32_from_f64(m.position_embedding.flat());
  for (const LayerWeights& l : m.lower) write_layer(w, l);
  for (const LayerWeights& l : m.higher) write_layer(w, l);
  w.close();
}

ModelArtifacts load_model(const std::filesystem::path& path) {
  io::BinaryReader r(path);
  r.magic(kMagic);
  ModelConfig c;
  c.hidden_size = r.u32();
  c.heads = r.u32();
  c.lower_layers = r.u32();
  c.higher_layers = r.u32();
  c.ffn_size = r.u32();
  c.vocab_size = r.u32();
  c.mode = static_cast<AttentionMode>(r.u32());
  c.max_fragment = r.u32();
  c.seed = r.u32();
  c.validate();
  ModelArtifacts m;
  m.config = c;
  m.token_embedding = read_matrix(r, c.vocab_size, c.hidden_size);
  m.position_embedding = read_matrix(r, c.max_fragment, c.hidden_size);
  m.lower.reserve(c.lower_layers);
  for (std::uint32_t i = 0; i < c.lower_layers; ++i) m.lower.push_back(read_layer(r, c));
  m.higher.reserve(c.higher_layers);
  for (std::uint32_t i = 0; i < c.higher_layers; ++i) m.higher.push_back(read_layer(r, c));
  r.expect_end();
  return m;
}

}  // namespace hmi
