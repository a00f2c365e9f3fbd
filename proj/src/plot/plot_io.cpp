// SPDX-License-Identifier: Apache-2.0

#include "hmi/plot/plot_io.hpp"

#include <fstream>
#include <sstream>

#include "hmi/errors.hpp"
#include "hmi/io/binary.hpp"

namespace hmi::plot {

namespace {
constexpr char kMagic[4] = {'P', 'L', 'T', '1'};
}

void persist(const PlotTable& table, const std::filesystem::path& path) {
  io::BinaryWriter w(path);
  w.magic(kMagic);
  w.u32(table.version_id);
  w.u32(table.parent_id);
  w.str(table.domain_label);
  w.u32(table.ngram);
  w.u32(table.hidden_size);
  w.u32(static_cast<std::uint32_t>(table.entries.size()));
  w.u32(table.alpha_centi);
  for (const auto& [key, entry] : table.entries) {  // std::map: sorted by key
    w.u32(static_cast<std::uint32_t>(key.size()));
    for (std::uint32_t t : key) w.u32(t);
    w.u64(entry.freq);
    w.f32_from_f64(entry.rep.flat());
  }
  w.close();
}

PlotTable load(const std::filesystem::path& path) {
  io::BinaryReader r(path);
  r.magic(kMagic);
  PlotTable table;
  table.version_id = r.u32();
  table.parent_id = r.u32();
  table.domain_label = r.str();
  table.ngram = r.u32();
  table.hidden_size = r.u32();
  const std::uint32_t count = r.u32();
  table.alpha_centi = r.u32();
  if (table.ngram == 0 || table.hidden_size == 0) {
    throw FormatError("table header has zero ngram or hidden size", r.offset());
  }
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::size_t at = r.offset();
    const std::uint32_t key_len = r.u32();
    if (key_len == 0 || key_len > table.ngram) {
      throw FormatError("entry key length " + std::to_string(key_len) +
                        " outside [1, " + std::to_string(table.ngram) + "]",
                        at);
    }
    NGramKey key(key_len);
    for (std::uint32_t& t : key) t = r.u32();
    PlotEntry entry;
    entry.freq = r.u64();
    if (entry.freq == 0) {
      throw FormatError("entry frequency must be >= 1", at);
    }
    entry.rep = Matrix(key_len, table.hidden_size);
    r.f32_to_f64(entry.rep.flat());
    if (!table.entries.emplace(std::move(key), std::move(entry)).second) {
      throw FormatError("duplicate entry key", at);
    }
  }
  r.expect_end();
  return table;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open corpus file " + path.string());
  }
  Corpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::uint32_t> seq;
    std::uint64_t id;
    while (ls >> id) seq.push_back(static_cast<std::uint32_t>(id));
    if (!seq.empty()) corpus.push_back(std::move(seq));
  }
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot open corpus file " + path.string() + " for writing");
  }
  for (const auto& seq : corpus) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0) out << ' ';
      out << seq[i];
    }
    out << '\n';
  }
}

}  // namespace hmi::plot
