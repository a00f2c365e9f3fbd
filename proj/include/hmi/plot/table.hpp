// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hmi/tensor/matrix.hpp"
#include "hmi/transformer/weights.hpp"

namespace hmi::plot {

// Token-id fragment, length 1..n.
using NGramKey = std::vector<std::uint32_t>;
using Corpus = std::vector<std::vector<std::uint32_t>>;

struct PlotEntry {
  Matrix rep;          // key_len x d; float32-exact values
  std::uint64_t freq;  // occurrence count in the source corpus

  friend bool operator==(const PlotEntry&, const PlotEntry&) = default;
};

inline constexpr std::uint32_t kNoParent = 0xffffffffu;

struct PlotTable {
  std::uint32_t version_id = 0;
  std::uint32_t parent_id = kNoParent;
  std::string domain_label;
  std::uint32_t ngram = 3;
  std::uint32_t hidden_size = 0;
  std::uint32_t alpha_centi = 10000;  // coverage threshold, percent x 100
  std::map<NGramKey, PlotEntry> entries;

  const PlotEntry* find(const NGramKey& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  }

  friend bool operator==(const PlotTable&, const PlotTable&) = default;
};

// Materializes every distinct k-gram (k = 1..n) occurring in the corpus via
// the model's lower stack, plus a uni-gram entry for every vocabulary token
// so retrieval is total. In-memory reps keep the full f64 lower-stack output;
// persistence quantizes to float32.
PlotTable build_root(const Corpus& corpus, const ModelArtifacts& model);

// Counts n-gram occurrences in the domain corpus, orders them by count
// descending (ties by key), and materializes the shortest prefix whose
// cumulative occurrence share reaches alpha_percent, using the domain
// model's lower stack. alpha 0 gives an empty branch, 100 every n-gram.
PlotTable derive_branch(const PlotTable& root, const Corpus& domain_corpus,
                        const ModelArtifacts& domain_model, double alpha_percent);

}  // namespace hmi::plot
