// SPDX-License-Identifier: Apache-2.0

#include "hmi/plot/table.hpp"

#include <algorithm>
#include <cmath>

#include "hmi/errors.hpp"
#include "hmi/transformer/model.hpp"

namespace hmi::plot {
namespace {

using CountMap = std::map<NGramKey, std::uint64_t>;

CountMap count_kgrams(const Corpus& corpus, std::uint32_t k) {
  CountMap counts;
  for (const auto& seq : corpus) {
    if (seq.size() < k) continue;
    for (std::size_t i = 0; i + k <= seq.size(); ++i) {
      counts[NGramKey(seq.begin() + i, seq.begin() + i + k)] += 1;
    }
  }
  return counts;
}

}  // namespace

PlotTable build_root(const Corpus& corpus, const ModelArtifacts& model) {
  if (corpus.empty()) {
    throw BuildError("cannot build a table from an empty corpus");
  }
  if (model.lower.empty()) {
    throw BuildError("model has no lower stack");
  }
  const ModelConfig& c = model.config;
  PlotTable table;
  table.version_id = 0;
  table.parent_id = kNoParent;
  table.domain_label = "root";
  table.ngram = c.max_fragment;
  table.hidden_size = c.hidden_size;

  for (std::uint32_t k = 1; k <= c.max_fragment; ++k) {
    for (auto& [key, freq] : count_kgrams(corpus, k)) {
      table.entries.emplace(key, PlotEntry{lower_stack_forward(model, key), freq});
    }
  }
  // Vocabulary-wide uni-gram backstop; tokens absent from the corpus get a
  // nominal frequency of 1.
  for (std::uint32_t t = 0; t < c.vocab_size; ++t) {
    const NGramKey key{t};
    if (table.entries.find(key) == table.entries.end()) {
      table.entries.emplace(key, PlotEntry{lower_stack_forward(model, key), 1});
    }
  }
  return table;
}

PlotTable derive_branch(const PlotTable& root, const Corpus& domain_corpus,
                        const ModelArtifacts& domain_model, double alpha_percent) {
  if (alpha_percent < 0.0 || alpha_percent > 100.0) {
    throw ConfigError("alpha_percent must be in [0, 100]");
  }
  if (domain_model.lower.empty()) {
    throw BuildError("domain model has no lower stack");
  }
  if (domain_model.config.hidden_size != root.hidden_size ||
      domain_model.config.max_fragment != root.ngram) {
    throw BuildError("domain model shape differs from the root table");
  }
  const auto alpha_centi =
      static_cast<std::uint64_t>(std::llround(alpha_percent * 100.0));

  PlotTable branch;
  branch.parent_id = root.version_id;
  branch.ngram = root.ngram;
  branch.hidden_size = root.hidden_size;
  branch.alpha_centi = static_cast<std::uint32_t>(alpha_centi);

  const CountMap counts = count_kgrams(domain_corpus, root.ngram);
  std::uint64_t total = 0;
  for (const auto& [key, count] : counts) total += count;
  if (total == 0 || alpha_centi == 0) {
    return branch;  // nothing to materialize
  }

  // Count descending, ties by lexicographic key order.
  std::vector<const CountMap::value_type*> order;
  order.reserve(counts.size());
  for (const auto& kv : counts) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->second > b->second; });

  std::uint64_t cumulative = 0;
  for (const auto* kv : order) {
    cumulative += kv->second;
    branch.entries.emplace(
        kv->first, PlotEntry{lower_stack_forward(domain_model, kv->first), kv->second});
    // Exact integer test of cumulative/total >= alpha_centi/10000.
    if (cumulative * 10000 >= alpha_centi * total) break;
  }
  return branch;
}

}  // namespace hmi::plot
