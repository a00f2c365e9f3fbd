// SPDX-License-Identifier: Apache-2.0

#include "hmi/plot/retrieval.hpp"

#include <map>
#include <string>

#include "hmi/errors.hpp"
#include "hmi/tensor/kernels.hpp"

namespace hmi::plot {
namespace {

void copy_row(Matrix& dst, std::size_t dst_row, const Matrix& src,
              std::size_t src_row) {
  auto d = dst.row(dst_row);
  auto s = src.row(src_row);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = s[j];
}

}  // namespace

WindowRows resolve_window(const VersionTree& tree, std::uint32_t version_id,
                          std::span<const std::uint32_t> tokens) {
  const std::size_t len = tokens.size();
  const std::uint32_t d = tree.root().hidden_size;
  const std::uint32_t n = tree.root().ngram;
  if (len == 0 || len > n) {
    throw DimensionError("window length must be in [1, " + std::to_string(n) + "]");
  }
  WindowRows out;
  out.rows = Matrix(len, d);
  out.levels.assign(len, 0);

  // Memoized lookups of sub-grams, keyed by (offset, length).
  std::map<std::pair<std::size_t, std::size_t>, const PlotEntry*> cache;
  auto probe = [&](std::size_t offset, std::size_t k) -> const PlotEntry* {
    const auto key = std::make_pair(offset, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const NGramKey gram(tokens.begin() + offset, tokens.begin() + offset + k);
    const auto found = tree.lookup(version_id, gram);
    const PlotEntry* e = found ? found->entry : nullptr;
    cache.emplace(key, e);
    return e;
  };

  for (std::size_t p = 0; p < len; ++p) {
    bool resolved = false;
    // Longest sub-gram containing p, leftmost among equals.
    for (std::size_t k = len; k >= 1 && !resolved; --k) {
      const std::size_t o_lo = p + 1 >= k ? p + 1 - k : 0;
      const std::size_t o_hi = std::min(p, len - k);
      for (std::size_t o = o_lo; o <= o_hi; ++o) {
        if (const PlotEntry* e = probe(o, k)) {
          copy_row(out.rows, p, e->rep, p - o);
          out.levels[p] = static_cast<std::uint32_t>(k);
          resolved = true;
          break;
        }
      }
    }
    if (!resolved) {
      throw BuildError("uni-gram backstop missing for token " +
                       std::to_string(tokens[p]));
    }
  }
  return out;
}

FallbackResult fallback_retrieve(const VersionTree& tree, std::uint32_t version_id,
                                 std::span<const std::uint32_t> tokens) {
  const std::uint32_t n = tree.root().ngram;
  if (tokens.size() != n) {
    throw DimensionError("fallback_retrieve expects exactly " + std::to_string(n) +
                         " tokens");
  }
  WindowRows w = resolve_window(tree, version_id, tokens);
  return FallbackResult{std::move(w.rows), std::move(w.levels)};
}

Matrix retrieve_sequence(const VersionTree& tree, std::uint32_t version_id,
                         std::span<const std::uint32_t> tokens, AttentionMode mode) {
  const std::size_t len = tokens.size();
  if (len == 0) {
    throw DimensionError("cannot retrieve an empty sequence");
  }
  const std::uint32_t d = tree.root().hidden_size;
  const std::size_t n = tree.root().ngram;
  Matrix out(len, d);

  if (mode == AttentionMode::causal) {
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t start = i + 1 >= n ? i + 1 - n : 0;
      const WindowRows w =
          resolve_window(tree, version_id, tokens.subspan(start, i - start + 1));
      copy_row(out, i, w.rows, i - start);
    }
    return out;
  }

  // Encoder sweep: window centered on c spans [c-hl, c+hr] clipped to the
  // sequence; each token averages over every window that contains it.
  const std::size_t hl = (n - 1) / 2;
  const std::size_t hr = n - 1 - hl;
  std::vector<std::uint32_t> counts(len, 0);
  const auto& kern = kernels::active();
  for (std::size_t c = 0; c < len; ++c) {
    const std::size_t start = c >= hl ? c - hl : 0;
    const std::size_t end = std::min(len - 1, c + hr);
    const WindowRows w =
        resolve_window(tree, version_id, tokens.subspan(start, end - start + 1));
    for (std::size_t p = start; p <= end; ++p) {
      kern.add_f64(out.row(p).data(), w.rows.row(p - start).data(),
                   out.row(p).data(), d);
      counts[p] += 1;
    }
  }
  for (std::size_t p = 0; p < len; ++p) {
    const double inv = 1.0 / static_cast<double>(counts[p]);
    for (double& v : out.row(p)) v *= inv;
  }
  return out;
}

}  // namespace hmi::plot
