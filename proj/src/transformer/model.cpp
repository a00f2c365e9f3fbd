// SPDX-License-Identifier: Apache-2.0

#include "hmi/transformer/model.hpp"

#include <cmath>
#include <string>

#include "hmi/errors.hpp"
#include "hmi/tensor/ops.hpp"

namespace hmi {

Matrix adapter_apply(const Matrix& a, const AdapterParams& p) {
  if (a.cols() != p.w_down.rows()) {
    throw DimensionError("adapter_apply: input width " + std::to_string(a.cols()) +
                         " != down projection rows " +
                         std::to_string(p.w_down.rows()));
  }
  Matrix mid = add_bias(matmul(a, p.w_down), p.b_down);
  relu_inplace(mid);
  Matrix out = add_bias(matmul(mid, p.w_up), p.b_up);
  add_inplace(out, a);
  return out;
}

Matrix attention(const Matrix& h, const LayerWeights& w, const ModelConfig& config,
                 std::size_t valid_len) {
  const std::size_t len = h.rows();
  const std::size_t d = config.hidden_size;
  if (h.cols() != d) {
    throw DimensionError("attention: hidden width mismatch");
  }
  if (valid_len == kFullLength || valid_len > len) valid_len = len;

  const Matrix q = add_bias(matmul(h, w.wq), w.bq);
  const Matrix k = add_bias(matmul(h, w.wk), w.bk);
  const Matrix v = add_bias(matmul(h, w.wv), w.bv);

  const std::size_t heads = config.heads;
  const std::size_t dh = d / heads;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));

  Matrix ctx(len, d);
  std::vector<double> probs(len);
  for (std::size_t g = 0; g < heads; ++g) {
    const std::size_t off = g * dh;
    for (std::size_t i = 0; i < len; ++i) {
      // Keys outside the window are skipped entirely rather than masked, so
      // rows below a change point are bit-identical to the shorter input.
      const std::size_t limit =
          config.mode == AttentionMode::causal ? i + 1 : valid_len;
      double mx = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < limit; ++j) {
        double s = 0.0;
        for (std::size_t c = 0; c < dh; ++c) {
          s += q.at(i, off + c) * k.at(j, off + c);
        }
        probs[j] = s * scale;
        mx = std::max(mx, probs[j]);
      }
      double sum = 0.0;
      for (std::size_t j = 0; j < limit; ++j) {
        probs[j] = std::exp(probs[j] - mx);
        sum += probs[j];
      }
      for (std::size_t c = 0; c < dh; ++c) {
        double acc = 0.0;
        for (std::size_t j = 0; j < limit; ++j) {
          acc += probs[j] * v.at(j, off + c);
        }
        ctx.at(i, off + c) = acc / sum;
      }
    }
  }
  return add_bias(matmul(ctx, w.wo), w.bo);
}

Matrix ffn_forward(const Matrix& x, const LayerWeights& w) {
  Matrix mid = add_bias(matmul(x, w.w1), w.b1);
  relu_inplace(mid);
  return add_bias(matmul(mid, w.w2), w.b2);
}

Matrix layer_forward(const Matrix& h, const LayerWeights& w,
                     const AdapterParams* adapter, const ModelConfig& config,
                     std::size_t valid_len) {
  Matrix attn = attention(h, w, config, valid_len);
  if (adapter != nullptr) {
    attn = adapter_apply(attn, *adapter);
  }
  const Matrix x = layer_norm(add(attn, h), w.ln1_gain, w.ln1_shift);
  const Matrix f = ffn_forward(x, w);
  return layer_norm(add(x, f), w.ln2_gain, w.ln2_shift);
}

Matrix lower_stack_forward(const ModelArtifacts& model,
                           std::span<const std::uint32_t> tokens) {
  const ModelConfig& c = model.config;
  if (tokens.empty() || tokens.size() > c.max_fragment) {
    throw DimensionError("fragment length must be in [1, " +
                         std::to_string(c.max_fragment) + "]");
  }
  Matrix h(tokens.size(), c.hidden_size);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] >= c.vocab_size) {
      throw VocabularyError("token id " + std::to_string(tokens[i]) +
                            " outside vocabulary of " + std::to_string(c.vocab_size));
    }
    for (std::size_t j = 0; j < c.hidden_size; ++j) {
      h.at(i, j) = model.token_embedding.at(tokens[i], j) +
                   model.position_embedding.at(i, j);
    }
  }
  for (const LayerWeights& w : model.lower) {
    h = layer_forward(h, w, nullptr, c);
  }
  return h;
}

namespace {

int argmax(std::span<const double> v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = static_cast<int>(i);
  }
  return best;
}

std::vector<double> project_row(const Matrix& h, std::size_t row,
                                const OutputHead& head) {
  Matrix in(1, h.cols());
  for (std::size_t j = 0; j < h.cols(); ++j) in.at(0, j) = h.at(row, j);
  const Matrix logits = add_bias(matmul(in, head.w), head.b);
  return {logits.row(0).begin(), logits.row(0).end()};
}

}  // namespace

HeadOutput apply_head(const OutputHead& head, const Matrix& h,
                      std::size_t valid_len) {
  if (head.w.rows() != h.cols()) {
    throw DimensionError("output head width mismatch");
  }
  if (valid_len == kFullLength || valid_len > h.rows()) valid_len = h.rows();
  if (valid_len == 0) {
    throw DimensionError("output head needs at least one valid row");
  }
  HeadOutput out;
  out.kind = head.kind;
  switch (head.kind) {
    case HeadKind::cls_classify: {
      out.scores = project_row(h, 0, head);
      out.label = argmax(out.scores);
      break;
    }
    case HeadKind::token_tag: {
      out.tags.reserve(valid_len);
      for (std::size_t i = 0; i < valid_len; ++i) {
        out.tags.push_back(argmax(project_row(h, i, head)));
      }
      break;
    }
    case HeadKind::lm_logits: {
      out.scores = project_row(h, valid_len - 1, head);
      out.label = argmax(out.scores);
      break;
    }
  }
  return out;
}

HeadOutput higher_stack_forward(const ModelArtifacts& model, Matrix h,
                                std::span<const AdapterParams* const> adapters,
                                const OutputHead& head) {
  const ModelConfig& c = model.config;
  if (!adapters.empty() && adapters.size() != model.higher.size()) {
    throw DimensionError("adapter list must cover every higher layer");
  }
  for (std::size_t l = 0; l < model.higher.size(); ++l) {
    const AdapterParams* a = adapters.empty() ? nullptr : adapters[l];
    h = layer_forward(h, model.higher[l], a, c);
  }
  return apply_head(head, h);
}

}  // namespace hmi
