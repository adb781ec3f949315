// Copyright 2026 The Syllabic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "syllabic/decoder.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <random>
#include <string>

#include "syllabic/errors.h"

namespace syllabic::decoder {
namespace {

void RequireShape(const Matrix& m, Eigen::Index rows, Eigen::Index cols,
                  std::string_view name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorKind::kShapeMismatch,
                std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void RequireSize(const Vector& v, Eigen::Index size, std::string_view name) {
  if (v.size() != size) {
    throw Error(ErrorKind::kShapeMismatch,
                std::string(name) + " has length " + std::to_string(v.size()) +
                    ", expected " + std::to_string(size));
  }
}

template <typename Derived>
void RequireFinite(const Eigen::DenseBase<Derived>& m, std::string_view name) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::kNonFinite, std::string(name));
  }
}

Vector Softmax(const Vector& logits) {
  const double peak = logits.maxCoeff();
  Vector e = (logits.array() - peak).exp();
  return e / e.sum();
}

Vector Apply(Activation act, const Vector& x) {
  switch (act) {
    case Activation::kIdentity: return x;
    case Activation::kTanh: return x.array().tanh();
    case Activation::kSigmoid: return (1.0 + (-x.array()).exp()).inverse();
  }
  return x;
}

// Derivative expressed through the activation output y.
Vector ApplyDerivative(Activation act, const Vector& y) {
  switch (act) {
    case Activation::kIdentity: return Vector::Ones(y.size());
    case Activation::kTanh: return 1.0 - y.array().square();
    case Activation::kSigmoid: return y.array() * (1.0 - y.array());
  }
  return Vector::Ones(y.size());
}

Vector Sigmoid(const Vector& x) { return Apply(Activation::kSigmoid, x); }

int ArgMax(const Vector& p) {
  int best = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (p[i] > p[best]) best = i;
  }
  return best;
}

bool IsPad(const SyllableTriplet& t) { return t.rhyme_id == kPadId; }

void CheckRow(const Matrix& table, int id, std::string_view name) {
  if (id < 0 || id >= table.rows()) {
    throw Error(ErrorKind::kUnknownId,
                std::string(name) + " id " + std::to_string(id));
  }
}

SyllableTriplet BosTriplet() { return {kBosId, kBosId, kBosId}; }

// Everything the backward pass needs from one teacher-forced position.
struct StepCache {
  SyllableTriplet input;
  SyllableTriplet target;
  Vector embedded;   // 3dim concatenation
  Vector q0;         // projected input (+ position)
  Vector query;      // W_q q0 + b_q
  Matrix weights;    // heads x T
  Vector context;    // concatenated head contexts
  Vector features;   // q0 + W_o context + b_o
  Vector rhyme_pre;  // W_r f + b_r
  Vector rhyme_act;
  Vector gate;       // sigmoid(W_k f + b_k)
  Vector gate_tanh;  // tanh(W^r_k f_r + b^r_k)
  Vector fused;      // gate * gate_tanh
  Vector fusion;     // act_it(W_it fused + b_it)
  StepOutput out;
};

struct ExampleKv {
  Matrix keys;    // T x dim
  Matrix values;  // T x dim
};

ExampleKv ProjectFrames(const Matrix& acoustic, const DecoderParams& p) {
  ExampleKv kv;
  kv.keys = acoustic * p.key_w.transpose();
  kv.values = (acoustic * p.value_w.transpose()).rowwise() + p.value_b.transpose();
  return kv;
}

Vector Concatenate(const SyllableTriplet& t, const DecoderParams& p) {
  const Eigen::Index dim = p.proj_b.size();
  CheckRow(p.initial_embedding, t.initial_id, "initial");
  CheckRow(p.rhyme_embedding, t.rhyme_id, "rhyme");
  CheckRow(p.tone_embedding, t.tone_id, "tone");
  Vector e(3 * dim);
  e.segment(0, dim) = p.initial_embedding.row(t.initial_id).transpose();
  e.segment(dim, dim) = p.rhyme_embedding.row(t.rhyme_id).transpose();
  e.segment(2 * dim, dim) = p.tone_embedding.row(t.tone_id).transpose();
  return e;
}

void Attend(const Vector& query, const ExampleKv& kv, int heads,
            Vector& context, Matrix& weights) {
  const Eigen::Index dim = query.size();
  const Eigen::Index head_dim = dim / heads;
  const Eigen::Index frames = kv.keys.rows();
  const double scale = 1.0 / std::sqrt(static_cast<double>(head_dim));
  context.setZero(dim);
  weights.resize(heads, frames);
  for (int h = 0; h < heads; ++h) {
    const Eigen::Index off = h * head_dim;
    Vector scores = kv.keys.middleCols(off, head_dim) * query.segment(off, head_dim) * scale;
    Vector a = Softmax(scores);
    weights.row(h) = a.transpose();
    context.segment(off, head_dim) =
        kv.values.middleCols(off, head_dim).transpose() * a;
  }
}

void PredictInto(const DecoderParams& p, const DecoderConfig& config,
                 StepCache& c) {
  c.rhyme_pre = p.rhyme_w * c.features + p.rhyme_b;
  c.rhyme_act = Apply(config.rhyme_activation, c.rhyme_pre);
  c.out.p_rhyme = Softmax(c.rhyme_act);
  c.gate = Sigmoid(p.gate_w * c.features + p.gate_b);
  c.gate_tanh = (p.gate_rhyme_w * c.rhyme_act + p.gate_rhyme_b).array().tanh();
  c.fused = c.gate.cwiseProduct(c.gate_tanh);
  c.fusion = Apply(config.fusion_activation, p.fusion_w * c.fused + p.fusion_b);
  c.out.p_initial = Softmax(p.initial_w * c.fusion + p.initial_b);
  c.out.p_tone = Softmax(p.tone_w * c.fusion + p.tone_b);
}

void Forward(const SyllableTriplet& input, int position, const ExampleKv& kv,
             const DecoderParams& p, const DecoderConfig& config,
             StepCache& c) {
  c.input = input;
  c.embedded = Concatenate(input, p);
  c.q0 = p.proj_w * c.embedded + p.proj_b;
  if (config.positional_encoding) {
    c.q0 += SinusoidalPosition(position, config.dim);
  }
  c.query = p.query_w * c.q0 + p.query_b;
  Attend(c.query, kv, config.heads, c.context, c.weights);
  c.features = c.q0 + p.output_w * c.context + p.output_b;
  PredictInto(p, config, c);
}

int CountTargets(std::span<const Example> batch) {
  int n = 0;
  for (const auto& ex : batch) {
    for (const auto& t : ex.targets) n += IsPad(t) ? 0 : 1;
  }
  return n;
}

double CrossEntropy(const StepOutput& out, const SyllableTriplet& target) {
  return -std::log(out.p_rhyme[target.rhyme_id]) -
         std::log(out.p_initial[target.initial_id]) -
         std::log(out.p_tone[target.tone_id]);
}

void CheckTarget(const SyllableTriplet& t, const DecoderConfig& config) {
  if (t.initial_id < 0 || t.initial_id >= config.initial_vocab ||
      t.rhyme_id < 0 || t.rhyme_id >= config.rhyme_vocab || t.tone_id < 0 ||
      t.tone_id >= config.tone_vocab) {
    throw Error(ErrorKind::kUnknownId, "target triplet outside vocabulary");
  }
}

Vector OneHotDelta(const Vector& p, int target) {
  Vector d = p;
  d[target] -= 1.0;
  return d;
}

void Backward(const StepCache& c, const ExampleKv& kv, const Matrix& acoustic,
              const DecoderParams& p, const DecoderConfig& config,
              double scale, DecoderParams& g, Matrix& d_keys,
              Matrix& d_values) {
  (void)acoustic;
  const SyllableTriplet& y = c.target;
  const Vector d_initial_logits = scale * OneHotDelta(c.out.p_initial, y.initial_id);
  const Vector d_tone_logits = scale * OneHotDelta(c.out.p_tone, y.tone_id);
  const Vector d_rhyme_ce = scale * OneHotDelta(c.out.p_rhyme, y.rhyme_id);

  g.initial_w.noalias() += d_initial_logits * c.fusion.transpose();
  g.initial_b += d_initial_logits;
  g.tone_w.noalias() += d_tone_logits * c.fusion.transpose();
  g.tone_b += d_tone_logits;

  const Vector d_fusion = p.initial_w.transpose() * d_initial_logits +
                          p.tone_w.transpose() * d_tone_logits;
  const Vector d_fusion_pre =
      d_fusion.cwiseProduct(ApplyDerivative(config.fusion_activation, c.fusion));
  g.fusion_w.noalias() += d_fusion_pre * c.fused.transpose();
  g.fusion_b += d_fusion_pre;
  const Vector d_fused = p.fusion_w.transpose() * d_fusion_pre;

  const Vector d_gate_pre = d_fused.cwiseProduct(c.gate_tanh)
                                .cwiseProduct(ApplyDerivative(Activation::kSigmoid, c.gate));
  const Vector d_tanh_pre = d_fused.cwiseProduct(c.gate)
                                .cwiseProduct(ApplyDerivative(Activation::kTanh, c.gate_tanh));
  g.gate_w.noalias() += d_gate_pre * c.features.transpose();
  g.gate_b += d_gate_pre;
  g.gate_rhyme_w.noalias() += d_tanh_pre * c.rhyme_act.transpose();
  g.gate_rhyme_b += d_tanh_pre;

  const Vector d_rhyme_act = d_rhyme_ce + p.gate_rhyme_w.transpose() * d_tanh_pre;
  const Vector d_rhyme_pre = d_rhyme_act.cwiseProduct(
      ApplyDerivative(config.rhyme_activation, c.rhyme_act));
  g.rhyme_w.noalias() += d_rhyme_pre * c.features.transpose();
  g.rhyme_b += d_rhyme_pre;

  const Vector d_features = p.rhyme_w.transpose() * d_rhyme_pre +
                            p.gate_w.transpose() * d_gate_pre;

  // Residual: f = q0 + W_o ctx + b_o.
  Vector d_q0 = d_features;
  g.output_w.noalias() += d_features * c.context.transpose();
  g.output_b += d_features;
  const Vector d_context = p.output_w.transpose() * d_features;

  const int heads = config.heads;
  const Eigen::Index head_dim = config.dim / heads;
  const double attn_scale = 1.0 / std::sqrt(static_cast<double>(head_dim));
  Vector d_query = Vector::Zero(config.dim);
  for (int h = 0; h < heads; ++h) {
    const Eigen::Index off = h * head_dim;
    const Vector a = c.weights.row(h).transpose();
    const Vector d_ctx = d_context.segment(off, head_dim);
    const Vector d_a = kv.values.middleCols(off, head_dim) * d_ctx;
    d_values.middleCols(off, head_dim).noalias() += a * d_ctx.transpose();
    const Vector d_scores = a.cwiseProduct((d_a.array() - a.dot(d_a)).matrix());
    d_query.segment(off, head_dim) +=
        attn_scale * kv.keys.middleCols(off, head_dim).transpose() * d_scores;
    d_keys.middleCols(off, head_dim).noalias() +=
        attn_scale * d_scores * c.query.segment(off, head_dim).transpose();
  }
  g.query_w.noalias() += d_query * c.q0.transpose();
  g.query_b += d_query;
  d_q0 += p.query_w.transpose() * d_query;

  g.proj_w.noalias() += d_q0 * c.embedded.transpose();
  g.proj_b += d_q0;
  const Vector d_embedded = p.proj_w.transpose() * d_q0;
  const Eigen::Index dim = config.dim;
  g.initial_embedding.row(c.input.initial_id) += d_embedded.segment(0, dim).transpose();
  g.rhyme_embedding.row(c.input.rhyme_id) += d_embedded.segment(dim, dim).transpose();
  g.tone_embedding.row(c.input.tone_id) += d_embedded.segment(2 * dim, dim).transpose();
}

void CheckBatch(std::span<const Example> batch, const DecoderConfig& config) {
  for (const auto& ex : batch) {
    if (ex.acoustic.rows() < 1 || ex.acoustic.cols() != config.dim) {
      throw Error(ErrorKind::kShapeMismatch, "acoustic must be T x dim, T >= 1");
    }
    RequireFinite(ex.acoustic, "acoustic");
    for (const auto& t : ex.targets) CheckTarget(t, config);
  }
}

}  // namespace

void DecoderConfig::Validate() const {
  if (dim <= 0 || heads <= 0 || dim % heads != 0) {
    throw Error(ErrorKind::kShapeMismatch, "dim must be a positive multiple of heads");
  }
  if (initial_vocab < 2 || rhyme_vocab < 2 || tone_vocab < 2) {
    throw Error(ErrorKind::kShapeMismatch, "vocabulary sizes must be >= 2");
  }
  if (max_syllables < 0) {
    throw Error(ErrorKind::kShapeMismatch, "max_syllables must be >= 0");
  }
}

DecoderParams DecoderParams::Zeros(const DecoderConfig& c) {
  c.Validate();
  const int d = c.dim;
  DecoderParams p;
  p.initial_embedding = Matrix::Zero(c.initial_vocab, d);
  p.rhyme_embedding = Matrix::Zero(c.rhyme_vocab, d);
  p.tone_embedding = Matrix::Zero(c.tone_vocab, d);
  p.proj_w = Matrix::Zero(d, 3 * d);
  p.proj_b = Vector::Zero(d);
  p.query_w = p.key_w = p.value_w = p.output_w = Matrix::Zero(d, d);
  p.query_b = p.value_b = p.output_b = Vector::Zero(d);
  p.rhyme_w = Matrix::Zero(c.rhyme_vocab, d);
  p.rhyme_b = Vector::Zero(c.rhyme_vocab);
  p.gate_w = Matrix::Zero(d, d);
  p.gate_b = Vector::Zero(d);
  p.gate_rhyme_w = Matrix::Zero(d, c.rhyme_vocab);
  p.gate_rhyme_b = Vector::Zero(d);
  p.fusion_w = Matrix::Zero(d, d);
  p.fusion_b = Vector::Zero(d);
  p.initial_w = Matrix::Zero(c.initial_vocab, d);
  p.initial_b = Vector::Zero(c.initial_vocab);
  p.tone_w = Matrix::Zero(c.tone_vocab, d);
  p.tone_b = Vector::Zero(c.tone_vocab);
  return p;
}

DecoderParams DecoderParams::Initialize(const DecoderConfig& c) {
  DecoderParams p = Zeros(c);
  std::mt19937_64 rng(c.seed);
  const double bound = 1.0 / std::sqrt(static_cast<double>(c.dim));
  std::uniform_real_distribution<double> uniform(-bound, bound);
  auto fill = [&](Matrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = uniform(rng);
  };
  for (Matrix* m : {&p.initial_embedding, &p.rhyme_embedding, &p.tone_embedding,
                    &p.proj_w, &p.query_w, &p.key_w, &p.value_w, &p.output_w,
                    &p.rhyme_w, &p.gate_w, &p.gate_rhyme_w, &p.fusion_w,
                    &p.initial_w, &p.tone_w}) {
    fill(*m);
  }
  return p;
}

std::vector<DecoderParams::Tensor> DecoderParams::Tensors() {
  std::vector<Tensor> out;
  auto add = [&out](std::string_view name, auto& m) {
    out.push_back({name, m.data(), static_cast<std::size_t>(m.size())});
  };
  add("initial_embedding", initial_embedding);
  add("rhyme_embedding", rhyme_embedding);
  add("tone_embedding", tone_embedding);
  add("proj_w", proj_w);
  add("proj_b", proj_b);
  add("query_w", query_w);
  add("query_b", query_b);
  add("key_w", key_w);
  add("value_w", value_w);
  add("value_b", value_b);
  add("output_w", output_w);
  add("output_b", output_b);
  add("rhyme_w", rhyme_w);
  add("rhyme_b", rhyme_b);
  add("gate_w", gate_w);
  add("gate_b", gate_b);
  add("gate_rhyme_w", gate_rhyme_w);
  add("gate_rhyme_b", gate_rhyme_b);
  add("fusion_w", fusion_w);
  add("fusion_b", fusion_b);
  add("initial_w", initial_w);
  add("initial_b", initial_b);
  add("tone_w", tone_w);
  add("tone_b", tone_b);
  return out;
}

std::vector<DecoderParams::ConstTensor> DecoderParams::Tensors() const {
  std::vector<ConstTensor> out;
  for (const auto& t : const_cast<DecoderParams*>(this)->Tensors()) {
    out.push_back({t.name, t.data, t.size});
  }
  return out;
}

void DecoderParams::AddScaled(const DecoderParams& other, double scale) {
  auto mine = Tensors();
  const auto theirs = other.Tensors();
  for (std::size_t k = 0; k < mine.size(); ++k) {
    if (mine[k].size != theirs[k].size) {
      throw Error(ErrorKind::kShapeMismatch, std::string(mine[k].name));
    }
    for (std::size_t i = 0; i < mine[k].size; ++i) {
      mine[k].data[i] += scale * theirs[k].data[i];
    }
  }
}

void DecoderParams::CheckShapes(const DecoderConfig& c) const {
  c.Validate();
  const int d = c.dim;
  RequireShape(initial_embedding, c.initial_vocab, d, "initial_embedding");
  RequireShape(rhyme_embedding, c.rhyme_vocab, d, "rhyme_embedding");
  RequireShape(tone_embedding, c.tone_vocab, d, "tone_embedding");
  RequireShape(proj_w, d, 3 * d, "proj_w");
  RequireSize(proj_b, d, "proj_b");
  RequireShape(query_w, d, d, "query_w");
  RequireShape(key_w, d, d, "key_w");
  RequireShape(value_w, d, d, "value_w");
  RequireShape(output_w, d, d, "output_w");
  RequireSize(query_b, d, "query_b");
  RequireSize(value_b, d, "value_b");
  RequireSize(output_b, d, "output_b");
  RequireShape(rhyme_w, c.rhyme_vocab, d, "rhyme_w");
  RequireSize(rhyme_b, c.rhyme_vocab, "rhyme_b");
  RequireShape(gate_w, d, d, "gate_w");
  RequireSize(gate_b, d, "gate_b");
  RequireShape(gate_rhyme_w, d, c.rhyme_vocab, "gate_rhyme_w");
  RequireSize(gate_rhyme_b, d, "gate_rhyme_b");
  RequireShape(fusion_w, d, d, "fusion_w");
  RequireSize(fusion_b, d, "fusion_b");
  RequireShape(initial_w, c.initial_vocab, d, "initial_w");
  RequireSize(initial_b, c.initial_vocab, "initial_b");
  RequireShape(tone_w, c.tone_vocab, d, "tone_w");
  RequireSize(tone_b, c.tone_vocab, "tone_b");
}

Vector EmbedSyllable(const SyllableTriplet& triplet, const DecoderParams& p) {
  const Eigen::Index dim = p.proj_b.size();
  RequireShape(p.proj_w, dim, 3 * dim, "proj_w");
  if (p.initial_embedding.cols() != dim || p.rhyme_embedding.cols() != dim ||
      p.tone_embedding.cols() != dim) {
    throw Error(ErrorKind::kShapeMismatch, "embedding width != dim");
  }
  return p.proj_w * Concatenate(triplet, p) + p.proj_b;
}

AttentionOutput CrossAttend(const Vector& query, const Matrix& acoustic,
                            const DecoderParams& p, int heads) {
  const Eigen::Index dim = query.size();
  if (heads <= 0 || dim % heads != 0) {
    throw Error(ErrorKind::kShapeMismatch, "dim must be a multiple of heads");
  }
  if (acoustic.rows() < 1) {
    throw Error(ErrorKind::kShapeMismatch, "acoustic context needs T >= 1");
  }
  RequireShape(acoustic, acoustic.rows(), dim, "acoustic");
  RequireShape(p.query_w, dim, dim, "query_w");
  RequireShape(p.key_w, dim, dim, "key_w");
  RequireShape(p.value_w, dim, dim, "value_w");
  RequireShape(p.output_w, dim, dim, "output_w");
  RequireFinite(query, "query");
  RequireFinite(acoustic, "acoustic");
  const ExampleKv kv = ProjectFrames(acoustic, p);
  const Vector q = p.query_w * query + p.query_b;
  AttentionOutput out;
  Vector context;
  Attend(q, kv, heads, context, out.weights);
  out.output = p.output_w * context + p.output_b;
  return out;
}

StepOutput PredictStep(const Vector& features, const DecoderParams& p,
                       const DecoderConfig& config) {
  RequireSize(features, p.gate_b.size(), "features");
  RequireFinite(features, "features");
  StepCache c;
  c.features = features;
  PredictInto(p, config, c);
  for (const Vector* v : {&c.rhyme_act, &c.fused, &c.fusion, &c.out.p_rhyme,
                          &c.out.p_initial, &c.out.p_tone}) {
    RequireFinite(*v, "prediction intermediate");
  }
  return c.out;
}

Vector SinusoidalPosition(int position, int dim) {
  Vector pe(dim);
  for (int i = 0; i < dim; i += 2) {
    const double freq = std::pow(10000.0, -static_cast<double>(i) / dim);
    pe[i] = std::sin(position * freq);
    if (i + 1 < dim) pe[i + 1] = std::cos(position * freq);
  }
  return pe;
}

Vector StepFeatures(const SyllableTriplet& previous, int position,
                    const Matrix& acoustic, const DecoderParams& params,
                    const DecoderConfig& config) {
  Vector q0 = EmbedSyllable(previous, params);
  if (config.positional_encoding) q0 += SinusoidalPosition(position, config.dim);
  return q0 + CrossAttend(q0, acoustic, params, config.heads).output;
}

std::vector<SyllableTriplet> DecodeGreedy(const Matrix& acoustic,
                                          const DecoderParams& params,
                                          const DecoderConfig& config,
                                          int max_syllables) {
  params.CheckShapes(config);
  std::vector<SyllableTriplet> out;
  SyllableTriplet previous = BosTriplet();
  for (int step = 0; step < max_syllables; ++step) {
    const Vector f = StepFeatures(previous, step, acoustic, params, config);
    const StepOutput o = PredictStep(f, params, config);
    const SyllableTriplet next{ArgMax(o.p_initial), ArgMax(o.p_rhyme),
                               ArgMax(o.p_tone)};
    if (next.rhyme_id == kEosId) break;
    out.push_back(next);
    previous = next;
  }
  return out;
}

Example MakeExample(Matrix acoustic, std::span<const SyllableTriplet> syllables,
                    std::size_t pad_to) {
  Example ex;
  ex.acoustic = std::move(acoustic);
  ex.targets.assign(syllables.begin(), syllables.end());
  ex.targets.push_back({kEosId, kEosId, kEosId});
  while (ex.targets.size() < pad_to) ex.targets.push_back({kPadId, kPadId, kPadId});
  return ex;
}

double Loss(std::span<const Example> batch, const DecoderParams& params,
            const DecoderConfig& config) {
  params.CheckShapes(config);
  CheckBatch(batch, config);
  const int n = CountTargets(batch);
  if (n == 0) throw Error(ErrorKind::kAllPadded, "no unmasked target");
  double total = 0.0;
  StepCache c;
  for (const auto& ex : batch) {
    const ExampleKv kv = ProjectFrames(ex.acoustic, params);
    SyllableTriplet previous = BosTriplet();
    for (std::size_t k = 0; k < ex.targets.size(); ++k) {
      const SyllableTriplet& target = ex.targets[k];
      if (!IsPad(target)) {
        Forward(previous, static_cast<int>(k), kv, params, config, c);
        total += CrossEntropy(c.out, target);
      }
      previous = target;
    }
  }
  const double loss = total / n;
  if (!std::isfinite(loss)) throw Error(ErrorKind::kNonFinite, "loss");
  return loss;
}

LossGradient LossAndGradient(std::span<const Example> batch,
                             const DecoderParams& params,
                             const DecoderConfig& config) {
  params.CheckShapes(config);
  CheckBatch(batch, config);
  const int n = CountTargets(batch);
  if (n == 0) throw Error(ErrorKind::kAllPadded, "no unmasked target");
  const double scale = 1.0 / n;
  LossGradient result{0.0, DecoderParams::Zeros(config)};
  DecoderParams& g = result.gradient;
  StepCache c;
  for (const auto& ex : batch) {
    const ExampleKv kv = ProjectFrames(ex.acoustic, params);
    Matrix d_keys = Matrix::Zero(kv.keys.rows(), kv.keys.cols());
    Matrix d_values = Matrix::Zero(kv.values.rows(), kv.values.cols());
    SyllableTriplet previous = BosTriplet();
    for (std::size_t k = 0; k < ex.targets.size(); ++k) {
      const SyllableTriplet& target = ex.targets[k];
      if (!IsPad(target)) {
        Forward(previous, static_cast<int>(k), kv, params, config, c);
        c.target = target;
        result.loss += CrossEntropy(c.out, target);
        Backward(c, kv, ex.acoustic, params, config, scale, g, d_keys, d_values);
      }
      previous = target;
    }
    g.key_w.noalias() += d_keys.transpose() * ex.acoustic;
    g.value_w.noalias() += d_values.transpose() * ex.acoustic;
    g.value_b += d_values.colwise().sum().transpose();
  }
  result.loss *= scale;
  if (!std::isfinite(result.loss)) throw Error(ErrorKind::kNonFinite, "loss");
  return result;
}

double FiniteDifferenceError(std::span<double> x,
                             std::span<const double> analytic,
                             std::span<const std::size_t> indices,
                             const std::function<double()>& f, double epsilon) {
  double worst = 0.0;
  for (std::size_t i : indices) {
    const double saved = x[i];
    x[i] = saved + epsilon;
    const double plus = f();
    x[i] = saved - epsilon;
    const double minus = f();
    x[i] = saved;
    const double numeric = (plus - minus) / (2.0 * epsilon);
    const double denom = std::max(1e-8, std::abs(analytic[i]) + std::abs(numeric));
    worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
  }
  return worst;
}

GradCheckResult GradCheck(const DecoderParams& params,
                          std::span<const Example> batch,
                          const DecoderConfig& config, double epsilon,
                          std::size_t min_coordinates, std::uint64_t seed) {
  if (!(epsilon >= 1e-6 && epsilon <= 1e-3)) {
    throw std::invalid_argument("epsilon must lie in [1e-6, 1e-3]");
  }
  const LossGradient analytic = LossAndGradient(batch, params, config);
  DecoderParams probe = params;
  auto tensors = probe.Tensors();
  const auto grads = analytic.gradient.Tensors();
  const std::size_t per_tensor =
      (min_coordinates + tensors.size() - 1) / tensors.size();

  std::mt19937_64 rng(seed);
  GradCheckResult result;
  result.tensors = tensors.size();
  auto loss = [&] { return Loss(batch, probe, config); };
  // Shuffled coordinates per tensor; small tensors are taken whole and the
  // shortfall is spread over the larger ones.
  std::vector<std::vector<std::size_t>> order(tensors.size());
  std::vector<std::size_t> take(tensors.size());
  std::size_t total = 0;
  for (std::size_t k = 0; k < tensors.size(); ++k) {
    order[k].resize(tensors[k].size);
    std::iota(order[k].begin(), order[k].end(), 0);
    std::shuffle(order[k].begin(), order[k].end(), rng);
    take[k] = std::min(per_tensor, tensors[k].size);
    total += take[k];
  }
  for (bool grew = true; total < min_coordinates && grew;) {
    grew = false;
    for (std::size_t k = 0; k < tensors.size() && total < min_coordinates; ++k) {
      if (take[k] < tensors[k].size) {
        ++take[k];
        ++total;
        grew = true;
      }
    }
  }
  for (std::size_t k = 0; k < tensors.size(); ++k) {
    order[k].resize(take[k]);
    result.coordinates += take[k];
    const double err = FiniteDifferenceError(
        std::span<double>(tensors[k].data, tensors[k].size),
        std::span<const double>(grads[k].data, grads[k].size), order[k], loss,
        epsilon);
    result.max_relative_error = std::max(result.max_relative_error, err);
  }
  return result;
}

double TeacherForcedAccuracy(std::span<const Example> batch,
                             const DecoderParams& params,
                             const DecoderConfig& config) {
  params.CheckShapes(config);
  CheckBatch(batch, config);
  long correct = 0;
  long total = 0;
  StepCache c;
  for (const auto& ex : batch) {
    const ExampleKv kv = ProjectFrames(ex.acoustic, params);
    SyllableTriplet previous = BosTriplet();
    for (std::size_t k = 0; k < ex.targets.size(); ++k) {
      const SyllableTriplet& target = ex.targets[k];
      if (!IsPad(target)) {
        Forward(previous, static_cast<int>(k), kv, params, config, c);
        correct += ArgMax(c.out.p_rhyme) == target.rhyme_id;
        correct += ArgMax(c.out.p_initial) == target.initial_id;
        correct += ArgMax(c.out.p_tone) == target.tone_id;
        total += 3;
      }
      previous = target;
    }
  }
  if (total == 0) throw Error(ErrorKind::kAllPadded, "no unmasked target");
  return static_cast<double>(correct) / static_cast<double>(total);
}

TrainingRun TrainGradientDescent(std::span<const Example> batch,
                                 DecoderParams& params,
                                 const DecoderConfig& config, int steps,
                                 double learning_rate) {
  TrainingRun run;
  run.losses.reserve(static_cast<std::size_t>(steps) + 1);
  for (int step = 0; step < steps; ++step) {
    LossGradient lg = LossAndGradient(batch, params, config);
    run.losses.push_back(lg.loss);
    params.AddScaled(lg.gradient, -learning_rate);
  }
  run.losses.push_back(Loss(batch, params, config));
  return run;
}

ToyDataset SynthesizeToyDataset(const DecoderConfig& config, int count,
                                int frames, int min_length, int max_length,
                                std::uint64_t seed) {
  config.Validate();
  if (frames < 1 || min_length < 0 || max_length < min_length) {
    throw std::invalid_argument("bad toy dataset shape");
  }
  if (config.initial_vocab <= kNoneInitialId || config.rhyme_vocab <= kEosId + 1 ||
      config.tone_vocab <= kEosId + 1) {
    throw Error(ErrorKind::kShapeMismatch, "toy vocabularies need content ids");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> length(min_length, max_length);
  std::uniform_int_distribution<int> initial(kNoneInitialId, config.initial_vocab - 1);
  std::uniform_int_distribution<int> rhyme(kEosId + 1, config.rhyme_vocab - 1);
  std::uniform_int_distribution<int> tone(kEosId + 1, config.tone_vocab - 1);

  ToyDataset data;
  for (int n = 0; n < count; ++n) {
    Matrix acoustic(frames, config.dim);
    for (Eigen::Index i = 0; i < acoustic.size(); ++i) acoustic.data()[i] = normal(rng);
    std::vector<SyllableTriplet> seq(static_cast<std::size_t>(length(rng)));
    for (auto& t : seq) {
      const int i = initial(rng);
      const int r = rhyme(rng);
      t = {i, r, tone(rng)};
    }
    data.examples.push_back(MakeExample(std::move(acoustic), seq));
    data.sequences.push_back(std::move(seq));
  }
  return data;
}

}  // namespace syllabic::decoder
