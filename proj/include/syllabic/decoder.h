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

#ifndef SYLLABIC_DECODER_H_
#define SYLLABIC_DECODER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "syllabic/vocabulary.h"

namespace syllabic::decoder {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Activation { kIdentity, kTanh, kSigmoid };

struct DecoderConfig {
  int dim = 32;
  int heads = 4;
  int initial_vocab = 8;  // V_i, reserved ids included
  int rhyme_vocab = 8;    // V_r
  int tone_vocab = 8;     // V_t
  int max_syllables = 16;
  std::uint64_t seed = 0;
  bool positional_encoding = true;
  // Applied to W_r f + b_r before the rhyme softmax.
  Activation rhyme_activation = Activation::kIdentity;
  // Applied to W_it f_f + b_it.
  Activation fusion_activation = Activation::kTanh;

  // Throws Error(kShapeMismatch) on non-positive sizes, dim % heads != 0 or
  // a vocabulary smaller than 2.
  void Validate() const;
};

struct DecoderParams {
  Matrix initial_embedding;  // V_i x dim
  Matrix rhyme_embedding;    // V_r x dim
  Matrix tone_embedding;     // V_t x dim
  Matrix proj_w;             // W_e: dim x 3dim
  Vector proj_b;             // dim
  Matrix query_w, key_w, value_w, output_w;  // dim x dim
  // No key bias: it shifts every score of a head by the same q.b and
  // cancels in the softmax.
  Vector query_b, value_b, output_b;  // dim
  Matrix rhyme_w;            // W_r: V_r x dim
  Vector rhyme_b;            // V_r
  Matrix gate_w;             // W_k: dim x dim
  Vector gate_b;             // dim
  Matrix gate_rhyme_w;       // W^r_k: dim x V_r
  Vector gate_rhyme_b;       // dim
  Matrix fusion_w;           // W_it: dim x dim
  Vector fusion_b;           // dim
  Matrix initial_w;          // W_i: V_i x dim
  Vector initial_b;          // V_i
  Matrix tone_w;             // W_t: V_t x dim
  Vector tone_b;             // V_t

  static DecoderParams Zeros(const DecoderConfig& config);
  // Weights and embeddings ~ U(-1/sqrt(dim), 1/sqrt(dim)), biases 0.
  static DecoderParams Initialize(const DecoderConfig& config);

  struct Tensor {
    std::string_view name;
    double* data;
    std::size_t size;
  };
  struct ConstTensor {
    std::string_view name;
    const double* data;
    std::size_t size;
  };
  std::vector<Tensor> Tensors();
  std::vector<ConstTensor> Tensors() const;

  // this += scale * other
  void AddScaled(const DecoderParams& other, double scale);
  // Throws Error(kShapeMismatch).
  void CheckShapes(const DecoderConfig& config) const;
};

struct StepOutput {
  Vector p_rhyme;
  Vector p_initial;
  Vector p_tone;
};

struct AttentionOutput {
  Vector output;   // dim
  Matrix weights;  // heads x T
};

// W_e [e_i; e_r; e_t] + b. Throws Error(kUnknownId) for ids outside the
// embedding tables.
Vector EmbedSyllable(const SyllableTriplet& triplet, const DecoderParams& params);

// Scaled dot-product multi-head attention of one query over T frames
// (acoustic is T x dim). Throws Error(kShapeMismatch) or Error(kNonFinite).
AttentionOutput CrossAttend(const Vector& query, const Matrix& acoustic,
                            const DecoderParams& params, int heads);

// Rhyme-first factorized prediction with gated fusion:
//   f_r  = act_r(W_r f + b_r),                 p_rhyme   = softmax(f_r)
//   f_f  = sigmoid(W_k f + b_k) * tanh(W^r_k f_r + b^r_k)
//   f_it = act_it(W_it f_f + b_it)
//   p_initial = softmax(W_i f_it + b_i),       p_tone = softmax(W_t f_it + b_t)
// Throws Error(kNonFinite) if the input or any intermediate is not finite.
StepOutput PredictStep(const Vector& features, const DecoderParams& params,
                       const DecoderConfig& config);

Vector SinusoidalPosition(int position, int dim);

// Decoder input at one step: embedded previous syllable plus position, then
// a residual cross-attention block.
Vector StepFeatures(const SyllableTriplet& previous, int position,
                    const Matrix& acoustic, const DecoderParams& params,
                    const DecoderConfig& config);

// Starts from the all-BOS triplet; componentwise argmax with ties to the
// lowest id; stops on an EOS rhyme or after max_syllables steps.
std::vector<SyllableTriplet> DecodeGreedy(const Matrix& acoustic,
                                          const DecoderParams& params,
                                          const DecoderConfig& config,
                                          int max_syllables);

// One utterance. targets holds the syllables to predict, then the EOS
// triplet, then optional PAD triplets (masked out of the loss).
struct Example {
  Matrix acoustic;  // T x dim
  std::vector<SyllableTriplet> targets;
};

// Appends the EOS triplet and pads with PAD up to pad_to.
Example MakeExample(Matrix acoustic, std::span<const SyllableTriplet> syllables,
                    std::size_t pad_to = 0);

// Teacher-forced mean over non-PAD positions of the summed rhyme, initial
// and tone cross entropies. Throws Error(kAllPadded).
double Loss(std::span<const Example> batch, const DecoderParams& params,
            const DecoderConfig& config);

struct LossGradient {
  double loss = 0.0;
  DecoderParams gradient;
};

LossGradient LossAndGradient(std::span<const Example> batch,
                             const DecoderParams& params,
                             const DecoderConfig& config);

// Central differences over `indices` of x against `analytic`; returns
// max |g_a - g_fd| / max(1e-8, |g_a| + |g_fd|). f reads x, which is
// perturbed in place and restored.
double FiniteDifferenceError(std::span<double> x,
                             std::span<const double> analytic,
                             std::span<const std::size_t> indices,
                             const std::function<double()>& f, double epsilon);

struct GradCheckResult {
  double max_relative_error = 0.0;
  std::size_t coordinates = 0;
  std::size_t tensors = 0;
};

// Samples at least min_coordinates coordinates with every tensor
// represented. epsilon must lie in [1e-6, 1e-3].
GradCheckResult GradCheck(const DecoderParams& params,
                          std::span<const Example> batch,
                          const DecoderConfig& config, double epsilon,
                          std::size_t min_coordinates = 240,
                          std::uint64_t seed = 7);

// Fraction of (position, component) predictions whose argmax equals the
// target under teacher forcing, PAD positions excluded.
double TeacherForcedAccuracy(std::span<const Example> batch,
                             const DecoderParams& params,
                             const DecoderConfig& config);

struct TrainingRun {
  std::vector<double> losses;  // loss before each step, then the final loss
};

// Full-batch gradient descent with a fixed step size.
TrainingRun TrainGradientDescent(std::span<const Example> batch,
                                 DecoderParams& params,
                                 const DecoderConfig& config, int steps,
                                 double learning_rate);

struct ToyDataset {
  std::vector<Example> examples;
  std::vector<std::vector<SyllableTriplet>> sequences;  // without EOS
};

// Gaussian acoustic matrices (frames x dim) paired with random syllable
// sequences of length [min_length, max_length] over the config's content ids.
ToyDataset SynthesizeToyDataset(const DecoderConfig& config, int count,
                                int frames, int min_length, int max_length,
                                std::uint64_t seed);

}  // namespace syllabic::decoder

#endif  // SYLLABIC_DECODER_H_
