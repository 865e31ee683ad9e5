#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace maskdistill::model {

// How the per-token content mask enters attention.
//  literal:   scores multiplied by m_j before softmax. A zeroed score still
//             contributes exp(0) to the softmax, so masked keys keep weight.
//  exclusive: m_j = 0 keys get -inf scores, i.e. exactly zero weight.
enum class MaskMode { literal, exclusive };
const char* to_string(MaskMode m);
MaskMode mask_mode_from_string(const std::string& s);

struct ModelConfig {
    int vocab_size = 0;
    int context_length = 128;  // L
    int width = 64;            // d
    int heads = 4;             // h
    int layers = 2;            // n
    MaskMode mask_mode = MaskMode::exclusive;
    bool tied_output = true;   // logits projection shares the token embedding

    int head_dim() const { return width / heads; }
    void validate() const;
};

// Row-major dense matrix; the only tensor shape the model needs.
template <typename T>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), T(0)) {}

    T* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
    const T* row(int r) const { return a.data() + static_cast<std::size_t>(r) * cols; }
    T& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    void fill(T v) { std::fill(a.begin(), a.end(), v); }

    bool operator==(const Matrix&) const = default;
};

template <typename T>
struct LayerParams {
    Matrix<T> wq, wk, wv, wo;          // width x width
    Matrix<T> w1;                      // width x 4*width
    std::vector<T> b1;                 // 4*width
    Matrix<T> w2;                      // 4*width x width
    std::vector<T> b2;                 // width
    std::vector<T> ln1_gain, ln1_bias; // width
    std::vector<T> ln2_gain, ln2_bias; // width
};

template <typename T>
struct Params {
    ModelConfig config;
    Matrix<T> tok_emb;  // vocab_size x width
    Matrix<T> pos_emb;  // context_length x width
    std::vector<LayerParams<T>> layers;
    std::vector<T> ln_f_gain, ln_f_bias;
    Matrix<T> out_proj;  // vocab_size x width, only when !tied_output
};

// Named view over every trainable tensor, in a fixed order shared by the
// optimizer, checkpoints, and the gradient checker. weight_decay marks
// tensors subject to decoupled decay (projections); layer norms and
// embeddings are exempt.
template <typename T>
struct TensorRef {
    std::string name;
    std::vector<T>* data;
    std::vector<int> shape;
    bool weight_decay;
};

template <typename T>
std::vector<TensorRef<T>> tensor_refs(Params<T>& params);

template <typename T>
Params<T> init_params(const ModelConfig& config, std::uint64_t seed);
template <typename T>
Params<T> zeros_for(const ModelConfig& config);
template <typename T>
Params<T> zeros_like(const Params<T>& params);

// Test-only visibility into one attention application.
template <typename T>
struct AttentionTrace {
    Matrix<T> scores;         // q.k^T / sqrt(head_dim), before mask and causality
    Matrix<T> masked_scores;  // after mask mode and causal -inf, before softmax
    Matrix<T> weights;        // after softmax
};

// Operation-count accounting for the mask application; the whole point of
// offline masks is that this stays one element-wise pass over the scores.
struct AttentionStats {
    long mask_ops = 0;
    long attention_calls = 0;
};

// Single-head scaled dot-product attention over one sequence. key_mask holds
// the content-mask bit per key position.
template <typename T>
Matrix<T> masked_attention(const Matrix<T>& queries, const Matrix<T>& keys, const Matrix<T>& values,
                           const std::vector<int>& key_mask, bool causal, MaskMode mode,
                           AttentionTrace<T>* trace = nullptr, AttentionStats* stats = nullptr);

// Activation cache produced by forward() and consumed by backward().
template <typename T>
struct LayerTrace {
    Matrix<T> ln1_norm, ln1_out;         // (x-mu)*rstd, and after gain/bias
    std::vector<T> ln1_rstd;
    Matrix<T> q, k, v;
    std::vector<Matrix<T>> head_weights; // post-softmax probs per head
    Matrix<T> attn_concat;               // heads concatenated, before wo
    Matrix<T> ln2_norm, ln2_out;
    std::vector<T> ln2_rstd;
    Matrix<T> ff_pre;                    // before GELU
    Matrix<T> ff_act;                    // after GELU
};

template <typename T>
struct ForwardTrace {
    std::vector<int> ids;
    std::vector<int> mask_bits;
    MaskMode mode = MaskMode::exclusive;
    std::vector<LayerTrace<T>> layers;
    Matrix<T> ln_f_norm, h_final;
    std::vector<T> ln_f_rstd;
    Matrix<T> logits;
};

// Pre-norm decoder stack; returns logits (sequence x vocab). Pass a trace to
// keep activations for backward, attn_traces/stats for the test hooks.
template <typename T>
Matrix<T> forward(const Params<T>& params, const std::vector<int>& ids, const std::vector<int>& mask_bits,
                  MaskMode mode, ForwardTrace<T>* trace = nullptr,
                  std::vector<std::vector<AttentionTrace<T>>>* attn_traces = nullptr,
                  AttentionStats* stats = nullptr);

// Exact gradients of the mean cross-entropy over logits rows
// [segment_begin, segment_end) against targets[t] (the token at position
// t+1). Accumulates scale * gradient into grads and returns the loss. An
// empty segment contributes nothing.
template <typename T>
T backward(const Params<T>& params, const std::vector<int>& ids, const std::vector<int>& mask_bits,
           MaskMode mode, const std::vector<int>& targets, int segment_begin, int segment_end,
           Params<T>& grads, T scale);

// Greedy continuation of a prefix: appends the argmax token until eos_id or
// max_new_tokens. Generated positions get an all-ones mask (masks are a
// training-data artifact); ties break toward the lower id.
std::vector<int> greedy_decode(const Params<float>& params, const std::vector<int>& prefix_ids,
                               const std::vector<int>& prefix_mask, int max_new_tokens, int eos_id,
                               MaskMode mode);

}  // namespace maskdistill::model
