#include "maskdistill/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maskdistill/errors.hpp"
#include "maskdistill/rng.hpp"

namespace maskdistill::model {

const char* to_string(MaskMode m) { return m == MaskMode::literal ? "literal" : "exclusive"; }

MaskMode mask_mode_from_string(const std::string& s) {
    if (s == "literal") return MaskMode::literal;
    if (s == "exclusive") return MaskMode::exclusive;
    throw Error("unknown mask mode: " + s);
}

void ModelConfig::validate() const {
    if (vocab_size < 1) throw Error("vocab_size must be positive");
    if (context_length < 4) throw Error("context_length must be >= 4");
    if (width < 1 || heads < 1 || layers < 1) throw Error("width, heads, and layers must be positive");
    if (width % heads != 0) throw Error("width must be divisible by heads");
}

namespace {

constexpr double kLnEps = 1e-5;

// C = A.B (or += with accumulate); A is m x k, B is k x n.
template <typename T>
void matmul_nn(const Matrix<T>& a, const Matrix<T>& b, Matrix<T>& c, bool accumulate = false) {
    if (!accumulate) c.fill(T(0));
    for (int i = 0; i < a.rows; ++i) {
        const T* ai = a.row(i);
        T* ci = c.row(i);
        for (int k = 0; k < a.cols; ++k) {
            const T aik = ai[k];
            const T* bk = b.row(k);
            for (int j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
        }
    }
}

// C = A.B^T; A is m x k, B is n x k.
template <typename T>
void matmul_nt(const Matrix<T>& a, const Matrix<T>& b, Matrix<T>& c, bool accumulate = false) {
    if (!accumulate) c.fill(T(0));
    for (int i = 0; i < a.rows; ++i) {
        const T* ai = a.row(i);
        T* ci = c.row(i);
        for (int j = 0; j < b.rows; ++j) {
            const T* bj = b.row(j);
            T sum = T(0);
            for (int k = 0; k < a.cols; ++k) sum += ai[k] * bj[k];
            ci[j] += sum;
        }
    }
}

// C = A^T.B; A is k x m, B is k x n.
template <typename T>
void matmul_tn(const Matrix<T>& a, const Matrix<T>& b, Matrix<T>& c, bool accumulate = false) {
    if (!accumulate) c.fill(T(0));
    for (int k = 0; k < a.rows; ++k) {
        const T* ak = a.row(k);
        const T* bk = b.row(k);
        for (int i = 0; i < a.cols; ++i) {
            const T aki = ak[i];
            T* ci = c.row(i);
            for (int j = 0; j < b.cols; ++j) ci[j] += aki * bk[j];
        }
    }
}

template <typename T>
T gelu(T x) {
    return T(0.5) * x * (T(1) + std::erf(x * T(0.70710678118654752440)));
}

template <typename T>
T gelu_grad(T x) {
    const T cdf = T(0.5) * (T(1) + std::erf(x * T(0.70710678118654752440)));
    const T pdf = std::exp(T(-0.5) * x * x) * T(0.39894228040143267794);
    return cdf + x * pdf;
}

template <typename T>
void layernorm_forward(const Matrix<T>& x, const std::vector<T>& gain, const std::vector<T>& bias,
                       Matrix<T>& norm, Matrix<T>& out, std::vector<T>& rstd) {
    const int d = x.cols;
    norm = Matrix<T>(x.rows, d);
    out = Matrix<T>(x.rows, d);
    rstd.assign(static_cast<std::size_t>(x.rows), T(0));
    for (int t = 0; t < x.rows; ++t) {
        const T* xt = x.row(t);
        T mean = T(0);
        for (int j = 0; j < d; ++j) mean += xt[j];
        mean /= T(d);
        T var = T(0);
        for (int j = 0; j < d; ++j) {
            const T c = xt[j] - mean;
            var += c * c;
        }
        var /= T(d);
        const T r = T(1) / std::sqrt(var + T(kLnEps));
        rstd[static_cast<std::size_t>(t)] = r;
        T* nt = norm.row(t);
        T* ot = out.row(t);
        for (int j = 0; j < d; ++j) {
            nt[j] = (xt[j] - mean) * r;
            ot[j] = gain[static_cast<std::size_t>(j)] * nt[j] + bias[static_cast<std::size_t>(j)];
        }
    }
}

template <typename T>
Matrix<T> layernorm_backward(const Matrix<T>& dout, const Matrix<T>& norm, const std::vector<T>& rstd,
                             const std::vector<T>& gain, std::vector<T>& dgain, std::vector<T>& dbias) {
    const int d = dout.cols;
    Matrix<T> dx(dout.rows, d);
    std::vector<T> dnorm(static_cast<std::size_t>(d));
    for (int t = 0; t < dout.rows; ++t) {
        const T* dt = dout.row(t);
        const T* nt = norm.row(t);
        T sum_dnorm = T(0);
        T sum_dnorm_norm = T(0);
        for (int j = 0; j < d; ++j) {
            const T dn = dt[j] * gain[static_cast<std::size_t>(j)];
            dnorm[static_cast<std::size_t>(j)] = dn;
            sum_dnorm += dn;
            sum_dnorm_norm += dn * nt[j];
            dgain[static_cast<std::size_t>(j)] += dt[j] * nt[j];
            dbias[static_cast<std::size_t>(j)] += dt[j];
        }
        const T mean_dnorm = sum_dnorm / T(d);
        const T mean_dnorm_norm = sum_dnorm_norm / T(d);
        const T r = rstd[static_cast<std::size_t>(t)];
        T* dxt = dx.row(t);
        for (int j = 0; j < d; ++j)
            dxt[j] = r * (dnorm[static_cast<std::size_t>(j)] - mean_dnorm - nt[j] * mean_dnorm_norm);
    }
    return dx;
}

template <typename T>
Matrix<T> head_slice(const Matrix<T>& x, int head, int head_dim) {
    Matrix<T> out(x.rows, head_dim);
    const int off = head * head_dim;
    for (int t = 0; t < x.rows; ++t) {
        const T* xt = x.row(t) + off;
        std::copy(xt, xt + head_dim, out.row(t));
    }
    return out;
}

template <typename T>
void head_place(Matrix<T>& x, const Matrix<T>& part, int head, int head_dim) {
    const int off = head * head_dim;
    for (int t = 0; t < part.rows; ++t) std::copy(part.row(t), part.row(t) + head_dim, x.row(t) + off);
}

template <typename T>
void check_mask_bits(const std::vector<int>& bits) {
    for (int b : bits)
        if (b != 0 && b != 1) throw Error("mask bits must be 0 or 1, got " + std::to_string(b));
}

template <typename T>
bool all_finite(const Matrix<T>& m) {
    for (const T& v : m.a)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace

template <typename T>
std::vector<TensorRef<T>> tensor_refs(Params<T>& params) {
    std::vector<TensorRef<T>> refs;
    auto add_mat = [&](const std::string& name, Matrix<T>& m, bool decay) {
        refs.push_back({name, &m.a, {m.rows, m.cols}, decay});
    };
    auto add_vec = [&](const std::string& name, std::vector<T>& v, bool decay) {
        refs.push_back({name, &v, {static_cast<int>(v.size())}, decay});
    };
    add_mat("tok_emb", params.tok_emb, false);
    add_mat("pos_emb", params.pos_emb, false);
    for (std::size_t i = 0; i < params.layers.size(); ++i) {
        auto& l = params.layers[i];
        const std::string p = "layer" + std::to_string(i) + ".";
        add_vec(p + "ln1.gain", l.ln1_gain, false);
        add_vec(p + "ln1.bias", l.ln1_bias, false);
        add_mat(p + "attn.wq", l.wq, true);
        add_mat(p + "attn.wk", l.wk, true);
        add_mat(p + "attn.wv", l.wv, true);
        add_mat(p + "attn.wo", l.wo, true);
        add_vec(p + "ln2.gain", l.ln2_gain, false);
        add_vec(p + "ln2.bias", l.ln2_bias, false);
        add_mat(p + "ffn.w1", l.w1, true);
        add_vec(p + "ffn.b1", l.b1, true);
        add_mat(p + "ffn.w2", l.w2, true);
        add_vec(p + "ffn.b2", l.b2, true);
    }
    add_vec("ln_f.gain", params.ln_f_gain, false);
    add_vec("ln_f.bias", params.ln_f_bias, false);
    if (!params.config.tied_output) add_mat("out_proj", params.out_proj, true);
    return refs;
}

template <typename T>
Params<T> zeros_for(const ModelConfig& c) {
    Params<T> z;
    z.config = c;
    z.tok_emb = Matrix<T>(c.vocab_size, c.width);
    z.pos_emb = Matrix<T>(c.context_length, c.width);
    z.layers.resize(static_cast<std::size_t>(c.layers));
    for (auto& l : z.layers) {
        l.wq = Matrix<T>(c.width, c.width);
        l.wk = Matrix<T>(c.width, c.width);
        l.wv = Matrix<T>(c.width, c.width);
        l.wo = Matrix<T>(c.width, c.width);
        l.w1 = Matrix<T>(c.width, 4 * c.width);
        l.b1.assign(static_cast<std::size_t>(4 * c.width), T(0));
        l.w2 = Matrix<T>(4 * c.width, c.width);
        l.b2.assign(static_cast<std::size_t>(c.width), T(0));
        l.ln1_gain.assign(static_cast<std::size_t>(c.width), T(0));
        l.ln1_bias.assign(static_cast<std::size_t>(c.width), T(0));
        l.ln2_gain.assign(static_cast<std::size_t>(c.width), T(0));
        l.ln2_bias.assign(static_cast<std::size_t>(c.width), T(0));
    }
    z.ln_f_gain.assign(static_cast<std::size_t>(c.width), T(0));
    z.ln_f_bias.assign(static_cast<std::size_t>(c.width), T(0));
    if (!c.tied_output) z.out_proj = Matrix<T>(c.vocab_size, c.width);
    return z;
}

template <typename T>
Params<T> zeros_like(const Params<T>& params) {
    return zeros_for<T>(params.config);
}

template <typename T>
Params<T> init_params(const ModelConfig& config, std::uint64_t seed) {
    config.validate();
    Params<T> params = zeros_for<T>(config);

    Rng rng(seed);
    const T std_dev = T(0.02);
    for (auto& ref : tensor_refs(params)) {
        const bool is_gain = ref.name.size() >= 5 && ref.name.compare(ref.name.size() - 5, 5, ".gain") == 0;
        const bool is_bias = (ref.name.size() >= 5 && ref.name.compare(ref.name.size() - 5, 5, ".bias") == 0) ||
                             (ref.name.size() >= 3 && ref.name.compare(ref.name.size() - 3, 3, ".b1") == 0) ||
                             (ref.name.size() >= 3 && ref.name.compare(ref.name.size() - 3, 3, ".b2") == 0);
        if (is_gain) {
            std::fill(ref.data->begin(), ref.data->end(), T(1));
        } else if (is_bias) {
            std::fill(ref.data->begin(), ref.data->end(), T(0));
        } else {
            for (auto& v : *ref.data) v = T(rng.next_gaussian()) * std_dev;
        }
    }
    return params;
}

template <typename T>
Matrix<T> masked_attention(const Matrix<T>& queries, const Matrix<T>& keys, const Matrix<T>& values,
                           const std::vector<int>& key_mask, bool causal, MaskMode mode,
                           AttentionTrace<T>* trace, AttentionStats* stats) {
    if (queries.cols != keys.cols)
        throw LengthMismatch("query dim " + std::to_string(queries.cols) + " vs key dim " + std::to_string(keys.cols));
    if (keys.rows != values.rows)
        throw LengthMismatch("keys and values disagree on sequence length");
    if (static_cast<int>(key_mask.size()) != keys.rows)
        throw LengthMismatch("mask length " + std::to_string(key_mask.size()) + " vs " + std::to_string(keys.rows) + " keys");
    if (causal && queries.rows != keys.rows)
        throw LengthMismatch("causal attention requires as many queries as keys");
    check_mask_bits<T>(key_mask);
    if (!all_finite(queries) || !all_finite(keys) || !all_finite(values))
        throw NonFiniteInput("masked_attention received non-finite inputs");

    const T inf = std::numeric_limits<T>::infinity();
    const T scale = T(1) / std::sqrt(T(queries.cols));

    Matrix<T> scores(queries.rows, keys.rows);
    matmul_nt(queries, keys, scores);
    for (T& s : scores.a) s *= scale;
    if (trace) trace->scores = scores;

    // Mask + causality; one element-wise pass over the score matrix.
    for (int i = 0; i < scores.rows; ++i) {
        T* si = scores.row(i);
        for (int j = 0; j < scores.cols; ++j) {
            if (mode == MaskMode::literal)
                si[j] *= T(key_mask[static_cast<std::size_t>(j)]);
            else if (key_mask[static_cast<std::size_t>(j)] == 0)
                si[j] = -inf;
            if (causal && j > i) si[j] = -inf;
        }
    }
    if (stats) {
        stats->mask_ops += static_cast<long>(scores.rows) * scores.cols;
        stats->attention_calls += 1;
    }
    if (trace) trace->masked_scores = scores;

    Matrix<T> weights(scores.rows, scores.cols);
    for (int i = 0; i < scores.rows; ++i) {
        const T* si = scores.row(i);
        T row_max = -inf;
        for (int j = 0; j < scores.cols; ++j) row_max = std::max(row_max, si[j]);
        if (row_max == -inf)
            throw Error("attention row " + std::to_string(i) + " has no attendable key");
        T sum = T(0);
        T* wi = weights.row(i);
        for (int j = 0; j < scores.cols; ++j) {
            wi[j] = si[j] == -inf ? T(0) : std::exp(si[j] - row_max);
            sum += wi[j];
        }
        const T inv = T(1) / sum;
        for (int j = 0; j < scores.cols; ++j) wi[j] *= inv;
    }
    if (trace) trace->weights = weights;

    Matrix<T> out(queries.rows, values.cols);
    matmul_nn(weights, values, out);
    return out;
}

template <typename T>
Matrix<T> forward(const Params<T>& params, const std::vector<int>& ids, const std::vector<int>& mask_bits,
                  MaskMode mode, ForwardTrace<T>* trace, std::vector<std::vector<AttentionTrace<T>>>* attn_traces,
                  AttentionStats* stats) {
    const ModelConfig& c = params.config;
    const int n = static_cast<int>(ids.size());
    if (n == 0) throw Error("forward requires a non-empty sequence");
    if (n > c.context_length)
        throw SequenceTooLong("sequence of " + std::to_string(n) + " tokens exceeds context length " +
                              std::to_string(c.context_length));
    for (int id : ids)
        if (id < 0 || id >= c.vocab_size)
            throw OutOfVocab("token id " + std::to_string(id) + " outside vocabulary of size " +
                             std::to_string(c.vocab_size));
    if (static_cast<int>(mask_bits.size()) != n)
        throw LengthMismatch("mask length " + std::to_string(mask_bits.size()) + " vs sequence length " +
                             std::to_string(n));
    check_mask_bits<T>(mask_bits);

    const int d = c.width;
    const int hd = c.head_dim();
    const bool want_trace = trace != nullptr;
    if (want_trace) {
        trace->ids = ids;
        trace->mask_bits = mask_bits;
        trace->mode = mode;
        trace->layers.assign(static_cast<std::size_t>(c.layers), LayerTrace<T>{});
    }
    if (attn_traces) attn_traces->assign(static_cast<std::size_t>(c.layers), {});

    Matrix<T> x(n, d);
    for (int t = 0; t < n; ++t) {
        const T* te = params.tok_emb.row(ids[static_cast<std::size_t>(t)]);
        const T* pe = params.pos_emb.row(t);
        T* xt = x.row(t);
        for (int j = 0; j < d; ++j) xt[j] = te[j] + pe[j];
    }

    for (int li = 0; li < c.layers; ++li) {
        const auto& l = params.layers[static_cast<std::size_t>(li)];
        LayerTrace<T>* lt = want_trace ? &trace->layers[static_cast<std::size_t>(li)] : nullptr;

        Matrix<T> ln1_norm, ln1_out;
        std::vector<T> ln1_rstd;
        layernorm_forward(x, l.ln1_gain, l.ln1_bias, ln1_norm, ln1_out, ln1_rstd);

        Matrix<T> q(n, d), k(n, d), v(n, d);
        matmul_nn(ln1_out, l.wq, q);
        matmul_nn(ln1_out, l.wk, k);
        matmul_nn(ln1_out, l.wv, v);

        Matrix<T> concat(n, d);
        if (lt) lt->head_weights.resize(static_cast<std::size_t>(c.heads));
        for (int h = 0; h < c.heads; ++h) {
            const Matrix<T> qh = head_slice(q, h, hd);
            const Matrix<T> kh = head_slice(k, h, hd);
            const Matrix<T> vh = head_slice(v, h, hd);
            AttentionTrace<T> at;
            AttentionTrace<T>* at_ptr = (lt || attn_traces) ? &at : nullptr;
            Matrix<T> oh = masked_attention(qh, kh, vh, mask_bits, /*causal=*/true, mode, at_ptr, stats);
            head_place(concat, oh, h, hd);
            if (lt) lt->head_weights[static_cast<std::size_t>(h)] = at.weights;
            if (attn_traces) (*attn_traces)[static_cast<std::size_t>(li)].push_back(std::move(at));
        }

        Matrix<T> attn_out(n, d);
        matmul_nn(concat, l.wo, attn_out);
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += attn_out.a[i];

        if (lt) {
            lt->ln1_norm = std::move(ln1_norm);
            lt->ln1_out = std::move(ln1_out);
            lt->ln1_rstd = std::move(ln1_rstd);
            lt->q = std::move(q);
            lt->k = std::move(k);
            lt->v = std::move(v);
            lt->attn_concat = std::move(concat);
        }

        Matrix<T> ln2_norm, ln2_out;
        std::vector<T> ln2_rstd;
        layernorm_forward(x, l.ln2_gain, l.ln2_bias, ln2_norm, ln2_out, ln2_rstd);

        Matrix<T> ff_pre(n, 4 * d);
        matmul_nn(ln2_out, l.w1, ff_pre);
        for (int t = 0; t < n; ++t) {
            T* row = ff_pre.row(t);
            for (int j = 0; j < 4 * d; ++j) row[j] += l.b1[static_cast<std::size_t>(j)];
        }
        Matrix<T> ff_act(n, 4 * d);
        for (std::size_t i = 0; i < ff_pre.a.size(); ++i) ff_act.a[i] = gelu(ff_pre.a[i]);

        Matrix<T> ff_out(n, d);
        matmul_nn(ff_act, l.w2, ff_out);
        for (int t = 0; t < n; ++t) {
            T* row = ff_out.row(t);
            for (int j = 0; j < d; ++j) row[j] += l.b2[static_cast<std::size_t>(j)];
        }
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += ff_out.a[i];

        if (lt) {
            lt->ln2_norm = std::move(ln2_norm);
            lt->ln2_out = std::move(ln2_out);
            lt->ln2_rstd = std::move(ln2_rstd);
            lt->ff_pre = std::move(ff_pre);
            lt->ff_act = std::move(ff_act);
        }
    }

    Matrix<T> lnf_norm, h_final;
    std::vector<T> lnf_rstd;
    layernorm_forward(x, params.ln_f_gain, params.ln_f_bias, lnf_norm, h_final, lnf_rstd);

    Matrix<T> logits(n, c.vocab_size);
    matmul_nt(h_final, c.tied_output ? params.tok_emb : params.out_proj, logits);

    if (want_trace) {
        trace->ln_f_norm = std::move(lnf_norm);
        trace->h_final = std::move(h_final);
        trace->ln_f_rstd = std::move(lnf_rstd);
        trace->logits = logits;
    }
    return logits;
}

template <typename T>
T backward(const Params<T>& params, const std::vector<int>& ids, const std::vector<int>& mask_bits,
           MaskMode mode, const std::vector<int>& targets, int segment_begin, int segment_end,
           Params<T>& grads, T scale) {
    const ModelConfig& c = params.config;
    ForwardTrace<T> tr;
    forward(params, ids, mask_bits, mode, &tr);

    const int n = static_cast<int>(ids.size());
    segment_begin = std::max(segment_begin, 0);
    segment_end = std::min({segment_end, n - 1, static_cast<int>(targets.size())});
    const int scope = segment_end - segment_begin;
    if (scope <= 0) return T(0);

    // Softmax cross-entropy over the segment; dlogits carries both the
    // 1/scope token mean and the caller's batch scale.
    Matrix<T> dlogits(n, c.vocab_size);
    T loss = T(0);
    const T grad_unit = scale / T(scope);
    for (int t = segment_begin; t < segment_end; ++t) {
        const int target = targets[static_cast<std::size_t>(t)];
        if (target < 0 || target >= c.vocab_size)
            throw OutOfVocab("target id " + std::to_string(target) + " outside vocabulary");
        const T* lt = tr.logits.row(t);
        T row_max = lt[0];
        for (int v = 1; v < c.vocab_size; ++v) row_max = std::max(row_max, lt[v]);
        T sum = T(0);
        for (int v = 0; v < c.vocab_size; ++v) sum += std::exp(lt[v] - row_max);
        const T lse = row_max + std::log(sum);
        loss += lse - lt[target];
        T* dt = dlogits.row(t);
        for (int v = 0; v < c.vocab_size; ++v) {
            const T p = std::exp(lt[v] - lse);
            dt[v] = (p - (v == target ? T(1) : T(0))) * grad_unit;
        }
    }
    loss /= T(scope);

    const int d = c.width;
    const int hd = c.head_dim();
    const T att_scale = T(1) / std::sqrt(T(hd));

    // Output projection (tied or separate).
    Matrix<T> dh(n, d);
    if (c.tied_output) {
        matmul_nn(dlogits, params.tok_emb, dh);
        matmul_tn(dlogits, tr.h_final, grads.tok_emb, /*accumulate=*/true);
    } else {
        matmul_nn(dlogits, params.out_proj, dh);
        matmul_tn(dlogits, tr.h_final, grads.out_proj, /*accumulate=*/true);
    }

    Matrix<T> dx = layernorm_backward(dh, tr.ln_f_norm, tr.ln_f_rstd, params.ln_f_gain, grads.ln_f_gain,
                                      grads.ln_f_bias);

    for (int li = c.layers - 1; li >= 0; --li) {
        const auto& l = params.layers[static_cast<std::size_t>(li)];
        auto& gl = grads.layers[static_cast<std::size_t>(li)];
        const auto& lt = tr.layers[static_cast<std::size_t>(li)];

        // Feed-forward block: x_out = x_mid + ff(ln2(x_mid)).
        const Matrix<T>& d_ff_out = dx;
        matmul_tn(lt.ff_act, d_ff_out, gl.w2, /*accumulate=*/true);
        for (int t = 0; t < n; ++t) {
            const T* row = d_ff_out.row(t);
            for (int j = 0; j < d; ++j) gl.b2[static_cast<std::size_t>(j)] += row[j];
        }
        Matrix<T> d_ff_act(n, 4 * d);
        matmul_nt(d_ff_out, l.w2, d_ff_act);
        Matrix<T> d_ff_pre(n, 4 * d);
        for (std::size_t i = 0; i < d_ff_pre.a.size(); ++i)
            d_ff_pre.a[i] = d_ff_act.a[i] * gelu_grad(lt.ff_pre.a[i]);
        matmul_tn(lt.ln2_out, d_ff_pre, gl.w1, /*accumulate=*/true);
        for (int t = 0; t < n; ++t) {
            const T* row = d_ff_pre.row(t);
            for (int j = 0; j < 4 * d; ++j) gl.b1[static_cast<std::size_t>(j)] += row[j];
        }
        Matrix<T> d_ln2_out(n, d);
        matmul_nt(d_ff_pre, l.w1, d_ln2_out);
        Matrix<T> d_x_mid = layernorm_backward(d_ln2_out, lt.ln2_norm, lt.ln2_rstd, l.ln2_gain, gl.ln2_gain,
                                               gl.ln2_bias);
        for (std::size_t i = 0; i < d_x_mid.a.size(); ++i) d_x_mid.a[i] += dx.a[i];

        // Attention block: x_mid = x_in + wo(attention(ln1(x_in))).
        const Matrix<T>& d_attn_out = d_x_mid;
        matmul_tn(lt.attn_concat, d_attn_out, gl.wo, /*accumulate=*/true);
        Matrix<T> d_concat(n, d);
        matmul_nt(d_attn_out, l.wo, d_concat);

        Matrix<T> dq(n, d), dk(n, d), dv(n, d);
        for (int h = 0; h < c.heads; ++h) {
            const Matrix<T> qh = head_slice(lt.q, h, hd);
            const Matrix<T> kh = head_slice(lt.k, h, hd);
            const Matrix<T> vh = head_slice(lt.v, h, hd);
            const Matrix<T> d_oh = head_slice(d_concat, h, hd);
            const Matrix<T>& p = lt.head_weights[static_cast<std::size_t>(h)];

            Matrix<T> dp(n, n);
            matmul_nt(d_oh, vh, dp);
            Matrix<T> dvh(n, hd);
            matmul_tn(p, d_oh, dvh);

            // Softmax backward; rows with zero weight contribute nothing.
            Matrix<T> ds(n, n);
            for (int i = 0; i < n; ++i) {
                const T* pi = p.row(i);
                const T* dpi = dp.row(i);
                T row_dot = T(0);
                for (int j = 0; j < n; ++j) row_dot += dpi[j] * pi[j];
                T* dsi = ds.row(i);
                for (int j = 0; j < n; ++j) dsi[j] = pi[j] * (dpi[j] - row_dot);
            }
            if (mode == MaskMode::literal) {
                for (int i = 0; i < n; ++i) {
                    T* dsi = ds.row(i);
                    for (int j = 0; j < n; ++j) dsi[j] *= T(mask_bits[static_cast<std::size_t>(j)]);
                }
            }
            for (T& val : ds.a) val *= att_scale;

            Matrix<T> dqh(n, hd);
            matmul_nn(ds, kh, dqh);
            Matrix<T> dkh(n, hd);
            matmul_tn(ds, qh, dkh);
            head_place(dq, dqh, h, hd);
            head_place(dk, dkh, h, hd);
            head_place(dv, dvh, h, hd);
        }

        matmul_tn(lt.ln1_out, dq, gl.wq, /*accumulate=*/true);
        matmul_tn(lt.ln1_out, dk, gl.wk, /*accumulate=*/true);
        matmul_tn(lt.ln1_out, dv, gl.wv, /*accumulate=*/true);
        Matrix<T> d_ln1_out(n, d);
        matmul_nt(dq, l.wq, d_ln1_out);
        matmul_nt(dk, l.wk, d_ln1_out, /*accumulate=*/true);
        matmul_nt(dv, l.wv, d_ln1_out, /*accumulate=*/true);
        Matrix<T> d_x_in = layernorm_backward(d_ln1_out, lt.ln1_norm, lt.ln1_rstd, l.ln1_gain, gl.ln1_gain,
                                              gl.ln1_bias);
        for (std::size_t i = 0; i < d_x_in.a.size(); ++i) d_x_in.a[i] += d_x_mid.a[i];
        dx = std::move(d_x_in);
    }

    // Embeddings.
    for (int t = 0; t < n; ++t) {
        const T* dxt = dx.row(t);
        T* ge = grads.tok_emb.row(ids[static_cast<std::size_t>(t)]);
        T* gp = grads.pos_emb.row(t);
        for (int j = 0; j < d; ++j) {
            ge[j] += dxt[j];
            gp[j] += dxt[j];
        }
    }

    return loss;
}

std::vector<int> greedy_decode(const Params<float>& params, const std::vector<int>& prefix_ids,
                               const std::vector<int>& prefix_mask, int max_new_tokens, int eos_id,
                               MaskMode mode) {
    if (prefix_ids.empty()) throw Error("greedy_decode requires a non-empty prefix");
    std::vector<int> ids = prefix_ids;
    std::vector<int> bits = prefix_mask;
    for (int step = 0; step < max_new_tokens; ++step) {
        if (static_cast<int>(ids.size()) >= params.config.context_length) break;
        const auto logits = forward(params, ids, bits, mode);
        const float* last = logits.row(logits.rows - 1);
        int best = 0;
        for (int v = 1; v < logits.cols; ++v)
            if (last[v] > last[best]) best = v;
        ids.push_back(best);
        bits.push_back(1);
        if (best == eos_id) break;
    }
    return ids;
}

// clang-format off
template std::vector<TensorRef<float>> tensor_refs(Params<float>&);
template std::vector<TensorRef<double>> tensor_refs(Params<double>&);
template Params<float> zeros_for<float>(const ModelConfig&);
template Params<double> zeros_for<double>(const ModelConfig&);
template Params<float> zeros_like(const Params<float>&);
template Params<double> zeros_like(const Params<double>&);
template Params<float> init_params(const ModelConfig&, std::uint64_t);
template Params<double> init_params(const ModelConfig&, std::uint64_t);
template Matrix<float> masked_attention(const Matrix<float>&, const Matrix<float>&, const Matrix<float>&, const std::vector<int>&, bool, MaskMode, AttentionTrace<float>*, AttentionStats*);
template Matrix<double> masked_attention(const Matrix<double>&, const Matrix<double>&, const Matrix<double>&, const std::vector<int>&, bool, MaskMode, AttentionTrace<double>*, AttentionStats*);
template Matrix<float> forward(const Params<float>&, const std::vector<int>&, const std::vector<int>&, MaskMode, ForwardTrace<float>*, std::vector<std::vector<AttentionTrace<float>>>*, AttentionStats*);
template Matrix<double> forward(const Params<double>&, const std::vector<int>&, const std::vector<int>&, MaskMode, ForwardTrace<double>*, std::vector<std::vector<AttentionTrace<double>>>*, AttentionStats*);
template float backward(const Params<float>&, const std::vector<int>&, const std::vector<int>&, MaskMode, const std::vector<int>&, int, int, Params<float>&, float);
template double backward(const Params<double>&, const std::vector<int>&, const std::vector<int>&, MaskMode, const std::vector<int>&, int, int, Params<double>&, double);
// clang-format on

}  // namespace maskdistill::model
