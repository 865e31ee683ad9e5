#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "maskdistill/masking.hpp"
#include "maskdistill/model.hpp"
#include "maskdistill/text.hpp"

namespace maskdistill::training {

// Which logit rows contribute to the loss. response_only matches the
// conditional P(y_j | y_<j, prompt): only response tokens (and EOS) are
// predicted.
enum class LossScope { response_only, full_sequence };
const char* to_string(LossScope s);
LossScope loss_scope_from_string(const std::string& s);

struct TrainConfig {
    double learning_rate = 3e-4;
    int batch_size = 8;
    int max_epochs = 20;
    int patience = 3;
    double min_delta = 1e-4;  // required validation improvement, nats
    double weight_decay = 0.01;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    std::uint64_t seed = 0;
    LossScope loss_scope = LossScope::response_only;
    model::MaskMode mask_mode = model::MaskMode::exclusive;
    double val_fraction = 0.125;
    bool resample_masks_each_epoch = false;
    double floor_mask_rate = 0.15;  // used only when resampling

    void validate() const;
};

// Logit-row range [begin, end) contributing to the loss for a sequence of
// seq_len tokens whose prompt segment (BOS..SEP) spans prompt_len tokens.
std::pair<int, int> loss_segment(LossScope scope, int prompt_len, int seq_len);

// Mean negative log-likelihood in nats per token over the scope. targets[t]
// is the token at position t+1 (next-token shift), so it has one entry less
// than there are logit rows. The reduction runs in double regardless of the
// logit precision.
template <typename T>
double cross_entropy_loss(const model::Matrix<T>& logits, const std::vector<int>& targets, LossScope scope,
                          int prompt_len);

// Adam moments per tensor, aligned with model::tensor_refs order. Training
// runs the float instantiation; the double one backs the hand-example and
// gradient-check tests.
template <typename T>
struct OptimizerStateT {
    std::vector<std::vector<T>> m;
    std::vector<std::vector<T>> v;
    long step = 0;

    static OptimizerStateT init_for(model::Params<T>& params);

    bool operator==(const OptimizerStateT&) const = default;
};
using OptimizerState = OptimizerStateT<float>;

// One decoupled-weight-decay Adam update:
//   m <- b1*m + (1-b1)*g;  v <- b2*v + (1-b2)*g^2
//   p <- p - lr*(mhat/(sqrt(vhat)+eps) + wd*p)
// Tensors flagged no-decay (layer norms, embeddings) skip the wd term.
template <typename T>
void adamw_step(model::Params<T>& params, model::Params<T>& grads, OptimizerStateT<T>& state,
                const TrainConfig& config);

// Tracks validation loss. should_stop() turns true once `patience`
// consecutive observations fail to improve the reference loss by min_delta.
// The best epoch is the pure minimum, independent of min_delta.
class EarlyStopping {
public:
    EarlyStopping(int patience, double min_delta) : patience_(patience), min_delta_(min_delta) {}

    // Returns true when this observation is a new strict minimum (i.e. the
    // caller should snapshot a checkpoint).
    bool observe(double val_loss);
    bool should_stop() const { return bad_epochs_ >= patience_; }
    int best_epoch() const { return best_epoch_; }
    double best_loss() const { return best_loss_; }

private:
    int patience_;
    double min_delta_;
    int observed_ = 0;
    int bad_epochs_ = 0;
    int best_epoch_ = 0;
    double best_loss_ = std::numeric_limits<double>::infinity();
    double reference_loss_ = std::numeric_limits<double>::infinity();
};

struct EpochMetrics {
    int epoch = 0;  // 1-based
    double train_loss = 0.0;
    double val_loss = 0.0;
};

struct TrainReport {
    std::vector<EpochMetrics> epochs;
    bool stopped_early = false;
    int best_epoch = 0;
    long total_steps = 0;
};

struct TrainData {
    std::vector<text::TokenizedExample> examples;
    std::vector<masking::MaskVector> masks;

    std::size_t size() const { return examples.size(); }
};

struct TrainResult {
    model::Params<float> params;  // best-validation checkpoint, never the last
    OptimizerState opt;
    TrainReport report;
};

TrainResult train(const TrainData& train_set, const TrainData& val_set, const TrainConfig& config,
                  model::Params<float> initial);

struct EvalResult {
    double loss = 0.0;  // nats per token, example-mean of token-means
    double perplexity = 0.0;
};

EvalResult evaluate_perplexity(const model::Params<float>& params, const TrainData& data, LossScope scope,
                               model::MaskMode mode);

// metrics file: "epoch<TAB>train_loss<TAB>val_loss" per line after a header.
void save_metrics(const TrainReport& report, const std::filesystem::path& path);

// Checkpoint container: configs, every named tensor as row-major float32,
// optimizer state, and the run seed. Writes are atomic (temp + rename).
struct Checkpoint {
    std::uint32_t version = 1;
    model::ModelConfig model_config;
    TrainConfig train_config;
    std::uint64_t seed = 0;
    model::Params<float> params;
    OptimizerState opt;
};

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace maskdistill::training
