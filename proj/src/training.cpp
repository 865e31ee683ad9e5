#include "maskdistill/training.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>

#include "maskdistill/errors.hpp"
#include "maskdistill/rng.hpp"
#include "json.hpp"

namespace maskdistill::training {

namespace {

// Stream tags for deriving independent substreams from the run seed.
constexpr std::uint64_t kShuffleStream = 0x53485546;   // "SHUF"
constexpr std::uint64_t kResampleStream = 0x5245534d;  // "RESM"

}  // namespace

const char* to_string(LossScope s) { return s == LossScope::response_only ? "response_only" : "full_sequence"; }

LossScope loss_scope_from_string(const std::string& s) {
    if (s == "response_only") return LossScope::response_only;
    if (s == "full_sequence") return LossScope::full_sequence;
    throw Error("unknown loss scope: " + s);
}

void TrainConfig::validate() const {
    if (learning_rate <= 0.0) throw Error("learning_rate must be positive");
    if (batch_size < 1) throw Error("batch_size must be >= 1");
    if (max_epochs < 1) throw Error("max_epochs must be >= 1");
    if (patience < 1) throw Error("patience must be >= 1");
    if (min_delta < 0.0) throw Error("min_delta must be non-negative");
    if (adam_beta1 <= 0.0 || adam_beta1 >= 1.0 || adam_beta2 <= 0.0 || adam_beta2 >= 1.0)
        throw Error("adam betas must lie in (0, 1)");
    if (adam_epsilon <= 0.0) throw Error("adam_epsilon must be positive");
    if (weight_decay < 0.0) throw Error("weight_decay must be non-negative");
    if (val_fraction <= 0.0 || val_fraction >= 1.0) throw Error("val_fraction must lie in (0, 1)");
    if (floor_mask_rate < 0.0 || floor_mask_rate > 0.5) throw Error("floor_mask_rate must lie in [0, 0.5]");
}

std::pair<int, int> loss_segment(LossScope scope, int prompt_len, int seq_len) {
    const int end = seq_len - 1;  // row t predicts token t+1
    const int begin = scope == LossScope::response_only ? std::max(prompt_len - 1, 0) : 0;
    return {std::min(begin, end < 0 ? 0 : end), end < 0 ? 0 : end};
}

template <typename T>
double cross_entropy_loss(const model::Matrix<T>& logits, const std::vector<int>& targets, LossScope scope,
                          int prompt_len) {
    const auto [begin, end] = loss_segment(scope, prompt_len, logits.rows);
    const int stop = std::min(end, static_cast<int>(targets.size()));
    if (begin >= stop) throw EmptyScope("loss scope contains zero tokens");

    double loss = 0.0;
    for (int t = begin; t < stop; ++t) {
        const int target = targets[static_cast<std::size_t>(t)];
        if (target < 0 || target >= logits.cols)
            throw OutOfVocab("target id " + std::to_string(target) + " outside vocabulary");
        const T* row = logits.row(t);
        double row_max = static_cast<double>(row[0]);
        for (int v = 1; v < logits.cols; ++v) row_max = std::max(row_max, static_cast<double>(row[v]));
        double sum = 0.0;
        for (int v = 0; v < logits.cols; ++v) sum += std::exp(static_cast<double>(row[v]) - row_max);
        loss += row_max + std::log(sum) - static_cast<double>(row[target]);
    }
    return loss / static_cast<double>(stop - begin);
}

template <typename T>
OptimizerStateT<T> OptimizerStateT<T>::init_for(model::Params<T>& params) {
    OptimizerStateT<T> state;
    for (const auto& ref : model::tensor_refs(params)) {
        state.m.emplace_back(ref.data->size(), T(0));
        state.v.emplace_back(ref.data->size(), T(0));
    }
    return state;
}

template <typename T>
void adamw_step(model::Params<T>& params, model::Params<T>& grads, OptimizerStateT<T>& state,
                const TrainConfig& config) {
    auto prefs = model::tensor_refs(params);
    auto grefs = model::tensor_refs(grads);
    if (prefs.size() != grefs.size() || prefs.size() != state.m.size() || prefs.size() != state.v.size())
        throw ShapeMismatch("optimizer state does not match parameter layout");

    state.step += 1;
    const T lr = T(config.learning_rate);
    const T b1 = T(config.adam_beta1);
    const T b2 = T(config.adam_beta2);
    const T eps = T(config.adam_epsilon);
    const T bias1 = T(1) - std::pow(b1, T(state.step));
    const T bias2 = T(1) - std::pow(b2, T(state.step));

    for (std::size_t i = 0; i < prefs.size(); ++i) {
        auto& p = *prefs[i].data;
        auto& g = *grefs[i].data;
        auto& m = state.m[i];
        auto& v = state.v[i];
        if (g.size() != p.size())
            throw ShapeMismatch("gradient for " + prefs[i].name + " has " + std::to_string(g.size()) +
                                " elements, expected " + std::to_string(p.size()));
        if (m.size() != p.size() || v.size() != p.size())
            throw ShapeMismatch("optimizer moments for " + prefs[i].name + " have the wrong size");
        const T wd = prefs[i].weight_decay ? T(config.weight_decay) : T(0);
        for (std::size_t j = 0; j < p.size(); ++j) {
            const T grad = g[j];
            if (!std::isfinite(grad))
                throw NonFiniteGradient("non-finite gradient in " + prefs[i].name);
            m[j] = b1 * m[j] + (T(1) - b1) * grad;
            v[j] = b2 * v[j] + (T(1) - b2) * grad * grad;
            const T m_hat = m[j] / bias1;
            const T v_hat = v[j] / bias2;
            p[j] -= lr * (m_hat / (std::sqrt(v_hat) + eps) + wd * p[j]);
        }
    }
}

bool EarlyStopping::observe(double val_loss) {
    ++observed_;
    if (reference_loss_ - val_loss >= min_delta_) {
        reference_loss_ = val_loss;
        bad_epochs_ = 0;
    } else {
        ++bad_epochs_;
    }
    if (val_loss < best_loss_) {
        best_loss_ = val_loss;
        best_epoch_ = observed_;
        return true;
    }
    return false;
}

namespace {

void zero_grads(model::Params<float>& grads) {
    for (auto& ref : model::tensor_refs(grads)) std::fill(ref.data->begin(), ref.data->end(), 0.0f);
}

double example_loss(const model::Params<float>& params, const text::TokenizedExample& ex,
                    const std::vector<int>& bits, model::MaskMode mode, LossScope scope) {
    const auto ids = ex.ids();
    const std::vector<int> targets(ids.begin() + 1, ids.end());
    const auto logits = model::forward(params, ids, bits, mode);
    return cross_entropy_loss(logits, targets, scope, ex.prompt_len);
}

void check_alignment(const TrainData& data, const char* what) {
    if (data.examples.size() != data.masks.size())
        throw LengthMismatch(std::string(what) + ": " + std::to_string(data.examples.size()) + " examples vs " +
                             std::to_string(data.masks.size()) + " masks");
    for (std::size_t i = 0; i < data.examples.size(); ++i)
        if (data.examples[i].tokens.size() != data.masks[i].bits.size())
            throw LengthMismatch(std::string(what) + ": example " + std::to_string(i) + " has " +
                                 std::to_string(data.examples[i].tokens.size()) + " tokens but its mask has " +
                                 std::to_string(data.masks[i].bits.size()) + " bits");
}

void run_epochs(const TrainData& train_set, const TrainData& val_set, const TrainConfig& config,
                model::Params<float>& params, model::Params<float>& grads, OptimizerState& opt,
                TrainResult& best, EarlyStopping& stopper, TrainReport& report, Rng& shuffle_rng,
                std::vector<std::size_t>& order) {
    for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
        shuffle_rng.shuffle(order);

        // Working copy of the training bits for this epoch.
        std::vector<std::vector<int>> epoch_bits(train_set.size());
        for (std::size_t i = 0; i < train_set.size(); ++i) {
            if (config.resample_masks_each_epoch) {
                const auto& ex = train_set.examples[i];
                const std::uint64_t s =
                    Rng::mix(Rng::mix(config.seed, kResampleStream), Rng::mix(static_cast<std::uint64_t>(epoch), i));
                epoch_bits[i] = masking::sample_mask(train_set.masks[i].probabilities,
                                                     masking::protected_positions(ex), config.floor_mask_rate, s)
                                    .bits;
            } else {
                epoch_bits[i] = train_set.masks[i].bits;
            }
        }

        double loss_sum = 0.0;
        long loss_count = 0;
        for (std::size_t begin = 0; begin < order.size(); begin += static_cast<std::size_t>(config.batch_size)) {
            const std::size_t end = std::min(order.size(), begin + static_cast<std::size_t>(config.batch_size));
            zero_grads(grads);
            const float scale = 1.0f / static_cast<float>(end - begin);
            for (std::size_t b = begin; b < end; ++b) {
                const std::size_t idx = order[b];
                const auto& ex = train_set.examples[idx];
                const auto ids = ex.ids();
                const std::vector<int> targets(ids.begin() + 1, ids.end());
                const auto [seg_begin, seg_end] =
                    loss_segment(config.loss_scope, ex.prompt_len, static_cast<int>(ids.size()));
                const float loss = model::backward(params, ids, epoch_bits[idx], config.mask_mode, targets,
                                                   seg_begin, seg_end, grads, scale);
                if (!std::isfinite(loss)) throw TrainingDiverged("non-finite training loss at epoch " + std::to_string(epoch));
                loss_sum += static_cast<double>(loss);
                ++loss_count;
            }
            adamw_step(params, grads, opt, config);
            ++report.total_steps;
        }

        double val_sum = 0.0;
        for (std::size_t i = 0; i < val_set.size(); ++i)
            val_sum += example_loss(params, val_set.examples[i], val_set.masks[i].bits, config.mask_mode,
                                    config.loss_scope);
        const double val_loss = val_sum / static_cast<double>(val_set.size());
        if (!std::isfinite(val_loss)) throw TrainingDiverged("non-finite validation loss at epoch " + std::to_string(epoch));

        report.epochs.push_back({epoch, loss_sum / static_cast<double>(loss_count), val_loss});

        if (stopper.observe(val_loss)) {
            best.params = params;
            best.opt = opt;
        }
        if (stopper.should_stop()) {
            report.stopped_early = true;
            break;
        }
    }
}


}  // namespace

TrainResult train(const TrainData& train_set, const TrainData& val_set, const TrainConfig& config,
                  model::Params<float> initial) {
    config.validate();
    if (train_set.size() == 0) throw EmptySplit("training split is empty");
    if (val_set.size() == 0) throw EmptySplit("validation split is empty");
    check_alignment(train_set, "train split");
    check_alignment(val_set, "validation split");

    model::Params<float> params = std::move(initial);
    OptimizerState opt = OptimizerState::init_for(params);
    model::Params<float> grads = model::zeros_like(params);

    TrainResult best;
    best.params = params;
    best.opt = opt;

    EarlyStopping stopper(config.patience, config.min_delta);
    TrainReport report;
    Rng shuffle_rng(Rng::mix(config.seed, kShuffleStream));

    std::vector<std::size_t> order(train_set.size());
    std::iota(order.begin(), order.end(), 0u);

    // Inside the loop, non-finite activations or gradients mean the run
    // diverged; surface them as such rather than as input errors.
    try {
        run_epochs(train_set, val_set, config, params, grads, opt, best, stopper, report, shuffle_rng, order);
    } catch (const NonFiniteInput& e) {
        throw TrainingDiverged(e.what());
    } catch (const NonFiniteGradient& e) {
        throw TrainingDiverged(e.what());
    }

    report.best_epoch = stopper.best_epoch();
    best.report = std::move(report);
    return best;
}


EvalResult evaluate_perplexity(const model::Params<float>& params, const TrainData& data, LossScope scope,
                               model::MaskMode mode) {
    if (data.size() == 0) throw EmptySplit("evaluation dataset is empty");
    check_alignment(data, "evaluation dataset");
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i)
        sum += example_loss(params, data.examples[i], data.masks[i].bits, mode, scope);
    EvalResult r;
    r.loss = sum / static_cast<double>(data.size());
    r.perplexity = std::exp(r.loss);
    return r;
}

void save_metrics(const TrainReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << "epoch\ttrain_loss\tval_loss\n";
    char buf[96];
    for (const auto& e : report.epochs) {
        std::snprintf(buf, sizeof(buf), "%d\t%.6f\t%.6f\n", e.epoch, e.train_loss, e.val_loss);
        out << buf;
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

namespace {

nlohmann::ordered_json model_config_to_json(const model::ModelConfig& c) {
    nlohmann::ordered_json j;
    j["vocab_size"] = c.vocab_size;
    j["context_length"] = c.context_length;
    j["width"] = c.width;
    j["heads"] = c.heads;
    j["layers"] = c.layers;
    j["mask_mode"] = model::to_string(c.mask_mode);
    j["tied_output"] = c.tied_output;
    return j;
}

model::ModelConfig model_config_from_json(const nlohmann::json& j) {
    model::ModelConfig c;
    c.vocab_size = j.at("vocab_size").get<int>();
    c.context_length = j.at("context_length").get<int>();
    c.width = j.at("width").get<int>();
    c.heads = j.at("heads").get<int>();
    c.layers = j.at("layers").get<int>();
    c.mask_mode = model::mask_mode_from_string(j.at("mask_mode").get<std::string>());
    c.tied_output = j.at("tied_output").get<bool>();
    return c;
}

nlohmann::ordered_json train_config_to_json(const TrainConfig& c) {
    nlohmann::ordered_json j;
    j["learning_rate"] = c.learning_rate;
    j["batch_size"] = c.batch_size;
    j["max_epochs"] = c.max_epochs;
    j["patience"] = c.patience;
    j["min_delta"] = c.min_delta;
    j["weight_decay"] = c.weight_decay;
    j["adam_beta1"] = c.adam_beta1;
    j["adam_beta2"] = c.adam_beta2;
    j["adam_epsilon"] = c.adam_epsilon;
    j["seed"] = c.seed;
    j["loss_scope"] = to_string(c.loss_scope);
    j["mask_mode"] = model::to_string(c.mask_mode);
    j["val_fraction"] = c.val_fraction;
    j["resample_masks_each_epoch"] = c.resample_masks_each_epoch;
    j["floor_mask_rate"] = c.floor_mask_rate;
    return j;
}

TrainConfig train_config_from_json(const nlohmann::json& j) {
    TrainConfig c;
    c.learning_rate = j.at("learning_rate").get<double>();
    c.batch_size = j.at("batch_size").get<int>();
    c.max_epochs = j.at("max_epochs").get<int>();
    c.patience = j.at("patience").get<int>();
    c.min_delta = j.at("min_delta").get<double>();
    c.weight_decay = j.at("weight_decay").get<double>();
    c.adam_beta1 = j.at("adam_beta1").get<double>();
    c.adam_beta2 = j.at("adam_beta2").get<double>();
    c.adam_epsilon = j.at("adam_epsilon").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.loss_scope = loss_scope_from_string(j.at("loss_scope").get<std::string>());
    c.mask_mode = model::mask_mode_from_string(j.at("mask_mode").get<std::string>());
    c.val_fraction = j.at("val_fraction").get<double>();
    c.resample_masks_each_epoch = j.at("resample_masks_each_epoch").get<bool>();
    c.floor_mask_rate = j.at("floor_mask_rate").get<double>();
    return c;
}

constexpr char kCheckpointMagic[4] = {'M', 'D', 'C', 'K'};

template <typename T>
void write_pod(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::ifstream& in, const std::string& path) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw IoFailure("truncated checkpoint: " + path);
    return v;
}

}  // namespace

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path) {
    auto& params = const_cast<model::Params<float>&>(ckpt.params);
    auto refs = model::tensor_refs(params);
    if (refs.size() != ckpt.opt.m.size() || refs.size() != ckpt.opt.v.size())
        throw ShapeMismatch("optimizer state does not match parameter layout");

    nlohmann::ordered_json header;
    header["version"] = ckpt.version;
    header["model_config"] = model_config_to_json(ckpt.model_config);
    header["train_config"] = train_config_to_json(ckpt.train_config);
    header["seed"] = ckpt.seed;
    header["opt_step"] = ckpt.opt.step;
    nlohmann::ordered_json tensors = nlohmann::ordered_json::array();
    for (const auto& ref : refs) {
        nlohmann::ordered_json t;
        t["name"] = ref.name;
        t["shape"] = ref.shape;
        tensors.push_back(std::move(t));
    }
    header["tensors"] = std::move(tensors);
    const std::string header_str = header.dump();

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot open for writing: " + tmp.string());
        out.write(kCheckpointMagic, sizeof(kCheckpointMagic));
        write_pod(out, ckpt.version);
        write_pod(out, static_cast<std::uint64_t>(header_str.size()));
        out.write(header_str.data(), static_cast<std::streamsize>(header_str.size()));
        for (std::size_t i = 0; i < refs.size(); ++i) {
            const auto& p = *refs[i].data;
            const auto& m = ckpt.opt.m[i];
            const auto& v = ckpt.opt.v[i];
            if (m.size() != p.size() || v.size() != p.size())
                throw ShapeMismatch("optimizer moments for " + refs[i].name + " have the wrong size");
            out.write(reinterpret_cast<const char*>(p.data()), static_cast<std::streamsize>(p.size() * sizeof(float)));
            out.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(m.size() * sizeof(float)));
            out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(float)));
        }
        if (!out) throw IoFailure("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());

    char magic[4];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kCheckpointMagic, sizeof(magic)) != 0)
        throw Error("not a checkpoint file: " + path.string());
    Checkpoint ckpt;
    ckpt.version = read_pod<std::uint32_t>(in, path.string());
    if (ckpt.version != 1) throw Error("unsupported checkpoint version " + std::to_string(ckpt.version));
    const auto header_len = read_pod<std::uint64_t>(in, path.string());
    std::string header_str(header_len, '\0');
    in.read(header_str.data(), static_cast<std::streamsize>(header_len));
    if (!in) throw IoFailure("truncated checkpoint: " + path.string());

    nlohmann::json header = nlohmann::json::parse(header_str, nullptr, /*allow_exceptions=*/false);
    if (header.is_discarded()) throw Error("corrupt checkpoint header: " + path.string());
    try {
        ckpt.model_config = model_config_from_json(header.at("model_config"));
        ckpt.train_config = train_config_from_json(header.at("train_config"));
        ckpt.seed = header.at("seed").get<std::uint64_t>();
        ckpt.params = model::zeros_for<float>(ckpt.model_config);
        ckpt.opt.step = header.at("opt_step").get<long>();

        auto refs = model::tensor_refs(ckpt.params);
        const auto& tensors = header.at("tensors");
        if (tensors.size() != refs.size())
            throw Error("checkpoint lists " + std::to_string(tensors.size()) + " tensors, expected " +
                        std::to_string(refs.size()));
        for (std::size_t i = 0; i < refs.size(); ++i) {
            const auto& t = tensors.at(i);
            if (t.at("name").get<std::string>() != refs[i].name)
                throw Error("checkpoint tensor order mismatch at " + refs[i].name);
            const auto shape = t.at("shape").get<std::vector<int>>();
            if (shape != refs[i].shape) throw Error("checkpoint shape mismatch for " + refs[i].name);
            auto& p = *refs[i].data;
            std::vector<float> m(p.size()), v(p.size());
            in.read(reinterpret_cast<char*>(p.data()), static_cast<std::streamsize>(p.size() * sizeof(float)));
            in.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(m.size() * sizeof(float)));
            in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(float)));
            if (!in) throw IoFailure("truncated checkpoint: " + path.string());
            ckpt.opt.m.push_back(std::move(m));
            ckpt.opt.v.push_back(std::move(v));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error("corrupt checkpoint header: " + path.string() + ": " + e.what());
    }
    return ckpt;
}

// clang-format off
template double cross_entropy_loss(const model::Matrix<float>&, const std::vector<int>&, LossScope, int);
template double cross_entropy_loss(const model::Matrix<double>&, const std::vector<int>&, LossScope, int);
template struct OptimizerStateT<float>;
template struct OptimizerStateT<double>;
template void adamw_step(model::Params<float>&, model::Params<float>&, OptimizerStateT<float>&, const TrainConfig&);
template void adamw_step(model::Params<double>&, model::Params<double>&, OptimizerStateT<double>&, const TrainConfig&);
// clang-format on

}  // namespace maskdistill::training
