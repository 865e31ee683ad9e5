#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "maskdistill/errors.hpp"
#include "maskdistill/masking.hpp"
#include "maskdistill/rng.hpp"
#include "maskdistill/text.hpp"
#include "maskdistill/training.hpp"

using namespace maskdistill;
using model::MaskMode;
using model::Matrix;
using training::LossScope;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "maskdistill_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string file_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Templated toy corpus that a small decoder can memorize.
std::vector<text::PromptResponsePair> toy_pairs(std::size_t n) {
    static const std::vector<std::string> topics = {"dogs", "cats",  "memes",  "coffee", "games", "music",
                                                    "books", "space", "soccer", "movies", "food",  "travel"};
    std::vector<text::PromptResponsePair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& topic = topics[i % topics.size()];
        const auto variant = (i / topics.size()) % 3;
        text::PromptResponsePair p;
        p.prompt = "tell me about " + topic + " number " + std::to_string(i);
        if (variant == 0)
            p.response = topic + " are trending today . everyone posts about " + topic + " .";
        else if (variant == 1)
            p.response = "my feed is full of " + topic + " again . classic " + topic + " hours .";
        else
            p.response = "nothing but " + topic + " on the timeline . " + topic + " season never ends .";
        p.source = text::PairSource::mock;
        p.created_at = "2024-01-01T00:00:00Z";
        pairs.push_back(std::move(p));
    }
    return pairs;
}

struct ToyData {
    text::Vocabulary vocab;
    training::TrainData train;
    training::TrainData val;
    training::TrainData all;
};

ToyData build_toy_data(std::size_t n, std::size_t val_count, std::uint64_t seed) {
    const auto pairs = toy_pairs(n);
    std::vector<std::string> corpus;
    for (const auto& p : pairs) corpus.push_back(p.prompt + "\n" + p.response);
    ToyData d;
    d.vocab = text::build_vocabulary(corpus, 1);
    std::vector<text::TokenizedExample> examples;
    for (const auto& p : pairs) examples.push_back(text::encode_pair(p, d.vocab, 64));

    std::vector<std::vector<std::string>> docs;
    for (const auto& ex : examples) docs.push_back(ex.surfaces());
    masking::MaskingOptions mopts;
    mopts.seed = seed;
    const auto masks =
        masking::mask_dataset(examples, analyzers::fit_tfidf(docs), analyzers::PosLexicon::bundled(), mopts);

    for (std::size_t i = 0; i < examples.size(); ++i) {
        auto& dst = i < val_count ? d.val : d.train;
        dst.examples.push_back(examples[i]);
        dst.masks.push_back(masks[i]);
        d.all.examples.push_back(examples[i]);
        d.all.masks.push_back(masks[i]);
    }
    return d;
}

model::ModelConfig toy_model_config(int vocab_size) {
    model::ModelConfig cfg;
    cfg.vocab_size = vocab_size;
    cfg.context_length = 128;
    cfg.width = 64;
    cfg.heads = 4;
    cfg.layers = 2;
    return cfg;
}

}  // namespace

TEST_CASE("cross-entropy anchors") {
    SUBCASE("uniform logits over V=10 cost ln 10 per token") {
        Matrix<double> logits(3, 10);
        logits.fill(0.7);  // equal logits, any constant
        const std::vector<int> targets = {1, 5};
        const double loss = training::cross_entropy_loss(logits, targets, LossScope::full_sequence, 0);
        CHECK(loss == doctest::Approx(2.302585092994046).epsilon(1e-9));
        CHECK(std::abs(loss - std::log(10.0)) < 1e-6);
    }
    SUBCASE("saturated correct class costs nearly nothing") {
        Matrix<double> logits(2, 4);
        logits.fill(0.0);
        logits.at(0, 2) = 30.0;
        const std::vector<int> targets = {2};
        const double loss = training::cross_entropy_loss(logits, targets, LossScope::full_sequence, 0);
        CHECK(loss < 1e-9);
        CHECK(loss >= 0.0);
    }
    SUBCASE("two-class hand example: logits [0, ln 3], target 1") {
        Matrix<double> logits(2, 2);
        logits.at(0, 0) = 0.0;
        logits.at(0, 1) = std::log(3.0);
        const std::vector<int> targets = {1};
        const double loss = training::cross_entropy_loss(logits, targets, LossScope::full_sequence, 0);
        CHECK(loss == doctest::Approx(-std::log(0.75)).epsilon(1e-9));
        CHECK(loss == doctest::Approx(0.2876820724517809).epsilon(1e-6));
    }
    SUBCASE("empty scope throws") {
        Matrix<double> logits(1, 4);
        CHECK_THROWS_AS(training::cross_entropy_loss(logits, {}, LossScope::full_sequence, 0), EmptyScope);
        Matrix<double> one_prompt(3, 4);
        // response_only with the prompt covering everything but the last row
        CHECK_THROWS_AS(training::cross_entropy_loss(one_prompt, {1}, LossScope::response_only, 3), EmptyScope);
    }
}

TEST_CASE("response_only scope ignores prompt-position targets") {
    Matrix<double> logits(6, 7);
    Rng rng(15);
    for (auto& v : logits.a) v = rng.next_gaussian();
    std::vector<int> targets = {1, 2, 3, 4, 5};
    const int prompt_len = 3;
    const double base = training::cross_entropy_loss(logits, targets, LossScope::response_only, prompt_len);
    targets[0] = 6;
    targets[1] = 0;  // rows before prompt_len - 1 are outside the scope
    const double altered = training::cross_entropy_loss(logits, targets, LossScope::response_only, prompt_len);
    CHECK(base == altered);
    const double full = training::cross_entropy_loss(logits, targets, LossScope::full_sequence, prompt_len);
    CHECK(full != base);
}

TEST_CASE("adamw single-step hand examples") {
    model::ModelConfig cfg;
    cfg.vocab_size = 1;
    cfg.width = 1;
    cfg.heads = 1;
    cfg.layers = 1;
    cfg.context_length = 4;
    training::TrainConfig tc;
    tc.learning_rate = 0.1;
    tc.adam_beta1 = 0.9;
    tc.adam_beta2 = 0.999;
    tc.adam_epsilon = 1e-8;

    SUBCASE("moment arithmetic: p=0, g=1 -> p = -0.1/(1+1e-8)") {
        tc.weight_decay = 0.0;
        auto params = model::zeros_for<double>(cfg);
        auto grads = model::zeros_for<double>(cfg);
        auto state = training::OptimizerStateT<double>::init_for(params);
        grads.layers[0].wq.at(0, 0) = 1.0;
        training::adamw_step(params, grads, state, tc);
        CHECK(state.step == 1);
        const double expected = -0.1 / (1.0 + 1e-8);
        CHECK(std::abs(params.layers[0].wq.at(0, 0) - expected) < 1e-9);
        // m and v after one step
        const auto refs = model::tensor_refs(params);
        std::size_t wq_index = 0;
        for (std::size_t i = 0; i < refs.size(); ++i)
            if (refs[i].name == "layer0.attn.wq") wq_index = i;
        CHECK(state.m[wq_index][0] == doctest::Approx(0.1).epsilon(1e-12));
        CHECK(state.v[wq_index][0] == doctest::Approx(0.001).epsilon(1e-12));
    }
    SUBCASE("decay is decoupled: p=1, g=0, wd=0.1, lr=0.1 -> 0.99") {
        tc.weight_decay = 0.1;
        auto params = model::zeros_for<double>(cfg);
        auto grads = model::zeros_for<double>(cfg);
        auto state = training::OptimizerStateT<double>::init_for(params);
        params.layers[0].wq.at(0, 0) = 1.0;
        training::adamw_step(params, grads, state, tc);
        CHECK(std::abs(params.layers[0].wq.at(0, 0) - 0.99) < 1e-9);
    }
    SUBCASE("zero gradients and zero decay are a fixed point") {
        tc.weight_decay = 0.0;
        auto params = model::init_params<double>(cfg, 3);
        const auto before = params;
        auto grads = model::zeros_like(params);
        auto state = training::OptimizerStateT<double>::init_for(params);
        training::adamw_step(params, grads, state, tc);
        CHECK(state.step == 1);
        auto a = model::tensor_refs(params);
        auto b = model::tensor_refs(const_cast<model::Params<double>&>(before));
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(*a[i].data == *b[i].data);
    }
    SUBCASE("layer norms and embeddings are exempt from decay") {
        tc.weight_decay = 0.5;
        auto params = model::zeros_for<double>(cfg);
        auto grads = model::zeros_for<double>(cfg);
        auto state = training::OptimizerStateT<double>::init_for(params);
        params.tok_emb.at(0, 0) = 1.0;
        params.layers[0].ln1_gain[0] = 1.0;
        params.layers[0].wq.at(0, 0) = 1.0;
        training::adamw_step(params, grads, state, tc);
        CHECK(params.tok_emb.at(0, 0) == 1.0);
        CHECK(params.layers[0].ln1_gain[0] == 1.0);
        CHECK(params.layers[0].wq.at(0, 0) < 1.0);
    }
    SUBCASE("non-finite gradients are rejected") {
        auto params = model::zeros_for<double>(cfg);
        auto grads = model::zeros_for<double>(cfg);
        auto state = training::OptimizerStateT<double>::init_for(params);
        grads.layers[0].wq.at(0, 0) = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(training::adamw_step(params, grads, state, tc), NonFiniteGradient);
    }
}

TEST_CASE("adamw steps are bitwise deterministic") {
    model::ModelConfig cfg;
    cfg.vocab_size = 5;
    cfg.width = 4;
    cfg.heads = 2;
    cfg.layers = 1;
    cfg.context_length = 4;
    training::TrainConfig tc;

    auto run = [&] {
        auto params = model::init_params<float>(cfg, 9);
        auto grads = model::init_params<float>(cfg, 10);
        auto state = training::OptimizerState::init_for(params);
        for (int i = 0; i < 3; ++i) training::adamw_step(params, grads, state, tc);
        return params;
    };
    const auto a = run();
    const auto b = run();
    auto ra = model::tensor_refs(const_cast<model::Params<float>&>(a));
    auto rb = model::tensor_refs(const_cast<model::Params<float>&>(b));
    for (std::size_t i = 0; i < ra.size(); ++i) CHECK(*ra[i].data == *rb[i].data);
}

TEST_CASE("loss decreases on the first optimizer step at small learning rates") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const auto data = build_toy_data(4, 0, trial);
        model::ModelConfig cfg;
        cfg.vocab_size = data.vocab.size();
        cfg.width = 16;
        cfg.heads = 2;
        cfg.layers = 1;
        cfg.context_length = 64;
        auto params = model::init_params<float>(cfg, 1000 + trial);
        training::TrainConfig tc;
        tc.learning_rate = 1e-3;

        auto grads = model::zeros_like(params);
        auto state = training::OptimizerState::init_for(params);
        double before = 0.0;
        const float scale = 1.0f / static_cast<float>(data.train.size());
        for (std::size_t i = 0; i < data.train.size(); ++i) {
            const auto& ex = data.train.examples[i];
            const auto ids = ex.ids();
            const std::vector<int> targets(ids.begin() + 1, ids.end());
            const auto [b, e] = training::loss_segment(tc.loss_scope, ex.prompt_len, static_cast<int>(ids.size()));
            before += model::backward(params, ids, data.train.masks[i].bits, tc.mask_mode, targets, b, e, grads,
                                      scale);
        }
        before /= static_cast<double>(data.train.size());
        training::adamw_step(params, grads, state, tc);

        double after = 0.0;
        for (std::size_t i = 0; i < data.train.size(); ++i) {
            const auto& ex = data.train.examples[i];
            const auto ids = ex.ids();
            const std::vector<int> targets(ids.begin() + 1, ids.end());
            const auto logits = model::forward(params, ids, data.train.masks[i].bits, tc.mask_mode);
            after += training::cross_entropy_loss(logits, targets, tc.loss_scope, ex.prompt_len);
        }
        after /= static_cast<double>(data.train.size());
        CHECK(after < before);
    }
}

TEST_CASE("early stopping arithmetic") {
    SUBCASE("strictly worsening loss stops after patience+1 observations") {
        training::EarlyStopping stopper(3, 1e-4);
        CHECK(stopper.observe(1.0));
        CHECK(!stopper.should_stop());
        CHECK(!stopper.observe(1.1));
        CHECK(!stopper.should_stop());
        CHECK(!stopper.observe(1.2));
        CHECK(!stopper.should_stop());
        CHECK(!stopper.observe(1.3));
        CHECK(stopper.should_stop());
        CHECK(stopper.best_epoch() == 1);
        CHECK(stopper.best_loss() == 1.0);
    }
    SUBCASE("sub-min_delta improvements count as bad epochs but track the minimum") {
        training::EarlyStopping stopper(2, 1e-4);
        stopper.observe(1.0);
        CHECK(stopper.observe(1.0 - 5e-5));  // new minimum, still a bad epoch
        CHECK(!stopper.should_stop());
        CHECK(stopper.observe(1.0 - 6e-5));  // again a minimum, second bad epoch
        CHECK(stopper.should_stop());
        CHECK(stopper.best_epoch() == 3);
        CHECK(stopper.best_loss() == 1.0 - 6e-5);
    }
    SUBCASE("qualifying improvement resets the counter") {
        training::EarlyStopping stopper(2, 1e-4);
        stopper.observe(1.0);
        stopper.observe(1.2);
        CHECK(!stopper.should_stop());
        stopper.observe(0.5);
        CHECK(!stopper.should_stop());
        stopper.observe(0.9);
        CHECK(!stopper.should_stop());
        stopper.observe(0.9);
        CHECK(stopper.should_stop());
        CHECK(stopper.best_epoch() == 3);
    }
}

TEST_CASE("train stops after patience+1 epochs when validation strictly worsens") {
    const auto data = build_toy_data(8, 2, 5);
    model::ModelConfig cfg;
    cfg.vocab_size = data.vocab.size();
    cfg.width = 16;
    cfg.heads = 2;
    cfg.layers = 1;
    cfg.context_length = 64;

    training::TrainConfig tc;
    tc.learning_rate = 20.0;  // deliberately divergent
    tc.batch_size = 4;
    tc.max_epochs = 10;
    tc.patience = 3;
    tc.seed = 11;

    const auto initial = model::init_params<float>(cfg, 42);
    const auto result = training::train(data.train, data.val, tc, initial);

    REQUIRE(result.report.epochs.size() >= 2);
    for (std::size_t i = 1; i < result.report.epochs.size(); ++i)
        REQUIRE(result.report.epochs[i].val_loss > result.report.epochs[i - 1].val_loss);

    CHECK(result.report.epochs.size() == static_cast<std::size_t>(tc.patience) + 1);
    CHECK(result.report.stopped_early);
    CHECK(result.report.best_epoch == 1);

    // The returned checkpoint is the epoch-1 snapshot: its validation loss
    // reproduces the first epoch's recorded value.
    const auto eval = training::evaluate_perplexity(result.params, data.val, tc.loss_scope, tc.mask_mode);
    CHECK(eval.loss == doctest::Approx(result.report.epochs[0].val_loss).epsilon(1e-12));
}

TEST_CASE("best_epoch always carries the minimum recorded validation loss") {
    const auto data = build_toy_data(10, 3, 21);
    model::ModelConfig cfg;
    cfg.vocab_size = data.vocab.size();
    cfg.width = 16;
    cfg.heads = 2;
    cfg.layers = 1;
    cfg.context_length = 64;
    training::TrainConfig tc;
    tc.learning_rate = 3e-3;
    tc.batch_size = 4;
    tc.max_epochs = 6;
    tc.patience = 6;
    tc.seed = 2;

    const auto result = training::train(data.train, data.val, tc, model::init_params<float>(cfg, 3));
    REQUIRE(!result.report.epochs.empty());
    CHECK(result.report.epochs.size() <= static_cast<std::size_t>(tc.max_epochs));
    double min_val = std::numeric_limits<double>::infinity();
    int min_epoch = 0;
    for (const auto& e : result.report.epochs) {
        if (e.val_loss < min_val) {
            min_val = e.val_loss;
            min_epoch = e.epoch;
        }
        CHECK(e.train_loss >= 0.0);
        CHECK(e.val_loss >= 0.0);
    }
    CHECK(result.report.best_epoch == min_epoch);
}

TEST_CASE("training is deterministic: identical runs give identical reports and checkpoint bytes") {
    const auto data = build_toy_data(8, 2, 7);
    model::ModelConfig cfg;
    cfg.vocab_size = data.vocab.size();
    cfg.width = 16;
    cfg.heads = 2;
    cfg.layers = 1;
    cfg.context_length = 64;
    training::TrainConfig tc;
    tc.learning_rate = 1e-3;
    tc.batch_size = 4;
    tc.max_epochs = 3;
    tc.seed = 99;

    auto run = [&](const std::filesystem::path& path) {
        const auto result = training::train(data.train, data.val, tc, model::init_params<float>(cfg, 1));
        training::Checkpoint ckpt;
        ckpt.model_config = cfg;
        ckpt.train_config = tc;
        ckpt.seed = tc.seed;
        ckpt.params = result.params;
        ckpt.opt = result.opt;
        training::save_checkpoint(ckpt, path);
        return result.report;
    };
    const auto ra = run(temp_file("det_a.ckpt"));
    const auto rb = run(temp_file("det_b.ckpt"));
    REQUIRE(ra.epochs.size() == rb.epochs.size());
    for (std::size_t i = 0; i < ra.epochs.size(); ++i) {
        CHECK(ra.epochs[i].train_loss == rb.epochs[i].train_loss);
        CHECK(ra.epochs[i].val_loss == rb.epochs[i].val_loss);
    }
    CHECK(file_bytes(temp_file("det_a.ckpt")) == file_bytes(temp_file("det_b.ckpt")));
}

TEST_CASE("32-pair overfit oracle: memorization within 500 steps") {
    const auto data = build_toy_data(32, 4, 13);
    auto cfg = toy_model_config(data.vocab.size());
    training::TrainConfig tc;
    tc.learning_rate = 3e-3;
    tc.batch_size = 8;
    tc.max_epochs = 120;
    tc.patience = 120;  // let it memorize
    tc.seed = 1;

    const auto result = training::train(data.train, data.val, tc, model::init_params<float>(cfg, 17));
    CHECK(result.report.total_steps <= 500);
    double final_train = result.report.epochs.back().train_loss;
    double best_train = final_train;
    for (const auto& e : result.report.epochs) best_train = std::min(best_train, e.train_loss);
    CHECK(best_train < 0.1);

    // evaluate_perplexity on the memorized split mirrors the overfit oracle
    const auto eval = training::evaluate_perplexity(result.params, data.train, tc.loss_scope, tc.mask_mode);
    CHECK(eval.perplexity == doctest::Approx(std::exp(eval.loss)).epsilon(1e-12));
    CHECK(eval.perplexity < 1.2);

    // Greedy decoding smoke: the memorized model reproduces most of its
    // training responses verbatim from the prompt alone.
    int exact = 0;
    const int probes = 8;
    for (int i = 0; i < probes; ++i) {
        const auto& ex = data.train.examples[static_cast<std::size_t>(i)];
        const auto ids = ex.ids();
        const auto& bits = data.train.masks[static_cast<std::size_t>(i)].bits;
        const std::vector<int> prefix(ids.begin(), ids.begin() + ex.prompt_len);
        const std::vector<int> prefix_bits(bits.begin(), bits.begin() + ex.prompt_len);
        const auto decoded = model::greedy_decode(result.params, prefix, prefix_bits,
                                                  static_cast<int>(ids.size()), text::kEos, tc.mask_mode);
        const auto again = model::greedy_decode(result.params, prefix, prefix_bits,
                                                static_cast<int>(ids.size()), text::kEos, tc.mask_mode);
        CHECK(decoded == again);
        if (decoded == ids) ++exact;
    }
    CHECK(exact >= probes / 2);
}

TEST_CASE("train validates inputs") {
    const auto data = build_toy_data(4, 1, 3);
    model::ModelConfig cfg;
    cfg.vocab_size = data.vocab.size();
    cfg.width = 8;
    cfg.heads = 2;
    cfg.layers = 1;
    cfg.context_length = 64;
    training::TrainConfig tc;
    const auto initial = model::init_params<float>(cfg, 0);
    CHECK_THROWS_AS(training::train({}, data.val, tc, initial), EmptySplit);
    CHECK_THROWS_AS(training::train(data.train, {}, tc, initial), EmptySplit);

    auto misaligned = data.train;
    misaligned.masks.pop_back();
    CHECK_THROWS_AS(training::train(misaligned, data.val, tc, initial), LengthMismatch);

    training::TrainConfig bad = tc;
    bad.learning_rate = 0.0;
    CHECK_THROWS_AS(training::train(data.train, data.val, bad, initial), Error);
}

TEST_CASE("uniform model evaluates to exactly ln V") {
    const auto data = build_toy_data(4, 0, 9);
    model::ModelConfig cfg;
    cfg.vocab_size = data.vocab.size();
    cfg.width = 8;
    cfg.heads = 2;
    cfg.layers = 1;
    cfg.context_length = 64;
    cfg.tied_output = false;
    auto params = model::init_params<float>(cfg, 12);
    params.out_proj.fill(0.0f);  // uniform logits regardless of the hidden state

    const auto eval = training::evaluate_perplexity(params, data.train, LossScope::response_only,
                                                    MaskMode::exclusive);
    CHECK(eval.loss == doctest::Approx(std::log(static_cast<double>(cfg.vocab_size))).epsilon(1e-9));
    CHECK(eval.perplexity == doctest::Approx(static_cast<double>(cfg.vocab_size)).epsilon(1e-9));
    CHECK_THROWS_AS(training::evaluate_perplexity(params, {}, LossScope::response_only, MaskMode::exclusive),
                    EmptySplit);
}

TEST_CASE("metrics file format") {
    training::TrainReport report;
    report.epochs = {{1, 1.5, 1.25}, {2, 1.0, 0.875}};
    const auto path = temp_file("metrics.tsv");
    training::save_metrics(report, path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "epoch\ttrain_loss\tval_loss");
    std::getline(in, line);
    CHECK(line == "1\t1.500000\t1.250000");
    std::getline(in, line);
    CHECK(line == "2\t1.000000\t0.875000");
}

TEST_CASE("checkpoints round-trip exactly") {
    model::ModelConfig cfg;
    cfg.vocab_size = 7;
    cfg.width = 8;
    cfg.heads = 2;
    cfg.layers = 2;
    cfg.context_length = 16;
    cfg.tied_output = false;
    training::TrainConfig tc;
    tc.learning_rate = 0.00123;
    tc.seed = 77;

    training::Checkpoint ckpt;
    ckpt.model_config = cfg;
    ckpt.train_config = tc;
    ckpt.seed = 77;
    ckpt.params = model::init_params<float>(cfg, 55);
    ckpt.opt = training::OptimizerState::init_for(ckpt.params);
    ckpt.opt.step = 42;
    for (auto& m : ckpt.opt.m)
        for (auto& x : m) x = 0.25f;

    const auto path = temp_file("ckpt.bin");
    training::save_checkpoint(ckpt, path);
    CHECK(!std::filesystem::exists(path.string() + ".tmp"));

    auto loaded = training::load_checkpoint(path);
    CHECK(loaded.seed == 77);
    CHECK(loaded.opt.step == 42);
    CHECK(loaded.model_config.vocab_size == cfg.vocab_size);
    CHECK(loaded.model_config.tied_output == cfg.tied_output);
    CHECK(loaded.train_config.learning_rate == tc.learning_rate);
    CHECK(loaded.opt == ckpt.opt);
    auto a = model::tensor_refs(ckpt.params);
    auto b = model::tensor_refs(loaded.params);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(*a[i].data == *b[i].data);

    std::ofstream bad(path, std::ios::binary);
    bad << "notackpt";
    bad.close();
    CHECK_THROWS_AS(training::load_checkpoint(path), Error);
}
