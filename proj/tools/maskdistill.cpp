#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "maskdistill/acquisition.hpp"
#include "maskdistill/analyzers.hpp"
#include "maskdistill/config.hpp"
#include "maskdistill/errors.hpp"
#include "maskdistill/masking.hpp"
#include "maskdistill/model.hpp"
#include "maskdistill/rng.hpp"
#include "maskdistill/text.hpp"
#include "maskdistill/training.hpp"

namespace md = maskdistill;
namespace fs = std::filesystem;
using md::cli::PipelineConfig;

namespace {

// Stream tags for seed derivation, one per seeded pipeline stage.
constexpr std::uint64_t kPromptStream = 0x50524d50;   // "PRMP"
constexpr std::uint64_t kMutateStream = 0x4d555441;   // "MUTA"
constexpr std::uint64_t kMaskStream = 0x4d41534b;     // "MASK"
constexpr std::uint64_t kSplitStream = 0x53504c49;    // "SPLI"
constexpr std::uint64_t kInitStream = 0x494e4954;     // "INIT"

std::vector<std::string> load_blocklist(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw md::IoFailure("cannot open for reading: " + path.string());
    std::vector<std::string> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        terms.push_back(line);
    }
    return terms;
}

struct EncodedDataset {
    md::text::Vocabulary vocab;
    std::vector<md::text::TokenizedExample> examples;
};

EncodedDataset encode_dataset(const std::vector<md::text::PromptResponsePair>& pairs, const PipelineConfig& cfg,
                              std::optional<md::text::Vocabulary> vocab = std::nullopt) {
    EncodedDataset out;
    if (vocab) {
        out.vocab = std::move(*vocab);
    } else {
        std::vector<std::string> corpus;
        corpus.reserve(pairs.size());
        for (const auto& p : pairs) corpus.push_back(p.prompt + "\n" + p.response);
        out.vocab = md::text::build_vocabulary(corpus, cfg.vocab_min_count, cfg.lowercase);
    }
    out.examples.reserve(pairs.size());
    for (const auto& p : pairs)
        out.examples.push_back(md::text::encode_pair(p, out.vocab, cfg.max_len, cfg.lowercase));
    return out;
}

md::analyzers::TfidfModel fit_tfidf_on(const std::vector<md::text::TokenizedExample>& examples) {
    std::vector<std::vector<std::string>> docs;
    docs.reserve(examples.size());
    for (const auto& ex : examples) docs.push_back(ex.surfaces());
    return md::analyzers::fit_tfidf(docs);
}

void print_summary(const nlohmann::ordered_json& j) { std::cout << j.dump() << std::endl; }

// ---------------------------------------------------------------- acquire

struct AcquireArgs {
    std::string templates_path, slots_path, out_path, teacher_url;
    bool mock = false;
    std::string mutate;     // conflict | nuance | style
    std::string style_tag;
    int refine_rounds = 0;
    double accept_floor = 0.5;
};

int cmd_acquire(PipelineConfig cfg, const AcquireArgs& args, bool verbose) {
    if (!args.templates_path.empty()) cfg.templates_path = args.templates_path;
    if (!args.slots_path.empty()) cfg.slots_path = args.slots_path;
    if (!args.teacher_url.empty()) cfg.teacher_url = args.teacher_url;
    if (cfg.templates_path.empty()) throw md::ConfigError("no templates file given (--templates)");
    if (cfg.slots_path.empty()) throw md::ConfigError("no slots file given (--slots)");

    auto templates = md::acquisition::load_templates(cfg.templates_path);
    const auto slots = md::acquisition::load_slots(cfg.slots_path);

    std::unique_ptr<md::acquisition::TeacherClient> teacher;
    if (args.mock) {
        teacher = std::make_unique<md::acquisition::MockTeacher>(cfg.seed);
    } else {
        if (cfg.teacher_url.empty())
            throw md::ConfigError("no teacher url given (--teacher-url or config), and --mock not set");
        teacher = std::make_unique<md::acquisition::HttpTeacherClient>(cfg.teacher_url);
    }

    md::acquisition::CollectOptions copts;
    copts.concurrency = cfg.concurrency;
    copts.retry_limit = cfg.retry_limit;
    copts.max_tokens = cfg.acquire_max_tokens;
    copts.temperature = cfg.temperature;
    copts.backoff_base_ms = cfg.backoff_base_ms;
    copts.source = args.mock ? md::text::PairSource::mock : md::text::PairSource::teacher;
    copts.verbose = verbose;

    auto expand = [&](const std::vector<md::acquisition::PromptTemplate>& tpl, std::uint64_t round) {
        auto prompts = md::acquisition::generate_prompts(tpl, slots, md::Rng::mix(cfg.seed, md::Rng::mix(kPromptStream, round)));
        if (!args.mutate.empty()) {
            const auto strategy = md::acquisition::mutate_strategy_from_string(args.mutate);
            const std::optional<std::string> tag =
                args.style_tag.empty() ? std::nullopt : std::optional<std::string>(args.style_tag);
            for (std::size_t i = 0; i < prompts.size(); ++i)
                prompts[i].text = md::acquisition::mutate_adversarial(prompts[i].text, strategy, tag,
                                                                      md::Rng::mix(cfg.seed, md::Rng::mix(kMutateStream, i)));
        }
        return prompts;
    };

    std::vector<md::acquisition::GeneratedPrompt> prompts = expand(templates, 0);
    std::vector<md::text::PromptResponsePair> pairs = md::acquisition::collect_responses(prompts, *teacher, copts);
    long dropped_templates = 0;

    // Optional automated refinement: filter outcomes feed the per-template
    // acceptance ratio, low performers are dropped, prompts regenerate.
    for (int round = 1; round <= args.refine_rounds; ++round) {
        const auto blocklist = cfg.blocklist_path.empty() ? std::vector<std::string>{} : load_blocklist(cfg.blocklist_path);
        const auto partition =
            md::text::filter_responses(pairs, blocklist, cfg.filter_min_tokens, cfg.filter_max_tokens);
        const auto report = md::acquisition::build_refinement_report(partition.kept, partition.rejected);
        auto refined = md::acquisition::refine_templates(report, templates, args.accept_floor);
        dropped_templates += static_cast<long>(refined.dropped.size());
        if (verbose)
            for (const auto& t : refined.dropped)
                std::fprintf(stderr, "refinement round %d dropped template %s\n", round, t.id.c_str());
        if (refined.dropped.empty()) break;
        templates = std::move(refined.kept);
        prompts = expand(templates, static_cast<std::uint64_t>(round));
        pairs = md::acquisition::collect_responses(prompts, *teacher, copts);
    }

    md::text::save_dataset(pairs, args.out_path);

    nlohmann::ordered_json summary;
    summary["prompts"] = prompts.size();
    summary["collected"] = pairs.size();
    summary["failed"] = prompts.size() - pairs.size();
    summary["templates_dropped"] = dropped_templates;
    summary["dataset"] = args.out_path;
    print_summary(summary);
    return 0;
}

// ----------------------------------------------------------------- filter

int cmd_filter(PipelineConfig cfg, const std::string& in_path, const std::string& out_path,
               const std::string& rejected_path, const std::string& blocklist_path) {
    if (!blocklist_path.empty()) cfg.blocklist_path = blocklist_path;
    const auto pairs = md::text::load_dataset(in_path);
    const auto blocklist =
        cfg.blocklist_path.empty() ? std::vector<std::string>{} : load_blocklist(cfg.blocklist_path);
    const auto result =
        md::text::filter_responses(pairs, blocklist, cfg.filter_min_tokens, cfg.filter_max_tokens);
    md::text::save_dataset(result.kept, out_path);
    if (!rejected_path.empty()) {
        std::ofstream out(rejected_path, std::ios::binary);
        if (!out) throw md::IoFailure("cannot open for writing: " + rejected_path);
        for (const auto& r : result.rejected) {
            nlohmann::ordered_json rec;
            rec["prompt"] = r.pair.prompt;
            rec["response"] = r.pair.response;
            rec["source"] = md::text::to_string(r.pair.source);
            if (r.pair.template_id)
                rec["template_id"] = *r.pair.template_id;
            else
                rec["template_id"] = nullptr;
            rec["created_at"] = r.pair.created_at;
            rec["reason"] = md::text::to_string(r.reason);
            out << rec.dump() << '\n';
        }
    }

    nlohmann::ordered_json summary;
    summary["input"] = pairs.size();
    summary["kept"] = result.kept.size();
    summary["rejected"] = result.rejected.size();
    summary["out"] = out_path;
    print_summary(summary);
    return 0;
}

// ------------------------------------------------------------------- mask

int cmd_mask(PipelineConfig cfg, const std::string& dataset_path, const std::string& out_path,
             const std::string& scores_path, const std::string& lexicon_path, const std::string& suffix_path) {
    const auto pairs = md::text::load_dataset(dataset_path);
    const auto encoded = encode_dataset(pairs, cfg);
    const auto tfidf = encoded.examples.empty() ? md::analyzers::TfidfModel{} : fit_tfidf_on(encoded.examples);

    if (lexicon_path.empty() != suffix_path.empty())
        throw md::ConfigError("--lexicon and --suffix-rules must be given together");
    const md::analyzers::PosLexicon lexicon =
        lexicon_path.empty() ? md::analyzers::PosLexicon::bundled()
                             : md::analyzers::PosLexicon::load(lexicon_path, suffix_path);

    md::masking::MaskingOptions mopts;
    mopts.weights = cfg.mask_weights;
    mopts.floor_mask_rate = cfg.floor_mask_rate;
    mopts.threshold = cfg.mask_threshold;
    mopts.seed = md::Rng::mix(cfg.seed, kMaskStream);
    std::vector<md::analyzers::TokenScores> scores;
    const auto masks = md::masking::mask_dataset(encoded.examples, tfidf, lexicon, mopts,
                                                 scores_path.empty() ? nullptr : &scores);
    md::masking::save_masks(masks, out_path);
    if (!scores_path.empty()) md::masking::save_scores(encoded.examples, scores, scores_path);

    long ones = 0;
    long total = 0;
    for (const auto& m : masks) {
        total += static_cast<long>(m.bits.size());
        ones += std::count(m.bits.begin(), m.bits.end(), 1);
    }
    nlohmann::ordered_json summary;
    summary["examples"] = masks.size();
    summary["mean_unmask_rate"] = total == 0 ? 0.0 : static_cast<double>(ones) / static_cast<double>(total);
    summary["out"] = out_path;
    print_summary(summary);
    return 0;
}

// ------------------------------------------------------------------ train

int cmd_train(PipelineConfig cfg, const std::string& dataset_path, const std::string& masks_path,
              const std::string& out_dir_flag) {
    const std::string out_dir = out_dir_flag.empty() ? cfg.out_dir : out_dir_flag;
    const auto pairs = md::text::load_dataset(dataset_path);
    if (pairs.empty()) throw md::EmptySplit("dataset " + dataset_path + " holds zero pairs");
    auto masks = md::masking::load_masks(masks_path);
    if (masks.size() != pairs.size())
        throw md::LengthMismatch("dataset has " + std::to_string(pairs.size()) + " pairs but mask file has " +
                                 std::to_string(masks.size()) + " records");

    const auto encoded = encode_dataset(pairs, cfg);
    md::model::ModelConfig mc = cfg.model;
    mc.vocab_size = encoded.vocab.size();
    mc.mask_mode = cfg.train.mask_mode;
    mc.validate();
    if (cfg.max_len > mc.context_length)
        throw md::ConfigError("max_len exceeds the model context_length");

    // Deterministic train/validation split of the encoded examples.
    const std::size_t n = encoded.examples.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    md::Rng split_rng(md::Rng::mix(cfg.seed, kSplitStream));
    split_rng.shuffle(perm);
    std::size_t val_count = static_cast<std::size_t>(cfg.train.val_fraction * static_cast<double>(n) + 0.5);
    val_count = std::clamp<std::size_t>(val_count, 1, n > 1 ? n - 1 : 1);
    if (n < 2) throw md::EmptySplit("need at least 2 pairs to form disjoint train and validation splits");

    std::vector<std::size_t> val_idx(perm.begin(), perm.begin() + static_cast<long>(val_count));
    std::vector<std::size_t> train_idx(perm.begin() + static_cast<long>(val_count), perm.end());
    std::sort(val_idx.begin(), val_idx.end());
    std::sort(train_idx.begin(), train_idx.end());

    auto subset = [&](const std::vector<std::size_t>& idx) {
        md::training::TrainData data;
        for (std::size_t i : idx) {
            data.examples.push_back(encoded.examples[i]);
            data.masks.push_back(masks[i]);
        }
        return data;
    };
    const auto train_set = subset(train_idx);
    const auto val_set = subset(val_idx);

    auto initial = md::model::init_params<float>(mc, md::Rng::mix(cfg.seed, kInitStream));
    auto result = md::training::train(train_set, val_set, cfg.train, std::move(initial));

    fs::create_directories(out_dir);
    encoded.vocab.save(fs::path(out_dir) / "vocab.txt");
    md::training::save_metrics(result.report, fs::path(out_dir) / "metrics.tsv");

    md::training::Checkpoint ckpt;
    ckpt.model_config = mc;
    ckpt.train_config = cfg.train;
    ckpt.seed = cfg.seed;
    ckpt.params = std::move(result.params);
    ckpt.opt = std::move(result.opt);
    md::training::save_checkpoint(ckpt, fs::path(out_dir) / "checkpoint.bin");

    auto write_split = [&](const std::vector<std::size_t>& idx, const std::string& stem) {
        std::vector<md::text::PromptResponsePair> split_pairs;
        std::vector<md::masking::MaskVector> split_masks;
        for (std::size_t i : idx) {
            split_pairs.push_back(pairs[i]);
            split_masks.push_back(masks[i]);
        }
        md::text::save_dataset(split_pairs, fs::path(out_dir) / (stem + ".jsonl"));
        md::masking::save_masks(split_masks, fs::path(out_dir) / (stem + ".masks.jsonl"));
    };
    write_split(train_idx, "train_split");
    write_split(val_idx, "val_split");

    double best_val = 0.0;
    for (const auto& e : result.report.epochs)
        if (e.epoch == result.report.best_epoch) best_val = e.val_loss;

    nlohmann::ordered_json summary;
    summary["train_examples"] = train_set.size();
    summary["val_examples"] = val_set.size();
    summary["epochs"] = result.report.epochs.size();
    summary["steps"] = result.report.total_steps;
    summary["best_epoch"] = result.report.best_epoch;
    summary["best_val_loss"] = best_val;
    summary["stopped_early"] = result.report.stopped_early;
    summary["checkpoint"] = (fs::path(out_dir) / "checkpoint.bin").string();
    print_summary(summary);
    return 0;
}

// ------------------------------------------------------------------- eval

int cmd_eval(PipelineConfig cfg, const std::string& dataset_path, const std::string& masks_path,
             const std::string& checkpoint_path, const std::string& vocab_path) {
    const auto ckpt = md::training::load_checkpoint(checkpoint_path);
    const auto pairs = md::text::load_dataset(dataset_path);
    if (pairs.empty()) throw md::EmptySplit("dataset " + dataset_path + " holds zero pairs");

    std::optional<md::text::Vocabulary> vocab;
    if (!vocab_path.empty()) vocab = md::text::Vocabulary::load(vocab_path);
    cfg.max_len = std::min(cfg.max_len, ckpt.model_config.context_length);
    const auto encoded = encode_dataset(pairs, cfg, std::move(vocab));
    if (encoded.vocab.size() != ckpt.model_config.vocab_size)
        throw md::ConfigError("vocabulary size " + std::to_string(encoded.vocab.size()) +
                              " does not match the checkpoint (" + std::to_string(ckpt.model_config.vocab_size) +
                              "); pass --vocab from the training output directory");

    md::training::TrainData data;
    data.examples = encoded.examples;
    data.masks = md::masking::load_masks(masks_path);
    const auto result = md::training::evaluate_perplexity(ckpt.params, data, ckpt.train_config.loss_scope,
                                                          ckpt.train_config.mask_mode);

    nlohmann::ordered_json summary;
    summary["examples"] = data.size();
    summary["loss"] = result.loss;
    summary["perplexity"] = result.perplexity;
    print_summary(summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maskdistill: teacher-response distillation with linguistically scored attention masks"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed_flag = 0;
    bool verbose = false;
    app.add_option("--config", config_path, "pipeline config file (key = value lines)")->expected(1);
    auto* seed_opt = app.add_option("--seed", seed_flag, "seed overriding the config file");
    app.add_flag("--verbose", verbose, "log per-prompt failures and refinement drops");

    AcquireArgs acq;
    auto* acquire = app.add_subcommand("acquire", "expand prompt templates and collect teacher responses");
    acquire->add_option("--templates", acq.templates_path, "template file (JSONL: id, pattern, kind)");
    acquire->add_option("--slots", acq.slots_path, "slot values file (JSON object)");
    acquire->add_option("--out", acq.out_path, "output dataset path")->required();
    acquire->add_flag("--mock", acq.mock, "use the deterministic offline mock teacher");
    acquire->add_option("--teacher-url", acq.teacher_url, "teacher completion endpoint");
    acquire->add_option("--mutate", acq.mutate, "apply a prompt mutation: conflict, nuance, or style");
    acquire->add_option("--style-tag", acq.style_tag, "style tag for --mutate style");
    acquire->add_option("--refine-rounds", acq.refine_rounds, "template refinement rounds (default 0)");
    acquire->add_option("--accept-floor", acq.accept_floor, "acceptance ratio floor for refinement");
    int concurrency_flag = 0, retry_flag = -1;
    auto* conc_opt = acquire->add_option("--concurrency", concurrency_flag, "max outstanding teacher requests");
    auto* retry_opt = acquire->add_option("--retry-limit", retry_flag, "retries per prompt after the first attempt");

    std::string f_in, f_out, f_rejected, f_blocklist;
    auto* filter = app.add_subcommand("filter", "drop blocklisted, out-of-range, and duplicate responses");
    filter->add_option("--in", f_in, "input dataset")->required();
    filter->add_option("--out", f_out, "output dataset of kept pairs")->required();
    filter->add_option("--rejected", f_rejected, "optional output of rejected pairs with reasons");
    filter->add_option("--blocklist", f_blocklist, "blocklist file, one term per line");
    int min_tokens_flag = -1, max_tokens_flag = -1;
    auto* min_opt = filter->add_option("--min-tokens", min_tokens_flag, "minimum response tokens");
    auto* max_opt = filter->add_option("--max-tokens", max_tokens_flag, "maximum response tokens");

    std::string m_dataset, m_out, m_weights, m_scores;
    double m_floor = -1.0, m_bias = 0.0;
    std::uint64_t m_seed = 0;
    bool m_threshold = false;
    auto* mask = app.add_subcommand("mask", "generate per-token attention masks offline");
    mask->add_option("--dataset", m_dataset, "filtered dataset")->required();
    mask->add_option("--out", m_out, "output mask file")->required();
    mask->add_option("--weights", m_weights, "sigmoid weights a,b,g,d (tfidf,pos,dep,random)");
    auto* mbias_opt = mask->add_option("--bias", m_bias, "sigmoid bias");
    auto* mfloor_opt = mask->add_option("--floor", m_floor, "minimum masked fraction of non-protected tokens");
    auto* mseed_opt = mask->add_option("--seed", m_seed, "seed overriding the config file");
    mask->add_flag("--threshold", m_threshold, "deterministic p >= 0.5 masks instead of sampling");
    mask->add_option("--scores", m_scores, "also dump per-token score records to this path");
    std::string m_lexicon, m_suffix;
    mask->add_option("--lexicon", m_lexicon, "POS lexicon file (surface<TAB>tag), replacing the bundled one");
    mask->add_option("--suffix-rules", m_suffix, "suffix rule file (suffix<TAB>tag), order = priority");

    std::string t_dataset, t_masks, t_out;
    bool t_resample = false;
    auto* train = app.add_subcommand("train", "fine-tune the tiny decoder with masked attention");
    train->add_option("--dataset", t_dataset, "filtered dataset")->required();
    train->add_option("--masks", t_masks, "mask file from the mask step")->required();
    train->add_option("--out", t_out, "output directory");
    train->add_flag("--resample-each-epoch", t_resample,
                    "resample mask bits from the stored probabilities every epoch");

    std::string e_dataset, e_masks, e_checkpoint, e_vocab;
    auto* eval = app.add_subcommand("eval", "perplexity of a checkpoint on a masked dataset");
    eval->add_option("--dataset", e_dataset, "dataset to evaluate")->required();
    eval->add_option("--masks", e_masks, "mask file aligned with the dataset")->required();
    eval->add_option("--checkpoint", e_checkpoint, "checkpoint file")->required();
    eval->add_option("--vocab", e_vocab, "vocabulary file (defaults to rebuilding from the dataset)");

    CLI11_PARSE(app, argc, argv);

    try {
        PipelineConfig cfg;
        if (!config_path.empty()) cfg = PipelineConfig::from_file(config_path);
        if (seed_opt->count() > 0) {
            cfg.seed = seed_flag;
            cfg.train.seed = seed_flag;
        }

        if (acquire->parsed()) {
            if (conc_opt->count() > 0) cfg.concurrency = concurrency_flag;
            if (retry_opt->count() > 0) cfg.retry_limit = retry_flag;
            return cmd_acquire(std::move(cfg), acq, verbose);
        }
        if (filter->parsed()) {
            if (min_opt->count() > 0) cfg.filter_min_tokens = min_tokens_flag;
            if (max_opt->count() > 0) cfg.filter_max_tokens = max_tokens_flag;
            return cmd_filter(std::move(cfg), f_in, f_out, f_rejected, f_blocklist);
        }
        if (mask->parsed()) {
            if (!m_weights.empty()) {
                double a = 0, b = 0, g = 0, d = 0;
                if (std::sscanf(m_weights.c_str(), "%lf,%lf,%lf,%lf", &a, &b, &g, &d) != 4)
                    throw md::ConfigError("--weights expects four comma-separated numbers, got '" + m_weights + "'");
                cfg.mask_weights.w_tfidf = a;
                cfg.mask_weights.w_pos = b;
                cfg.mask_weights.w_dep = g;
                cfg.mask_weights.w_random = d;
            }
            if (mbias_opt->count() > 0) cfg.mask_weights.bias = m_bias;
            if (mfloor_opt->count() > 0) cfg.floor_mask_rate = m_floor;
            if (mseed_opt->count() > 0) cfg.seed = m_seed;
            if (m_threshold) cfg.mask_threshold = true;
            return cmd_mask(std::move(cfg), m_dataset, m_out, m_scores, m_lexicon, m_suffix);
        }
        if (train->parsed()) {
            if (t_resample) cfg.train.resample_masks_each_epoch = true;
            return cmd_train(std::move(cfg), t_dataset, t_masks, t_out);
        }
        if (eval->parsed()) return cmd_eval(std::move(cfg), e_dataset, e_masks, e_checkpoint, e_vocab);
    } catch (const md::TeacherUnreachable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const md::TrainingDiverged& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
