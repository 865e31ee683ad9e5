#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "maskdistill/analyzers.hpp"
#include "maskdistill/text.hpp"

namespace maskdistill::masking {

// Sigmoid combination weights. Distinct from the learning rate even though
// the literature reuses the symbol for both.
struct MaskWeights {
    double w_tfidf = 1.0;   // alpha
    double w_pos = 1.0;     // beta
    double w_dep = 1.0;     // gamma
    double w_random = 0.5;  // delta
    double bias = 0.0;
};

// bits[i] == 1 means token i stays attendable. Probabilities are retained
// for audit and for optional per-epoch resampling during training.
struct MaskVector {
    std::vector<int> bits;
    std::vector<double> probabilities;

    bool operator==(const MaskVector&) const = default;
};

double sigmoid(double x);

// p_i = sigmoid(a*tfidf + b*pos + g*dep + d*random + bias).
std::vector<double> unmask_probability(const analyzers::TokenScores& scores, const MaskWeights& weights);

// Bernoulli(p_i) per bit (or p_i >= 0.5 when threshold is set), then:
// protected indices forced to 1; if fewer than ceil(floor_mask_rate * n)
// non-protected tokens are masked, more are masked in ascending-probability
// order; if every bit sampled 0, the highest-probability non-protected
// token is forced back to 1.
MaskVector sample_mask(const std::vector<double>& probabilities, const std::vector<std::size_t>& protected_idx,
                       double floor_mask_rate, std::uint64_t seed, bool threshold = false);

struct MaskingOptions {
    MaskWeights weights;
    double floor_mask_rate = 0.15;
    bool threshold = false;
    std::uint64_t seed = 0;
};

// Positions holding BOS/SEP/EOS; these stay unmasked so every attention row
// has an attendable key.
std::vector<std::size_t> protected_positions(const text::TokenizedExample& example);

// One MaskVector per example, reproducible from (examples, options). Each
// example draws from its own substream of the seed, so order of evaluation
// cannot change the result. Pass scores_out to keep the per-token score
// channels for a score dump.
std::vector<MaskVector> mask_dataset(const std::vector<text::TokenizedExample>& examples,
                                     const analyzers::TfidfModel& tfidf, const analyzers::PosLexicon& lexicon,
                                     const MaskingOptions& options,
                                     std::vector<analyzers::TokenScores>* scores_out = nullptr);

// One record per token: {"token","tfidf","pos","dep","random"}.
void save_scores(const std::vector<text::TokenizedExample>& examples,
                 const std::vector<analyzers::TokenScores>& scores, const std::filesystem::path& path);

// One record per line: {"index": i, "bits": "0110...", "probabilities": [...]}.
void save_masks(const std::vector<MaskVector>& masks, const std::filesystem::path& path);
std::vector<MaskVector> load_masks(const std::filesystem::path& path);

}  // namespace maskdistill::masking
