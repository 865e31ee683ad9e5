#include "maskdistill/masking.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "maskdistill/errors.hpp"
#include "maskdistill/rng.hpp"
#include "json.hpp"

namespace maskdistill::masking {

double sigmoid(double x) {
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

std::vector<double> unmask_probability(const analyzers::TokenScores& scores, const MaskWeights& weights) {
    const std::size_t n = scores.tfidf.size();
    if (scores.pos.size() != n || scores.dep.size() != n || scores.random.size() != n)
        throw LengthMismatch("unmask_probability: score channels disagree on sequence length");
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = weights.w_tfidf * scores.tfidf[i] + weights.w_pos * scores.pos[i] +
                         weights.w_dep * scores.dep[i] + weights.w_random * scores.random[i] + weights.bias;
        p[i] = sigmoid(x);
    }
    return p;
}

MaskVector sample_mask(const std::vector<double>& probabilities, const std::vector<std::size_t>& protected_idx,
                       double floor_mask_rate, std::uint64_t seed, bool threshold) {
    if (floor_mask_rate < 0.0 || floor_mask_rate > 0.5)
        throw Error("floor_mask_rate must lie in [0, 0.5], got " + std::to_string(floor_mask_rate));

    const std::size_t n = probabilities.size();
    MaskVector mask;
    mask.probabilities = probabilities;
    mask.bits.assign(n, 0);

    Rng rng(seed);
    bool any_sampled = false;
    for (std::size_t i = 0; i < n; ++i) {
        const bool on = threshold ? probabilities[i] >= 0.5 : rng.next_uniform() < probabilities[i];
        mask.bits[i] = on ? 1 : 0;
        any_sampled = any_sampled || on;
    }

    std::vector<bool> is_protected(n, false);
    for (std::size_t i : protected_idx) {
        if (i >= n) throw LengthMismatch("protected index " + std::to_string(i) + " outside sequence of length " + std::to_string(n));
        is_protected[i] = true;
        mask.bits[i] = 1;
    }

    std::vector<std::size_t> unprotected;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_protected[i]) unprotected.push_back(i);

    // Floor on the masked fraction among non-protected tokens.
    if (!unprotected.empty() && floor_mask_rate > 0.0) {
        const auto need =
            static_cast<std::size_t>(std::ceil(floor_mask_rate * static_cast<double>(unprotected.size())));
        std::size_t masked = 0;
        for (std::size_t i : unprotected) masked += mask.bits[i] == 0 ? 1u : 0u;
        if (masked < need) {
            std::vector<std::size_t> candidates;
            for (std::size_t i : unprotected)
                if (mask.bits[i] == 1) candidates.push_back(i);
            std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
                if (probabilities[a] != probabilities[b]) return probabilities[a] < probabilities[b];
                return a < b;
            });
            for (std::size_t i : candidates) {
                if (masked >= need) break;
                mask.bits[i] = 0;
                ++masked;
            }
        }
    }

    auto force_best_unprotected = [&] {
        if (unprotected.empty()) return;
        std::size_t best = unprotected[0];
        for (std::size_t i : unprotected)
            if (probabilities[i] > probabilities[best]) best = i;
        mask.bits[best] = 1;
    };
    if (!any_sampled) force_best_unprotected();
    // Type invariant: at least one bit set, whatever the floor did.
    if (std::find(mask.bits.begin(), mask.bits.end(), 1) == mask.bits.end()) force_best_unprotected();

    return mask;
}

std::vector<std::size_t> protected_positions(const text::TokenizedExample& example) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < example.tokens.size(); ++i) {
        const int id = example.tokens[i].id;
        if (id == text::kBos || id == text::kSep || id == text::kEos) out.push_back(i);
    }
    return out;
}

std::vector<MaskVector> mask_dataset(const std::vector<text::TokenizedExample>& examples,
                                     const analyzers::TfidfModel& tfidf, const analyzers::PosLexicon& lexicon,
                                     const MaskingOptions& options,
                                     std::vector<analyzers::TokenScores>* scores_out) {
    std::vector<MaskVector> masks;
    masks.reserve(examples.size());
    if (scores_out) scores_out->clear();
    for (std::size_t idx = 0; idx < examples.size(); ++idx) {
        const auto& ex = examples[idx];
        const std::uint64_t example_seed = Rng::mix(options.seed, idx);
        const auto scores = analyzers::score_tokens(tfidf, lexicon, ex.surfaces(), Rng::mix(example_seed, 0));
        const auto probs = unmask_probability(scores, options.weights);
        masks.push_back(sample_mask(probs, protected_positions(ex), options.floor_mask_rate,
                                    Rng::mix(example_seed, 1), options.threshold));
        if (scores_out) scores_out->push_back(scores);
    }
    return masks;
}

void save_scores(const std::vector<text::TokenizedExample>& examples,
                 const std::vector<analyzers::TokenScores>& scores, const std::filesystem::path& path) {
    if (examples.size() != scores.size())
        throw LengthMismatch("save_scores: " + std::to_string(examples.size()) + " examples vs " +
                             std::to_string(scores.size()) + " score sets");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (std::size_t i = 0; i < examples.size(); ++i) {
        const auto& ex = examples[i];
        const auto& s = scores[i];
        for (std::size_t t = 0; t < ex.tokens.size(); ++t) {
            nlohmann::ordered_json rec;
            rec["token"] = ex.tokens[t].surface;
            rec["tfidf"] = s.tfidf[t];
            rec["pos"] = s.pos[t];
            rec["dep"] = s.dep[t];
            rec["random"] = s.random[t];
            out << rec.dump() << '\n';
        }
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

void save_masks(const std::vector<MaskVector>& masks, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::string bits;
        bits.reserve(masks[i].bits.size());
        for (int b : masks[i].bits) bits.push_back(b ? '1' : '0');
        nlohmann::ordered_json rec;
        rec["index"] = i;
        rec["bits"] = bits;
        rec["probabilities"] = masks[i].probabilities;
        out << rec.dump() << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

std::vector<MaskVector> load_masks(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::vector<MaskVector> masks;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) throw MalformedRecord(path.string(), line_no, "empty line");
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (rec.is_discarded()) throw MalformedRecord(path.string(), line_no, "invalid JSON");
        try {
            const auto index = rec.at("index").get<std::size_t>();
            if (index != masks.size())
                throw MalformedRecord(path.string(), line_no,
                                      "expected index " + std::to_string(masks.size()) + ", got " + std::to_string(index));
            MaskVector m;
            const auto bits = rec.at("bits").get<std::string>();
            for (char c : bits) {
                if (c != '0' && c != '1') throw MalformedRecord(path.string(), line_no, "bits must be 0/1");
                m.bits.push_back(c - '0');
            }
            m.probabilities = rec.at("probabilities").get<std::vector<double>>();
            if (m.probabilities.size() != m.bits.size())
                throw MalformedRecord(path.string(), line_no, "bits and probabilities lengths differ");
            masks.push_back(std::move(m));
        } catch (const nlohmann::json::exception& e) {
            throw MalformedRecord(path.string(), line_no, e.what());
        }
    }
    return masks;
}

}  // namespace maskdistill::masking
