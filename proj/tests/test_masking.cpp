#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "maskdistill/errors.hpp"
#include "maskdistill/masking.hpp"
#include "maskdistill/rng.hpp"
#include "maskdistill/text.hpp"

using namespace maskdistill;

namespace {

analyzers::TokenScores scores_of(std::vector<double> tfidf, std::vector<int> pos, std::vector<int> dep,
                                 std::vector<double> random) {
    analyzers::TokenScores s;
    s.tfidf = std::move(tfidf);
    s.pos = std::move(pos);
    s.dep = std::move(dep);
    s.random = std::move(random);
    return s;
}

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "maskdistill_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("unmask_probability anchors") {
    masking::MaskWeights zero{0, 0, 0, 0, 0};
    const auto p_half = masking::unmask_probability(scores_of({3.7}, {1}, {0}, {0.9}), zero);
    CHECK(p_half[0] == doctest::Approx(0.5).epsilon(1e-12));

    masking::MaskWeights beta_only{0, 1, 0, 0, 0};
    const auto p_pos = masking::unmask_probability(scores_of({0}, {1}, {0}, {0}), beta_only);
    CHECK(p_pos[0] == doctest::Approx(0.7310585786300049).epsilon(1e-9));

    masking::MaskWeights mixed{2, 1, 0, 0, 0};
    const auto p_mixed = masking::unmask_probability(scores_of({0.25}, {1}, {0}, {0}), mixed);
    CHECK(p_mixed[0] == doctest::Approx(0.8175744761936437).epsilon(1e-9));

    CHECK_THROWS_AS(masking::unmask_probability(scores_of({1, 2}, {1}, {0}, {0.5}), zero), LengthMismatch);
}

TEST_CASE("sigmoid is stable at extreme inputs") {
    CHECK(masking::sigmoid(1000.0) == doctest::Approx(1.0));
    CHECK(masking::sigmoid(-1000.0) == doctest::Approx(0.0));
    CHECK(std::isfinite(masking::sigmoid(1000.0)));
    CHECK(std::isfinite(masking::sigmoid(-1000.0)));
    CHECK(masking::sigmoid(0.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("unmask_probability matches direct formula evaluation to 1e-12") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.next_below(8);
        analyzers::TokenScores s;
        for (std::size_t i = 0; i < n; ++i) {
            s.tfidf.push_back(rng.next_uniform() * 3.0);
            s.pos.push_back(rng.next_below(2) ? 1 : 0);
            s.dep.push_back(rng.next_below(2) ? 1 : 0);
            s.random.push_back(rng.next_uniform());
        }
        masking::MaskWeights w;
        w.w_tfidf = rng.next_uniform() * 4.0 - 2.0;
        w.w_pos = rng.next_uniform() * 4.0 - 2.0;
        w.w_dep = rng.next_uniform() * 4.0 - 2.0;
        w.w_random = rng.next_uniform() * 4.0 - 2.0;
        w.bias = rng.next_uniform() * 2.0 - 1.0;
        const auto got = masking::unmask_probability(s, w);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = w.w_tfidf * s.tfidf[i] + w.w_pos * s.pos[i] + w.w_dep * s.dep[i] +
                             w.w_random * s.random[i] + w.bias;
            const double want = 1.0 / (1.0 + std::exp(-x));
            CHECK(std::abs(got[i] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("raising a score with positive weight never lowers the probability") {
    Rng rng(77);
    masking::MaskWeights w{1.0, 1.0, 1.0, 0.5, 0.0};
    for (int trial = 0; trial < 200; ++trial) {
        auto s = scores_of({rng.next_uniform()}, {0}, {0}, {rng.next_uniform()});
        const double base = masking::unmask_probability(s, w)[0];
        auto raised = s;
        raised.tfidf[0] += rng.next_uniform();
        CHECK(masking::unmask_probability(raised, w)[0] >= base);
        raised = s;
        raised.pos[0] = 1;
        CHECK(masking::unmask_probability(raised, w)[0] >= base);
    }
}

TEST_CASE("sample_mask honors certainty, protection, and the fallback") {
    SUBCASE("probability one, no floor: everything unmasked") {
        const auto m = masking::sample_mask({1.0, 1.0, 1.0, 1.0}, {}, 0.0, 3);
        CHECK(m.bits == std::vector<int>{1, 1, 1, 1});
    }
    SUBCASE("probability zero with a protected index: protected plus fallback") {
        const auto m = masking::sample_mask({0.0, 0.0, 0.0, 0.0}, {0}, 0.0, 3);
        CHECK(m.bits[0] == 1);
        int ones = 0;
        for (int b : m.bits) ones += b;
        CHECK(ones == 2);  // the protected bit and the forced highest-probability token
    }
    SUBCASE("all zero, nothing protected: exactly one forced bit") {
        const auto m = masking::sample_mask({0.0, 0.2, 0.1}, {}, 0.0, 9);
        CHECK(m.bits == std::vector<int>{0, 1, 0});  // highest probability wins
    }
}

TEST_CASE("floor masks additional tokens in ascending-probability order") {
    SUBCASE("ceil(0.2 * 10) = 2 masked despite certain probabilities") {
        const std::vector<double> p(10, 1.0);
        const auto m = masking::sample_mask(p, {}, 0.2, 5);
        int masked = 0;
        for (int b : m.bits) masked += b == 0 ? 1 : 0;
        CHECK(masked == 2);
        // Equal probabilities: the index tie-break masks the lowest indices.
        CHECK(m.bits[0] == 0);
        CHECK(m.bits[1] == 0);
    }
    SUBCASE("lowest-probability tokens are masked first") {
        const std::vector<double> p = {0.99, 0.5, 0.98, 0.97};
        const auto m = masking::sample_mask(p, {}, 0.25, 1, /*threshold=*/true);
        CHECK(m.bits == std::vector<int>{1, 0, 1, 1});
    }
    SUBCASE("protected tokens never count toward the floor") {
        const std::vector<double> p(4, 1.0);
        const auto m = masking::sample_mask(p, {0, 1, 2, 3}, 0.5, 1);
        CHECK(m.bits == std::vector<int>{1, 1, 1, 1});
    }
    CHECK_THROWS_AS(masking::sample_mask({0.5}, {}, 0.9, 1), Error);
}

TEST_CASE("threshold mode is deterministic at p >= 0.5") {
    const auto m = masking::sample_mask({0.4999, 0.5, 0.9, 0.1}, {}, 0.0, 123, /*threshold=*/true);
    CHECK(m.bits == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("empirical unmask rate stays within 4 binomial standard deviations") {
    for (const double p : {0.1, 0.5, 0.9}) {
        const std::vector<double> probs(100, p);
        long ones = 0;
        long total = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto m = masking::sample_mask(probs, {}, 0.0, Rng::mix(4242, seed));
            for (int b : m.bits) {
                ones += b;
                ++total;
            }
        }
        const double rate = static_cast<double>(ones) / static_cast<double>(total);
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(total));
        CHECK(std::abs(rate - p) <= 4.0 * sigma);
    }
}

TEST_CASE("mask_dataset is reproducible and satisfies the mask invariants") {
    const std::vector<std::string> corpus = {"dogs chase cats every day", "the cats nap online",
                                             "dogs bark at trends", "people post about cats"};
    const auto vocab = text::build_vocabulary(corpus, 1);
    std::vector<text::TokenizedExample> examples;
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        text::PromptResponsePair pair;
        pair.prompt = corpus[i];
        pair.response = corpus[i + 1];
        examples.push_back(text::encode_pair(pair, vocab, 32));
    }
    std::vector<std::vector<std::string>> docs;
    for (const auto& ex : examples) docs.push_back(ex.surfaces());
    const auto tfidf = analyzers::fit_tfidf(docs);

    masking::MaskingOptions opts;
    opts.seed = 99;
    const auto& lex = analyzers::PosLexicon::bundled();
    const auto masks_a = masking::mask_dataset(examples, tfidf, lex, opts);
    const auto masks_b = masking::mask_dataset(examples, tfidf, lex, opts);
    CHECK(masks_a == masks_b);
    REQUIRE(masks_a.size() == examples.size());

    for (std::size_t i = 0; i < examples.size(); ++i) {
        const auto& m = masks_a[i];
        REQUIRE(m.bits.size() == examples[i].tokens.size());
        REQUIRE(m.probabilities.size() == m.bits.size());
        int ones = 0;
        for (int b : m.bits) ones += b;
        CHECK(ones >= 1);
        for (std::size_t t : masking::protected_positions(examples[i])) CHECK(m.bits[t] == 1);
        for (double p : m.probabilities) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
    }

    SUBCASE("empty dataset yields an empty mask list") {
        CHECK(masking::mask_dataset({}, tfidf, lex, opts).empty());
    }
    SUBCASE("saturating weights unmask every content token") {
        masking::MaskingOptions heavy;
        heavy.weights = {1000.0, 1000.0, 1000.0, 0.0, 50.0};
        heavy.floor_mask_rate = 0.0;
        heavy.seed = 7;
        const auto masks = masking::mask_dataset(examples, tfidf, lex, heavy);
        for (const auto& m : masks)
            for (int b : m.bits) CHECK(b == 1);
    }
}

TEST_CASE("mask files round-trip and stay byte-identical across reruns") {
    std::vector<masking::MaskVector> masks;
    masks.push_back({{1, 0, 1}, {0.9, 0.2, 0.8}});
    masks.push_back({{1, 1}, {0.5, 0.625}});

    const auto a = temp_file("masks_a.jsonl");
    const auto b = temp_file("masks_b.jsonl");
    masking::save_masks(masks, a);
    masking::save_masks(masks, b);

    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    const std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    const std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);

    const auto loaded = masking::load_masks(a);
    CHECK(loaded == masks);

    std::ofstream out(a, std::ios::binary);
    out << R"({"index":0,"bits":"01","probabilities":[0.1]})" << '\n';
    out.close();
    CHECK_THROWS_AS(masking::load_masks(a), MalformedRecord);
}
