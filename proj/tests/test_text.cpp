#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "maskdistill/errors.hpp"
#include "maskdistill/rng.hpp"
#include "maskdistill/text.hpp"

using namespace maskdistill;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "maskdistill_tests";
    fs::create_directories(dir);
    return dir / name;
}

text::PromptResponsePair pair_of(const std::string& prompt, const std::string& response) {
    text::PromptResponsePair p;
    p.prompt = prompt;
    p.response = response;
    p.source = text::PairSource::mock;
    p.created_at = "2024-01-01T00:00:00Z";
    return p;
}

}  // namespace

TEST_CASE("tokenize splits on whitespace and detaches punctuation") {
    CHECK(text::tokenize("", true).empty());
    CHECK(text::tokenize("Hello, world!", true) == std::vector<std::string>{"hello", ",", "world", "!"});
    CHECK(text::tokenize("AI AI", false) == std::vector<std::string>{"AI", "AI"});
    CHECK(text::tokenize("don't stop", true) == std::vector<std::string>{"don", "'", "t", "stop"});
    CHECK(text::tokenize("  a\t\nb  ", true) == std::vector<std::string>{"a", "b"});
    CHECK(text::tokenize("#tag", true) == std::vector<std::string>{"#", "tag"});
}

TEST_CASE("tokenize never yields empty tokens and is deterministic") {
    Rng rng(7);
    const std::string alphabet = "ab .,!?'XY\tz";
    for (int trial = 0; trial < 200; ++trial) {
        std::string s;
        const auto len = rng.next_below(30);
        for (std::uint64_t i = 0; i < len; ++i) s.push_back(alphabet[rng.next_below(alphabet.size())]);
        const auto once = text::tokenize(s, true);
        const auto twice = text::tokenize(s, true);
        CHECK(once == twice);
        for (const auto& t : once) CHECK(!t.empty());
    }
}

TEST_CASE("build_vocabulary orders by frequency then surface") {
    SUBCASE("empty corpus keeps only the specials") {
        const auto v = text::build_vocabulary({}, 1);
        CHECK(v.size() == text::kNumSpecials);
        CHECK(v.surface(text::kPad) == "<pad>");
        CHECK(v.surface(text::kBos) == "<bos>");
        CHECK(v.surface(text::kEos) == "<eos>");
        CHECK(v.surface(text::kUnk) == "<unk>");
        CHECK(v.surface(text::kSep) == "<sep>");
    }
    SUBCASE("min_count filters rare tokens") {
        const auto v = text::build_vocabulary({"a b a"}, 2);
        CHECK(v.size() == text::kNumSpecials + 1);
        CHECK(v.lookup("a") == text::kNumSpecials);
        CHECK(v.lookup("b") == text::kUnk);
    }
    SUBCASE("lexicographic tie-break at equal frequency") {
        const auto v = text::build_vocabulary({"x y", "y x"}, 1);
        CHECK(v.lookup("x") == text::kNumSpecials);
        CHECK(v.lookup("y") == text::kNumSpecials + 1);
    }
}

TEST_CASE("vocabulary lookup and surface are mutual inverses") {
    const auto v = text::build_vocabulary({"the cat sat on the mat", "a cat ran"}, 1);
    for (int id = 0; id < v.size(); ++id) CHECK(v.lookup(v.surface(id)) == id);
    CHECK_THROWS_AS(v.surface(v.size()), OutOfVocab);
    CHECK_THROWS_AS(v.surface(-1), OutOfVocab);
}

TEST_CASE("encode_pair lays out BOS prompt SEP response EOS") {
    const auto v = text::build_vocabulary({"hi yo"}, 1);
    const auto ex = text::encode_pair(pair_of("hi", "yo"), v, 32);
    REQUIRE(ex.tokens.size() == 5);
    CHECK(ex.tokens[0].id == text::kBos);
    CHECK(ex.tokens[1].surface == "hi");
    CHECK(ex.tokens[2].id == text::kSep);
    CHECK(ex.tokens[3].surface == "yo");
    CHECK(ex.tokens[4].id == text::kEos);
    CHECK(ex.prompt_len == 3);
}

TEST_CASE("encode_pair rejects empty segments") {
    const auto v = text::build_vocabulary({"x"}, 1);
    CHECK_THROWS_AS(text::encode_pair(pair_of("", "x"), v, 32), PairTooShort);
    CHECK_THROWS_AS(text::encode_pair(pair_of("x", "   "), v, 32), PairTooShort);
}

TEST_CASE("encode_pair truncates to max_len with EOS last") {
    const auto v = text::build_vocabulary({"a b c d e f g"}, 1);
    const auto ex = text::encode_pair(pair_of("a b c", "d e f g"), v, 5);
    REQUIRE(ex.tokens.size() == 5);
    CHECK(ex.tokens.back().id == text::kEos);
    CHECK(ex.tokens[0].id == text::kBos);
    CHECK(ex.prompt_len >= 2);
    CHECK(ex.prompt_len < static_cast<int>(ex.tokens.size()));
}

TEST_CASE("encode then decode reproduces in-vocabulary surfaces") {
    const std::string sentence = "the cat sat on the mat";
    const auto v = text::build_vocabulary({sentence, "dogs bark loudly"}, 1);
    const auto ex = text::encode_pair(pair_of(sentence, "dogs bark"), v, 64);
    const auto surfaces = text::decode(v, ex.ids());
    for (std::size_t i = 0; i < ex.tokens.size(); ++i) CHECK(surfaces[i] == ex.tokens[i].surface);
}

TEST_CASE("encode_pair invariants hold on random inputs") {
    Rng rng(31);
    const std::vector<std::string> words = {"alpha", "beta", "gamma", "delta", "x", "!", "longwordhere"};
    const auto v = text::build_vocabulary({"alpha beta gamma"}, 1);
    for (int trial = 0; trial < 200; ++trial) {
        auto sentence = [&](std::size_t max_words) {
            std::string s;
            const auto n = 1 + rng.next_below(max_words);
            for (std::uint64_t i = 0; i < n; ++i) s += words[rng.next_below(words.size())] + " ";
            return s;
        };
        const int max_len = 4 + static_cast<int>(rng.next_below(20));
        const auto ex = text::encode_pair(pair_of(sentence(12), sentence(12)), v, max_len);
        REQUIRE(!ex.tokens.empty());
        CHECK(static_cast<int>(ex.tokens.size()) <= max_len);
        CHECK(ex.tokens.front().id == text::kBos);
        CHECK(ex.tokens.back().id == text::kEos);
        CHECK(ex.prompt_len >= 2);
        CHECK(ex.prompt_len < static_cast<int>(ex.tokens.size()));
    }
}

TEST_CASE("unknown surfaces encode to UNK") {
    const auto v = text::build_vocabulary({"known words only"}, 1);
    const auto ex = text::encode_pair(pair_of("known mystery", "words"), v, 16);
    CHECK(ex.tokens[1].id != text::kUnk);   // "known"
    CHECK(ex.tokens[2].id == text::kUnk);   // "mystery"
}

TEST_CASE("filter_responses applies blocklist, length, and dedup rules") {
    std::vector<text::PromptResponsePair> pairs;
    pairs.push_back(pair_of("p1", "buy spam now here today"));
    pairs.push_back(pair_of("p2", "a perfectly fine response right here"));
    pairs.push_back(pair_of("p3", "a perfectly fine response right here"));
    pairs.push_back(pair_of("p4", "too short"));
    std::string long_response;
    for (int i = 0; i < 40; ++i) long_response += "word ";
    pairs.push_back(pair_of("p5", long_response));

    const auto result = text::filter_responses(pairs, {"SPAM"}, 3, 30);
    REQUIRE(result.kept.size() == 1);
    CHECK(result.kept[0].prompt == "p2");
    REQUIRE(result.rejected.size() == 4);
    CHECK(result.rejected[0].reason == text::RejectReason::blocklist);
    CHECK(result.rejected[1].reason == text::RejectReason::duplicate);
    CHECK(result.rejected[2].reason == text::RejectReason::too_short);
    CHECK(result.rejected[3].reason == text::RejectReason::too_long);
}

TEST_CASE("filter_responses partitions its input") {
    Rng rng(99);
    const std::vector<std::string> words = {"spam", "alpha", "beta", "gamma", "delta"};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<text::PromptResponsePair> pairs;
        const auto n = rng.next_below(12);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::string response;
            const auto len = rng.next_below(8);
            for (std::uint64_t j = 0; j < len; ++j) response += words[rng.next_below(words.size())] + " ";
            pairs.push_back(pair_of("p" + std::to_string(i), response));
        }
        const auto result = text::filter_responses(pairs, {"spam"}, 2, 5);
        CHECK(result.kept.size() + result.rejected.size() == pairs.size());
        for (const auto& kept : result.kept) {
            for (const auto& tok : text::tokenize(kept.response, true)) CHECK(tok != "spam");
        }
    }
}

TEST_CASE("dataset round-trips field for field") {
    const auto path = temp_file("roundtrip.jsonl");

    SUBCASE("zero pairs") {
        text::save_dataset({}, path);
        CHECK(text::load_dataset(path).empty());
    }
    SUBCASE("three pairs with and without template ids") {
        std::vector<text::PromptResponsePair> pairs;
        pairs.push_back(pair_of("what is x ?", "x is a letter"));
        pairs.back().template_id = "t1";
        pairs.push_back(pair_of("unicode ok? caf\xc3\xa9", "s\xc3\xad, claro"));
        auto manual = pair_of("manual prompt", "manual response");
        manual.source = text::PairSource::manual;
        pairs.push_back(manual);

        text::save_dataset(pairs, path);
        const auto loaded = text::load_dataset(path);
        REQUIRE(loaded.size() == 3);
        CHECK(loaded == pairs);
    }
}

TEST_CASE("dataset serialization is byte-stable") {
    const auto a = temp_file("stable_a.jsonl");
    const auto b = temp_file("stable_b.jsonl");
    std::vector<text::PromptResponsePair> pairs = {pair_of("p", "r one"), pair_of("q", "r two")};
    text::save_dataset(pairs, a);
    text::save_dataset(pairs, b);
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    const std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    const std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK(!ca.empty());
}

TEST_CASE("malformed dataset records name the line") {
    const auto path = temp_file("malformed.jsonl");
    {
        std::ofstream out(path, std::ios::binary);
        out << R"({"prompt":"p","response":"r","source":"mock","template_id":null,"created_at":"t"})" << '\n';
        out << R"({"prompt":"p2","resp)" << '\n';
    }
    try {
        text::load_dataset(path);
        FAIL("expected MalformedRecord");
    } catch (const MalformedRecord& e) {
        CHECK(e.line_number == 2);
    }
    CHECK_THROWS_AS(text::load_dataset(temp_file("missing_file_xyz.jsonl")), IoFailure);
}

TEST_CASE("vocabulary file round-trips with specials first") {
    const auto path = temp_file("vocab.txt");
    const auto v = text::build_vocabulary({"b a a"}, 1);
    v.save(path);
    const auto loaded = text::Vocabulary::load(path);
    CHECK(loaded.size() == v.size());
    for (int id = 0; id < v.size(); ++id) CHECK(loaded.surface(id) == v.surface(id));

    std::ofstream out(path, std::ios::binary);
    out << "<pad>\nwrong\n";
    out.close();
    CHECK_THROWS_AS(text::Vocabulary::load(path), MalformedRecord);
}
