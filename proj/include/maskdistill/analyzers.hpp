#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace maskdistill::analyzers {

// Document-frequency statistics. A "document" is one prompt+response pair.
struct TfidfModel {
    long doc_count = 0;
    std::unordered_map<std::string, long> doc_freq;
};

TfidfModel fit_tfidf(const std::vector<std::vector<std::string>>& corpus);

// tf(t,d) = count(t in d) / |d|; idf(t) = ln((1+N)/(1+df(t))) + 1 with df=0
// for unseen surfaces; score = tf * idf.
std::vector<double> score_tfidf(const TfidfModel& model, const std::vector<std::string>& doc);
double idf(const TfidfModel& model, const std::string& surface);

enum class PosTag {
    noun,
    verb,
    adjective,
    adverb,
    pronoun,
    determiner,
    preposition,
    conjunction,
    numeral,
    interjection,
    punctuation,
    other,
};
const char* to_string(PosTag t);
PosTag pos_tag_from_string(std::string_view s);

// Word lookup first (case-insensitive), then suffix rules longest first,
// then the default tag.
struct PosLexicon {
    std::unordered_map<std::string, PosTag> words;
    std::vector<std::pair<std::string, PosTag>> suffix_rules;  // longest-first after normalization
    PosTag default_tag = PosTag::noun;

    PosTag resolve(std::string_view surface) const;

    // Re-sorts suffix rules by descending length; file order breaks ties.
    void normalize();

    static PosLexicon parse(std::string_view lexicon_tsv, std::string_view suffix_tsv);
    static PosLexicon load(const std::filesystem::path& lexicon_path, const std::filesystem::path& suffix_path);
    // Built-in English lexicon; no files needed.
    static const PosLexicon& bundled();
};

std::vector<PosTag> tag_full(const std::vector<std::string>& tokens, const PosLexicon& lexicon);
// 1 for nouns, verbs, and adjectives; 0 otherwise.
std::vector<int> tag_pos(const std::vector<std::string>& tokens, const PosLexicon& lexicon);

// Verb-anchored relation heuristic: each verb, its nearest noun to the left
// (subject proxy) and its nearest noun to the right (object proxy) get 1.
std::vector<int> score_dependency(const std::vector<std::string>& tokens, const std::vector<PosTag>& tags);

std::vector<double> draw_random_scores(std::size_t length, std::uint64_t seed);

// The four per-token score channels feeding the mask sigmoid.
struct TokenScores {
    std::vector<double> tfidf;
    std::vector<int> pos;
    std::vector<int> dep;
    std::vector<double> random;

    std::size_t size() const { return tfidf.size(); }
};

TokenScores score_tokens(const TfidfModel& model, const PosLexicon& lexicon,
                         const std::vector<std::string>& doc, std::uint64_t seed);

// Embedded copies of the bundled lexicon data, also usable as file content.
std::string_view bundled_lexicon_tsv();
std::string_view bundled_suffix_tsv();

}  // namespace maskdistill::analyzers
