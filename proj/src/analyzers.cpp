#include "maskdistill/analyzers.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "maskdistill/errors.hpp"
#include "maskdistill/rng.hpp"

namespace maskdistill::analyzers {

namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TfidfModel fit_tfidf(const std::vector<std::vector<std::string>>& corpus) {
    if (corpus.empty()) throw EmptyCorpus("fit_tfidf requires at least one document");
    TfidfModel model;
    model.doc_count = static_cast<long>(corpus.size());
    for (const auto& doc : corpus) {
        std::unordered_set<std::string> seen;
        for (const auto& tok : doc)
            if (seen.insert(tok).second) ++model.doc_freq[tok];
    }
    return model;
}

double idf(const TfidfModel& model, const std::string& surface) {
    const auto it = model.doc_freq.find(surface);
    const long df = it == model.doc_freq.end() ? 0 : it->second;
    return std::log((1.0 + static_cast<double>(model.doc_count)) / (1.0 + static_cast<double>(df))) + 1.0;
}

std::vector<double> score_tfidf(const TfidfModel& model, const std::vector<std::string>& doc) {
    std::vector<double> scores(doc.size(), 0.0);
    if (doc.empty()) return scores;
    std::unordered_map<std::string, long> counts;
    for (const auto& tok : doc) ++counts[tok];
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const double tf = static_cast<double>(counts[doc[i]]) / static_cast<double>(doc.size());
        scores[i] = tf * idf(model, doc[i]);
    }
    return scores;
}

const char* to_string(PosTag t) {
    switch (t) {
        case PosTag::noun: return "noun";
        case PosTag::verb: return "verb";
        case PosTag::adjective: return "adjective";
        case PosTag::adverb: return "adverb";
        case PosTag::pronoun: return "pronoun";
        case PosTag::determiner: return "determiner";
        case PosTag::preposition: return "preposition";
        case PosTag::conjunction: return "conjunction";
        case PosTag::numeral: return "numeral";
        case PosTag::interjection: return "interjection";
        case PosTag::punctuation: return "punctuation";
        case PosTag::other: return "other";
    }
    return "other";
}

PosTag pos_tag_from_string(std::string_view s) {
    static const std::unordered_map<std::string, PosTag> table = {
        {"noun", PosTag::noun},
        {"verb", PosTag::verb},
        {"adjective", PosTag::adjective},
        {"adverb", PosTag::adverb},
        {"pronoun", PosTag::pronoun},
        {"determiner", PosTag::determiner},
        {"preposition", PosTag::preposition},
        {"conjunction", PosTag::conjunction},
        {"numeral", PosTag::numeral},
        {"interjection", PosTag::interjection},
        {"punctuation", PosTag::punctuation},
        {"other", PosTag::other},
    };
    const auto it = table.find(std::string(s));
    if (it == table.end()) throw Error("unknown POS tag: " + std::string(s));
    return it->second;
}

PosTag PosLexicon::resolve(std::string_view surface) const {
    const std::string key = lower_ascii(surface);
    const auto it = words.find(key);
    if (it != words.end()) return it->second;
    for (const auto& [suffix, tag] : suffix_rules) {
        if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
            return tag;
    }
    return default_tag;
}

void PosLexicon::normalize() {
    std::stable_sort(suffix_rules.begin(), suffix_rules.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
}

namespace {

void parse_tsv_lines(std::string_view content, const char* what,
                     const std::function<void(const std::string&, PosTag, long)>& emit) {
    std::istringstream in{std::string(content)};
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw MalformedRecord(what, line_no, "expected 'surface<TAB>tag'");
        emit(line.substr(0, tab), pos_tag_from_string(line.substr(tab + 1)), line_no);
    }
}

}  // namespace

PosLexicon PosLexicon::parse(std::string_view lexicon_tsv, std::string_view suffix_tsv) {
    PosLexicon lex;
    parse_tsv_lines(lexicon_tsv, "lexicon", [&](const std::string& surface, PosTag tag, long) {
        lex.words.emplace(lower_ascii(surface), tag);  // first occurrence wins
    });
    parse_tsv_lines(suffix_tsv, "suffix rules", [&](const std::string& suffix, PosTag tag, long) {
        lex.suffix_rules.emplace_back(lower_ascii(suffix), tag);
    });
    lex.normalize();
    return lex;
}

PosLexicon PosLexicon::load(const std::filesystem::path& lexicon_path, const std::filesystem::path& suffix_path) {
    return parse(read_file(lexicon_path), read_file(suffix_path));
}

const PosLexicon& PosLexicon::bundled() {
    static const PosLexicon lex = parse(bundled_lexicon_tsv(), bundled_suffix_tsv());
    return lex;
}

std::vector<PosTag> tag_full(const std::vector<std::string>& tokens, const PosLexicon& lexicon) {
    std::vector<PosTag> tags;
    tags.reserve(tokens.size());
    for (const auto& t : tokens) tags.push_back(lexicon.resolve(t));
    return tags;
}

std::vector<int> tag_pos(const std::vector<std::string>& tokens, const PosLexicon& lexicon) {
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        const PosTag tag = lexicon.resolve(t);
        out.push_back(tag == PosTag::noun || tag == PosTag::verb || tag == PosTag::adjective ? 1 : 0);
    }
    return out;
}

std::vector<int> score_dependency(const std::vector<std::string>& tokens, const std::vector<PosTag>& tags) {
    if (tokens.size() != tags.size())
        throw LengthMismatch("score_dependency: " + std::to_string(tokens.size()) + " tokens vs " +
                             std::to_string(tags.size()) + " tags");
    std::vector<int> out(tokens.size(), 0);
    for (std::size_t v = 0; v < tags.size(); ++v) {
        if (tags[v] != PosTag::verb) continue;
        out[v] = 1;
        for (std::size_t i = v; i-- > 0;) {
            if (tags[i] == PosTag::noun) {
                out[i] = 1;
                break;
            }
        }
        for (std::size_t i = v + 1; i < tags.size(); ++i) {
            if (tags[i] == PosTag::noun) {
                out[i] = 1;
                break;
            }
        }
    }
    return out;
}

std::vector<double> draw_random_scores(std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(length);
    for (auto& x : out) x = rng.next_uniform();
    return out;
}

TokenScores score_tokens(const TfidfModel& model, const PosLexicon& lexicon,
                         const std::vector<std::string>& doc, std::uint64_t seed) {
    TokenScores s;
    s.tfidf = score_tfidf(model, doc);
    s.pos = tag_pos(doc, lexicon);
    s.dep = score_dependency(doc, tag_full(doc, lexicon));
    s.random = draw_random_scores(doc.size(), seed);
    return s;
}

}  // namespace maskdistill::analyzers
