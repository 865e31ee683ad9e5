#include "maskdistill/text.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_set>

#include "maskdistill/errors.hpp"
#include "json.hpp"

namespace maskdistill::text {

namespace {

const std::string kSpecialSurfaces[kNumSpecials] = {"<pad>", "<bos>", "<eos>", "<unk>", "<sep>"};

// Locale-independent ASCII classification; the C library versions consult
// the global locale.
bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' || c < 0x20;
}

bool is_punct_byte(unsigned char c) {
    return (c >= 0x21 && c <= 0x2f) || (c >= 0x3a && c <= 0x40) || (c >= 0x5b && c <= 0x60) ||
           (c >= 0x7b && c <= 0x7e);
}

char lower_byte(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = lower_byte(c);
    return out;
}

}  // namespace

const std::string& special_surface(int id) { return kSpecialSurfaces[id]; }

Vocabulary::Vocabulary() {
    for (int i = 0; i < kNumSpecials; ++i) append(kSpecialSurfaces[i]);
}

int Vocabulary::lookup(std::string_view surface) const {
    auto it = index_.find(std::string(surface));
    return it == index_.end() ? kUnk : it->second;
}

const std::string& Vocabulary::surface(int id) const {
    if (id < 0 || id >= size()) throw OutOfVocab("token id " + std::to_string(id) + " outside vocabulary of size " + std::to_string(size()));
    return entries_[static_cast<std::size_t>(id)];
}

bool Vocabulary::contains(std::string_view surface) const {
    return index_.find(std::string(surface)) != index_.end();
}

void Vocabulary::append(const std::string& surface) {
    if (contains(surface)) return;
    index_.emplace(surface, size());
    entries_.push_back(surface);
}

void Vocabulary::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (const auto& e : entries_) out << e << '\n';
    if (!out) throw IoFailure("write failed: " + path.string());
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    Vocabulary v;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no <= kNumSpecials) {
            if (line != kSpecialSurfaces[line_no - 1])
                throw MalformedRecord(path.string(), line_no,
                                      "expected special '" + kSpecialSurfaces[line_no - 1] + "', got '" + line + "'");
            continue;
        }
        if (line.empty()) throw MalformedRecord(path.string(), line_no, "empty surface form");
        if (v.contains(line)) throw MalformedRecord(path.string(), line_no, "duplicate surface '" + line + "'");
        v.append(line);
    }
    if (line_no < kNumSpecials) throw MalformedRecord(path.string(), line_no, "vocabulary shorter than the special block");
    return v;
}

const char* to_string(PairSource s) {
    switch (s) {
        case PairSource::teacher: return "teacher";
        case PairSource::mock: return "mock";
        case PairSource::manual: return "manual";
    }
    return "teacher";
}

PairSource pair_source_from_string(std::string_view s) {
    if (s == "teacher") return PairSource::teacher;
    if (s == "mock") return PairSource::mock;
    if (s == "manual") return PairSource::manual;
    throw Error("unknown pair source: " + std::string(s));
}

std::vector<int> TokenizedExample::ids() const {
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.id);
    return out;
}

std::vector<std::string> TokenizedExample::surfaces() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.surface);
    return out;
}

std::vector<std::string> tokenize(std::string_view input, bool lowercase) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    };
    for (char ch : input) {
        const unsigned char c = static_cast<unsigned char>(ch);
        if (is_space_byte(c)) {
            flush();
        } else if (is_punct_byte(c)) {
            flush();
            out.emplace_back(1, ch);
        } else {
            cur.push_back(lowercase ? lower_byte(ch) : ch);
        }
    }
    flush();
    return out;
}

Vocabulary build_vocabulary(const std::vector<std::string>& corpus, int min_count, bool lowercase) {
    std::unordered_map<std::string, long> counts;
    for (const auto& doc : corpus)
        for (auto& tok : tokenize(doc, lowercase)) ++counts[tok];

    std::vector<std::pair<std::string, long>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocabulary v;
    for (const auto& [surface, count] : ranked)
        if (count >= min_count) v.append(surface);
    return v;
}

TokenizedExample encode_pair(const PromptResponsePair& pair, const Vocabulary& vocab, int max_len,
                             bool lowercase) {
    if (max_len < 4) throw Error("encode_pair requires max_len >= 4, got " + std::to_string(max_len));
    const auto prompt_toks = tokenize(pair.prompt, lowercase);
    const auto response_toks = tokenize(pair.response, lowercase);
    if (prompt_toks.empty()) throw PairTooShort("prompt tokenizes to zero tokens");
    if (response_toks.empty()) throw PairTooShort("response tokenizes to zero tokens");

    TokenizedExample ex;
    auto push_special = [&](int id) { ex.tokens.push_back({kSpecialSurfaces[id], id}); };
    auto push_word = [&](const std::string& s) {
        const int id = vocab.lookup(s);
        ex.tokens.push_back({s, id});
    };

    push_special(kBos);
    for (const auto& t : prompt_toks) push_word(t);
    push_special(kSep);
    ex.prompt_len = static_cast<int>(ex.tokens.size());
    for (const auto& t : response_toks) push_word(t);
    push_special(kEos);

    if (static_cast<int>(ex.tokens.size()) > max_len) {
        ex.tokens.resize(static_cast<std::size_t>(max_len) - 1);
        ex.tokens.push_back({kSpecialSurfaces[kEos], kEos});
        ex.prompt_len = std::min(ex.prompt_len, max_len - 1);
    }
    return ex;
}

std::vector<std::string> decode(const Vocabulary& vocab, const std::vector<int>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(vocab.surface(id));
    return out;
}

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::blocklist: return "blocklist";
        case RejectReason::too_short: return "too_short";
        case RejectReason::too_long: return "too_long";
        case RejectReason::duplicate: return "duplicate";
    }
    return "blocklist";
}

FilterResult filter_responses(const std::vector<PromptResponsePair>& pairs,
                              const std::vector<std::string>& blocklist, int min_tokens, int max_tokens) {
    if (min_tokens > max_tokens)
        throw Error("filter_responses requires min_tokens <= max_tokens");

    std::unordered_set<std::string> blocked;
    for (const auto& term : blocklist) blocked.insert(lower_ascii(term));

    FilterResult result;
    std::unordered_set<std::string> seen_responses;
    for (const auto& pair : pairs) {
        const auto toks = tokenize(pair.response, /*lowercase=*/true);
        std::optional<RejectReason> reason;
        if (!blocked.empty()) {
            for (const auto& t : toks) {
                if (blocked.count(t)) {
                    reason = RejectReason::blocklist;
                    break;
                }
            }
        }
        const auto n = static_cast<long>(toks.size());
        if (!reason && n < min_tokens) reason = RejectReason::too_short;
        if (!reason && n > max_tokens) reason = RejectReason::too_long;
        if (!reason && seen_responses.count(pair.response)) reason = RejectReason::duplicate;

        if (reason) {
            result.rejected.push_back({pair, *reason});
        } else {
            seen_responses.insert(pair.response);
            result.kept.push_back(pair);
        }
    }
    return result;
}

void save_dataset(const std::vector<PromptResponsePair>& pairs, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (const auto& p : pairs) {
        nlohmann::ordered_json rec;
        rec["prompt"] = p.prompt;
        rec["response"] = p.response;
        rec["source"] = to_string(p.source);
        if (p.template_id)
            rec["template_id"] = *p.template_id;
        else
            rec["template_id"] = nullptr;
        rec["created_at"] = p.created_at;
        out << rec.dump() << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

std::vector<PromptResponsePair> load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::vector<PromptResponsePair> pairs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) throw MalformedRecord(path.string(), line_no, "empty line");
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (rec.is_discarded()) throw MalformedRecord(path.string(), line_no, "invalid JSON");
        try {
            PromptResponsePair p;
            p.prompt = rec.at("prompt").get<std::string>();
            p.response = rec.at("response").get<std::string>();
            p.source = pair_source_from_string(rec.at("source").get<std::string>());
            const auto& tid = rec.at("template_id");
            if (!tid.is_null()) p.template_id = tid.get<std::string>();
            p.created_at = rec.at("created_at").get<std::string>();
            pairs.push_back(std::move(p));
        } catch (const nlohmann::json::exception& e) {
            throw MalformedRecord(path.string(), line_no, e.what());
        }
    }
    return pairs;
}

}  // namespace maskdistill::text
