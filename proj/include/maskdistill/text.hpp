#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace maskdistill::text {

// Reserved vocabulary ids. SEP sits between the prompt and response
// segments of an encoded pair; PAD is reserved but unused by the
// variable-length training loop.
enum SpecialId : int { kPad = 0, kBos = 1, kEos = 2, kUnk = 3, kSep = 4 };
inline constexpr int kNumSpecials = 5;
const std::string& special_surface(int id);

struct Token {
    std::string surface;
    int id = kUnk;

    bool operator==(const Token&) const = default;
};

// Immutable after construction; id 0..4 are always the specials and corpus
// entries follow, ordered by descending frequency then lexicographic.
class Vocabulary {
public:
    Vocabulary();

    int size() const { return static_cast<int>(entries_.size()); }
    // Unknown surfaces resolve to kUnk.
    int lookup(std::string_view surface) const;
    const std::string& surface(int id) const;
    bool is_special(int id) const { return id >= 0 && id < kNumSpecials; }
    bool contains(std::string_view surface) const;
    void append(const std::string& surface);

    void save(const std::filesystem::path& path) const;
    static Vocabulary load(const std::filesystem::path& path);

private:
    std::vector<std::string> entries_;
    std::unordered_map<std::string, int> index_;
};

enum class PairSource { teacher, mock, manual };
const char* to_string(PairSource s);
PairSource pair_source_from_string(std::string_view s);

struct PromptResponsePair {
    std::string prompt;
    std::string response;
    PairSource source = PairSource::teacher;
    std::optional<std::string> template_id;
    std::string created_at;  // ISO-8601 UTC

    bool operator==(const PromptResponsePair&) const = default;
};

// BOS + prompt + SEP + response + EOS, possibly truncated. prompt_len counts
// BOS, the prompt tokens, and SEP.
struct TokenizedExample {
    std::vector<Token> tokens;
    int prompt_len = 0;

    std::vector<int> ids() const;
    std::vector<std::string> surfaces() const;
};

// Whitespace split with ASCII punctuation detached as single-character
// tokens. Bytes >= 0x80 are treated as word characters so UTF-8 sequences
// stay intact. Never yields an empty token.
std::vector<std::string> tokenize(std::string_view input, bool lowercase);

Vocabulary build_vocabulary(const std::vector<std::string>& corpus, int min_count, bool lowercase = true);

TokenizedExample encode_pair(const PromptResponsePair& pair, const Vocabulary& vocab, int max_len,
                             bool lowercase = true);

// Decodes ids back to surfaces; inverse of encoding for in-vocabulary text.
std::vector<std::string> decode(const Vocabulary& vocab, const std::vector<int>& ids);

enum class RejectReason { blocklist, too_short, too_long, duplicate };
const char* to_string(RejectReason r);

struct RejectedPair {
    PromptResponsePair pair;
    RejectReason reason;
};

struct FilterResult {
    std::vector<PromptResponsePair> kept;
    std::vector<RejectedPair> rejected;
};

// Partition of the input: blocklisted terms (case-insensitive whole-token
// match), out-of-range token counts, and exact duplicates of an earlier
// kept response are rejected with a reason.
FilterResult filter_responses(const std::vector<PromptResponsePair>& pairs,
                              const std::vector<std::string>& blocklist, int min_tokens, int max_tokens);

// Newline-delimited records with keys prompt/response/source/template_id/
// created_at. load(save(x)) == x field for field.
void save_dataset(const std::vector<PromptResponsePair>& pairs, const std::filesystem::path& path);
std::vector<PromptResponsePair> load_dataset(const std::filesystem::path& path);

}  // namespace maskdistill::text
