#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "maskdistill/text.hpp"

namespace maskdistill::acquisition {

enum class TemplateKind { plain, adversarial, style };
const char* to_string(TemplateKind k);
TemplateKind template_kind_from_string(const std::string& s);

// A prompt pattern with [placeholder] slots. Non-plain templates must carry
// at least one placeholder.
struct PromptTemplate {
    std::string id;
    std::string pattern;
    TemplateKind kind = TemplateKind::plain;
};

// Placeholder names in order of first appearance, deduplicated.
std::vector<std::string> find_placeholders(const std::string& pattern);

// Line-oriented records with keys id/pattern/kind.
std::vector<PromptTemplate> load_templates(const std::filesystem::path& path);
void save_templates(const std::vector<PromptTemplate>& templates, const std::filesystem::path& path);

using SlotMap = std::map<std::string, std::vector<std::string>>;
// JSON object mapping placeholder name to value list.
SlotMap load_slots(const std::filesystem::path& path);

struct GeneratedPrompt {
    std::string text;
    std::string template_id;
};

// Cartesian expansion of each template over its placeholders; the seed
// shuffles the final order only.
std::vector<GeneratedPrompt> generate_prompts(const std::vector<PromptTemplate>& templates, const SlotMap& slots,
                                              std::uint64_t seed);

struct TeacherRequest {
    std::string prompt;
    int max_tokens = 256;
    double temperature = 0.8;
};

enum class FinishReason { stop, length, error };
const char* to_string(FinishReason r);
FinishReason finish_reason_from_string(const std::string& s);

struct TeacherResponse {
    std::string text;
    FinishReason finish_reason = FinishReason::stop;
};

// Provider-neutral completion interface. Implementations throw on transport
// failure; a finish_reason of error also counts as a failed attempt.
class TeacherClient {
public:
    virtual ~TeacherClient() = default;
    virtual TeacherResponse complete(const TeacherRequest& request) = 0;
};

// POSTs {"prompt", "max_tokens", "temperature"} to the configured URL and
// expects {"text", "finish_reason"}. Sends "Authorization: Bearer <key>"
// when a key is configured (TEACHER_API_KEY by default).
class HttpTeacherClient : public TeacherClient {
public:
    explicit HttpTeacherClient(std::string url, std::string api_key = api_key_from_env(),
                               int timeout_seconds = 60);

    TeacherResponse complete(const TeacherRequest& request) override;

    static std::string api_key_from_env();

private:
    std::string origin_;  // scheme://host[:port]
    std::string path_;
    std::string api_key_;
    int timeout_seconds_;
};

// Deterministic offline teacher. By default it fabricates a short informal
// response from the prompt's content words; echo mode returns
// prefix + prompt verbatim. Failure schedules make retry paths testable.
// Thread-safe; responses depend only on the prompt text, never call order.
class MockTeacher : public TeacherClient {
public:
    explicit MockTeacher(std::uint64_t seed = 0) : seed_(seed) {}

    TeacherResponse complete(const TeacherRequest& request) override;

    void set_echo_prefix(std::string prefix);
    // The next `times` requests for this exact prompt fail with a transport
    // error before succeeding.
    void fail_times(const std::string& prompt, int times);
    void always_fail(bool on) { always_fail_ = on; }
    void set_latency_ms(int ms) { latency_ms_ = ms; }

    long calls_for(const std::string& prompt) const;
    long total_calls() const;
    int max_in_flight() const { return max_in_flight_; }

private:
    std::uint64_t seed_;
    std::optional<std::string> echo_prefix_;
    bool always_fail_ = false;
    int latency_ms_ = 0;
    mutable std::mutex mu_;
    std::unordered_map<std::string, int> pending_failures_;
    std::unordered_map<std::string, long> calls_;
    int in_flight_ = 0;
    int max_in_flight_ = 0;
};

struct CollectOptions {
    int concurrency = 4;
    int retry_limit = 2;
    int max_tokens = 256;
    double temperature = 0.8;
    int backoff_base_ms = 1000;  // doubles per retry, capped below
    int backoff_cap_ms = 30000;
    text::PairSource source = text::PairSource::teacher;
    bool verbose = false;
};

// One pair per prompt that succeeded within retry_limit retries, in input
// order; failed prompts are logged and skipped. Throws TeacherUnreachable
// only when every prompt fails.
std::vector<text::PromptResponsePair> collect_responses(const std::vector<GeneratedPrompt>& prompts,
                                                        TeacherClient& teacher, const CollectOptions& options);

enum class MutateStrategy { conflict, nuance, style };
const char* to_string(MutateStrategy s);
MutateStrategy mutate_strategy_from_string(const std::string& s);

// Deterministic prompt augmentation. conflict appends a contradicting
// premise, nuance a multi-constraint instruction, style prepends
// "In the style of a {tag} user: ".
std::string mutate_adversarial(const std::string& prompt, MutateStrategy strategy,
                               const std::optional<std::string>& style_tag, std::uint64_t seed);

struct TemplateStats {
    std::string template_id;
    long accepted = 0;
    long rejected = 0;
    double mean_response_tokens = 0.0;
    double distinct_token_ratio = 0.0;

    double acceptance_ratio() const {
        const long total = accepted + rejected;
        return total == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(total);
    }
};

struct RefinementReport {
    std::vector<TemplateStats> templates;

    const TemplateStats* find(const std::string& template_id) const;
};

// Per-template statistics from a filter partition.
RefinementReport build_refinement_report(const std::vector<text::PromptResponsePair>& kept,
                                         const std::vector<text::RejectedPair>& rejected);

struct RefineResult {
    std::vector<PromptTemplate> kept;
    std::vector<PromptTemplate> dropped;
};

// Drops templates whose acceptance ratio falls below accept_floor
// (boundary inclusive); always keeps at least the best one.
RefineResult refine_templates(const RefinementReport& report, const std::vector<PromptTemplate>& templates,
                              double accept_floor);

}  // namespace maskdistill::acquisition
