#include "maskdistill/acquisition.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <thread>
#include <unordered_set>

#include "maskdistill/analyzers.hpp"
#include "maskdistill/errors.hpp"
#include "maskdistill/rng.hpp"
#include "json.hpp"

namespace maskdistill::acquisition {

const char* to_string(TemplateKind k) {
    switch (k) {
        case TemplateKind::plain: return "plain";
        case TemplateKind::adversarial: return "adversarial";
        case TemplateKind::style: return "style";
    }
    return "plain";
}

TemplateKind template_kind_from_string(const std::string& s) {
    if (s == "plain") return TemplateKind::plain;
    if (s == "adversarial") return TemplateKind::adversarial;
    if (s == "style") return TemplateKind::style;
    throw Error("unknown template kind: " + s);
}

std::vector<std::string> find_placeholders(const std::string& pattern) {
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != '[') continue;
        std::size_t j = i + 1;
        while (j < pattern.size() && (std::islower(static_cast<unsigned char>(pattern[j])) || pattern[j] == '_')) ++j;
        if (j > i + 1 && j < pattern.size() && pattern[j] == ']') {
            const std::string name = pattern.substr(i + 1, j - i - 1);
            if (seen.insert(name).second) names.push_back(name);
            i = j;
        }
    }
    return names;
}

namespace {

void validate_templates(const std::vector<PromptTemplate>& templates) {
    std::unordered_set<std::string> ids;
    for (const auto& t : templates) {
        if (t.id.empty()) throw Error("template with empty id");
        if (!ids.insert(t.id).second) throw Error("duplicate template id: " + t.id);
        if (t.kind != TemplateKind::plain && find_placeholders(t.pattern).empty())
            throw Error("template " + t.id + " is " + to_string(t.kind) + " but has no placeholder");
    }
}

}  // namespace

std::vector<PromptTemplate> load_templates(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::vector<PromptTemplate> templates;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) throw MalformedRecord(path.string(), line_no, "empty line");
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (rec.is_discarded()) throw MalformedRecord(path.string(), line_no, "invalid JSON");
        try {
            PromptTemplate t;
            t.id = rec.at("id").get<std::string>();
            t.pattern = rec.at("pattern").get<std::string>();
            t.kind = template_kind_from_string(rec.at("kind").get<std::string>());
            templates.push_back(std::move(t));
        } catch (const nlohmann::json::exception& e) {
            throw MalformedRecord(path.string(), line_no, e.what());
        }
    }
    validate_templates(templates);
    return templates;
}

void save_templates(const std::vector<PromptTemplate>& templates, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (const auto& t : templates) {
        nlohmann::ordered_json rec;
        rec["id"] = t.id;
        rec["pattern"] = t.pattern;
        rec["kind"] = to_string(t.kind);
        out << rec.dump() << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

SlotMap load_slots(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) throw Error("slots file must hold a JSON object: " + path.string());
    SlotMap slots;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_array()) throw Error("slot " + key + " must map to a list of values");
        slots[key] = value.get<std::vector<std::string>>();
    }
    return slots;
}

std::vector<GeneratedPrompt> generate_prompts(const std::vector<PromptTemplate>& templates, const SlotMap& slots,
                                              std::uint64_t seed) {
    validate_templates(templates);
    std::vector<GeneratedPrompt> prompts;
    for (const auto& t : templates) {
        const auto names = find_placeholders(t.pattern);
        for (const auto& name : names) {
            const auto it = slots.find(name);
            if (it == slots.end() || it->second.empty())
                throw MissingSlot("template " + t.id + " uses [" + name + "] but no values were provided");
        }
        // Odometer over the slot value lists, last placeholder fastest.
        std::vector<std::size_t> idx(names.size(), 0);
        bool more = true;
        while (more) {
            std::string text = t.pattern;
            for (std::size_t p = 0; p < names.size(); ++p) {
                const std::string marker = "[" + names[p] + "]";
                const std::string& value = slots.at(names[p])[idx[p]];
                std::size_t pos = 0;
                while ((pos = text.find(marker, pos)) != std::string::npos) {
                    text.replace(pos, marker.size(), value);
                    pos += value.size();
                }
            }
            prompts.push_back({std::move(text), t.id});
            more = false;
            for (std::size_t p = names.size(); p-- > 0;) {
                if (++idx[p] < slots.at(names[p]).size()) {
                    more = true;
                    break;
                }
                idx[p] = 0;
            }
        }
    }
    Rng rng(seed);
    rng.shuffle(prompts);
    return prompts;
}

const char* to_string(FinishReason r) {
    switch (r) {
        case FinishReason::stop: return "stop";
        case FinishReason::length: return "length";
        case FinishReason::error: return "error";
    }
    return "error";
}

FinishReason finish_reason_from_string(const std::string& s) {
    if (s == "stop") return FinishReason::stop;
    if (s == "length") return FinishReason::length;
    if (s == "error") return FinishReason::error;
    throw Error("unknown finish reason: " + s);
}

}  // namespace maskdistill::acquisition

// httplib pulls in a lot; keep it out of the header.
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

namespace maskdistill::acquisition {

std::string HttpTeacherClient::api_key_from_env() {
    const char* key = std::getenv("TEACHER_API_KEY");
    return key ? key : "";
}

HttpTeacherClient::HttpTeacherClient(std::string url, std::string api_key, int timeout_seconds)
    : api_key_(std::move(api_key)), timeout_seconds_(timeout_seconds) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw Error("teacher url needs a scheme: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        origin_ = url;
        path_ = "/";
    } else {
        origin_ = url.substr(0, path_start);
        path_ = url.substr(path_start);
    }
}

TeacherResponse HttpTeacherClient::complete(const TeacherRequest& request) {
    httplib::Client client(origin_);
    client.set_connection_timeout(timeout_seconds_);
    client.set_read_timeout(timeout_seconds_);
    client.set_write_timeout(timeout_seconds_);

    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    nlohmann::ordered_json body;
    body["prompt"] = request.prompt;
    body["max_tokens"] = request.max_tokens;
    body["temperature"] = request.temperature;

    auto res = client.Post(path_, headers, body.dump(), "application/json");
    if (!res) throw TeacherUnreachable("teacher request failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw TeacherUnreachable("teacher returned status " + std::to_string(res->status));

    nlohmann::json j = nlohmann::json::parse(res->body, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw TeacherUnreachable("teacher returned invalid JSON");
    try {
        TeacherResponse out;
        out.text = j.at("text").get<std::string>();
        out.finish_reason = finish_reason_from_string(j.at("finish_reason").get<std::string>());
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw TeacherUnreachable(std::string("teacher response missing fields: ") + e.what());
    }
}

namespace {

// Deterministic SNS-flavored response. The frame follows from the prompt's
// leading word and the blanks are filled with the prompt's salient words, so
// the prompt-to-response mapping is a learnable function: a student model
// that attends to the right prompt positions can reproduce it.
std::string fabricate_response(const std::string& prompt, std::uint64_t seed) {
    const auto tokens = text::tokenize(prompt, /*lowercase=*/true);
    const auto& lex = analyzers::PosLexicon::bundled();

    auto is_alpha = [](const std::string& s) {
        for (char c : s)
            if (c < 'a' || c > 'z') return false;
        return !s.empty();
    };
    // Salient = alphabetic words outside the bundled lexicon (topic names,
    // event names, platform names); fall back to content words, then to
    // anything at all.
    std::vector<std::string> salient;
    for (const auto& tok : tokens)
        if (is_alpha(tok) && lex.words.find(tok) == lex.words.end()) salient.push_back(tok);
    if (salient.empty()) {
        for (const auto& tok : tokens) {
            const auto tag = lex.resolve(tok);
            if (tag == analyzers::PosTag::noun || tag == analyzers::PosTag::verb ||
                tag == analyzers::PosTag::adjective)
                salient.push_back(tok);
        }
    }
    if (salient.empty()) salient = tokens.empty() ? std::vector<std::string>{"this"} : tokens;

    const std::string& a = salient.front();
    const std::string& b = salient.back();
    const std::string lead = tokens.empty() ? "" : tokens.front();
    std::uint64_t frame = seed;
    for (unsigned char c : lead) frame += c;

    switch (frame % 6) {
        case 0: return "honestly " + a + " is all over my feed today . people will not stop posting about " + b + " .";
        case 1: return "hot take : " + a + " is having a moment right now . my timeline is all " + b + " threads .";
        case 2: return "everyone on here keeps talking about " + a + " . the " + b + " takes are getting wild .";
        case 3: return "not me scrolling " + a + " posts again . the " + b + " discourse never sleeps .";
        case 4: return "saw three " + a + " memes before breakfast . wild how fast " + b + " trends move .";
        default: return "the " + a + " chatter peaked today . expect more " + b + " posts all week .";
    }
}

}  // namespace

TeacherResponse MockTeacher::complete(const TeacherRequest& request) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        ++calls_[request.prompt];
        ++in_flight_;
        max_in_flight_ = std::max(max_in_flight_, in_flight_);
    }
    if (latency_ms_ > 0) std::this_thread::sleep_for(std::chrono::milliseconds(latency_ms_));
    struct InFlightGuard {
        MockTeacher* self;
        ~InFlightGuard() {
            std::lock_guard<std::mutex> lock(self->mu_);
            --self->in_flight_;
        }
    } guard{this};

    {
        std::lock_guard<std::mutex> lock(mu_);
        if (always_fail_) throw TeacherUnreachable("mock teacher configured to fail");
        auto it = pending_failures_.find(request.prompt);
        if (it != pending_failures_.end() && it->second > 0) {
            --it->second;
            throw TeacherUnreachable("mock teacher scripted failure");
        }
    }

    TeacherResponse out;
    if (echo_prefix_) {
        out.text = *echo_prefix_ + request.prompt;
    } else {
        out.text = fabricate_response(request.prompt, seed_);
    }
    out.finish_reason = FinishReason::stop;
    return out;
}

void MockTeacher::set_echo_prefix(std::string prefix) {
    std::lock_guard<std::mutex> lock(mu_);
    echo_prefix_ = std::move(prefix);
}

void MockTeacher::fail_times(const std::string& prompt, int times) {
    std::lock_guard<std::mutex> lock(mu_);
    pending_failures_[prompt] = times;
}

long MockTeacher::calls_for(const std::string& prompt) const {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = calls_.find(prompt);
    return it == calls_.end() ? 0 : it->second;
}

long MockTeacher::total_calls() const {
    std::lock_guard<std::mutex> lock(mu_);
    long total = 0;
    for (const auto& [_, n] : calls_) total += n;
    return total;
}

namespace {

std::string format_utc(std::time_t t) {
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Mock provenance gets synthetic timestamps so reruns are byte-identical.
std::string created_at_for(text::PairSource source, std::size_t index) {
    if (source == text::PairSource::mock) {
        return format_utc(static_cast<std::time_t>(946684800 + index));  // 2000-01-01 + i seconds
    }
    return format_utc(std::time(nullptr));
}

}  // namespace

std::vector<text::PromptResponsePair> collect_responses(const std::vector<GeneratedPrompt>& prompts,
                                                        TeacherClient& teacher, const CollectOptions& options) {
    if (options.concurrency < 1) throw Error("concurrency must be >= 1");
    if (options.retry_limit < 0) throw Error("retry_limit must be >= 0");
    if (options.max_tokens < 1) throw Error("max_tokens must be >= 1");
    if (options.temperature < 0.0 || options.temperature > 2.0)
        throw Error("temperature must lie in [0, 2]");

    std::vector<std::optional<text::PromptResponsePair>> slots(prompts.size());
    std::atomic<std::size_t> next{0};
    std::atomic<long> failures{0};
    std::mutex log_mu;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prompts.size()) return;
            const auto& prompt = prompts[i];
            TeacherRequest req{prompt.text, options.max_tokens, options.temperature};
            bool done = false;
            for (int attempt = 0; attempt <= options.retry_limit && !done; ++attempt) {
                if (attempt > 0) {
                    long delay = static_cast<long>(options.backoff_base_ms) << (attempt - 1);
                    delay = std::min<long>(delay, options.backoff_cap_ms);
                    if (delay > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay));
                }
                try {
                    TeacherResponse res = teacher.complete(req);
                    if (res.finish_reason == FinishReason::error || res.text.empty()) continue;
                    text::PromptResponsePair pair;
                    pair.prompt = prompt.text;
                    pair.response = res.text;
                    pair.source = options.source;
                    pair.template_id = prompt.template_id;
                    pair.created_at = created_at_for(options.source, i);
                    slots[i] = std::move(pair);
                    done = true;
                } catch (const std::exception& e) {
                    if (options.verbose) {
                        std::lock_guard<std::mutex> lock(log_mu);
                        std::fprintf(stderr, "prompt %zu attempt %d failed: %s\n", i, attempt + 1, e.what());
                    }
                }
            }
            if (!done) {
                failures.fetch_add(1);
                std::lock_guard<std::mutex> lock(log_mu);
                std::fprintf(stderr, "prompt %zu failed after %d attempts, skipping\n", i,
                             options.retry_limit + 1);
            }
        }
    };

    const std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(options.concurrency),
                                                        std::max<std::size_t>(prompts.size(), 1));
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    std::vector<text::PromptResponsePair> out;
    out.reserve(prompts.size());
    for (auto& slot : slots)
        if (slot) out.push_back(std::move(*slot));
    if (out.empty() && !prompts.empty())
        throw TeacherUnreachable("every prompt failed after " + std::to_string(options.retry_limit + 1) +
                                 " attempts each");
    return out;
}

const char* to_string(MutateStrategy s) {
    switch (s) {
        case MutateStrategy::conflict: return "conflict";
        case MutateStrategy::nuance: return "nuance";
        case MutateStrategy::style: return "style";
    }
    return "conflict";
}

MutateStrategy mutate_strategy_from_string(const std::string& s) {
    if (s == "conflict") return MutateStrategy::conflict;
    if (s == "nuance") return MutateStrategy::nuance;
    if (s == "style") return MutateStrategy::style;
    throw Error("unknown mutation strategy: " + s);
}

std::string mutate_adversarial(const std::string& prompt, MutateStrategy strategy,
                               const std::optional<std::string>& style_tag, std::uint64_t seed) {
    static const char* const kConflict[] = {
        " Now assume the opposite is true and defend that position.",
        " A friend claims the exact opposite; reconcile both views.",
        " Argue against your own answer before concluding.",
    };
    static const char* const kNuance[] = {
        " Answer in exactly three sentences, name one risk and one benefit, and end with a question.",
        " Keep it under forty words, cite two concrete examples, and avoid hedging.",
        " Give a step-by-step answer that separates facts from opinions.",
    };
    Rng rng(seed);
    switch (strategy) {
        case MutateStrategy::conflict:
            return prompt + kConflict[rng.next_below(3)];
        case MutateStrategy::nuance:
            return prompt + kNuance[rng.next_below(3)];
        case MutateStrategy::style:
            if (!style_tag || style_tag->empty())
                throw MissingStyleTag("style mutation requires a style tag");
            return "In the style of a " + *style_tag + " user: " + prompt;
    }
    throw Error("unreachable mutation strategy");
}

const TemplateStats* RefinementReport::find(const std::string& template_id) const {
    for (const auto& t : templates)
        if (t.template_id == template_id) return &t;
    return nullptr;
}

RefinementReport build_refinement_report(const std::vector<text::PromptResponsePair>& kept,
                                         const std::vector<text::RejectedPair>& rejected) {
    struct Accum {
        long accepted = 0;
        long rejected = 0;
        long total_tokens = 0;
        long responses = 0;
        std::unordered_set<std::string> distinct;
    };
    std::map<std::string, Accum> by_template;  // ordered for stable output

    auto feed = [&](const text::PromptResponsePair& pair, bool accepted) {
        if (!pair.template_id) return;
        auto& a = by_template[*pair.template_id];
        (accepted ? a.accepted : a.rejected) += 1;
        const auto toks = text::tokenize(pair.response, /*lowercase=*/true);
        a.total_tokens += static_cast<long>(toks.size());
        a.responses += 1;
        for (const auto& t : toks) a.distinct.insert(t);
    };
    for (const auto& p : kept) feed(p, true);
    for (const auto& r : rejected) feed(r.pair, false);

    RefinementReport report;
    for (const auto& [id, a] : by_template) {
        TemplateStats s;
        s.template_id = id;
        s.accepted = a.accepted;
        s.rejected = a.rejected;
        s.mean_response_tokens =
            a.responses == 0 ? 0.0 : static_cast<double>(a.total_tokens) / static_cast<double>(a.responses);
        s.distinct_token_ratio =
            a.total_tokens == 0 ? 0.0 : static_cast<double>(a.distinct.size()) / static_cast<double>(a.total_tokens);
        report.templates.push_back(std::move(s));
    }
    return report;
}

RefineResult refine_templates(const RefinementReport& report, const std::vector<PromptTemplate>& templates,
                              double accept_floor) {
    if (accept_floor < 0.0 || accept_floor > 1.0) throw Error("accept_floor must lie in [0, 1]");
    RefineResult result;
    for (const auto& t : templates) {
        const TemplateStats* stats = report.find(t.id);
        // No evidence against a template keeps it.
        const bool keep = stats == nullptr || stats->accepted + stats->rejected == 0 ||
                          stats->acceptance_ratio() >= accept_floor;
        (keep ? result.kept : result.dropped).push_back(t);
    }
    if (result.kept.empty() && !templates.empty()) {
        std::size_t best = 0;
        double best_ratio = -1.0;
        for (std::size_t i = 0; i < templates.size(); ++i) {
            const TemplateStats* stats = report.find(templates[i].id);
            const double ratio = stats ? stats->acceptance_ratio() : 0.0;
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best = i;
            }
        }
        result.kept.push_back(templates[best]);
        result.dropped.clear();
        for (std::size_t i = 0; i < templates.size(); ++i)
            if (i != best) result.dropped.push_back(templates[i]);
    }
    return result;
}

}  // namespace maskdistill::acquisition
