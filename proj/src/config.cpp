#include "maskdistill/config.hpp"

#include <fstream>

#include "maskdistill/errors.hpp"

namespace maskdistill::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("config key " + key + " expects a boolean, got '" + value + "'");
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + " expects an integer, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + " expects an unsigned integer, got '" + value + "'");
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + " expects a number, got '" + value + "'");
    }
}

}  // namespace

std::map<std::string, std::string> parse_kv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::map<std::string, std::string> kv;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": empty key");
        kv[key] = value;
    }
    return kv;
}

void PipelineConfig::apply(const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "seed") {
            seed = parse_u64(key, value);
            train.seed = seed;
        } else if (key == "lowercase") lowercase = parse_bool(key, value);
        else if (key == "max_len") max_len = parse_int(key, value);
        else if (key == "vocab_min_count") vocab_min_count = parse_int(key, value);
        else if (key == "out_dir") out_dir = value;
        else if (key == "teacher_url") teacher_url = value;
        else if (key == "templates_path") templates_path = value;
        else if (key == "slots_path") slots_path = value;
        else if (key == "concurrency") concurrency = parse_int(key, value);
        else if (key == "retry_limit") retry_limit = parse_int(key, value);
        else if (key == "acquire_max_tokens") acquire_max_tokens = parse_int(key, value);
        else if (key == "temperature") temperature = parse_double(key, value);
        else if (key == "backoff_base_ms") backoff_base_ms = parse_int(key, value);
        else if (key == "blocklist_path") blocklist_path = value;
        else if (key == "filter_min_tokens") filter_min_tokens = parse_int(key, value);
        else if (key == "filter_max_tokens") filter_max_tokens = parse_int(key, value);
        else if (key == "w_tfidf") mask_weights.w_tfidf = parse_double(key, value);
        else if (key == "w_pos") mask_weights.w_pos = parse_double(key, value);
        else if (key == "w_dep") mask_weights.w_dep = parse_double(key, value);
        else if (key == "w_random") mask_weights.w_random = parse_double(key, value);
        else if (key == "mask_bias") mask_weights.bias = parse_double(key, value);
        else if (key == "floor_mask_rate") {
            floor_mask_rate = parse_double(key, value);
            train.floor_mask_rate = floor_mask_rate;
        } else if (key == "mask_threshold") mask_threshold = parse_bool(key, value);
        else if (key == "context_length") model.context_length = parse_int(key, value);
        else if (key == "model_width") model.width = parse_int(key, value);
        else if (key == "model_heads") model.heads = parse_int(key, value);
        else if (key == "model_layers") model.layers = parse_int(key, value);
        else if (key == "tied_output") model.tied_output = parse_bool(key, value);
        else if (key == "learning_rate") train.learning_rate = parse_double(key, value);
        else if (key == "batch_size") train.batch_size = parse_int(key, value);
        else if (key == "max_epochs") train.max_epochs = parse_int(key, value);
        else if (key == "patience") train.patience = parse_int(key, value);
        else if (key == "min_delta") train.min_delta = parse_double(key, value);
        else if (key == "weight_decay") train.weight_decay = parse_double(key, value);
        else if (key == "adam_beta1") train.adam_beta1 = parse_double(key, value);
        else if (key == "adam_beta2") train.adam_beta2 = parse_double(key, value);
        else if (key == "adam_epsilon") train.adam_epsilon = parse_double(key, value);
        else if (key == "loss_scope") train.loss_scope = training::loss_scope_from_string(value);
        else if (key == "mask_mode") train.mask_mode = model::mask_mode_from_string(value);
        else if (key == "val_fraction") train.val_fraction = parse_double(key, value);
        else if (key == "resample_masks_each_epoch") train.resample_masks_each_epoch = parse_bool(key, value);
        else throw ConfigError("unknown config key: " + key);
    }
}

PipelineConfig PipelineConfig::from_file(const std::filesystem::path& path) {
    PipelineConfig config;
    config.apply(parse_kv_file(path));
    return config;
}

}  // namespace maskdistill::cli
