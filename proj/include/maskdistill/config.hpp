#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "maskdistill/masking.hpp"
#include "maskdistill/model.hpp"
#include "maskdistill/training.hpp"

namespace maskdistill::cli {

// Flat "key = value" file; '#' starts a comment, blank lines are ignored.
std::map<std::string, std::string> parse_kv_file(const std::filesystem::path& path);

// Every knob of the pipeline, file-configurable and overridable by flags.
// Unknown keys are errors, never ignored.
struct PipelineConfig {
    // shared
    std::uint64_t seed = 0;
    bool lowercase = true;
    int max_len = 128;         // encoded sequence cap, should match context_length
    int vocab_min_count = 1;
    std::string out_dir = "out";

    // acquisition
    std::string teacher_url;
    std::string templates_path;
    std::string slots_path;
    int concurrency = 4;
    int retry_limit = 2;
    int acquire_max_tokens = 256;
    double temperature = 0.8;
    int backoff_base_ms = 1000;

    // filtering
    std::string blocklist_path;
    int filter_min_tokens = 3;
    int filter_max_tokens = 256;

    // masking
    masking::MaskWeights mask_weights;
    double floor_mask_rate = 0.15;
    bool mask_threshold = false;

    // model
    model::ModelConfig model;  // vocab_size filled from the dataset

    // training
    training::TrainConfig train;

    void apply(const std::map<std::string, std::string>& kv);
    static PipelineConfig from_file(const std::filesystem::path& path);
};

}  // namespace maskdistill::cli
