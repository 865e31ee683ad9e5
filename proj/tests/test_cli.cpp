#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* bin = std::getenv("MASKDISTILL_BIN");
    return bin ? bin : "";
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";
    const std::string cmd = cli_path() + " " + args + " > " + out_file.string() + " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream o(out_file), e(err_file);
    r.out.assign((std::istreambuf_iterator<char>(o)), std::istreambuf_iterator<char>());
    r.err.assign((std::istreambuf_iterator<char>(e)), std::istreambuf_iterator<char>());
    return r;
}

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "maskdistill_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// A small template/slot set for quick subprocess runs.
void write_mini_fixture(const fs::path& dir) {
    std::ofstream templates(dir / "templates.jsonl");
    templates << R"({"id":"t1","pattern":"Summarize the latest trends in [topic].","kind":"plain"})" << '\n';
    templates << R"({"id":"t2","pattern":"What is happening with [topic] today?","kind":"plain"})" << '\n';
    std::ofstream slots(dir / "slots.json");
    slots << R"({"topic":["origami","kayaking","chess","quilting"]})" << '\n';
    std::ofstream blocklist(dir / "blocklist.txt");
    blocklist << "spam\n";
    std::ofstream config(dir / "mini.cfg");
    config << "seed = 7\nmax_len = 64\ncontext_length = 64\nmodel_width = 16\nmodel_heads = 2\n"
           << "model_layers = 1\nlearning_rate = 0.003\nbatch_size = 4\nmax_epochs = 4\npatience = 4\n"
           << "val_fraction = 0.25\nfilter_min_tokens = 3\nfilter_max_tokens = 64\n";
}

}  // namespace

TEST_CASE("cli: acquire --mock writes one pair per expanded prompt, byte-identically across reruns") {
    REQUIRE(!cli_path().empty());
    const auto dir = scratch_dir("acquire");
    write_mini_fixture(dir);
    const std::string base = "--config " + (dir / "mini.cfg").string() + " acquire --mock --templates " +
                             (dir / "templates.jsonl").string() + " --slots " + (dir / "slots.json").string();

    const auto r1 = run_cli(base + " --out " + (dir / "a.jsonl").string(), dir);
    REQUIRE(r1.exit_code == 0);
    const auto summary = nlohmann::json::parse(r1.out);
    CHECK(summary.at("prompts") == 8);
    CHECK(summary.at("collected") == 8);
    CHECK(summary.at("failed") == 0);

    const auto r2 = run_cli(base + " --out " + (dir / "b.jsonl").string(), dir);
    REQUIRE(r2.exit_code == 0);
    CHECK(file_bytes(dir / "a.jsonl") == file_bytes(dir / "b.jsonl"));
    CHECK(!file_bytes(dir / "a.jsonl").empty());
}

TEST_CASE("cli: acquire without --mock or a teacher url is a config error") {
    const auto dir = scratch_dir("acquire_err");
    write_mini_fixture(dir);
    const auto r = run_cli("acquire --templates " + (dir / "templates.jsonl").string() + " --slots " +
                               (dir / "slots.json").string() + " --out " + (dir / "x.jsonl").string(),
                           dir);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("teacher") != std::string::npos);
}

TEST_CASE("cli: an unreachable teacher exits 2") {
    const auto dir = scratch_dir("unreachable");
    write_mini_fixture(dir);
    {
        std::ofstream config(dir / "mini.cfg", std::ios::app);
        config << "backoff_base_ms = 0\n";
    }
    const auto r = run_cli("--config " + (dir / "mini.cfg").string() + " acquire --teacher-url http://127.0.0.1:9/ " +
                               "--retry-limit 0 --templates " + (dir / "templates.jsonl").string() + " --slots " +
                               (dir / "slots.json").string() + " --out " + (dir / "x.jsonl").string(),
                           dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: a missing slots file names the path") {
    const auto dir = scratch_dir("missing_slots");
    write_mini_fixture(dir);
    const std::string missing = (dir / "nope.json").string();
    const auto r = run_cli("acquire --mock --templates " + (dir / "templates.jsonl").string() + " --slots " +
                               missing + " --out " + (dir / "x.jsonl").string(),
                           dir);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find(missing) != std::string::npos);
}

TEST_CASE("cli: unknown flags are errors") {
    const auto dir = scratch_dir("unknown_flag");
    const auto r = run_cli("filter --no-such-flag", dir);
    CHECK(r.exit_code != 0);
    const auto help = run_cli("--help", dir);
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("acquire") != std::string::npos);
    const auto sub_help = run_cli("mask --help", dir);
    CHECK(sub_help.exit_code == 0);
    CHECK(sub_help.out.find("--weights") != std::string::npos);
}

TEST_CASE("cli: refinement drops a template whose responses all fail the filter") {
    const auto dir = scratch_dir("refine");
    write_mini_fixture(dir);
    // The mock extracts salient prompt words into the response, so a prompt
    // built around a blocklisted word yields rejected responses only.
    {
        std::ofstream templates(dir / "templates.jsonl");
        templates << R"({"id":"good","pattern":"Summarize the latest trends in [topic].","kind":"plain"})" << '\n';
        templates << R"({"id":"bad","pattern":"Describe the zorkle situation honestly.","kind":"plain"})" << '\n';
        std::ofstream blocklist(dir / "blocklist.txt");
        blocklist << "spam\nzorkle\n";
        std::ofstream config(dir / "mini.cfg", std::ios::app);
        config << "blocklist_path = " << (dir / "blocklist.txt").string() << "\n";
    }
    const auto r = run_cli("--config " + (dir / "mini.cfg").string() + " --verbose acquire --mock --templates " +
                               (dir / "templates.jsonl").string() + " --slots " + (dir / "slots.json").string() +
                               " --refine-rounds 2 --accept-floor 0.5 --out " + (dir / "refined.jsonl").string(),
                           dir);
    REQUIRE(r.exit_code == 0);
    const auto summary = nlohmann::json::parse(r.out);
    CHECK(summary.at("templates_dropped") == 1);
    CHECK(summary.at("prompts") == 4);  // only the 4 good expansions remain
    CHECK(r.err.find("dropped template bad") != std::string::npos);
}

TEST_CASE("cli: filter splits kept and rejected with reasons") {
    const auto dir = scratch_dir("filter");
    write_mini_fixture(dir);
    {
        std::ofstream data(dir / "raw.jsonl");
        data << R"({"prompt":"p1","response":"totally fine response here","source":"mock","template_id":null,"created_at":"t"})" << '\n';
        data << R"({"prompt":"p2","response":"buy SPAM now please","source":"mock","template_id":null,"created_at":"t"})" << '\n';
        data << R"({"prompt":"p3","response":"totally fine response here","source":"mock","template_id":null,"created_at":"t"})" << '\n';
    }
    const auto r = run_cli("--config " + (dir / "mini.cfg").string() + " filter --in " + (dir / "raw.jsonl").string() +
                               " --out " + (dir / "kept.jsonl").string() + " --rejected " +
                               (dir / "rejected.jsonl").string() + " --blocklist " + (dir / "blocklist.txt").string(),
                           dir);
    REQUIRE(r.exit_code == 0);
    const auto summary = nlohmann::json::parse(r.out);
    CHECK(summary.at("kept") == 1);
    CHECK(summary.at("rejected") == 2);
    std::ifstream rej(dir / "rejected.jsonl");
    std::string line;
    std::getline(rej, line);
    CHECK(nlohmann::json::parse(line).at("reason") == "blocklist");
    std::getline(rej, line);
    CHECK(nlohmann::json::parse(line).at("reason") == "duplicate");
}

TEST_CASE("cli: mask is deterministic per seed and honors --threshold") {
    const auto dir = scratch_dir("mask");
    write_mini_fixture(dir);
    const std::string acquire = "--config " + (dir / "mini.cfg").string() + " acquire --mock --templates " +
                                (dir / "templates.jsonl").string() + " --slots " + (dir / "slots.json").string() +
                                " --out " + (dir / "raw.jsonl").string();
    REQUIRE(run_cli(acquire, dir).exit_code == 0);

    const std::string base = "--config " + (dir / "mini.cfg").string() + " mask --dataset " +
                             (dir / "raw.jsonl").string() + " --weights 1,1,1,0.5 --floor 0.15 --seed 9 --out ";
    REQUIRE(run_cli(base + (dir / "m1.jsonl").string(), dir).exit_code == 0);
    REQUIRE(run_cli(base + (dir / "m2.jsonl").string(), dir).exit_code == 0);
    CHECK(file_bytes(dir / "m1.jsonl") == file_bytes(dir / "m2.jsonl"));

    const auto r3 = run_cli(base + (dir / "m3.jsonl").string() + " --threshold", dir);
    REQUIRE(r3.exit_code == 0);
    CHECK(file_bytes(dir / "m3.jsonl") != file_bytes(dir / "m1.jsonl"));
}

TEST_CASE("cli: mask --scores dumps one record per token") {
    const auto dir = scratch_dir("mask_scores");
    write_mini_fixture(dir);
    const std::string cfg = "--config " + (dir / "mini.cfg").string() + " ";
    REQUIRE(run_cli(cfg + "acquire --mock --templates " + (dir / "templates.jsonl").string() + " --slots " +
                        (dir / "slots.json").string() + " --out " + (dir / "raw.jsonl").string(),
                    dir)
                .exit_code == 0);
    REQUIRE(run_cli(cfg + "mask --dataset " + (dir / "raw.jsonl").string() + " --out " + (dir / "m.jsonl").string() +
                        " --scores " + (dir / "scores.jsonl").string(),
                    dir)
                .exit_code == 0);

    std::ifstream scores(dir / "scores.jsonl");
    std::string line;
    long records = 0;
    while (std::getline(scores, line)) {
        const auto rec = nlohmann::json::parse(line);
        CHECK(rec.contains("token"));
        CHECK(rec.contains("tfidf"));
        CHECK(rec.contains("pos"));
        CHECK(rec.contains("dep"));
        CHECK(rec.contains("random"));
        ++records;
    }
    // One record per token of every mask.
    std::ifstream masks(dir / "m.jsonl");
    long bits = 0;
    while (std::getline(masks, line)) bits += static_cast<long>(nlohmann::json::parse(line).at("bits").get<std::string>().size());
    CHECK(records == bits);
    CHECK(records > 0);
}

TEST_CASE("cli: train --resample-each-epoch runs and changes the outcome") {
    const auto dir = scratch_dir("resample");
    write_mini_fixture(dir);
    const std::string cfg = "--config " + (dir / "mini.cfg").string() + " ";
    REQUIRE(run_cli(cfg + "acquire --mock --templates " + (dir / "templates.jsonl").string() + " --slots " +
                        (dir / "slots.json").string() + " --out " + (dir / "raw.jsonl").string(),
                    dir)
                .exit_code == 0);
    REQUIRE(run_cli(cfg + "mask --dataset " + (dir / "raw.jsonl").string() + " --out " + (dir / "m.jsonl").string(),
                    dir)
                .exit_code == 0);
    const std::string train = cfg + "train --dataset " + (dir / "raw.jsonl").string() + " --masks " +
                              (dir / "m.jsonl").string() + " --out ";
    REQUIRE(run_cli(train + (dir / "fixed").string(), dir).exit_code == 0);
    REQUIRE(run_cli(train + (dir / "resampled").string() + " --resample-each-epoch", dir).exit_code == 0);
    CHECK(file_bytes(dir / "fixed" / "checkpoint.bin") != file_bytes(dir / "resampled" / "checkpoint.bin"));
}

TEST_CASE("cli: training divergence exits 3") {
    const auto dir = scratch_dir("diverge");
    write_mini_fixture(dir);
    {
        std::ofstream config(dir / "mini.cfg", std::ios::app);
        config << "learning_rate = 1e30\nmax_epochs = 3\n";
    }
    const std::string cfg = "--config " + (dir / "mini.cfg").string() + " ";
    REQUIRE(run_cli(cfg + "acquire --mock --templates " + (dir / "templates.jsonl").string() + " --slots " +
                        (dir / "slots.json").string() + " --out " + (dir / "raw.jsonl").string(),
                    dir)
                .exit_code == 0);
    REQUIRE(run_cli(cfg + "mask --dataset " + (dir / "raw.jsonl").string() + " --out " + (dir / "m.jsonl").string(),
                    dir)
                .exit_code == 0);
    const auto r = run_cli(cfg + "train --dataset " + (dir / "raw.jsonl").string() + " --masks " +
                               (dir / "m.jsonl").string() + " --out " + (dir / "out").string(),
                           dir);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("non-finite") != std::string::npos);
}

TEST_CASE("cli: train on an empty dataset exits 1 with an empty-split message") {
    const auto dir = scratch_dir("train_empty");
    write_mini_fixture(dir);
    std::ofstream(dir / "empty.jsonl").close();
    std::ofstream(dir / "empty_masks.jsonl").close();
    const auto r = run_cli("--config " + (dir / "mini.cfg").string() + " train --dataset " +
                               (dir / "empty.jsonl").string() + " --masks " + (dir / "empty_masks.jsonl").string() +
                               " --out " + (dir / "out").string(),
                           dir);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("zero pairs") != std::string::npos);
}

TEST_CASE("cli: mini pipeline trains, evaluates, and reports machine-readable summaries") {
    const auto dir = scratch_dir("mini_pipeline");
    write_mini_fixture(dir);
    const std::string cfg = "--config " + (dir / "mini.cfg").string() + " ";
    REQUIRE(run_cli(cfg + "acquire --mock --templates " + (dir / "templates.jsonl").string() + " --slots " +
                        (dir / "slots.json").string() + " --out " + (dir / "raw.jsonl").string(),
                    dir)
                .exit_code == 0);
    REQUIRE(run_cli(cfg + "filter --in " + (dir / "raw.jsonl").string() + " --out " + (dir / "kept.jsonl").string() +
                        " --blocklist " + (dir / "blocklist.txt").string(),
                    dir)
                .exit_code == 0);
    REQUIRE(run_cli(cfg + "mask --dataset " + (dir / "kept.jsonl").string() + " --out " + (dir / "masks.jsonl").string(),
                    dir)
                .exit_code == 0);

    const auto train = run_cli(cfg + "train --dataset " + (dir / "kept.jsonl").string() + " --masks " +
                                   (dir / "masks.jsonl").string() + " --out " + (dir / "out").string(),
                               dir);
    REQUIRE(train.exit_code == 0);
    const auto train_summary = nlohmann::json::parse(train.out);
    CHECK(train_summary.at("epochs") == 4);
    CHECK(fs::exists(dir / "out" / "checkpoint.bin"));
    CHECK(fs::exists(dir / "out" / "metrics.tsv"));
    CHECK(fs::exists(dir / "out" / "vocab.txt"));
    CHECK(fs::exists(dir / "out" / "train_split.jsonl"));
    CHECK(fs::exists(dir / "out" / "val_split.masks.jsonl"));

    const auto eval = run_cli(cfg + "eval --dataset " + (dir / "out" / "train_split.jsonl").string() + " --masks " +
                                  (dir / "out" / "train_split.masks.jsonl").string() + " --checkpoint " +
                                  (dir / "out" / "checkpoint.bin").string() + " --vocab " +
                                  (dir / "out" / "vocab.txt").string(),
                              dir);
    REQUIRE(eval.exit_code == 0);
    const auto eval_summary = nlohmann::json::parse(eval.out);
    CHECK(eval_summary.at("loss").get<double>() > 0.0);
    CHECK(eval_summary.at("perplexity").get<double>() > 1.0);

    // Evaluating a split with a rebuilt (wrong) vocabulary is caught.
    const auto bad_eval = run_cli(cfg + "eval --dataset " + (dir / "out" / "val_split.jsonl").string() + " --masks " +
                                      (dir / "out" / "val_split.masks.jsonl").string() + " --checkpoint " +
                                      (dir / "out" / "checkpoint.bin").string(),
                                  dir);
    CHECK(bad_eval.exit_code == 1);
    CHECK(bad_eval.err.find("vocab") != std::string::npos);
}
