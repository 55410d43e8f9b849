#pragma once

#include "qiedge/noise.hpp"
#include "qiedge/pipeline.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qiedge::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fully resolved run description: flags > config file > defaults.
struct RunManifest {
    std::string input;        // file, directory, or simple '*' glob
    std::string gt_dir;       // optional ground-truth directory
    std::string output_dir;
    std::string report_path;  // defaults to <output_dir>/report.json
    PipelineConfig pipeline;
    std::vector<double> noise_sigmas;  // empty = no noise sweep
    std::uint64_t seed = 0;
    double tolerance = 0.0;  // 0 = per-image default (0.0075 x diagonal)
    std::optional<std::array<double, 3>> overlay_color;
    int threads = 1;
};

enum class CommandKind { Detect, Ablation, GenShapes, Help };

struct Command {
    CommandKind kind = CommandKind::Help;
    RunManifest manifest;
    std::string shapes_dir;  // gen-shapes target
    std::string help_text;
};

/// Parse argv (without the program name). Throws UsageError on unknown
/// flags, unreadable config files, or invalid values.
Command parse_args(const std::vector<std::string>& args);

/// Manifest echo in the config-file schema; feeding it back through
/// --config reproduces the run.
nlohmann::json manifest_to_json(const RunManifest& m);

/// Exit codes: 0 = all images processed, 2 = partial or total failure.
int run_batch(const RunManifest& m, nlohmann::json* report_out = nullptr);

/// Run all four pipeline variants and report per-variant scores.
/// Requires ground truth.
int run_ablation(const RunManifest& m, nlohmann::json* report_out = nullptr);

/// Write the synthetic-shapes suite (images/ and gt/) to a directory.
int run_gen_shapes(const std::string& dir);

/// Dispatch a parsed command; returns the process exit code.
int run_command(const Command& cmd);

}  // namespace qiedge::cli
