#include "qiedge/batch.hpp"

#include "qiedge/image_io.hpp"
#include "qiedge/metrics.hpp"
#include "qiedge/synthetic.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;

#ifndef QIEDGE_VERSION
#define QIEDGE_VERSION "0.0.0"
#endif

namespace qiedge::cli {

namespace {

constexpr int kSchemaVersion = 1;

bool wildcard_match(const std::string& pattern, const std::string& name) {
    // '*' only; sufficient for the supported glob form
    std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = n;
        } else if (star != std::string::npos) {
            p = star + 1;
            n = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

bool is_image_file(const fs::path& p) {
    const std::string ext = p.extension().string();
    return ext == ".png" || ext == ".pgm";
}

std::vector<fs::path> enumerate_inputs(const std::string& input) {
    std::vector<fs::path> files;
    const fs::path path(input);
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
    } else if (input.find('*') != std::string::npos) {
        const fs::path parent = path.parent_path().empty() ? fs::path(".") : path.parent_path();
        const std::string pattern = path.filename().string();
        if (fs::is_directory(parent))
            for (const auto& entry : fs::directory_iterator(parent))
                if (entry.is_regular_file() && wildcard_match(pattern, entry.path().filename().string()))
                    files.push_back(entry.path());
    } else if (fs::is_regular_file(path)) {
        files.push_back(path);
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string format_sigma(double sigma) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", sigma);
    std::string s(buf);
    std::replace(s.begin(), s.end(), '.', 'p');
    return s;
}

fs::path find_gt(const std::string& gt_dir, const fs::path& input) {
    const std::string stem = input.stem().string();
    for (const char* ext : {".png", ".pgm"}) {
        fs::path candidate = fs::path(gt_dir) / (stem + ext);
        if (fs::is_regular_file(candidate)) return candidate;
    }
    return {};
}

void apply_config_json(RunManifest& m, const json& cfg, const std::string& source) {
    static const std::vector<std::string> known = {
        "input", "gt", "output", "report", "variant", "delta", "time_steps",
        "blur_sigma", "blur_radius", "t_low", "t_high", "binarize_at",
        "tolerance", "noise_sigmas", "seed", "overlay_color", "threads"};
    for (const auto& [key, _] : cfg.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw UsageError("unknown config key '" + key + "' in " + source);
    }
    try {
        if (cfg.contains("input")) m.input = cfg.at("input").get<std::string>();
        if (cfg.contains("gt")) m.gt_dir = cfg.at("gt").get<std::string>();
        if (cfg.contains("output")) m.output_dir = cfg.at("output").get<std::string>();
        if (cfg.contains("report")) m.report_path = cfg.at("report").get<std::string>();
        if (cfg.contains("variant"))
            m.pipeline.variant = variant_from_name(cfg.at("variant").get<std::string>());
        if (cfg.contains("delta")) m.pipeline.diffusion.delta = cfg.at("delta").get<double>();
        if (cfg.contains("time_steps"))
            m.pipeline.diffusion.time_steps = cfg.at("time_steps").get<int>();
        if (cfg.contains("blur_sigma")) m.pipeline.blur.sigma = cfg.at("blur_sigma").get<double>();
        if (cfg.contains("blur_radius")) m.pipeline.blur.radius = cfg.at("blur_radius").get<int>();
        if (cfg.contains("t_low")) m.pipeline.thresholds.low = cfg.at("t_low").get<double>();
        if (cfg.contains("t_high")) m.pipeline.thresholds.high = cfg.at("t_high").get<double>();
        if (cfg.contains("binarize_at")) m.pipeline.binarize_at = cfg.at("binarize_at").get<double>();
        if (cfg.contains("tolerance")) m.tolerance = cfg.at("tolerance").get<double>();
        if (cfg.contains("noise_sigmas"))
            m.noise_sigmas = cfg.at("noise_sigmas").get<std::vector<double>>();
        if (cfg.contains("seed")) m.seed = cfg.at("seed").get<std::uint64_t>();
        if (cfg.contains("overlay_color")) {
            if (cfg.at("overlay_color").is_null()) {
                m.overlay_color.reset();
            } else {
                auto v = cfg.at("overlay_color").get<std::vector<double>>();
                if (v.size() != 3) throw UsageError("overlay_color needs 3 components");
                m.overlay_color = std::array<double, 3>{v[0], v[1], v[2]};
            }
        }
        if (cfg.contains("threads")) m.threads = cfg.at("threads").get<int>();
    } catch (const json::exception& e) {
        throw UsageError("invalid value in " + source + ": " + e.what());
    }
}

void validate_manifest(const RunManifest& m, bool need_input) {
    if (need_input && m.input.empty()) throw UsageError("--input is required");
    if (need_input && m.output_dir.empty()) throw UsageError("--output is required");
    if (m.pipeline.diffusion.delta <= 0.0) throw UsageError("delta must be > 0");
    if (m.pipeline.diffusion.time_steps < 0) throw UsageError("time-steps must be >= 0");
    if (m.pipeline.blur.sigma <= 0.0) throw UsageError("blur-sigma must be > 0");
    if (m.pipeline.blur.radius < 1) throw UsageError("blur-radius must be >= 1");
    if (m.pipeline.thresholds.low < 0.0 ||
        !(m.pipeline.thresholds.low < m.pipeline.thresholds.high))
        throw UsageError("thresholds must satisfy 0 <= t-low < t-high");
    if (m.pipeline.binarize_at < 0.0 || m.pipeline.binarize_at > 255.0)
        throw UsageError("binarize-at must be in [0, 255]");
    if (m.tolerance < 0.0) throw UsageError("tolerance must be >= 0");
    if (m.threads < 1) throw UsageError("threads must be >= 1");
    for (double s : m.noise_sigmas)
        if (s < 0.0) throw UsageError("noise sigmas must be >= 0");
    if (m.overlay_color)
        for (double c : *m.overlay_color)
            if (c < 0.0 || c > 255.0) throw UsageError("overlay-color components must be in [0, 255]");

    if (need_input && !m.output_dir.empty()) {
        const fs::path in(m.input);
        fs::path in_dir = fs::is_directory(in) ? in : in.parent_path();
        if (in_dir.empty()) in_dir = ".";
        std::error_code ec;
        const fs::path a = fs::weakly_canonical(in_dir, ec);
        const fs::path b = fs::weakly_canonical(fs::path(m.output_dir), ec);
        if (!a.empty() && a == b)
            throw UsageError("output directory must be distinct from the input directory");
    }

    if (m.pipeline.diffusion.delta > 0.25)
        std::cerr << "warning: delta " << m.pipeline.diffusion.delta
                  << " exceeds the explicit-scheme stability bound 0.25\n";
}

json timing_to_json(const StageTimes& t) {
    json stages = json::object();
    for (const auto& [stage, secs] : t.stages) stages[stage] = secs;
    return json{{"stages", stages}, {"total_seconds", t.total}};
}

json curve_to_json(const ImageCurve& curve) {
    json arr = json::array();
    for (const PRPoint& pt : curve)
        arr.push_back({{"threshold", pt.threshold},
                       {"precision", pt.precision},
                       {"recall", pt.recall},
                       {"f", pt.f}});
    return arr;
}

json eval_to_json(const EvalReport& report, bool include_curves) {
    json j{{"ods", report.ods},
           {"ois", report.ois},
           {"ap", report.ap},
           {"f_at_ods", report.f_at_ods},
           {"ods_threshold", report.ods_threshold}};
    if (include_curves) {
        json curves = json::array();
        for (const ImageCurve& c : report.per_image_curves) curves.push_back(curve_to_json(c));
        j["per_image_curves"] = curves;
    }
    return j;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

void write_report(const std::string& path, const json& report) {
    const fs::path p(path);
    if (!p.parent_path().empty()) fs::create_directories(p.parent_path());
    std::ofstream out(path);
    out << report.dump(2) << "\n";
    if (!out) throw IoError("cannot write report: " + path);
}

struct TaskResult {
    json record;
    bool ok = false;
    std::optional<ImageCurve> curve;  // present when ground truth was found
};

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Training-free quantum-inspired edge detection toolkit"};
    app.require_subcommand(0, 1);
    app.fallthrough(false);

    struct Raw {
        std::string input, gt, output, report, config, variant;
        double delta = 0, blur_sigma = 0, t_low = 0, t_high = 0, binarize_at = 0, tolerance = 0;
        int time_steps = 0, blur_radius = 0, threads = 0;
        std::uint64_t seed = 0;
        std::vector<double> noise_sigmas;
        std::vector<double> overlay_color;
    } raw;
    struct Opts {
        CLI::Option *input = nullptr, *gt = nullptr, *output = nullptr, *report = nullptr,
                    *config = nullptr, *variant = nullptr, *delta = nullptr, *time_steps = nullptr,
                    *blur_sigma = nullptr, *blur_radius = nullptr, *t_low = nullptr,
                    *t_high = nullptr, *binarize_at = nullptr, *tolerance = nullptr,
                    *noise_sigmas = nullptr, *seed = nullptr, *overlay_color = nullptr,
                    *threads = nullptr;
    };

    auto add_common = [&raw](CLI::App* cmd) {
        Opts o;
        o.input = cmd->add_option("--input", raw.input, "Input image file, directory, or glob");
        o.gt = cmd->add_option("--gt", raw.gt, "Ground-truth edge-map directory");
        o.output = cmd->add_option("--output", raw.output, "Output directory");
        o.report = cmd->add_option("--report", raw.report, "Report JSON path");
        o.config = cmd->add_option("--config", raw.config, "JSON config file (flags override it)");
        o.variant = cmd->add_option("--variant", raw.variant,
                                    "Pipeline variant: sobel|schrodinger-sobel|hybrid|full");
        o.delta = cmd->add_option("--delta", raw.delta, "Diffusion coefficient");
        o.time_steps = cmd->add_option("--time-steps", raw.time_steps, "Diffusion iterations");
        o.blur_sigma = cmd->add_option("--blur-sigma", raw.blur_sigma, "Gaussian sigma");
        o.blur_radius = cmd->add_option("--blur-radius", raw.blur_radius, "Gaussian kernel radius");
        o.t_low = cmd->add_option("--t-low", raw.t_low, "Canny low threshold");
        o.t_high = cmd->add_option("--t-high", raw.t_high, "Canny high threshold");
        o.binarize_at = cmd->add_option("--binarize-at", raw.binarize_at,
                                        "Binarization threshold for overlays and edge counts");
        o.tolerance = cmd->add_option("--tolerance", raw.tolerance,
                                      "Matching tolerance in pixels (0 = 0.0075 x diagonal)");
        o.noise_sigmas = cmd->add_option("--noise-sigmas", raw.noise_sigmas,
                                         "Comma-separated noise sweep sigmas")
                             ->delimiter(',');
        o.seed = cmd->add_option("--seed", raw.seed, "Noise generator seed");
        o.overlay_color = cmd->add_option("--overlay-color", raw.overlay_color,
                                          "Overlay color R,G,B; enables overlay output")
                              ->delimiter(',')
                              ->expected(3);
        o.threads = cmd->add_option("--threads", raw.threads, "Concurrent image workers");
        return o;
    };

    CLI::App* detect = app.add_subcommand("detect", "Run the edge-detection batch pipeline");
    Opts detect_opts = add_common(detect);
    CLI::App* ablation =
        app.add_subcommand("ablation", "Score all four pipeline variants against ground truth");
    Opts ablation_opts = add_common(ablation);
    CLI::App* gen = app.add_subcommand("gen-shapes", "Write the synthetic-shapes suite");
    std::string shapes_dir;
    gen->add_option("--output", shapes_dir, "Target directory")->required();

    std::vector<std::string> cli_args(args.rbegin(), args.rend());  // CLI11 wants reversed argv
    try {
        app.parse(cli_args);
    } catch (const CLI::CallForHelp&) {
        Command cmd;
        cmd.kind = CommandKind::Help;
        cmd.help_text = app.help();
        return cmd;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Command cmd;
    if (gen->parsed()) {
        cmd.kind = CommandKind::GenShapes;
        cmd.shapes_dir = shapes_dir;
        return cmd;
    }
    if (!detect->parsed() && !ablation->parsed()) {
        cmd.kind = CommandKind::Help;
        cmd.help_text = app.help();
        return cmd;
    }
    cmd.kind = detect->parsed() ? CommandKind::Detect : CommandKind::Ablation;
    const Opts& opts = detect->parsed() ? detect_opts : ablation_opts;

    RunManifest m;
    if (opts.config->count()) {
        std::ifstream in(raw.config);
        if (!in) throw UsageError("cannot read config file: " + raw.config);
        json cfg;
        try {
            in >> cfg;
        } catch (const json::exception& e) {
            throw UsageError("invalid JSON in " + raw.config + ": " + e.what());
        }
        apply_config_json(m, cfg, raw.config);
    }
    try {
        if (opts.input->count()) m.input = raw.input;
        if (opts.gt->count()) m.gt_dir = raw.gt;
        if (opts.output->count()) m.output_dir = raw.output;
        if (opts.report->count()) m.report_path = raw.report;
        if (opts.variant->count()) m.pipeline.variant = variant_from_name(raw.variant);
        if (opts.delta->count()) m.pipeline.diffusion.delta = raw.delta;
        if (opts.time_steps->count()) m.pipeline.diffusion.time_steps = raw.time_steps;
        if (opts.blur_sigma->count()) m.pipeline.blur.sigma = raw.blur_sigma;
        if (opts.blur_radius->count()) m.pipeline.blur.radius = raw.blur_radius;
        if (opts.t_low->count()) m.pipeline.thresholds.low = raw.t_low;
        if (opts.t_high->count()) m.pipeline.thresholds.high = raw.t_high;
        if (opts.binarize_at->count()) m.pipeline.binarize_at = raw.binarize_at;
        if (opts.tolerance->count()) m.tolerance = raw.tolerance;
        if (opts.noise_sigmas->count()) m.noise_sigmas = raw.noise_sigmas;
        if (opts.seed->count()) m.seed = raw.seed;
        if (opts.overlay_color->count())
            m.overlay_color =
                std::array<double, 3>{raw.overlay_color[0], raw.overlay_color[1], raw.overlay_color[2]};
        if (opts.threads->count()) m.threads = raw.threads;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (m.report_path.empty() && !m.output_dir.empty())
        m.report_path = (fs::path(m.output_dir) / "report.json").string();

    validate_manifest(m, true);
    cmd.manifest = m;
    return cmd;
}

json manifest_to_json(const RunManifest& m) {
    json j{{"input", m.input},
           {"gt", m.gt_dir},
           {"output", m.output_dir},
           {"report", m.report_path},
           {"variant", variant_name(m.pipeline.variant)},
           {"delta", m.pipeline.diffusion.delta},
           {"time_steps", m.pipeline.diffusion.time_steps},
           {"blur_sigma", m.pipeline.blur.sigma},
           {"blur_radius", m.pipeline.blur.radius},
           {"t_low", m.pipeline.thresholds.low},
           {"t_high", m.pipeline.thresholds.high},
           {"binarize_at", m.pipeline.binarize_at},
           {"tolerance", m.tolerance},
           {"noise_sigmas", m.noise_sigmas},
           {"seed", m.seed},
           {"threads", m.threads}};
    if (m.overlay_color)
        j["overlay_color"] = {(*m.overlay_color)[0], (*m.overlay_color)[1], (*m.overlay_color)[2]};
    else
        j["overlay_color"] = nullptr;
    return j;
}

int run_batch(const RunManifest& m, json* report_out) {
    const std::vector<fs::path> inputs = enumerate_inputs(m.input);
    fs::create_directories(m.output_dir);

    // sigma entry -1 means "no noise injection at all" (no sweep requested)
    std::vector<double> sigmas = m.noise_sigmas;
    const bool sweeping = !sigmas.empty();
    if (!sweeping) sigmas.push_back(-1.0);

    struct Task {
        std::size_t sigma_idx;
        std::size_t image_idx;
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < sigmas.size(); ++s)
        for (std::size_t i = 0; i < inputs.size(); ++i) tasks.push_back({s, i});
    std::vector<TaskResult> results(tasks.size());

    auto process = [&](const Task& task, TaskResult& res) {
        const fs::path& path = inputs[task.image_idx];
        const double sigma = sigmas[task.sigma_idx];
        res.record["input"] = path.string();
        if (sweeping) res.record["sigma"] = sigma;
        try {
            GrayImage gray = to_gray(load_image(path.string()));
            if (sweeping && sigma > 0.0) {
                NoiseSpec spec{sigma, mix_seed(mix_seed(m.seed, task.sigma_idx), task.image_idx)};
                gray = add_gaussian_noise(gray, spec);
            }
            EdgeResult edges = run_pipeline(gray, m.pipeline);

            const std::string stem = path.stem().string();
            const std::string suffix = sweeping ? "__s" + format_sigma(sigma) : "";
            const fs::path edge_path = fs::path(m.output_dir) / (stem + suffix + "_edges.png");
            save_png(edge_path.string(), edges.e_hybrid);
            res.record["edge_map"] = edge_path.string();

            const GrayImage binary = binarize(edges.e_hybrid, m.pipeline.binarize_at);
            if (m.overlay_color) {
                const fs::path ov_path = fs::path(m.output_dir) / (stem + suffix + "_overlay.png");
                save_png(ov_path.string(), overlay(to_rgb(load_image(path.string())), binary,
                                                   *m.overlay_color));
                res.record["overlay"] = ov_path.string();
            }

            res.record["width"] = gray.width;
            res.record["height"] = gray.height;
            std::int64_t edge_pixels = 0;
            for (double v : binary.data) edge_pixels += v != 0.0;
            res.record["edge_pixels"] = edge_pixels;
            res.record["timing"] = timing_to_json(edges.stage_times);

            if (!m.gt_dir.empty()) {
                const fs::path gt_path = find_gt(m.gt_dir, path);
                if (!gt_path.empty()) {
                    const GrayImage gt = to_gray(load_image(gt_path.string()));
                    const double tol =
                        m.tolerance > 0.0 ? m.tolerance : default_tolerance(gray.width, gray.height);
                    res.curve = pr_curve(edges.e_hybrid, gt, default_threshold_grid(), tol);
                    res.record["gt"] = gt_path.string();
                } else {
                    res.record["gt"] = nullptr;
                }
            }
            res.record["status"] = "ok";
            res.ok = true;
        } catch (const std::exception& e) {
            res.record["status"] = "error";
            res.record["error"] = e.what();
        }
    };

    const int n_threads = std::max(1, std::min<int>(m.threads, static_cast<int>(tasks.size())));
    if (n_threads == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) process(tasks[t], results[t]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < n_threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
                    process(tasks[t], results[t]);
            });
        }
        for (std::thread& w : workers) w.join();
    }

    json report{{"schema_version", kSchemaVersion},
                {"tool_version", QIEDGE_VERSION},
                {"config", manifest_to_json(m)}};
    json records = json::array();
    std::size_t ok_count = 0;
    for (const TaskResult& r : results) {
        records.push_back(r.record);
        ok_count += r.ok;
    }
    report["images"] = records;

    // Evaluation over the first sweep entry (or the plain run); the sweep
    // table carries one pooled ODS per sigma.
    if (!m.gt_dir.empty()) {
        auto curves_for = [&](std::size_t sigma_idx) {
            std::vector<ImageCurve> curves;
            for (std::size_t t = 0; t < tasks.size(); ++t)
                if (tasks[t].sigma_idx == sigma_idx && results[t].curve)
                    curves.push_back(*results[t].curve);
            return curves;
        };
        const std::vector<ImageCurve> base = curves_for(0);
        if (!base.empty()) report["evaluation"] = eval_to_json(dataset_scores(base), true);
        if (sweeping) {
            json sweep = json::array();
            for (std::size_t s = 0; s < sigmas.size(); ++s) {
                const std::vector<ImageCurve> curves = curves_for(s);
                if (!curves.empty())
                    sweep.push_back({{"sigma", sigmas[s]}, {"ods", dataset_scores(curves).ods}});
            }
            report["noise_sweep"] = sweep;
        }
    }
    report["volatile"] = {{"generated_at", iso_timestamp()}};

    write_report(m.report_path, report);
    if (report_out) *report_out = report;

    std::cout << "processed " << ok_count << "/" << results.size() << " image runs -> "
              << m.output_dir << "\n";
    if (report.contains("evaluation"))
        std::cout << "ODS " << report["evaluation"]["ods"].get<double>() << "  OIS "
                  << report["evaluation"]["ois"].get<double>() << "  AP "
                  << report["evaluation"]["ap"].get<double>() << "\n";
    if (report.contains("noise_sweep"))
        for (const auto& row : report["noise_sweep"])
            std::cout << "sigma " << row["sigma"].get<double>() << " -> ODS "
                      << row["ods"].get<double>() << "\n";

    if (ok_count == 0) return 2;
    return ok_count == results.size() ? 0 : 2;
}

int run_ablation(const RunManifest& m, json* report_out) {
    if (m.gt_dir.empty()) throw UsageError("ablation requires --gt");
    const std::vector<fs::path> inputs = enumerate_inputs(m.input);
    if (inputs.empty()) {
        std::cerr << "no input images found\n";
        return 2;
    }
    fs::create_directories(m.output_dir);

    json rows = json::array();
    for (Variant v : {Variant::SobelOnly, Variant::SchrodingerSobel, Variant::HybridOnly,
                      Variant::Full}) {
        PipelineConfig cfg = m.pipeline;
        cfg.variant = v;
        std::vector<ImageCurve> curves;
        for (const fs::path& path : inputs) {
            const fs::path gt_path = find_gt(m.gt_dir, path);
            if (gt_path.empty()) continue;
            const GrayImage gray = to_gray(load_image(path.string()));
            const GrayImage gt = to_gray(load_image(gt_path.string()));
            const EdgeResult edges = run_pipeline(gray, cfg);
            const double tol =
                m.tolerance > 0.0 ? m.tolerance : default_tolerance(gray.width, gray.height);
            curves.push_back(pr_curve(edges.e_hybrid, gt, default_threshold_grid(), tol));
        }
        if (curves.empty()) {
            std::cerr << "no ground truth matched any input\n";
            return 2;
        }
        const EvalReport scores = dataset_scores(curves);
        rows.push_back({{"variant", variant_name(v)},
                        {"ods", scores.ods},
                        {"ois", scores.ois},
                        {"ap", scores.ap},
                        {"f_at_ods", scores.f_at_ods}});
    }

    json report{{"schema_version", kSchemaVersion},
                {"tool_version", QIEDGE_VERSION},
                {"config", manifest_to_json(m)},
                {"ablation", rows},
                {"volatile", {{"generated_at", iso_timestamp()}}}};
    write_report(m.report_path, report);
    if (report_out) *report_out = report;

    std::printf("%-18s %8s %8s %8s %8s\n", "variant", "ODS", "OIS", "AP", "F");
    for (const auto& row : rows)
        std::printf("%-18s %8.4f %8.4f %8.4f %8.4f\n",
                    row["variant"].get<std::string>().c_str(), row["ods"].get<double>(),
                    row["ois"].get<double>(), row["ap"].get<double>(),
                    row["f_at_ods"].get<double>());
    return 0;
}

int run_gen_shapes(const std::string& dir) {
    const fs::path images = fs::path(dir) / "images";
    const fs::path gt = fs::path(dir) / "gt";
    fs::create_directories(images);
    fs::create_directories(gt);
    for (const ShapeScene& scene : synthetic_suite()) {
        save_png((images / (scene.name + ".png")).string(), scene.image);
        save_png((gt / (scene.name + ".png")).string(), scene.gt);
        std::cout << scene.name << "\n";
    }
    return 0;
}

int run_command(const Command& cmd) {
    switch (cmd.kind) {
        case CommandKind::Help:
            std::cout << cmd.help_text;
            return 0;
        case CommandKind::GenShapes:
            return run_gen_shapes(cmd.shapes_dir);
        case CommandKind::Detect:
            return run_batch(cmd.manifest);
        case CommandKind::Ablation:
            return run_ablation(cmd.manifest);
    }
    return 1;
}

}  // namespace qiedge::cli
