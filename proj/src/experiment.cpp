#include "topoplan/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "topoplan/errors.hpp"
#include "topoplan/svg.hpp"

namespace topoplan {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw config_error(message); }

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.contains(key)) fail(where + ": unknown field '" + key + "'");
    }
}

const json& require_field(const json& j, const std::string& where, const std::string& key) {
    if (!j.contains(key)) fail(where + ": missing field '" + key + "'");
    return j.at(key);
}

int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where + ": expected an integer");
    return j.get<int>();
}

double get_real(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(where + ": value must be finite");
    return v;
}

Rect get_rect(const json& j, const std::string& where) {
    require_keys(j, where, {"xmin", "ymin", "xmax", "ymax"});
    Rect r;
    r.xmin = get_real(require_field(j, where, "xmin"), where + ".xmin");
    r.ymin = get_real(require_field(j, where, "ymin"), where + ".ymin");
    r.xmax = get_real(require_field(j, where, "xmax"), where + ".xmax");
    r.ymax = get_real(require_field(j, where, "ymax"), where + ".ymax");
    if (!r.valid()) fail(where + ": rectangle is empty");
    return r;
}

GridCoord get_coord(const json& j, const std::string& where, int rows, int cols) {
    if (!j.is_array() || j.size() != 2) fail(where + ": expected [row, col]");
    GridCoord c{get_int(j.at(0), where + "[0]"), get_int(j.at(1), where + "[1]")};
    if (c.row < 0 || c.row >= rows || c.col < 0 || c.col >= cols)
        fail(where + ": coordinate is off the grid");
    return c;
}

Vec2 grid_position(const ExperimentConfig& cfg, const GridCoord& c) {
    const double dx = (cfg.bounds.xmax - cfg.bounds.xmin) / (cfg.cols - 1);
    const double dy = (cfg.bounds.ymax - cfg.bounds.ymin) / (cfg.rows - 1);
    return Vec2{cfg.bounds.xmin + c.col * dx, cfg.bounds.ymin + c.row * dy};
}

ExperimentConfig parse_config_json(const json& j, const std::string& name) {
    require_keys(j, "config",
                 {"grid", "holes", "source", "dest", "keypoints", "alphas", "epsilon",
                  "algorithms", "seed", "output_dir"});

    ExperimentConfig cfg;
    cfg.name = name;

    const json& grid = require_field(j, "config", "grid");
    require_keys(grid, "grid", {"rows", "cols", "bounds"});
    cfg.rows = get_int(require_field(grid, "grid", "rows"), "grid.rows");
    cfg.cols = get_int(require_field(grid, "grid", "cols"), "grid.cols");
    if (cfg.rows < 2 || cfg.cols < 2) fail("grid: rows and cols must be at least 2");
    cfg.bounds = get_rect(require_field(grid, "grid", "bounds"), "grid.bounds");

    const json& holes = require_field(j, "config", "holes");
    if (!holes.is_array()) fail("holes: expected an array");
    for (std::size_t i = 0; i < holes.size(); ++i) {
        const std::string where = "holes[" + std::to_string(i) + "]";
        Rect hole = get_rect(holes.at(i), where);
        if (!hole.strictly_inside(cfg.bounds)) fail(where + ": hole lies outside the grid bounds");
        cfg.holes.push_back(hole);
    }

    cfg.source = get_coord(require_field(j, "config", "source"), "source", cfg.rows, cfg.cols);
    cfg.dest = get_coord(require_field(j, "config", "dest"), "dest", cfg.rows, cfg.cols);

    const json& kps = require_field(j, "config", "keypoints");
    if (!kps.is_array() || kps.size() < 2) fail("keypoints: expected an array of at least 2 coordinates");
    for (std::size_t i = 0; i < kps.size(); ++i)
        cfg.keypoints.push_back(
            get_coord(kps.at(i), "keypoints[" + std::to_string(i) + "]", cfg.rows, cfg.cols));
    if (!(cfg.keypoints.front() == cfg.source))
        fail("keypoints: first keypoint must equal the source");
    if (!(cfg.keypoints.back() == cfg.dest))
        fail("keypoints: last keypoint must equal the destination");

    const json& alphas = require_field(j, "config", "alphas");
    if (!alphas.is_array() || alphas.empty()) fail("alphas: expected a non-empty array");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const double a = get_real(alphas.at(i), "alphas[" + std::to_string(i) + "]");
        if (a < 0.0) fail("alphas[" + std::to_string(i) + "]: must be non-negative");
        cfg.alphas.push_back(a);
    }

    if (j.contains("epsilon")) {
        const double eps = get_real(j.at("epsilon"), "epsilon");
        if (eps <= 0.0) fail("epsilon: must be positive");
        cfg.epsilon = eps;
    }

    if (j.contains("algorithms")) {
        const json& algs = j.at("algorithms");
        if (!algs.is_array() || algs.empty()) fail("algorithms: expected a non-empty array");
        std::set<std::string> requested;
        for (const auto& a : algs) {
            if (!a.is_string()) fail("algorithms: expected strings");
            const std::string s = a.get<std::string>();
            if (std::find(kAllAlgorithms.begin(), kAllAlgorithms.end(), s) ==
                kAllAlgorithms.end())
                fail("algorithms: unknown algorithm '" + s + "'");
            requested.insert(s);
        }
        for (const auto& a : kAllAlgorithms)
            if (requested.contains(a)) cfg.algorithms.push_back(a);
    } else {
        cfg.algorithms = kAllAlgorithms;
    }

    if (j.contains("seed")) {
        const json& seed = j.at("seed");
        if (!seed.is_number_unsigned() && !seed.is_number_integer()) fail("seed: expected an integer");
        const auto value = seed.get<long long>();
        if (value < 0) fail("seed: must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(value);
    }

    if (j.contains("output_dir")) {
        if (!j.at("output_dir").is_string()) fail("output_dir: expected a string");
        cfg.output_dir = j.at("output_dir").get<std::string>();
    }

    // Coordinates that the holes will swallow are rejected up front.
    auto check_outside_holes = [&cfg](const GridCoord& c, const std::string& where) {
        const Vec2 p = grid_position(cfg, c);
        for (std::size_t h = 0; h < cfg.holes.size(); ++h)
            if (cfg.holes[h].contains_open(p))
                fail(where + ": coordinate lies inside holes[" + std::to_string(h) + "]");
    };
    check_outside_holes(cfg.source, "source");
    check_outside_holes(cfg.dest, "dest");
    for (std::size_t i = 0; i < cfg.keypoints.size(); ++i)
        check_outside_holes(cfg.keypoints[i], "keypoints[" + std::to_string(i) + "]");

    return cfg;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string algorithm_color(const std::string& algorithm) {
    if (algorithm == "hstar") return "#2a9d2a";
    if (algorithm == "rhstar") return "#7b2fbe";
    if (algorithm == "prhstar") return "#e75480";
    return "#ff8c00";  // blk
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("config parse error: ") + e.what());
    }
    return parse_config_json(j, name);
}

ExperimentConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail("cannot open config file " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), file.stem().string());
}

PreparedExperiment prepare_experiment(const ExperimentConfig& config) {
    GridSpec spec{config.rows, config.cols, config.bounds, config.holes};
    PreparedExperiment prep;
    try {
        prep.surface = build_grid_complex(spec);
    } catch (const std::invalid_argument& e) {
        fail(std::string("surface construction failed: ") + e.what());
    }

    auto resolve = [&prep](const GridCoord& c, const std::string& where) {
        const int v = prep.surface.vertex_at(c.row, c.col);
        if (v < 0) fail(where + ": grid point was removed by a hole");
        return v;
    };
    prep.source = resolve(config.source, "source");
    prep.dest = resolve(config.dest, "dest");

    Keypoints kps;
    for (std::size_t i = 0; i < config.keypoints.size(); ++i)
        kps.waypoints.push_back(
            resolve(config.keypoints[i], "keypoints[" + std::to_string(i) + "]"));

    prep.basis = harmonic_basis(hodge_laplacian_1(prep.surface));
    prep.reference = reference_from_keypoints(prep.surface, kps);
    prep.reference_projection = accumulate_projection(prep.surface, prep.basis, prep.reference);
    prep.reference_key = quantize_projection(prep.reference_projection);
    prep.epsilon = config.epsilon.value_or(default_pruning_epsilon(prep.reference_projection));
    return prep;
}

SweepRun run_alpha_sweep(const ExperimentConfig& config, const PreparedExperiment& prep,
                         bool capture_traces) {
    SweepRun run;
    for (const auto& algorithm : config.algorithms) {
        if (algorithm == "blk") {
            const double t0 = now_seconds();
            BlkResult blk = blk_search(prep.surface, prep.basis, prep.source, prep.dest,
                                       prep.reference);
            const double elapsed = now_seconds() - t0;
            const std::string key = format_signature_key(
                quantize_projection(accumulate_projection(prep.surface, prep.basis,
                                                          blk.result.path)));
            for (const double alpha : config.alphas) {
                run.rows.push_back(ExperimentRow{config.name, algorithm, alpha,
                                                 blk.result.length, blk.result.proj_diff,
                                                 blk.result.visited_count, key, elapsed});
            }
            run.blk_records = std::move(blk.records);
            continue;
        }
        for (const double alpha : config.alphas) {
            std::vector<RolloutPop> pops;
            RolloutOptions ropt;
            std::vector<PopTrace> flat;
            HStarOptions hopt;
            if (capture_traces) {
                ropt.trace = &pops;
                hopt.trace = &flat;
            }
            const double t0 = now_seconds();
            SearchResult result;
            if (algorithm == "hstar") {
                result = hstar_search(prep.surface, prep.basis, prep.source, prep.dest,
                                      prep.reference, alpha, hopt);
            } else if (algorithm == "rhstar") {
                result = fortified_rollout(prep.surface, prep.basis, prep.source, prep.dest,
                                           prep.reference, alpha, ropt);
            } else {
                result = pruned_rollout(prep.surface, prep.basis, prep.source, prep.dest,
                                        prep.reference, alpha, prep.epsilon, ropt);
            }
            const double elapsed = now_seconds() - t0;
            const std::string key = format_signature_key(quantize_projection(
                accumulate_projection(prep.surface, prep.basis, result.path)));
            run.rows.push_back(ExperimentRow{config.name, algorithm, alpha, result.length,
                                             result.proj_diff, result.visited_count, key,
                                             elapsed});
            if (capture_traces) {
                AlgorithmTrace trace{algorithm, alpha, {}};
                if (algorithm == "hstar")
                    for (const auto& p : flat) trace.pops.push_back(RolloutPop{0, p});
                else
                    trace.pops = std::move(pops);
                run.traces.push_back(std::move(trace));
            }
        }
    }
    return run;
}

SweepRun run_alpha_sweep(const ExperimentConfig& config) {
    return run_alpha_sweep(config, prepare_experiment(config), false);
}

std::vector<ExperimentConfig> expand_hole_family(const ExperimentConfig& config) {
    if (config.holes.empty()) fail("hole family requires at least one hole");
    std::vector<ExperimentConfig> family;
    for (std::size_t k = 1; k <= config.holes.size(); ++k) {
        ExperimentConfig cfg = config;
        cfg.holes.assign(config.holes.begin(), config.holes.begin() + static_cast<long>(k));
        cfg.name = config.name + "-h" + std::to_string(k);
        family.push_back(std::move(cfg));
    }
    return family;
}

HoleScalingRun run_hole_scaling(const std::vector<ExperimentConfig>& family) {
    HoleScalingRun out;
    for (const auto& config : family) {
        const PreparedExperiment prep = prepare_experiment(config);
        const std::string ref_key = format_signature_key(prep.reference_key);

        HoleSurfaceSummary summary;
        summary.hole_count = prep.surface.hole_count();
        summary.vertex_count = prep.surface.vertex_count();

        for (const auto& algorithm : config.algorithms) {
            if (algorithm == "blk") {
                const double t0 = now_seconds();
                BlkResult blk = blk_search(prep.surface, prep.basis, prep.source, prep.dest,
                                           prep.reference);
                const double elapsed = now_seconds() - t0;
                const std::string key = format_signature_key(quantize_projection(
                    accumulate_projection(prep.surface, prep.basis, blk.result.path)));
                out.rows.push_back(ExperimentRow{config.name, algorithm, 0.0, blk.result.length,
                                                 blk.result.proj_diff, blk.result.visited_count,
                                                 key, elapsed});
                summary.blk_class_count = static_cast<long long>(blk.records.size());
                summary.blk_visits = blk.result.visited_count;
                continue;
            }
            // Best reference-class path across the alpha grid; when no alpha
            // reaches the reference class, fall back to the closest projection.
            bool have_row = false;
            ExperimentRow best{};
            bool best_homologous = false;
            for (const double alpha : config.alphas) {
                const double t0 = now_seconds();
                SearchResult result;
                if (algorithm == "hstar") {
                    result = hstar_search(prep.surface, prep.basis, prep.source, prep.dest,
                                          prep.reference, alpha);
                } else if (algorithm == "rhstar") {
                    result = fortified_rollout(prep.surface, prep.basis, prep.source, prep.dest,
                                               prep.reference, alpha);
                } else {
                    result = pruned_rollout(prep.surface, prep.basis, prep.source, prep.dest,
                                            prep.reference, alpha, prep.epsilon);
                }
                const double elapsed = now_seconds() - t0;
                const std::string key = format_signature_key(quantize_projection(
                    accumulate_projection(prep.surface, prep.basis, result.path)));
                const bool homologous = key == ref_key;
                ExperimentRow row{config.name, algorithm, alpha, result.length,
                                  result.proj_diff, result.visited_count, key, elapsed};
                bool take = false;
                if (!have_row) {
                    take = true;
                } else if (homologous != best_homologous) {
                    take = homologous;
                } else if (homologous) {
                    take = row.path_length < best.path_length;
                } else {
                    take = row.proj_diff < best.proj_diff ||
                           (row.proj_diff == best.proj_diff && row.path_length < best.path_length);
                }
                if (take) {
                    best = row;
                    best_homologous = homologous;
                }
                have_row = true;
            }
            out.rows.push_back(best);
        }
        out.summaries.push_back(summary);
    }
    return out;
}

void write_rows_csv(const std::filesystem::path& file, const std::vector<ExperimentRow>& rows) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "experiment_id,algorithm,alpha,path_length,proj_diff,nodes_visited,class_key\n";
    for (const auto& r : rows) {
        out << r.experiment_id << ',' << r.algorithm << ',' << format_double(r.alpha) << ','
            << format_double(r.path_length) << ',' << format_double(r.proj_diff) << ','
            << r.nodes_visited << ',' << r.class_key << '\n';
    }
}

std::vector<ExperimentRow> read_rows_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty rows file " + file.string());

    std::vector<ExperimentRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.push_back("");
        if (fields.size() != 7)
            throw std::runtime_error("malformed row in " + file.string() + ": " + line);
        ExperimentRow r;
        r.experiment_id = fields[0];
        r.algorithm = fields[1];
        r.alpha = std::stod(fields[2]);
        r.path_length = std::stod(fields[3]);
        r.proj_diff = std::stod(fields[4]);
        r.nodes_visited = std::stoll(fields[5]);
        r.class_key = fields[6];
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_timings_csv(const std::filesystem::path& file, const std::vector<ExperimentRow>& rows) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "experiment_id,algorithm,alpha,wall_time_seconds\n";
    for (const auto& r : rows) {
        out << r.experiment_id << ',' << r.algorithm << ',' << format_double(r.alpha) << ','
            << format_double(r.wall_time_seconds) << '\n';
    }
}

void write_class_records_csv(const std::filesystem::path& file,
                             const std::vector<ClassRecord>& records) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "discovery_rank,signature_key,shortest_length\n";
    for (const auto& r : records) {
        out << r.discovery_rank << ',' << format_signature_key(r.signature_key) << ','
            << format_double(r.shortest_length) << '\n';
    }
}

void write_hole_summaries_csv(const std::filesystem::path& file,
                              const std::vector<HoleSurfaceSummary>& summaries) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "hole_count,vertex_count,blk_class_count,blk_visits\n";
    for (const auto& s : summaries) {
        out << s.hole_count << ',' << s.vertex_count << ',' << s.blk_class_count << ','
            << s.blk_visits << '\n';
    }
}

void write_traces_csv(const std::filesystem::path& file,
                      const std::vector<AlgorithmTrace>& traces) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "algorithm,alpha,stage,pop_index,vertex,weight,proj_diff,cost\n";
    for (const auto& trace : traces) {
        for (const auto& p : trace.pops) {
            out << trace.algorithm << ',' << format_double(trace.alpha) << ',' << p.stage << ','
                << p.pop.pop_index << ',' << p.pop.vertex << ',' << format_double(p.pop.weight)
                << ',' << format_double(p.pop.proj_diff) << ',' << format_double(p.pop.cost)
                << '\n';
        }
    }
}

void write_sweep_plots(const std::filesystem::path& dir, const std::vector<ExperimentRow>& rows) {
    std::vector<std::string> algorithms;
    for (const auto& r : rows)
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);

    auto chart = [&](const std::string& file, const std::string& title, const std::string& ylabel,
                     auto accessor) {
        std::vector<ChartSeries> series;
        for (const auto& a : algorithms) {
            ChartSeries s{a, algorithm_color(a), {}};
            for (const auto& r : rows)
                if (r.algorithm == a) s.points.emplace_back(r.alpha, accessor(r));
            series.push_back(std::move(s));
        }
        write_line_chart(dir / file, title, "alpha", ylabel, series);
    };
    chart("length_vs_alpha.svg", "Path length vs alpha", "path length",
          [](const ExperimentRow& r) { return r.path_length; });
    chart("proj_diff_vs_alpha.svg", "Projection difference vs alpha", "projection difference",
          [](const ExperimentRow& r) { return r.proj_diff; });
    chart("visits_vs_alpha.svg", "Nodes visited vs alpha", "nodes visited",
          [](const ExperimentRow& r) { return static_cast<double>(r.nodes_visited); });
}

void write_holes_plots(const std::filesystem::path& dir, const std::vector<ExperimentRow>& rows) {
    // x axis: hole count parsed from the "-h<k>" suffix of experiment ids.
    auto hole_count = [](const std::string& id) {
        const auto pos = id.rfind("-h");
        if (pos == std::string::npos) return 0;
        return std::atoi(id.c_str() + pos + 2);
    };
    std::vector<std::string> algorithms;
    for (const auto& r : rows)
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);

    auto chart = [&](const std::string& file, const std::string& title, const std::string& ylabel,
                     auto accessor) {
        std::vector<ChartSeries> series;
        for (const auto& a : algorithms) {
            ChartSeries s{a, algorithm_color(a), {}};
            for (const auto& r : rows)
                if (r.algorithm == a)
                    s.points.emplace_back(static_cast<double>(hole_count(r.experiment_id)),
                                          accessor(r));
            std::sort(s.points.begin(), s.points.end());
            series.push_back(std::move(s));
        }
        write_line_chart(dir / file, title, "holes", ylabel, series);
    };
    chart("length_vs_holes.svg", "Path length vs hole count", "path length",
          [](const ExperimentRow& r) { return r.path_length; });
    chart("visits_vs_holes.svg", "Nodes visited vs hole count", "nodes visited",
          [](const ExperimentRow& r) { return static_cast<double>(r.nodes_visited); });
}

}  // namespace topoplan
