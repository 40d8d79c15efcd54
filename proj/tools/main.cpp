#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "topoplan/errors.hpp"
#include "topoplan/experiment.hpp"
#include "topoplan/json_io.hpp"
#include "topoplan/oracle.hpp"

namespace fs = std::filesystem;
using namespace topoplan;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::string algorithms;
    long long seed = -1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_config) {
    if (need_config)
        cmd->add_option("--config", opts.config_path, "experiment config (JSON)")->required();
    cmd->add_option("--out", opts.out_dir, "output directory (overrides the config)");
    cmd->add_option("--algorithms", opts.algorithms,
                    "comma separated subset of hstar,rhstar,prhstar,blk");
    cmd->add_option("--seed", opts.seed, "seed override");
}

ExperimentConfig load_with_overrides(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts.config_path);
    if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
    if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
    if (!opts.algorithms.empty()) {
        std::vector<std::string> requested;
        std::stringstream ss(opts.algorithms);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            if (std::find(kAllAlgorithms.begin(), kAllAlgorithms.end(), item) ==
                kAllAlgorithms.end())
                throw config_error("--algorithms: unknown algorithm '" + item + "'");
            requested.push_back(item);
        }
        if (requested.empty()) throw config_error("--algorithms: empty selection");
        cfg.algorithms.clear();
        for (const auto& a : kAllAlgorithms)
            if (std::find(requested.begin(), requested.end(), a) != requested.end())
                cfg.algorithms.push_back(a);
    }
    return cfg;
}

void write_json_file(const fs::path& file, const nlohmann::json& j) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << j.dump() << '\n';
}

int run_sweep(const CommonOpts& opts, bool trace) {
    ExperimentConfig cfg = load_with_overrides(opts);
    const fs::path dir = cfg.output_dir;
    fs::create_directories(dir);

    PreparedExperiment prep = prepare_experiment(cfg);
    SweepRun run = run_alpha_sweep(cfg, prep, trace);

    write_json_file(dir / "surface.json", surface_to_json(prep.surface));
    write_json_file(dir / "basis.json", basis_to_json(prep.basis));
    write_rows_csv(dir / "rows.csv", run.rows);
    write_timings_csv(dir / "timings.csv", run.rows);
    if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), "blk") != cfg.algorithms.end())
        write_class_records_csv(dir / "classes.csv", run.blk_records);
    if (trace) write_traces_csv(dir / "traces.csv", run.traces);
    write_sweep_plots(dir, run.rows);

    std::cout << "sweep " << cfg.name << ": " << run.rows.size() << " rows, surface "
              << prep.surface.vertex_count() << " vertices, " << prep.basis.dimension()
              << " holes -> " << dir.string() << "\n";
    return 0;
}

int run_holes(const CommonOpts& opts) {
    ExperimentConfig cfg = load_with_overrides(opts);
    const fs::path dir = cfg.output_dir;
    fs::create_directories(dir);

    const auto family = expand_hole_family(cfg);
    HoleScalingRun run = run_hole_scaling(family);

    write_rows_csv(dir / "rows.csv", run.rows);
    write_timings_csv(dir / "timings.csv", run.rows);
    write_hole_summaries_csv(dir / "holes_summary.csv", run.summaries);
    write_holes_plots(dir, run.rows);

    std::cout << "holes " << cfg.name << ": " << family.size() << " surfaces, "
              << run.rows.size() << " rows -> " << dir.string() << "\n";
    return 0;
}

int run_oracle(const CommonOpts& opts) {
    ExperimentConfig cfg = load_with_overrides(opts);
    const fs::path dir = cfg.output_dir;
    fs::create_directories(dir);

    PreparedExperiment prep = prepare_experiment(cfg);
    ClassTable table =
        enumerate_classes(prep.surface, prep.basis, prep.source, prep.dest);

    std::ofstream out(dir / "oracle_classes.csv");
    if (!out) throw std::runtime_error("cannot write oracle_classes.csv");
    out << "class_key,shortest_length,member_count\n";
    for (const auto& [key, info] : table.classes) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", info.shortest_length);
        out << format_signature_key(key) << ',' << buf << ',' << info.member_count << '\n';
    }
    std::cout << "oracle " << cfg.name << ": " << table.classes.size() << " classes -> "
              << (dir / "oracle_classes.csv").string() << "\n";
    return 0;
}

int run_plot(const CommonOpts& opts) {
    const fs::path dir = opts.out_dir.empty() ? fs::path(".") : fs::path(opts.out_dir);
    const auto rows = read_rows_csv(dir / "rows.csv");
    if (rows.empty()) throw std::runtime_error("rows.csv holds no rows");
    bool single_experiment = true;
    for (const auto& r : rows)
        if (r.experiment_id != rows.front().experiment_id) single_experiment = false;
    if (single_experiment)
        write_sweep_plots(dir, rows);
    else
        write_holes_plots(dir, rows);
    std::cout << "plot: refreshed charts in " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortest-path planning under soft homology constraints"};
    app.require_subcommand(1);

    CommonOpts sweep_opts, holes_opts, oracle_opts, plot_opts;
    bool trace = false;

    CLI::App* sweep = app.add_subcommand("sweep", "alpha sweep over one surface");
    add_common(sweep, sweep_opts, true);
    sweep->add_flag("--trace", trace, "also write per-pop trace records");

    CLI::App* holes = app.add_subcommand("holes", "cumulative-hole scaling experiment");
    add_common(holes, holes_opts, true);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive class enumeration (tiny surfaces)");
    add_common(oracle, oracle_opts, true);

    CLI::App* plot = app.add_subcommand("plot", "regenerate charts from rows.csv");
    add_common(plot, plot_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (sweep->parsed()) return run_sweep(sweep_opts, trace);
        if (holes->parsed()) return run_holes(holes_opts);
        if (oracle->parsed()) return run_oracle(oracle_opts);
        return run_plot(plot_opts);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
