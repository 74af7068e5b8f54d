#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "apriori/config.hpp"
#include "apriori/estimates.hpp"
#include "apriori/snapshot.hpp"
#include "apriori/solver.hpp"
#include "apriori/svg.hpp"
#include "apriori/transforms.hpp"

namespace fs = std::filesystem;
using namespace apriori;

namespace {

struct Options {
    std::string config;
    std::string out_override;
    std::string series_override;
    bool strict = false;
};

fs::path out_dir(const ExperimentConfig& cfg, const Options& opt) {
    fs::path dir = opt.out_override.empty() ? cfg.out_dir : opt.out_override;
    fs::create_directories(dir);
    return dir;
}

fs::path series_path(const ExperimentConfig& cfg, const Options& opt) {
    if (!opt.series_override.empty()) return opt.series_override;
    return fs::path(opt.out_override.empty() ? cfg.out_dir : opt.out_override) / "series.csv";
}

int cmd_simulate(const ExperimentConfig& cfg, const Options& opt) {
    if (!cfg.has_simulation) {
        std::cerr << "simulate: config has no [simulation] section\n";
        return 2;
    }
    fs::path dir = out_dir(cfg, opt);
    RunResult result = run(cfg.sim);
    result.series.write_csv((dir / "series.csv").string());
    save_snapshot(result.final_state.front(), (dir / "final_state.snap").string());
    std::cout << "simulate: " << result.series.size() << " samples -> " << (dir / "series.csv").string()
              << "\n";
    if (cfg.emit_svg) {
        std::vector<SvgSeries> curves;
        std::vector<double> t = result.series.times();
        for (const auto& col : result.series.columns) {
            if (col == "t") continue;
            curves.push_back({col, t, result.series.column(col)});
        }
        write_line_chart((dir / "series.svg").string(), "tracked norms", "t", "norm", curves);
    }
    if (result.tail_warning)
        std::cout << "warning: " << result.abort_reason << "\n";
    else if (result.aborted) {
        std::cerr << "simulate aborted: " << result.abort_reason << "\n";
        return 1;
    }
    return result.tail_warning && opt.strict ? 1 : 0;
}

int cmd_calibrate(const ExperimentConfig& cfg, const Options& opt) {
    if (!cfg.has_calibration) {
        std::cerr << "calibrate: config has no [calibration] section\n";
        return 2;
    }
    fs::path dir = out_dir(cfg, opt);
    Grid grid(cfg.calib_kind == ConstantKind::calderon_zygmund ? 2
              : cfg.has_simulation                             ? cfg.sim.dims()
                                                               : 3,
              cfg.calib_n);
    CalibrationReport report =
        calibrate(cfg.calib_kind, cfg.calib_trials, cfg.calib_seed, grid, cfg.calib_k, cfg.calib_p);
    std::string json = report.to_json();
    if (cfg.emit_json) {
        std::ofstream f(dir / ("calibration_" + to_string(report.kind) + ".json"));
        f << json << "\n";
    }
    std::cout << json << "\n";
    return 0;
}

int cmd_check(const ExperimentConfig& cfg, const Options& opt) {
    if (!cfg.has_check) {
        std::cerr << "check: config has no [check] section\n";
        return 2;
    }
    fs::path dir = out_dir(cfg, opt);
    NormSeries series = NormSeries::read_csv(series_path(cfg, opt).string());
    MarginSeries main = check_main(series, cfg.check, cfg.rtol);
    MarginSeries denom = check_denominator(series, cfg.check, cfg.rtol);
    main.write_csv((dir / "margins_main.csv").string());
    denom.write_csv((dir / "margins_denominator.csv").string());

    auto summarize = [](const char* label, const MarginSeries& m) {
        std::cout << label << ": gamma = " << format_g17(m.gamma_used)
                  << ", C0 = " << format_g17(m.C0_used) << ", min margin = " << format_g17(m.min_margin);
        if (m.first_violation) std::cout << ", first violation at t = " << format_g17(*m.first_violation);
        if (m.t_star) std::cout << ", t* = " << format_g17(*m.t_star);
        std::cout << (m.all_ok() ? " [ok]" : " [FAIL]") << "\n";
    };
    std::cout << "theorem " << theorem_name(cfg.check.theorem) << "\n";
    summarize("main", main);
    summarize("denominator", denom);

    if (cfg.emit_svg) {
        write_line_chart((dir / "margins_main.svg").string(),
                         "theorem " + theorem_name(cfg.check.theorem), "t", "norm",
                         {{"lhs", main.t, main.lhs}, {"rhs", main.t, main.rhs}});
        write_line_chart((dir / "margin_curve.svg").string(),
                         "margin, theorem " + theorem_name(cfg.check.theorem), "t", "margin",
                         {{"margin", main.t, main.margin}});
    }
    bool ok = main.all_ok() && denom.all_ok();
    return opt.strict && !ok ? 1 : 0;
}

int cmd_sweep(const ExperimentConfig& cfg, const Options& opt) {
    if (!cfg.has_check || cfg.gamma_grid.empty()) {
        std::cerr << "sweep: config needs a [check] section with gamma_grid\n";
        return 2;
    }
    fs::path dir = out_dir(cfg, opt);
    NormSeries series = NormSeries::read_csv(series_path(cfg, opt).string());
    SweepTable table = gamma_sweep(series, cfg.check, cfg.gamma_grid);
    table.write_csv((dir / "sweep.csv").string());
    std::cout << "sweep: " << table.gammas.size() << " gamma values, tightest at t_end: gamma = "
              << format_g17(table.tightest_gamma.back())
              << (table.improves_on_threshold ? " (improves on the threshold value)\n"
                                              : " (no improvement over the threshold value)\n");
    if (cfg.emit_svg) {
        std::vector<SvgSeries> curves;
        for (std::size_t g = 0; g < table.gammas.size(); ++g)
            curves.push_back({"gamma=" + format_g17(table.gammas[g]), table.t, table.rhs[g]});
        write_line_chart((dir / "sweep.svg").string(), "gamma sweep", "t", "rhs", curves);
    }
    return 0;
}

int cmd_plot(const ExperimentConfig& cfg, const Options& opt) {
    fs::path dir = out_dir(cfg, opt);
    NormSeries series = NormSeries::read_csv(series_path(cfg, opt).string());
    std::vector<double> t = series.times();
    std::vector<SvgSeries> curves;
    for (const auto& col : series.columns) {
        if (col == "t") continue;
        curves.push_back({col, t, series.column(col)});
    }
    write_line_chart((dir / "series.svg").string(), "tracked norms", "t", "norm", curves);
    std::cout << "plot: wrote " << (dir / "series.svg").string() << "\n";

    if (cfg.has_check) {
        MarginSeries main = check_main(series, cfg.check, cfg.rtol);
        write_line_chart((dir / "margins_main.svg").string(),
                         "theorem " + theorem_name(cfg.check.theorem), "t", "norm",
                         {{"lhs", main.t, main.lhs}, {"rhs", main.t, main.rhs}});
        write_line_chart((dir / "margin_curve.svg").string(),
                         "margin, theorem " + theorem_name(cfg.check.theorem), "t", "margin",
                         {{"margin", main.t, main.margin}});
        std::cout << "plot: wrote " << (dir / "margins_main.svg").string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic-box laboratory for a priori norm estimates"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config, "experiment config path")->required();
    app.add_option("--out", opt.out_override, "output directory override");
    app.add_option("--series", opt.series_override, "input series CSV (check/sweep/plot)");
    app.add_flag("--strict", opt.strict, "nonzero exit on any failed check");

    auto* simulate = app.add_subcommand("simulate", "integrate the configured system");
    auto* calibrate_cmd = app.add_subcommand("calibrate", "measure an inequality constant");
    auto* check = app.add_subcommand("check", "evaluate estimate margins on a series");
    auto* sweep = app.add_subcommand("sweep", "scan gamma over a grid");
    auto* plot = app.add_subcommand("plot", "emit SVG charts");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg = parse_config(opt.config);
        if (simulate->parsed()) return cmd_simulate(cfg, opt);
        if (calibrate_cmd->parsed()) return cmd_calibrate(cfg, opt);
        if (check->parsed()) return cmd_check(cfg, opt);
        if (sweep->parsed()) return cmd_sweep(cfg, opt);
        if (plot->parsed()) return cmd_plot(cfg, opt);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
