// leakycav command-line front end.
//
// Subcommands:
//   sweep    compute scenario curves and write them as CSV
//   compare  run a sweep with method=both and report the worst
//            analytic-vs-numeric deviation per quantity
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical
// failure inside the integrator, 3 comparison tolerance breach.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "leakycav/leakycav.hpp"

namespace {

struct CliOptions {
    std::string scenario = "monogamy";
    std::string gt_min = "0";
    std::string gt_max = "2pi";
    int gt_steps = 201;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    std::string method;
    std::string alpha_mode = "verbatim";
    double dt = 1e-3;
    double tolerance = 1e-6;
    std::string out;
};

void add_common_flags(CLI::App& cmd, CliOptions& opt) {
    cmd.add_option("--scenario", opt.scenario,
                   "Scenario: monogamy, swap, ckw or fig5")
        ->capture_default_str();
    cmd.add_option("--gt-min", opt.gt_min,
                   "Smallest Rabi angle; accepts pi literals such as pi/4. "
                   "For fig5 this is the fixed Rabi angle of the loss sweep")
        ->capture_default_str();
    cmd.add_option("--gt-max", opt.gt_max,
                   "Largest Rabi angle (ignored by fig5)")
        ->capture_default_str();
    cmd.add_option("--gt-steps", opt.gt_steps, "Number of grid points (>= 2)")
        ->capture_default_str();
    cmd.add_option("--kappa1", opt.kappa1,
                   "kappa_1/g for cavity C1. For fig5: lower end of the "
                   "log-spaced kappa/g grid")
        ->capture_default_str();
    cmd.add_option("--kappa2", opt.kappa2,
                   "kappa_2/g for cavity C2. For fig5: upper end of the "
                   "log-spaced kappa/g grid")
        ->capture_default_str();
    cmd.add_option("--alpha-mode", opt.alpha_mode,
                   "Secular coefficient convention: verbatim or limit-consistent")
        ->capture_default_str();
    cmd.add_option("--dt", opt.dt, "Integrator step dt*g (numeric method)")
        ->capture_default_str();
}

leakycav::SweepConfig to_config(const CliOptions& opt, const std::string& default_method) {
    leakycav::SweepConfig cfg;
    cfg.scenario = leakycav::parse_scenario(opt.scenario);
    cfg.gt_min = leakycav::parse_angle(opt.gt_min);
    cfg.gt_max = leakycav::parse_angle(opt.gt_max);
    cfg.gt_steps = opt.gt_steps;
    cfg.kappa1_over_g = opt.kappa1;
    cfg.kappa2_over_g = opt.kappa2;
    cfg.method = leakycav::parse_method(opt.method.empty() ? default_method : opt.method);
    cfg.alpha_mode = leakycav::parse_alpha_mode(opt.alpha_mode);
    cfg.dt_times_g = opt.dt;
    cfg.out_path = opt.out;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement curves for two leaky microwave cavities probed by "
                 "one or two two-level atoms"};
    app.require_subcommand(1);

    CliOptions sweep_opt;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Compute a scenario curve as CSV");
    add_common_flags(*sweep_cmd, sweep_opt);
    sweep_cmd->add_option("--method", sweep_opt.method,
                          "Evaluation method: analytic, numeric or both (default analytic)");
    sweep_cmd->add_option("--out", sweep_opt.out, "Output CSV path")->required();

    CliOptions compare_opt;
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "Report the worst analytic-vs-numeric deviation per quantity");
    add_common_flags(*compare_cmd, compare_opt);
    compare_cmd->add_option("--method", compare_opt.method, "Must be 'both' (the default)");
    compare_cmd->add_option("--tolerance", compare_opt.tolerance,
                            "Largest acceptable |analytic - numeric|")
        ->required();
    compare_cmd->add_option("--out", compare_opt.out, "Optional CSV path for the sweep rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep_cmd->parsed()) {
            const leakycav::SweepConfig cfg = to_config(sweep_opt, "analytic");
            const auto rows = leakycav::run_sweep(cfg);
            std::cout << "wrote " << rows.size() << " rows to " << cfg.out_path << "\n";
            return 0;
        }
        const leakycav::SweepConfig cfg = to_config(compare_opt, "both");
        const leakycav::CompareReport report =
            leakycav::run_compare(cfg, compare_opt.tolerance);
        std::cout << leakycav::render_compare_report(report);
        return report.within_tolerance ? 0 : 3;
    } catch (const leakycav::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const leakycav::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
