// sweep.hpp - scenario sweeps behind the command-line front end: grid
// construction, analytic and master-equation evaluation of every curve
// quantity, deterministic CSV output and the analytic-vs-numeric
// comparison report.
//
// CSV schema (header mandatory, floats with 9 significant digits, '\n'
// line endings, no trailing whitespace):
//   scenario,gt,kappa1_over_g,kappa2_over_g,quantity,value,method

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leakycav/dynamics.hpp"
#include "leakycav/entanglement.hpp"
#include "leakycav/errors.hpp"
#include "leakycav/hilbert.hpp"
#include "leakycav/scenarios.hpp"

namespace leakycav {

enum class Scenario { monogamy, swap, ckw, fig5 };
enum class SweepMethod { analytic, numeric, both };

inline std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::monogamy: return "monogamy";
        case Scenario::swap: return "swap";
        case Scenario::ckw: return "ckw";
        case Scenario::fig5: return "fig5";
    }
    return "unknown";
}

inline Scenario parse_scenario(const std::string& text) {
    if (text == "monogamy") return Scenario::monogamy;
    if (text == "swap") return Scenario::swap;
    if (text == "ckw") return Scenario::ckw;
    if (text == "fig5") return Scenario::fig5;
    throw ConfigurationError("unknown scenario '" + text +
                             "' (expected monogamy, swap, ckw or fig5)");
}

inline SweepMethod parse_method(const std::string& text) {
    if (text == "analytic") return SweepMethod::analytic;
    if (text == "numeric") return SweepMethod::numeric;
    if (text == "both") return SweepMethod::both;
    throw ConfigurationError("unknown method '" + text +
                             "' (expected analytic, numeric or both)");
}

inline AlphaMode parse_alpha_mode(const std::string& text) {
    if (text == "verbatim") return AlphaMode::verbatim;
    if (text == "limit-consistent") return AlphaMode::limit_consistent;
    throw ConfigurationError("unknown alpha mode '" + text +
                             "' (expected verbatim or limit-consistent)");
}

inline std::string to_string(AlphaMode mode) {
    return mode == AlphaMode::verbatim ? "verbatim" : "limit-consistent";
}

// Angles accept exact rational multiples of pi ("pi", "pi/4", "3pi/2",
// "2*pi") as well as plain decimals, so special points are not subject to
// decimal-input rounding.
inline double parse_angle(const std::string& text) {
    const char* p = text.c_str();
    while (std::isspace(static_cast<unsigned char>(*p))) ++p;
    double sign = 1.0;
    if (*p == '+' || *p == '-') {
        if (*p == '-') sign = -1.0;
        ++p;
    }
    double numerator = 1.0;
    bool have_number = false;
    char* end = nullptr;
    if (std::isdigit(static_cast<unsigned char>(*p)) || *p == '.') {
        numerator = std::strtod(p, &end);
        p = end;
        have_number = true;
    }
    bool have_pi = false;
    if (*p == '*') ++p;
    if (p[0] == 'p' && p[1] == 'i') {
        have_pi = true;
        p += 2;
    }
    double denominator = 1.0;
    if (*p == '/') {
        ++p;
        if (!std::isdigit(static_cast<unsigned char>(*p)) && *p != '.') {
            throw ConfigurationError("parse_angle: missing denominator in '" + text + "'");
        }
        denominator = std::strtod(p, &end);
        p = end;
        if (denominator == 0.0) {
            throw ConfigurationError("parse_angle: zero denominator in '" + text + "'");
        }
    }
    while (std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (*p != '\0' || (!have_number && !have_pi)) {
        throw ConfigurationError("parse_angle: cannot parse '" + text + "'");
    }
    const double base = have_pi ? numerator * M_PI : numerator;
    return sign * base / denominator;
}

// One sweep configuration, fully determined by command-line flags.
// For the fig5 scenario the Rabi angle is fixed at gt_min and the grid
// runs over kappa/g instead: gt_steps points log-spaced from
// kappa1_over_g to kappa2_over_g.
struct SweepConfig {
    Scenario scenario = Scenario::monogamy;
    double gt_min = 0.0;
    double gt_max = 2.0 * M_PI;
    int gt_steps = 201;
    double kappa1_over_g = 0.0;
    double kappa2_over_g = 0.0;
    SweepMethod method = SweepMethod::analytic;
    AlphaMode alpha_mode = AlphaMode::verbatim;
    double dt_times_g = 1e-3;
    std::string out_path;
};

inline void validate(const SweepConfig& cfg) {
    if (cfg.gt_steps < 2) {
        throw ConfigurationError("sweep: gt-steps must be >= 2");
    }
    if (cfg.dt_times_g <= 0.0) {
        throw ConfigurationError("sweep: dt must be positive");
    }
    if (cfg.scenario == Scenario::fig5) {
        if (cfg.kappa1_over_g <= 0.0 || cfg.kappa2_over_g <= cfg.kappa1_over_g) {
            throw ConfigurationError(
                "sweep: fig5 needs 0 < kappa1 < kappa2 as the loss-grid endpoints");
        }
        if (cfg.gt_min < 0.0) {
            throw ConfigurationError("sweep: fig5 Rabi angle (gt-min) must be >= 0");
        }
    } else {
        if (cfg.kappa1_over_g < 0.0 || cfg.kappa2_over_g < 0.0) {
            throw ConfigurationError("sweep: kappa/g must be >= 0");
        }
        if (!(cfg.gt_max > cfg.gt_min)) {
            throw ConfigurationError("sweep: gt-max must exceed gt-min");
        }
        if (cfg.gt_min < 0.0) {
            throw ConfigurationError("sweep: gt-min must be >= 0");
        }
    }
}

// Grid of sweep abscissae: Rabi angles, or kappa values (log-spaced) for
// the fig5 scenario.
inline std::vector<double> sweep_grid(const SweepConfig& cfg) {
    std::vector<double> grid(cfg.gt_steps);
    if (cfg.scenario == Scenario::fig5) {
        const double lmin = std::log10(cfg.kappa1_over_g);
        const double lmax = std::log10(cfg.kappa2_over_g);
        for (int i = 0; i < cfg.gt_steps; ++i) {
            grid[i] = std::pow(10.0, lmin + (lmax - lmin) * i / (cfg.gt_steps - 1));
        }
        grid.front() = cfg.kappa1_over_g;
        grid.back() = cfg.kappa2_over_g;
    } else {
        for (int i = 0; i < cfg.gt_steps; ++i) {
            grid[i] = cfg.gt_min + (cfg.gt_max - cfg.gt_min) * i / (cfg.gt_steps - 1);
        }
    }
    return grid;
}

inline const std::vector<std::string>& sweep_quantities(Scenario scenario) {
    static const std::vector<std::string> monogamy{"C_C1C2", "C_C2A1", "C_C1A1", "TRACE"};
    static const std::vector<std::string> swap_q{"C_C1C2", "C_A1A2"};
    static const std::vector<std::string> ckw_q{"CKW_LHS", "CKW_RHS", "TRACE"};
    static const std::vector<std::string> fig5_q{"C_C1A1"};
    switch (scenario) {
        case Scenario::monogamy: return monogamy;
        case Scenario::swap: return swap_q;
        case Scenario::ckw: return ckw_q;
        case Scenario::fig5: return fig5_q;
    }
    return monogamy;
}

namespace detail {

using QuantityMap = std::map<std::string, double>;

inline QuantityMap monogamy_quantities_from_state(const DensityMatrix& rho) {
    QuantityMap q;
    q["C_C1C2"] = concurrence(partial_trace(rho, {"C1", "C2"})).value;
    q["C_C2A1"] = concurrence(partial_trace(rho, {"C2", "A1"})).value;
    q["C_C1A1"] = concurrence(partial_trace(rho, {"C1", "A1"})).value;
    q["TRACE"] = rho.trace();
    return q;
}

inline QuantityMap ckw_quantities_from_state(const DensityMatrix& rho) {
    const CkwReport report = ckw_check(rho);
    return {{"CKW_LHS", report.lhs}, {"CKW_RHS", report.rhs}, {"TRACE", report.trace}};
}

// Analytic quantities per grid point, from the secular coefficient sets.
inline std::vector<QuantityMap> analytic_columns(const SweepConfig& cfg,
                                                 const std::vector<double>& grid) {
    std::vector<QuantityMap> columns;
    columns.reserve(grid.size());
    for (double x : grid) {
        switch (cfg.scenario) {
            case Scenario::monogamy: {
                const AlphaSet set =
                    alpha_tripartite(x, cfg.kappa1_over_g, cfg.kappa2_over_g, cfg.alpha_mode);
                const TripartiteReduced reduced = dissipative_tripartite_reduced(set);
                QuantityMap q;
                q["C_C1C2"] = concurrence(reduced.c1c2).value;
                q["C_C2A1"] = concurrence(reduced.c2a1).value;
                q["C_C1A1"] = concurrence(reduced.c1a1).value;
                q["TRACE"] = (set.alpha[0] + set.alpha[1] + set.alpha[2]).real();
                columns.push_back(std::move(q));
                break;
            }
            case Scenario::ckw: {
                const AlphaSet set =
                    alpha_tripartite(x, cfg.kappa1_over_g, cfg.kappa2_over_g, cfg.alpha_mode);
                columns.push_back(ckw_quantities_from_state(dissipative_tripartite_state(set)));
                break;
            }
            case Scenario::swap: {
                const AlphaSet set =
                    alpha_quadripartite(x, cfg.kappa1_over_g, cfg.kappa2_over_g, cfg.alpha_mode);
                const SwapReduced reduced = dissipative_swap_reduced(set);
                columns.push_back({{"C_C1C2", concurrence(reduced.c1c2).value},
                                   {"C_A1A2", concurrence(reduced.a1a2).value}});
                break;
            }
            case Scenario::fig5: {
                const AlphaSet set = alpha_tripartite(cfg.gt_min, x, x, cfg.alpha_mode);
                columns.push_back(
                    {{"C_C1A1", concurrence(dissipative_tripartite_reduced(set).c1a1).value}});
                break;
            }
        }
    }
    return columns;
}

// Master-equation quantities per grid point. The gt sweeps integrate once
// and sample at every grid angle; the fig5 loss sweep integrates once per
// kappa point.
inline std::vector<QuantityMap> numeric_columns(const SweepConfig& cfg,
                                                const std::vector<double>& grid) {
    IntegratorConfig icfg;
    icfg.dt = cfg.dt_times_g;

    std::vector<QuantityMap> columns;
    columns.reserve(grid.size());

    if (cfg.scenario == Scenario::fig5) {
        const SpaceSpec space = tripartite_space();
        const OperatorMatrix h = build_jc_hamiltonian(space, {1.0, {{"C1", "A1"}}});
        const DensityMatrix rho0 = ideal_tripartite_state(0.0).density_matrix();
        for (double kappa : grid) {
            const DissipationParams diss{{{"C1", kappa}, {"C2", kappa}}};
            auto samples =
                integrate_master_equation(rho0, h, diss, cfg.gt_min, icfg, {cfg.gt_min});
            const DensityMatrix& rho = samples.back().second;
            columns.push_back(
                {{"C_C1A1", concurrence(partial_trace(rho, {"C1", "A1"})).value}});
        }
        return columns;
    }

    const bool is_swap = cfg.scenario == Scenario::swap;
    const SpaceSpec space = is_swap ? quadripartite_space() : tripartite_space();
    CouplingParams coupling{1.0, {{"C1", "A1"}}};
    if (is_swap) coupling.pairs.push_back({"C2", "A2"});
    const OperatorMatrix h = build_jc_hamiltonian(space, coupling);
    const DissipationParams diss{
        {{"C1", cfg.kappa1_over_g}, {"C2", cfg.kappa2_over_g}}};
    const DensityMatrix rho0 = (is_swap ? ideal_quadripartite_state(0.0)
                                        : ideal_tripartite_state(0.0))
                                   .density_matrix();
    auto samples = integrate_master_equation(rho0, h, diss, grid.back(), icfg, grid);
    for (const auto& [t, rho] : samples) {
        switch (cfg.scenario) {
            case Scenario::monogamy:
                columns.push_back(monogamy_quantities_from_state(rho));
                break;
            case Scenario::ckw:
                columns.push_back(ckw_quantities_from_state(rho));
                break;
            case Scenario::swap:
                columns.push_back(
                    {{"C_C1C2", concurrence(partial_trace(rho, {"C1", "C2"})).value},
                     {"C_A1A2", concurrence(partial_trace(rho, {"A1", "A2"})).value}});
                break;
            case Scenario::fig5:
                break;  // handled above
        }
    }
    return columns;
}

}  // namespace detail

// Every scenario row of the configured sweep, ordered grid-point-major,
// then by quantity, then analytic before numeric.
inline std::vector<ScenarioRow> compute_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<double> grid = sweep_grid(cfg);
    const std::vector<std::string>& quantities = sweep_quantities(cfg.scenario);

    const bool analytic =
        cfg.method == SweepMethod::analytic || cfg.method == SweepMethod::both;
    const bool numeric = cfg.method == SweepMethod::numeric || cfg.method == SweepMethod::both;

    std::vector<detail::QuantityMap> analytic_cols, numeric_cols;
    if (analytic) analytic_cols = detail::analytic_columns(cfg, grid);
    if (numeric) numeric_cols = detail::numeric_columns(cfg, grid);

    std::vector<ScenarioRow> rows;
    rows.reserve(grid.size() * quantities.size() * (analytic && numeric ? 2 : 1));
    const std::string scenario_name = to_string(cfg.scenario);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double gt = cfg.scenario == Scenario::fig5 ? cfg.gt_min : grid[i];
        const double k1 = cfg.scenario == Scenario::fig5 ? grid[i] : cfg.kappa1_over_g;
        const double k2 = cfg.scenario == Scenario::fig5 ? grid[i] : cfg.kappa2_over_g;
        for (const std::string& quantity : quantities) {
            if (analytic) {
                rows.push_back({scenario_name, gt, k1, k2, quantity,
                                analytic_cols[i].at(quantity), Method::analytic});
            }
            if (numeric) {
                rows.push_back({scenario_name, gt, k1, k2, quantity,
                                numeric_cols[i].at(quantity), Method::numeric});
            }
        }
    }
    return rows;
}

// Fixed-width-free float rendering: 9 significant digits, shortest form.
inline std::string format_float(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", v);
    return buffer;
}

inline std::string render_csv(const std::vector<ScenarioRow>& rows) {
    std::string out = "scenario,gt,kappa1_over_g,kappa2_over_g,quantity,value,method\n";
    for (const ScenarioRow& row : rows) {
        out += row.scenario;
        out += ',';
        out += format_float(row.gt);
        out += ',';
        out += format_float(row.kappa1_over_g);
        out += ',';
        out += format_float(row.kappa2_over_g);
        out += ',';
        out += row.quantity;
        out += ',';
        out += format_float(row.value);
        out += ',';
        out += to_string(row.method);
        out += '\n';
    }
    return out;
}

inline void write_csv(const std::vector<ScenarioRow>& rows, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigurationError("cannot open output file '" + path + "'");
    }
    file << render_csv(rows);
    if (!file.good()) {
        throw ConfigurationError("failed while writing '" + path + "'");
    }
}

// Convenience wrapper: compute and write in one call.
inline std::vector<ScenarioRow> run_sweep(const SweepConfig& cfg) {
    std::vector<ScenarioRow> rows = compute_sweep(cfg);
    if (!cfg.out_path.empty()) {
        write_csv(rows, cfg.out_path);
    }
    return rows;
}

struct QuantityDeviation {
    std::string quantity;
    double max_abs_dev = 0.0;
    double gt_at_max = 0.0;
    double kappa_at_max = 0.0;
};

struct CompareReport {
    double tolerance = 0.0;
    std::vector<QuantityDeviation> deviations;
    bool within_tolerance = true;
};

// Max |analytic - numeric| per quantity over the grid. TRACE is reported
// by sweeps as a diagnostic but never compared: the secular closed form is
// trace-deficient by construction while the master equation preserves
// trace, so their difference is structural rather than an error.
inline CompareReport run_compare(const SweepConfig& cfg, double tolerance) {
    if (cfg.method != SweepMethod::both) {
        throw ConfigurationError("compare: method must be 'both'");
    }
    if (tolerance <= 0.0) {
        throw ConfigurationError("compare: tolerance must be positive");
    }
    const std::vector<ScenarioRow> rows = run_sweep(cfg);

    std::map<std::string, QuantityDeviation> per_quantity;
    std::map<std::pair<std::string, double>, double> analytic_values;
    for (const ScenarioRow& row : rows) {
        if (row.quantity == "TRACE") continue;
        const double x = cfg.scenario == Scenario::fig5 ? row.kappa1_over_g : row.gt;
        if (row.method == Method::analytic) {
            analytic_values[{row.quantity, x}] = row.value;
        } else {
            const double dev = std::abs(row.value - analytic_values.at({row.quantity, x}));
            QuantityDeviation& entry = per_quantity[row.quantity];
            entry.quantity = row.quantity;
            if (dev >= entry.max_abs_dev) {
                entry.max_abs_dev = dev;
                entry.gt_at_max = row.gt;
                entry.kappa_at_max = row.kappa1_over_g;
            }
        }
    }

    CompareReport report;
    report.tolerance = tolerance;
    for (const std::string& quantity : sweep_quantities(cfg.scenario)) {
        auto found = per_quantity.find(quantity);
        if (found == per_quantity.end()) continue;
        report.deviations.push_back(found->second);
        if (found->second.max_abs_dev > tolerance) {
            report.within_tolerance = false;
        }
    }
    return report;
}

inline std::string render_compare_report(const CompareReport& report) {
    std::string out;
    for (const QuantityDeviation& dev : report.deviations) {
        out += dev.quantity + ": max |analytic - numeric| = " + format_float(dev.max_abs_dev) +
               " at gt = " + format_float(dev.gt_at_max) + ", kappa1/g = " +
               format_float(dev.kappa_at_max) +
               (dev.max_abs_dev > report.tolerance ? "  [exceeds tolerance]" : "") + "\n";
    }
    out += "tolerance " + format_float(report.tolerance) + ": " +
           (report.within_tolerance ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace leakycav
