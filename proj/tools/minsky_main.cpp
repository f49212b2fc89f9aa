#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minsky/config.hpp"
#include "minsky/csv.hpp"
#include "minsky/equilibrium.hpp"
#include "minsky/keen.hpp"
#include "minsky/svg.hpp"

namespace {

using namespace minsky;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCrisis = 2;

struct ScenarioSource {
    std::string config_path;
    std::string scenario_name;

    Scenario resolve() const {
        if (!config_path.empty() && !scenario_name.empty()) {
            throw ConfigError("give either --config or --scenario, not both");
        }
        if (!config_path.empty()) return load_scenario_file(config_path);
        if (!scenario_name.empty()) return find_scenario(scenario_name);
        throw ConfigError("a scenario is required: --config FILE or --scenario NAME");
    }
};

void add_scenario_options(CLI::App* cmd, ScenarioSource& src) {
    cmd->add_option("--config", src.config_path, "scenario configuration file (JSON)");
    cmd->add_option("--scenario", src.scenario_name, "built-in scenario name (see catalog)");
}

std::string verdict_name(Attractivity verdict) {
    switch (verdict) {
        case Attractivity::Attractive: return "attractive";
        case Attractivity::Repulsive: return "repulsive";
        case Attractivity::Marginal: return "marginal";
    }
    return "unknown";
}

int cmd_simulate(const ScenarioSource& src, const std::string& out_path,
                 const std::string& svg_path) {
    const Scenario scenario = src.resolve();
    const Trajectory traj = run_scenario(scenario);
    write_trajectory_csv(out_path, traj);
    if (!svg_path.empty()) svg_trajectory_plot(svg_path, traj, scenario.name);

    std::cout << "scenario: " << scenario.name << "\n"
              << "termination: " << to_string(traj.termination.kind) << " at t = "
              << format_number(traj.termination.time) << "\n"
              << "samples: " << traj.size() << "\n"
              << "employment min/mean/max: " << format_number(traj.summary.min_employment)
              << " / " << format_number(traj.summary.mean_employment) << " / "
              << format_number(traj.summary.max_employment) << "\n"
              << "wage share min/mean/max: " << format_number(traj.summary.min_wage_share)
              << " / " << format_number(traj.summary.mean_wage_share) << " / "
              << format_number(traj.summary.max_wage_share) << "\n"
              << "mean growth: " << format_number(traj.summary.mean_growth) << "\n";

    switch (traj.termination.kind) {
        case TerminationKind::Completed: return kExitOk;
        case TerminationKind::Crisis: return kExitCrisis;
        default:
            std::cerr << "error: run ended in " << to_string(traj.termination.kind)
                      << " at t = " << format_number(traj.termination.time) << "\n";
            return kExitError;
    }
}

int cmd_fixed_point(const ScenarioSource& src, double alpha_override, bool has_alpha,
                    const std::string& format) {
    const Scenario scenario = src.resolve();
    double alpha;
    if (has_alpha) {
        alpha = alpha_override;
    } else if (const auto* c = std::get_if<ConstantDriver>(&scenario.driver)) {
        alpha = c->alpha;
    } else {
        throw ConfigError(
            "driver is not constant; pass --alpha to choose the growth rate");
    }

    const FixedPointReport rep = analyze_fixed_point(scenario.params, alpha);
    if (format == "csv") {
        std::cout << "lambda_bar,d_bar,omega_bar,pi_bar,g_bar,p3,p2,p1,p0,"
                     "routh_hurwitz_attractive,eigen_attractive,verdict\n"
                  << format_number(rep.point.lambda_bar) << ','
                  << format_number(rep.point.d_bar) << ','
                  << format_number(rep.point.omega_bar) << ','
                  << format_number(rep.point.pi_bar) << ','
                  << format_number(rep.point.g_bar) << ','
                  << format_number(rep.char_poly.p3) << ','
                  << format_number(rep.char_poly.p2) << ','
                  << format_number(rep.char_poly.p1) << ','
                  << format_number(rep.char_poly.p0) << ','
                  << (rep.routh_hurwitz_attractive ? 1 : 0) << ','
                  << (rep.eigen_attractive ? 1 : 0) << ',' << verdict_name(rep.verdict)
                  << "\n";
        return kExitOk;
    }

    std::cout << "fixed point (alpha = " << format_number(alpha) << ")\n"
              << "  lambda_bar = " << format_number(rep.point.lambda_bar) << "\n"
              << "  d_bar      = " << format_number(rep.point.d_bar) << "\n"
              << "  omega_bar  = " << format_number(rep.point.omega_bar) << "\n"
              << "  pi_bar     = " << format_number(rep.point.pi_bar) << "\n"
              << "  g_bar      = " << format_number(rep.point.g_bar) << "\n"
              << "characteristic polynomial x^4 + p3 x^3 + p2 x^2 + p1 x + p0\n"
              << "  p3 = " << format_number(rep.char_poly.p3)
              << "  p2 = " << format_number(rep.char_poly.p2)
              << "  p1 = " << format_number(rep.char_poly.p1)
              << "  p0 = " << format_number(rep.char_poly.p0) << "\n"
              << "eigenvalues:\n";
    for (const auto& ev : rep.eigenvalues) {
        std::cout << "  " << format_number(ev.real()) << (ev.imag() < 0 ? " - " : " + ")
                  << format_number(std::abs(ev.imag())) << "i\n";
    }
    std::cout << "verdict: " << verdict_name(rep.verdict)
              << " (routh-hurwitz " << (rep.routh_hurwitz_attractive ? "yes" : "no")
              << ", eigenvalues " << (rep.eigen_attractive ? "yes" : "no") << ")\n";
    return kExitOk;
}

int cmd_montecarlo(const ScenarioSource& src, std::size_t runs, std::uint64_t seed,
                   const std::string& out_path, const std::string& svg_path) {
    const Scenario scenario = src.resolve();
    const MonteCarloSummary mc = monte_carlo(scenario, runs, seed);
    write_ensemble_csv(out_path, mc);
    if (!svg_path.empty()) {
        svg_ensemble_plot(svg_path, mc,
                          scenario.name + " (n = " + std::to_string(runs) + ")");
    }
    std::cout << "scenario: " << scenario.name << "\n"
              << "runs: " << mc.n_runs << ", crisis runs: " << mc.crisis_count << "\n";
    return kExitOk;
}

std::vector<SweepAxis> parse_axes(const std::vector<std::string>& specs) {
    std::vector<SweepAxis> axes;
    for (const auto& spec : specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
            throw ConfigError("--axis '" + spec + "': expected name=v1,v2,...");
        }
        SweepAxis axis;
        axis.param = spec.substr(0, eq);
        std::istringstream values(spec.substr(eq + 1));
        std::string item;
        while (std::getline(values, item, ',')) {
            try {
                axis.values.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ConfigError("--axis '" + spec + "': '" + item + "' is not a number");
            }
        }
        axes.push_back(std::move(axis));
    }
    return axes;
}

int cmd_sweep(const ScenarioSource& src, const std::vector<std::string>& axis_specs,
              const std::string& out_path, std::size_t cap) {
    const Scenario scenario = src.resolve();
    const std::vector<SweepAxis> axes = parse_axes(axis_specs);
    if (axes.size() > 3) throw ConfigError("--axis: at most 3 axes");
    const SweepResult result = sweep(scenario, axes, cap);
    write_sweep_csv(out_path, result);
    std::cout << "cells: " << result.cells.size() << "\n";
    return kExitOk;
}

int cmd_catalog(const std::string& format) {
    if (format == "csv") {
        std::cout << "name,theta1,theta2,eta1,eta2,d0,r,driver\n";
    }
    for (const auto& s : catalog()) {
        std::string driver = std::visit(
            [](const auto& d) -> std::string {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, ConstantDriver>) {
                    return "constant alpha=" + format_number(d.alpha);
                } else if constexpr (std::is_same_v<T, StepDriver>) {
                    return "step " + format_number(d.alpha_before) + "->" +
                           format_number(d.alpha_after) + " at t=" +
                           format_number(d.t_switch);
                } else if constexpr (std::is_same_v<T, RampDriver>) {
                    return "ramp " + format_number(d.alpha_before) + "->" +
                           format_number(d.alpha_after) + " over [" +
                           format_number(d.t_start) + ", " + format_number(d.t_end) + "]";
                } else {
                    std::string out = "stochastic mean=" + format_number(d.mean) +
                                      " sd=" + format_number(d.std_dev) +
                                      " seed=" + std::to_string(d.seed);
                    if (d.t_switch != std::numeric_limits<double>::infinity()) {
                        out += " mean_after=" + format_number(d.mean_after) +
                               " at t=" + format_number(d.t_switch);
                    }
                    return out;
                }
            },
            s.driver);
        if (format == "csv") {
            std::cout << s.name << ',' << format_number(s.params.theta1) << ','
                      << format_number(s.params.theta2) << ','
                      << format_number(s.params.eta1) << ','
                      << format_number(s.params.eta2) << ',' << format_number(s.params.d0)
                      << ',' << format_number(s.params.r) << ',' << driver << "\n";
        } else {
            std::printf("%-20s theta=(%.2f, %.2f) eta=(%g, %g) d0=%g r=%g  %s\n",
                        s.name.c_str(), s.params.theta1, s.params.theta2, s.params.eta1,
                        s.params.eta2, s.params.d0, s.params.r, driver.c_str());
        }
    }
    return kExitOk;
}

struct KeenOptions {
    ModelParams params{};
    InvestmentFunction kappa{};
};

void add_keen_options(CLI::App* cmd, KeenOptions& opt) {
    cmd->add_option("--kappa0", opt.kappa.kappa0, "investment floor");
    cmd->add_option("--kappa1", opt.kappa.kappa1, "investment amplitude");
    cmd->add_option("--kappa2", opt.kappa.kappa2, "profit-share sensitivity");
    cmd->add_option("--kappa3", opt.kappa.kappa3, "debt sensitivity (0 = original model)");
    cmd->add_option("--r", opt.params.r, "interest rate");
    cmd->add_option("--delta", opt.params.delta, "depreciation rate");
    cmd->add_option("--nu", opt.params.nu, "capital-to-output ratio");
}

int keen_fixed_point_cmd(const KeenOptions& opt, double alpha, const std::string& format) {
    const KeenFixedPoint fp = keen_fixed_point(opt.params, opt.kappa, alpha);
    if (format == "csv") {
        std::cout << "lambda_bar,d_bar,omega_bar,pi_bar\n"
                  << format_number(fp.lambda_bar) << ',' << format_number(fp.d_bar) << ','
                  << format_number(fp.omega_bar) << ',' << format_number(fp.pi_bar) << "\n";
    } else {
        std::cout << "keen fixed point (alpha = " << format_number(alpha)
                  << ", kappa3 = " << format_number(opt.kappa.kappa3) << ")\n"
                  << "  lambda_bar = " << format_number(fp.lambda_bar) << "\n"
                  << "  d_bar      = " << format_number(fp.d_bar) << "\n"
                  << "  omega_bar  = " << format_number(fp.omega_bar) << "\n"
                  << "  pi_bar     = " << format_number(fp.pi_bar) << "\n";
    }
    return kExitOk;
}

int keen_divergence_cmd(const KeenOptions& opt, const std::string& alphas_csv) {
    std::vector<double> alphas;
    std::istringstream in(alphas_csv);
    std::string item;
    while (std::getline(in, item, ',')) alphas.push_back(std::stod(item));
    if (alphas.empty()) throw ConfigError("--alphas: at least one value required");
    const std::vector<double> debts = keen_debt_divergence(opt.params, opt.kappa, alphas);
    std::cout << "alpha,d_bar\n";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        std::cout << format_number(alphas[i]) << ',' << format_number(debts[i]) << "\n";
    }
    return kExitOk;
}

int keen_infinite_debt_cmd(const KeenOptions& opt, double alpha) {
    const InfiniteDebtReport rep = infinite_debt_attractive(opt.params, opt.kappa, alpha);
    std::cout << "jacobian diagonal at (omega, lambda, u) = (0, 0, 0):\n"
              << "  " << format_number(rep.diagonal[0]) << ", "
              << format_number(rep.diagonal[1]) << ", " << format_number(rep.diagonal[2])
              << "\n"
              << "infinite-debt fixed point attractive: " << (rep.attractive ? "yes" : "no")
              << "\n";
    return kExitOk;
}

int keen_simulate_cmd(const KeenOptions& opt, double alpha, const std::string& chart,
                      double dt, double horizon, int stride, const std::string& out_path) {
    const bool u_chart = chart == "u";
    if (!u_chart && chart != "d") throw ConfigError("--chart: must be d or u");

    const KeenFixedPoint fp = keen_fixed_point(opt.params, opt.kappa, alpha);
    const KeenState init{fp.omega_bar, fp.lambda_bar - 0.01, fp.d_bar};
    const KeenRun run =
        simulate_keen(opt.params, opt.kappa, init, alpha, dt, horizon, stride, u_chart);

    std::ofstream out(out_path);
    if (!out) throw ConfigError(out_path + ": cannot open for writing");
    out << "t,wage_share,employment," << (u_chart ? "u" : "debt")
        << ",profit_share,growth,kappa\n";
    for (std::size_t i = 0; i < run.t.size(); ++i) {
        out << format_number(run.t[i]) << ',' << format_number(run.wage_share[i]) << ','
            << format_number(run.employment[i]) << ',' << format_number(run.debt_or_u[i])
            << ',' << format_number(run.profit_share[i]) << ','
            << format_number(run.growth[i]) << ',' << format_number(run.kappa[i]) << "\n";
    }
    std::cout << "samples: " << run.t.size() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minskyan growth vs zero-growth scenario laboratory"};
    app.require_subcommand(1);

    ScenarioSource sim_src;
    std::string sim_out, sim_svg;
    auto* sim = app.add_subcommand("simulate", "integrate a scenario and write CSV");
    add_scenario_options(sim, sim_src);
    sim->add_option("--out", sim_out, "output CSV path")->required();
    sim->add_option("--svg", sim_svg, "also write an SVG line plot");

    ScenarioSource fp_src;
    double fp_alpha = 0.0;
    std::string fp_format = "text";
    auto* fp = app.add_subcommand("fixed-point", "fixed point and stability analysis");
    add_scenario_options(fp, fp_src);
    auto* fp_alpha_opt =
        fp->add_option("--alpha", fp_alpha, "productivity growth (overrides the driver)");
    fp->add_option("--format", fp_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    ScenarioSource mc_src;
    std::size_t mc_runs = 1000;
    std::uint64_t mc_seed = 12345;
    std::string mc_out, mc_svg;
    auto* mc = app.add_subcommand("montecarlo", "ensemble of stochastic runs");
    add_scenario_options(mc, mc_src);
    mc->add_option("--runs", mc_runs, "number of runs (default 1000)");
    mc->add_option("--seed", mc_seed, "base seed (default 12345)");
    mc->add_option("--out", mc_out, "output CSV path")->required();
    mc->add_option("--svg", mc_svg, "also write an SVG envelope plot");

    ScenarioSource sw_src;
    std::vector<std::string> sw_axes;
    std::string sw_out;
    std::size_t sw_cap = 4096;
    auto* sw = app.add_subcommand("sweep", "parameter grid of runs");
    add_scenario_options(sw, sw_src);
    sw->add_option("--axis", sw_axes, "axis as name=v1,v2,... (repeatable, up to 3)")
        ->required();
    sw->add_option("--out", sw_out, "output CSV path")->required();
    sw->add_option("--cap", sw_cap, "maximum number of grid cells");

    std::string cat_format = "text";
    auto* cat = app.add_subcommand("catalog", "list built-in scenarios");
    cat->add_option("--format", cat_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    auto* keen = app.add_subcommand("keen", "original and generalized Keen variants");
    keen->require_subcommand(1);

    KeenOptions kfp_opt;
    double kfp_alpha = 0.02;
    std::string kfp_format = "text";
    auto* kfp = keen->add_subcommand("fixed-point", "fixed point of a Keen variant");
    add_keen_options(kfp, kfp_opt);
    kfp->add_option("--alpha", kfp_alpha, "productivity growth")->required();
    kfp->add_option("--format", kfp_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    KeenOptions kdiv_opt;
    std::string kdiv_alphas;
    auto* kdiv =
        keen->add_subcommand("divergence", "fixed-point debt along an alpha sequence");
    add_keen_options(kdiv, kdiv_opt);
    kdiv->add_option("--alphas", kdiv_alphas, "comma-separated alphas")->required();

    KeenOptions kinf_opt;
    double kinf_alpha = 0.0;
    auto* kinf = keen->add_subcommand("infinite-debt",
                                      "attractivity of the infinite-debt fixed point");
    add_keen_options(kinf, kinf_opt);
    kinf->add_option("--alpha", kinf_alpha, "productivity growth (default 0)");

    KeenOptions ksim_opt;
    double ksim_alpha = 0.02, ksim_dt = 0.01, ksim_horizon = 250.0;
    int ksim_stride = 10;
    std::string ksim_chart = "d", ksim_out;
    auto* ksim = keen->add_subcommand("simulate", "integrate a Keen variant");
    add_keen_options(ksim, ksim_opt);
    ksim->add_option("--alpha", ksim_alpha, "productivity growth")->required();
    ksim->add_option("--chart", ksim_chart, "state chart: d or u");
    ksim->add_option("--dt", ksim_dt, "step size, years");
    ksim->add_option("--horizon", ksim_horizon, "years to simulate");
    ksim->add_option("--stride", ksim_stride, "steps between samples");
    ksim->add_option("--out", ksim_out, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(sim_src, sim_out, sim_svg);
        if (fp->parsed()) {
            return cmd_fixed_point(fp_src, fp_alpha, fp_alpha_opt->count() > 0, fp_format);
        }
        if (mc->parsed()) return cmd_montecarlo(mc_src, mc_runs, mc_seed, mc_out, mc_svg);
        if (sw->parsed()) return cmd_sweep(sw_src, sw_axes, sw_out, sw_cap);
        if (cat->parsed()) return cmd_catalog(cat_format);
        if (keen->parsed()) {
            if (kfp->parsed()) return keen_fixed_point_cmd(kfp_opt, kfp_alpha, kfp_format);
            if (kdiv->parsed()) return keen_divergence_cmd(kdiv_opt, kdiv_alphas);
            if (kinf->parsed()) return keen_infinite_debt_cmd(kinf_opt, kinf_alpha);
            if (ksim->parsed()) {
                return keen_simulate_cmd(ksim_opt, ksim_alpha, ksim_chart, ksim_dt,
                                         ksim_horizon, ksim_stride, ksim_out);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitError;
}
