#include "minsky/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace minsky {

SystemState scenario_initial_state(const Scenario& scenario) {
    if (scenario.init) return *scenario.init;
    return standard_initialisation(scenario.params, initial_alpha(scenario.driver));
}

Trajectory run_scenario(const Scenario& scenario) {
    return integrate(scenario.params, scenario_initial_state(scenario), scenario.driver,
                     scenario.config);
}

namespace {

ModelParams row_params(double theta, double eta1, double eta2) {
    ModelParams p;
    p.theta1 = theta;
    p.theta2 = theta;
    p.eta1 = eta1;
    p.eta2 = eta2;
    p.d0 = 0.5;
    return p;
}

Scenario make(std::string name, ModelParams params, ProductivityDriver driver) {
    Scenario s;
    s.name = std::move(name);
    s.params = params;
    s.driver = driver;
    return s;
}

}  // namespace

std::vector<Scenario> catalog() {
    const ModelParams row1 = row_params(0.25, 5.0, 2.0);
    const ModelParams row2 = row_params(0.50, 5.0, 2.0);
    const ModelParams row3 = row_params(0.75, 5.0, 2.0);
    const ModelParams row4 = row_params(0.75, 3.0, 1.0);

    std::vector<Scenario> list;

    const std::pair<const char*, ModelParams> rows[] = {
        {"fig1-row1", row1}, {"fig1-row2", row2}, {"fig1-row3", row3}, {"fig1-row4", row4}};
    for (const auto& [stem, params] : rows) {
        list.push_back(make(std::string(stem) + "-alpha002", params, ConstantDriver{0.02}));
        list.push_back(make(std::string(stem) + "-alpha0", params, ConstantDriver{0.0}));
    }

    // Stochastic counterparts of fig1 rows 1 and 4, plus the near-frozen-debt
    // case; one fixed seed per scenario.
    const ModelParams bottom = row_params(0.10, 0.0, 0.0);
    const std::tuple<const char*, ModelParams, std::uint64_t> fig2[] = {
        {"fig2-top", row1, 101}, {"fig2-middle", row4, 102}, {"fig2-bottom", bottom, 103}};
    for (const auto& [stem, params, seed] : fig2) {
        list.push_back(make(std::string(stem) + "-mean002", params,
                            StochasticAnnualDriver{0.02, 0.01, seed}));
        list.push_back(make(std::string(stem) + "-mean0", params,
                            StochasticAnnualDriver{0.0, 0.01, seed + 1}));
    }

    const ModelParams trans = row_params(0.50, 3.0, 1.0);
    list.push_back(make("fig3-step", trans, StepDriver{0.02, 0.0, 50.0}));
    list.push_back(make("fig3-ramp", trans, RampDriver{0.02, 0.0, 50.0, 60.0}));
    {
        StochasticAnnualDriver d{0.02, 0.01, 104};
        d.mean_after = 0.0;
        d.t_switch = 50.0;
        list.push_back(make("fig3-stochastic", trans, d));
    }

    ModelParams fig4 = row2;
    fig4.r = 0.1;
    list.push_back(make("fig4-alpha002", fig4, ConstantDriver{0.02}));
    list.push_back(make("fig4-alpha0", fig4, ConstantDriver{0.0}));

    // Single-parameter changes that stabilise the fig1-row2 2% growth crisis.
    {
        ModelParams p = row2;
        p.theta1 = 0.25;
        list.push_back(make("fix-row2-theta1", p, ConstantDriver{0.02}));
    }
    {
        ModelParams p = row2;
        p.theta2 = 0.25;
        list.push_back(make("fix-row2-theta2", p, ConstantDriver{0.02}));
    }
    {
        ModelParams p = row2;
        p.eta1 = 3.0;
        list.push_back(make("fix-row2-eta1", p, ConstantDriver{0.02}));
    }
    {
        ModelParams p = row2;
        p.eta2 = 1.0;
        list.push_back(make("fix-row2-eta2", p, ConstantDriver{0.02}));
    }
    {
        ModelParams p = row2;
        p.d0 = 0.3;
        list.push_back(make("fix-row2-d0", p, ConstantDriver{0.02}));
    }

    return list;
}

Scenario find_scenario(const std::string& name) {
    for (auto& s : catalog()) {
        if (s.name == name) return s;
    }
    throw DomainError("unknown scenario '" + name + "'; see the catalog subcommand");
}

MonteCarloSummary monte_carlo(const Scenario& scenario, std::size_t n_runs,
                              std::uint64_t base_seed) {
    if (!is_stochastic(scenario.driver)) {
        throw DomainError("monte_carlo: scenario driver must be stochastic");
    }
    if (n_runs < 1) throw DomainError("monte_carlo: n_runs must be >= 1");

    // Common sample grid of the scenario config (stride multiples only).
    const long n_steps = std::lround(scenario.config.horizon / scenario.config.dt);
    const std::size_t n_grid =
        static_cast<std::size_t>(n_steps / scenario.config.record_stride) + 1;
    const double grid_dt = scenario.config.dt * scenario.config.record_stride;

    MonteCarloSummary mc;
    mc.n_runs = n_runs;
    mc.t.resize(n_grid);
    for (std::size_t k = 0; k < n_grid; ++k) mc.t[k] = static_cast<double>(k) * grid_dt;

    std::vector<double> sum(n_grid * 5, 0.0), sumsq(n_grid * 5, 0.0);
    mc.contributing.assign(n_grid, 0);
    mc.min_employment.reserve(n_runs);

    const SystemState init = scenario_initial_state(scenario);
    for (std::size_t run = 0; run < n_runs; ++run) {
        Scenario s = scenario;
        s.driver = with_seed(scenario.driver, mix_seed(base_seed, run));
        const Trajectory traj = integrate(s.params, init, s.driver, s.config);
        if (traj.termination.kind == TerminationKind::Crisis) ++mc.crisis_count;
        mc.min_employment.push_back(traj.summary.min_employment);

        for (std::size_t i = 0; i < traj.size(); ++i) {
            // Skip the off-grid terminal sample of truncated runs.
            const double pos = traj.t[i] / grid_dt;
            const auto k = static_cast<std::size_t>(std::lround(pos));
            if (k >= n_grid || std::abs(pos - static_cast<double>(k)) > 1e-9) continue;
            const double vals[5] = {traj.employment[i], traj.wage_share[i],
                                    traj.profit_share[i], traj.growth[i], traj.debt[i]};
            for (int v = 0; v < 5; ++v) {
                sum[k * 5 + v] += vals[v];
                sumsq[k * 5 + v] += vals[v] * vals[v];
            }
            ++mc.contributing[k];
        }
    }

    auto finalize = [&](int v, std::vector<double>& mean, std::vector<double>& stdev) {
        mean.resize(n_grid);
        stdev.resize(n_grid);
        for (std::size_t k = 0; k < n_grid; ++k) {
            const auto n = static_cast<double>(mc.contributing[k]);
            if (n == 0.0) {
                mean[k] = stdev[k] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            const double m = sum[k * 5 + v] / n;
            mean[k] = m;
            stdev[k] = std::sqrt(std::max(0.0, sumsq[k * 5 + v] / n - m * m));
        }
    };
    finalize(0, mc.mean_employment, mc.std_employment);
    finalize(1, mc.mean_wage_share, mc.std_wage_share);
    finalize(2, mc.mean_profit_share, mc.std_profit_share);
    finalize(3, mc.mean_growth, mc.std_growth);
    finalize(4, mc.mean_debt, mc.std_debt);
    return mc;
}

namespace {

double& param_field(ModelParams& p, const std::string& name) {
    if (name == "r") return p.r;
    if (name == "delta") return p.delta;
    if (name == "nu") return p.nu;
    if (name == "theta1") return p.theta1;
    if (name == "theta2") return p.theta2;
    if (name == "eta1") return p.eta1;
    if (name == "eta2") return p.eta2;
    if (name == "d0") return p.d0;
    throw ConfigError("axis '" + name +
                      "': unknown parameter (expected r, delta, nu, theta1, theta2, "
                      "eta1, eta2 or d0)");
}

}  // namespace

SweepResult sweep(const Scenario& base, const std::vector<SweepAxis>& axes,
                  std::size_t cell_cap) {
    if (axes.empty()) throw ConfigError("sweep: at least one axis required");
    std::size_t n_cells = 1;
    for (const auto& axis : axes) {
        if (axis.values.empty()) {
            throw ConfigError("axis '" + axis.param + "': no values given");
        }
        ModelParams probe = base.params;
        param_field(probe, axis.param);  // validates the name
        n_cells *= axis.values.size();
    }
    if (n_cells > cell_cap) {
        throw ConfigError("sweep: grid of " + std::to_string(n_cells) +
                          " cells exceeds the cap of " + std::to_string(cell_cap));
    }

    SweepResult result;
    result.axes = axes;
    result.cells.reserve(n_cells);

    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
        Scenario s = base;
        SweepCell out;
        out.values.resize(axes.size());
        for (std::size_t a = 0; a < axes.size(); ++a) {
            out.values[a] = axes[a].values[idx[a]];
            param_field(s.params, axes[a].param) = out.values[a];
        }
        out.crisis_time = std::numeric_limits<double>::quiet_NaN();
        try {
            const Trajectory traj = run_scenario(s);
            out.verdict = to_string(classify_behaviour(traj));
            if (traj.termination.kind == TerminationKind::Crisis) {
                out.crisis_time = traj.termination.time;
            }
        } catch (const std::exception& e) {
            out.verdict = std::string("error: ") + e.what();
        }
        result.cells.push_back(std::move(out));

        for (std::size_t a = axes.size(); a-- > 0;) {
            if (++idx[a] < axes[a].values.size()) break;
            idx[a] = 0;
        }
    }
    return result;
}

TransitionReport transition_report(const Trajectory& trajectory, double t_switch) {
    if (trajectory.termination.kind != TerminationKind::Completed) {
        throw DomainError("transition_report: trajectory did not complete");
    }
    if (!(t_switch > trajectory.t.front()) || !(t_switch < trajectory.t.back())) {
        throw DomainError("transition_report: switch time outside the horizon");
    }

    TransitionReport rep;
    rep.post_min_employment = std::numeric_limits<double>::infinity();
    double pre_l = 0.0, pre_w = 0.0, post_l = 0.0, post_w = 0.0;
    std::size_t n_pre = 0, n_post = 0;
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        const double t = trajectory.t[i];
        if (t < t_switch) {
            pre_l += trajectory.employment[i];
            pre_w += trajectory.wage_share[i];
            ++n_pre;
        } else {
            post_l += trajectory.employment[i];
            post_w += trajectory.wage_share[i];
            ++n_post;
            if (t > t_switch && trajectory.employment[i] < rep.post_min_employment) {
                rep.post_min_employment = trajectory.employment[i];
                rep.post_min_time = t;
            }
        }
    }
    if (n_pre == 0 || n_post == 0) {
        throw DomainError("transition_report: a window has no samples");
    }
    rep.pre_mean_employment = pre_l / static_cast<double>(n_pre);
    rep.pre_mean_wage_share = pre_w / static_cast<double>(n_pre);
    rep.post_mean_employment = post_l / static_cast<double>(n_post);
    rep.post_mean_wage_share = post_w / static_cast<double>(n_post);
    return rep;
}

}  // namespace minsky
