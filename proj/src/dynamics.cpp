#include "minsky/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace minsky {

void validate(const IntegrationConfig& config) {
    if (!(config.dt > 0.0) || !std::isfinite(config.dt)) {
        throw ConfigError("dt: must be > 0");
    }
    const double spy = 1.0 / config.dt;
    if (std::abs(spy - std::round(spy)) > 1e-9 * spy) {
        throw ConfigError("dt: 1/dt must be an integer so year boundaries fall on steps");
    }
    if (!(config.horizon > 0.0) || !std::isfinite(config.horizon)) {
        throw ConfigError("horizon: must be > 0");
    }
    const double steps = config.horizon / config.dt;
    if (std::abs(steps - std::round(steps)) > 1e-6) {
        throw ConfigError("horizon: must be a whole number of steps");
    }
    if (config.record_stride < 1) {
        throw ConfigError("record_stride: must be >= 1");
    }
    if (!(config.eps_singularity > 0.0)) {
        throw ConfigError("eps_singularity: must be > 0");
    }
}

const char* to_string(TerminationKind kind) {
    switch (kind) {
        case TerminationKind::Completed: return "completed";
        case TerminationKind::Crisis: return "crisis";
        case TerminationKind::Singularity: return "singularity";
        case TerminationKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

const char* to_string(Behaviour behaviour) {
    switch (behaviour) {
        case Behaviour::Converged: return "converged";
        case Behaviour::StableOscillation: return "stable-oscillation";
        case Behaviour::Crisis: return "crisis";
        case Behaviour::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

void record_sample(Trajectory& traj, const ModelParams& params, const SystemState& s,
                   double t, double alpha, double log_output, double eps) {
    const Auxiliaries aux = auxiliaries(params, s, eps);
    traj.t.push_back(t);
    traj.alpha.push_back(alpha);
    traj.d_target.push_back(s.d_target);
    traj.debt.push_back(s.debt);
    traj.employment.push_back(s.employment);
    traj.wage_share.push_back(s.wage_share);
    traj.profit_share.push_back(aux.profit_share);
    traj.growth.push_back(aux.growth);
    traj.investment_norm.push_back(aux.investment_norm);
    traj.output.push_back(params.y0 * std::exp(log_output));
}

void finish_summary(Trajectory& traj) {
    auto& s = traj.summary;
    const std::size_t n = traj.size();
    s.min_employment = *std::min_element(traj.employment.begin(), traj.employment.end());
    s.max_employment = *std::max_element(traj.employment.begin(), traj.employment.end());
    s.min_wage_share = *std::min_element(traj.wage_share.begin(), traj.wage_share.end());
    s.max_wage_share = *std::max_element(traj.wage_share.begin(), traj.wage_share.end());
    double sum_l = 0.0, sum_w = 0.0, sum_g = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_l += traj.employment[i];
        sum_w += traj.wage_share[i];
        sum_g += traj.growth[i];
    }
    s.mean_employment = sum_l / static_cast<double>(n);
    s.mean_wage_share = sum_w / static_cast<double>(n);
    s.mean_growth = sum_g / static_cast<double>(n);
    s.crisis = traj.termination.kind == TerminationKind::Crisis;
}

}  // namespace

Trajectory integrate(const ModelParams& params, const SystemState& initial,
                     const ProductivityDriver& driver, const IntegrationConfig& config) {
    validate(params);
    validate(config);
    const double eps = config.eps_singularity;

    if (!(initial.employment > 0.0) || initial.employment > 1.0) {
        throw DomainError("integrate: initial employment must lie in (0, 1]");
    }
    if (!(initial.wage_share > 0.0)) {
        throw DomainError("integrate: initial wage share must be positive");
    }
    if (params.nu - initial.debt <= eps) {
        throw SingularityError("integrate: initial debt is at or above nu");
    }

    const long steps_per_year = std::lround(1.0 / config.dt);
    const long n_steps = std::lround(config.horizon / config.dt);
    AlphaSampler sampler(driver, steps_per_year);

    Trajectory traj;
    const std::size_t reserve = static_cast<std::size_t>(
        n_steps / std::max(1, config.record_stride) + 2);
    traj.t.reserve(reserve);

    SystemState s = initial;
    double log_output = 0.0;  // integral of g from 0 to t
    double g_prev = growth_rate(params, s, eps);

    double alpha = sampler.at_step(0, 0.0);
    record_sample(traj, params, s, 0.0, alpha, log_output, eps);
    if (traj.investment_norm.back() < 0.0) {
        traj.termination = {TerminationKind::Crisis, 0.0};
        finish_summary(traj);
        return traj;
    }

    for (long i = 0; i < n_steps; ++i) {
        const double t = static_cast<double>(i) * config.dt;
        alpha = sampler.at_step(i, t);

        std::array<double, 4> y = to_array(s);
        bool stage_singular = false;
        y = rk4_step<4>(y, t, config.dt, [&](const std::array<double, 4>& v, double) {
            const SystemState vs = state_from_array(v);
            if (params.nu - vs.debt <= eps) {
                stage_singular = true;
                return std::array<double, 4>{0.0, 0.0, 0.0, 0.0};
            }
            return to_array(derivatives(params, vs, alpha, eps));
        });
        const double t_next = static_cast<double>(i + 1) * config.dt;
        if (stage_singular || params.nu - y[1] <= eps) {
            // The offending state cannot be evaluated (g has a pole there);
            // the last recorded sample is the final usable one.
            traj.termination = {TerminationKind::Singularity, t_next};
            finish_summary(traj);
            return traj;
        }
        s = state_from_array(y);

        const double g_new = growth_rate(params, s, eps);
        log_output += 0.5 * (g_prev + g_new) * config.dt;
        g_prev = g_new;

        const bool degenerate = s.employment < 1e-12 || s.wage_share < 1e-12;
        const bool last = (i + 1 == n_steps);
        const bool on_stride = ((i + 1) % config.record_stride) == 0;
        const double inv = investment_norm(params, s, eps);
        const bool crisis = inv < 0.0;

        if (on_stride || last || crisis || degenerate) {
            record_sample(traj, params, s, t_next, alpha, log_output, eps);
        }
        if (crisis) {
            traj.termination = {TerminationKind::Crisis, t_next};
            finish_summary(traj);
            return traj;
        }
        if (degenerate) {
            traj.termination = {TerminationKind::Degenerate, t_next};
            finish_summary(traj);
            return traj;
        }
    }

    traj.termination = {TerminationKind::Completed, config.horizon};
    finish_summary(traj);
    return traj;
}

Behaviour classify_behaviour(const Trajectory& trajectory) {
    if (trajectory.termination.kind == TerminationKind::Crisis) return Behaviour::Crisis;
    if (trajectory.termination.kind != TerminationKind::Completed) {
        throw DomainError(
            "classify_behaviour: trajectory ended in " +
            std::string(to_string(trajectory.termination.kind)) +
            "; only completed or crisis runs are classifiable");
    }

    const double horizon = trajectory.termination.time;
    const double t_final = 0.8 * horizon;
    const double t_prev = 0.6 * horizon;
    double final_min = 0.0, final_max = 0.0, prev_min = 0.0, prev_max = 0.0;
    bool any_final = false, any_prev = false;
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        const double t = trajectory.t[i];
        const double lam = trajectory.employment[i];
        if (t >= t_final) {
            if (!any_final) { final_min = final_max = lam; any_final = true; }
            final_min = std::min(final_min, lam);
            final_max = std::max(final_max, lam);
        } else if (t >= t_prev) {
            if (!any_prev) { prev_min = prev_max = lam; any_prev = true; }
            prev_min = std::min(prev_min, lam);
            prev_max = std::max(prev_max, lam);
        }
    }
    if (!any_final || !any_prev) {
        throw DomainError("classify_behaviour: too few samples to form windows");
    }

    const double amp_final = final_max - final_min;
    const double amp_prev = prev_max - prev_min;
    if (amp_final < 1e-4) return Behaviour::Converged;
    if (amp_final <= 1.05 * amp_prev) return Behaviour::StableOscillation;
    return Behaviour::Inconclusive;
}

SystemState standard_initialisation(const ModelParams& params, double alpha) {
    const FixedPoint fp = fixed_point(params, alpha);
    return {fp.d_bar, fp.d_bar, fp.lambda_bar - 0.01, fp.omega_bar};
}

LevelSeries reconstruct_levels(const Trajectory& trajectory, const ModelParams& params) {
    if (trajectory.size() == 0) {
        throw DomainError("reconstruct_levels: empty trajectory");
    }
    const std::size_t n = trajectory.size();
    LevelSeries lv;
    lv.output.resize(n);
    lv.capital.resize(n);
    lv.labour.resize(n);
    lv.productivity.resize(n);
    lv.wage_rate.resize(n);
    lv.debt_level.resize(n);
    lv.profit.resize(n);
    lv.investment.resize(n);
    lv.residual_absorption.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = trajectory.output[i];
        const double labour = trajectory.employment[i] * params.population;
        lv.output[i] = y;
        lv.capital[i] = params.nu * y;
        lv.labour[i] = labour;
        lv.productivity[i] = y / labour;
        lv.wage_rate[i] = trajectory.wage_share[i] * y / labour;
        lv.debt_level[i] = trajectory.debt[i] * y;
        lv.profit[i] = trajectory.profit_share[i] * y;
        lv.investment[i] = trajectory.investment_norm[i] * y;
        lv.residual_absorption[i] = y - lv.investment[i];
    }
    return lv;
}

}  // namespace minsky
