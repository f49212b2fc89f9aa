#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minsky/dynamics.hpp"

namespace minsky {

// A named, fully specified run. init == nullopt means standard
// initialisation at the driver's initial alpha.
struct Scenario {
    std::string name;
    ModelParams params{};
    ProductivityDriver driver = ConstantDriver{};
    std::optional<SystemState> init;
    IntegrationConfig config{};
};

SystemState scenario_initial_state(const Scenario& scenario);

Trajectory run_scenario(const Scenario& scenario);

// Built-in scenarios covering every figure: fig1-row{1..4}-alpha{002,0},
// fig2-{top,middle,bottom}-mean{002,0}, fig3-{step,ramp,stochastic},
// fig4-alpha{002,0}, and the five fix-row2-* single-parameter rescues.
std::vector<Scenario> catalog();

// Throws DomainError when the name is not in the catalog.
Scenario find_scenario(const std::string& name);

// Per-sample-time ensemble statistics. Crisis-halted runs contribute up to
// their halt time; `contributing` counts the runs present at each time.
// Means/stds are NaN where no run survives.
struct MonteCarloSummary {
    std::size_t n_runs = 0;
    std::vector<double> t;
    std::vector<double> mean_employment, std_employment;
    std::vector<double> mean_wage_share, std_wage_share;
    std::vector<double> mean_profit_share, std_profit_share;
    std::vector<double> mean_growth, std_growth;
    std::vector<double> mean_debt, std_debt;
    std::vector<std::size_t> contributing;
    std::size_t crisis_count = 0;
    std::vector<double> min_employment;  // per run
};

// Run i uses seed mix_seed(base_seed, i). Requires a stochastic driver and
// n_runs >= 1 (DomainError otherwise). Stds are population standard
// deviations across runs at each sample instant.
MonteCarloSummary monte_carlo(const Scenario& scenario, std::size_t n_runs,
                              std::uint64_t base_seed);

struct SweepAxis {
    std::string param;  // r, delta, nu, theta1, theta2, eta1, eta2 or d0
    std::vector<double> values;
};

struct SweepCell {
    std::vector<double> values;  // one per axis
    std::string verdict;         // behaviour name, or "error: ..." for failed cells
    double crisis_time;          // NaN when the cell did not end in crisis
};

// Cells in row-major order (last axis fastest). Standard initialisation is
// recomputed for each cell's parameters unless the base scenario pins an
// explicit initial state.
struct SweepResult {
    std::vector<SweepAxis> axes;
    std::vector<SweepCell> cells;
};

SweepResult sweep(const Scenario& base, const std::vector<SweepAxis>& axes,
                  std::size_t cell_cap = 4096);

struct TransitionReport {
    double pre_mean_employment = 0.0, post_mean_employment = 0.0;
    double pre_mean_wage_share = 0.0, post_mean_wage_share = 0.0;
    double post_min_employment = 0.0;
    double post_min_time = 0.0;
};

// Pre/post statistics around a switch time; the employment minimum is taken
// over t > t_switch. Requires a completed trajectory and a switch inside the
// horizon.
TransitionReport transition_report(const Trajectory& trajectory, double t_switch);

}  // namespace minsky
