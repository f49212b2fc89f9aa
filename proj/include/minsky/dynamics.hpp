#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "minsky/driver.hpp"
#include "minsky/equilibrium.hpp"
#include "minsky/model.hpp"

namespace minsky {

struct IntegrationConfig {
    double dt = 0.01;              // years; 1/dt must be an integer
    double horizon = 250.0;        // years; must be a whole number of steps
    double eps_singularity = 1e-6;
    int record_stride = 10;        // steps between recorded samples
};

// Throws ConfigError naming the offending field.
void validate(const IntegrationConfig& config);

enum class TerminationKind { Completed, Crisis, Singularity, Degenerate };

struct Termination {
    TerminationKind kind = TerminationKind::Completed;
    double time = 0.0;
};

const char* to_string(TerminationKind kind);

// Recorded run: one entry per sample in every series. The final accepted
// state is always recorded, whether or not it falls on the stride grid.
// output is Y(t) = y0 * exp(integral of g), accumulated by the trapezoidal
// rule at full step resolution.
struct Trajectory {
    std::vector<double> t;
    std::vector<double> alpha;
    std::vector<double> d_target;
    std::vector<double> debt;
    std::vector<double> employment;
    std::vector<double> wage_share;
    std::vector<double> profit_share;
    std::vector<double> growth;
    std::vector<double> investment_norm;
    std::vector<double> output;
    Termination termination{};

    struct Summary {
        double min_employment = 0.0, max_employment = 0.0, mean_employment = 0.0;
        double min_wage_share = 0.0, max_wage_share = 0.0, mean_wage_share = 0.0;
        double mean_growth = 0.0;
        bool crisis = false;
    } summary{};

    std::size_t size() const { return t.size(); }
};

// Classical fixed-step RK4 stage update; deriv(y, t) returns dy/dt.
template <std::size_t N, typename Deriv>
std::array<double, N> rk4_step(const std::array<double, N>& y, double t, double dt,
                               Deriv&& deriv) {
    const std::array<double, N> k1 = deriv(y, t);
    std::array<double, N> tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    const std::array<double, N> k2 = deriv(tmp, t + 0.5 * dt);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    const std::array<double, N> k3 = deriv(tmp, t + 0.5 * dt);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
    const std::array<double, N> k4 = deriv(tmp, t + dt);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

// Integrates the four-equation system under the driver. Alpha is sampled at
// the start of each step and held through its stages. After each accepted
// step the run halts with Crisis when I/Y turns negative, Singularity when
// nu - d reaches the guard, Degenerate when lambda or omega falls below
// 1e-12. Throws DomainError/ConfigError on invalid inputs.
Trajectory integrate(const ModelParams& params, const SystemState& initial,
                     const ProductivityDriver& driver, const IntegrationConfig& config);

enum class Behaviour { Converged, StableOscillation, Crisis, Inconclusive };

const char* to_string(Behaviour behaviour);

// Three-way behaviour of a completed or crisis-terminated run, from the
// employment amplitude of the final fifth of the horizon against the fifth
// before it. Inconclusive when the amplitude is still growing (> 1.05x).
Behaviour classify_behaviour(const Trajectory& trajectory);

// Fixed-point values with employment lowered by 0.01.
SystemState standard_initialisation(const ModelParams& params, double alpha);

// Level series reconstructed from a normalized trajectory.
struct LevelSeries {
    std::vector<double> output;               // Y
    std::vector<double> capital;              // K = nu Y
    std::vector<double> labour;               // L = lambda N
    std::vector<double> productivity;         // a = Y / L
    std::vector<double> wage_rate;            // w = omega Y / L
    std::vector<double> debt_level;           // D = d Y
    std::vector<double> profit;               // Pi = pi Y
    std::vector<double> investment;           // I = (I/Y) Y
    std::vector<double> residual_absorption;  // Y - I  (C + X - M)
};

LevelSeries reconstruct_levels(const Trajectory& trajectory, const ModelParams& params);

}  // namespace minsky
