#pragma once

#include <cstdint>
#include <limits>
#include <variant>

#include "minsky/rng.hpp"

namespace minsky {

struct ConstantDriver {
    double alpha = 0.02;
};

struct StepDriver {
    double alpha_before = 0.02;
    double alpha_after = 0.0;
    double t_switch = 50.0;  // years
};

struct RampDriver {
    double alpha_before = 0.02;
    double alpha_after = 0.0;
    double t_start = 50.0;
    double t_end = 60.0;
};

// Alpha redrawn once per simulated year at integer year boundaries,
// i.i.d. Normal(mean(t), std_dev), piecewise constant in between. The mean
// optionally steps from `mean` to `mean_after` at t_switch (defaults to no
// step), which covers growth-to-zero-growth transition scenarios.
struct StochasticAnnualDriver {
    double mean = 0.02;
    double std_dev = 0.01;
    std::uint64_t seed = 12345;
    double mean_after = 0.02;
    double t_switch = std::numeric_limits<double>::infinity();

    double mean_at(double t) const { return t < t_switch ? mean : mean_after; }
};

using ProductivityDriver =
    std::variant<ConstantDriver, StepDriver, RampDriver, StochasticAnnualDriver>;

bool is_stochastic(const ProductivityDriver& driver);

// Driver value at t = 0 with stochastic noise suppressed (the mean); used to
// place the fixed point for standard initialisation.
double initial_alpha(const ProductivityDriver& driver);

// Copy of the driver with its seed replaced (no-op for deterministic kinds).
ProductivityDriver with_seed(const ProductivityDriver& driver, std::uint64_t seed);

// Per-run sampling state. Steps must be visited in order; the stochastic
// stream draws one normal variate per simulated year.
class AlphaSampler {
public:
    // steps_per_year must equal round(1/dt) so that year boundaries coincide
    // with steps.
    AlphaSampler(const ProductivityDriver& driver, long steps_per_year);

    // Alpha held over the step [step*dt, (step+1)*dt).
    double at_step(long step, double t);

private:
    const ProductivityDriver driver_;
    long steps_per_year_;
    Xoshiro256pp rng_;
    long next_draw_year_ = 0;
    double current_ = 0.0;
};

}  // namespace minsky
