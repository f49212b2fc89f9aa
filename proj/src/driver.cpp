#include "minsky/driver.hpp"

#include <cassert>

namespace minsky {

bool is_stochastic(const ProductivityDriver& driver) {
    return std::holds_alternative<StochasticAnnualDriver>(driver);
}

double initial_alpha(const ProductivityDriver& driver) {
    return std::visit(
        [](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantDriver>) {
                return d.alpha;
            } else if constexpr (std::is_same_v<T, StepDriver> ||
                                 std::is_same_v<T, RampDriver>) {
                return d.alpha_before;
            } else {
                return d.mean_at(0.0);
            }
        },
        driver);
}

ProductivityDriver with_seed(const ProductivityDriver& driver, std::uint64_t seed) {
    ProductivityDriver out = driver;
    if (auto* s = std::get_if<StochasticAnnualDriver>(&out)) s->seed = seed;
    return out;
}

AlphaSampler::AlphaSampler(const ProductivityDriver& driver, long steps_per_year)
    : driver_(driver),
      steps_per_year_(steps_per_year),
      rng_(std::holds_alternative<StochasticAnnualDriver>(driver)
               ? std::get<StochasticAnnualDriver>(driver).seed
               : 0) {}

double AlphaSampler::at_step(long step, double t) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantDriver>) {
                return d.alpha;
            } else if constexpr (std::is_same_v<T, StepDriver>) {
                return t < d.t_switch ? d.alpha_before : d.alpha_after;
            } else if constexpr (std::is_same_v<T, RampDriver>) {
                if (t < d.t_start) return d.alpha_before;
                if (t >= d.t_end) return d.alpha_after;
                const double frac = (t - d.t_start) / (d.t_end - d.t_start);
                return d.alpha_before + frac * (d.alpha_after - d.alpha_before);
            } else {
                // Redraw at integer year boundaries; steps arrive in order.
                const long year = step / steps_per_year_;
                assert(step % steps_per_year_ == 0 || year == next_draw_year_ - 1);
                while (next_draw_year_ <= year) {
                    const double year_start =
                        static_cast<double>(next_draw_year_);
                    current_ = d.mean_at(year_start) + d.std_dev * rng_.normal();
                    ++next_draw_year_;
                }
                return current_;
            }
        },
        driver_);
}

}  // namespace minsky
