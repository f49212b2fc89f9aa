#pragma once

#include <array>

#include "minsky/errors.hpp"
#include "minsky/params.hpp"

namespace minsky {

// Guard on the growth-rate denominator nu - d.
inline constexpr double kSingularityEps = 1e-6;

// Employment rate at and above which a positive employment derivative is
// suppressed (limited labour pool).
inline constexpr double kEmploymentCap = 0.99;

// The four dynamical variables at an instant. All dimensionless.
struct SystemState {
    double d_target = 0.0;    // target debt-to-output ratio d_T
    double debt = 0.0;        // debt-to-output ratio d
    double employment = 0.0;  // employment rate lambda
    double wage_share = 0.0;  // wages share of output omega
};

// Quantities derived from a state: profit share pi = 1 - omega - r*d,
// output growth g, and the investment-to-output ratio I/Y.
struct Auxiliaries {
    double profit_share = 0.0;
    double growth = 0.0;
    double investment_norm = 0.0;
};

inline std::array<double, 4> to_array(const SystemState& s) {
    return {s.d_target, s.debt, s.employment, s.wage_share};
}

inline SystemState state_from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
}

// Wage growth rate phi(lambda).
double phillips(const PhillipsCurve& curve, double lambda);

// Analytic slope phi'(lambda) = c1*c2*exp(c2*(lambda - c3)).
double phillips_slope(const PhillipsCurve& curve, double lambda);

// Employment rate with wage growth alpha. Throws DomainError when
// alpha <= -c4 (phi never attains alpha).
double phillips_inverse(const PhillipsCurve& curve, double alpha);

// pi = 1 - omega - r*d.
double profit_share(const ModelParams& params, const SystemState& state);

// g = (pi + theta1*(d_T - d) - delta*nu) / (nu - d).
// Throws SingularityError when nu - d <= eps.
double growth_rate(const ModelParams& params, const SystemState& state,
                   double eps = kSingularityEps);

// I/Y = pi + theta1*(d_T - d) + d*g. Negative values signal a crisis.
double investment_norm(const ModelParams& params, const SystemState& state,
                       double eps = kSingularityEps);

Auxiliaries auxiliaries(const ModelParams& params, const SystemState& state,
                        double eps = kSingularityEps);

// Right-hand side of the four coupled equations, returned field-for-field
// as a SystemState. The employment cap applies: when lambda >= 0.99 and the
// employment derivative would be positive, that component is zeroed.
SystemState derivatives(const ModelParams& params, const SystemState& state,
                        double alpha, double eps = kSingularityEps);

}  // namespace minsky
