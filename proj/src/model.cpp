#include "minsky/model.hpp"

#include <cmath>
#include <string>

namespace minsky {

namespace {

void require(bool ok, const char* field, const std::string& why) {
    if (!ok) throw ConfigError(std::string(field) + ": " + why);
}

}  // namespace

void validate(const PhillipsCurve& curve) {
    require(std::isfinite(curve.c1) && curve.c1 > 0.0, "phillips.c1", "must be > 0");
    require(std::isfinite(curve.c2) && curve.c2 > 0.0, "phillips.c2", "must be > 0");
    require(std::isfinite(curve.c3), "phillips.c3", "must be finite");
    require(std::isfinite(curve.c4), "phillips.c4", "must be finite");
    require(phillips(curve, 0.0) < 0.0, "phillips.c4",
            "curve must be negative at zero employment");
}

void validate(const ModelParams& params) {
    require(std::isfinite(params.r) && params.r >= 0.0, "r", "must be >= 0");
    require(std::isfinite(params.delta) && params.delta >= 0.0, "delta", "must be >= 0");
    require(std::isfinite(params.nu) && params.nu > 0.0, "nu", "must be > 0");
    require(std::isfinite(params.theta1) && params.theta1 > 0.0, "theta1", "must be > 0");
    require(std::isfinite(params.theta2) && params.theta2 > 0.0, "theta2", "must be > 0");
    require(std::isfinite(params.eta1), "eta1", "must be finite");
    require(std::isfinite(params.eta2), "eta2", "must be finite");
    require(std::isfinite(params.d0), "d0", "must be finite");
    require(std::isfinite(params.population) && params.population > 0.0, "population",
            "must be > 0");
    require(std::isfinite(params.y0) && params.y0 > 0.0, "y0", "must be > 0");
    validate(params.phillips);
}

double phillips(const PhillipsCurve& curve, double lambda) {
    return curve.c1 * std::exp(curve.c2 * (lambda - curve.c3)) - curve.c4;
}

double phillips_slope(const PhillipsCurve& curve, double lambda) {
    return curve.c1 * curve.c2 * std::exp(curve.c2 * (lambda - curve.c3));
}

double phillips_inverse(const PhillipsCurve& curve, double alpha) {
    if (!(alpha > -curve.c4)) {
        throw DomainError("phillips_inverse: wage growth " + std::to_string(alpha) +
                          " is at or below the curve's lower bound " +
                          std::to_string(-curve.c4));
    }
    return curve.c3 + std::log((alpha + curve.c4) / curve.c1) / curve.c2;
}

double profit_share(const ModelParams& params, const SystemState& state) {
    return 1.0 - state.wage_share - params.r * state.debt;
}

double growth_rate(const ModelParams& params, const SystemState& state, double eps) {
    const double denom = params.nu - state.debt;
    if (denom <= eps) {
        throw SingularityError("growth_rate: nu - d = " + std::to_string(denom) +
                               " is at or below the singularity guard");
    }
    const double pi = profit_share(params, state);
    return (pi + params.theta1 * (state.d_target - state.debt) - params.delta * params.nu) /
           denom;
}

double investment_norm(const ModelParams& params, const SystemState& state, double eps) {
    const double g = growth_rate(params, state, eps);
    const double pi = profit_share(params, state);
    return pi + params.theta1 * (state.d_target - state.debt) + state.debt * g;
}

Auxiliaries auxiliaries(const ModelParams& params, const SystemState& state, double eps) {
    const double pi = profit_share(params, state);
    const double g = growth_rate(params, state, eps);
    return {pi, g, pi + params.theta1 * (state.d_target - state.debt) + state.debt * g};
}

SystemState derivatives(const ModelParams& params, const SystemState& state, double alpha,
                        double eps) {
    const double pi = profit_share(params, state);
    const double g = growth_rate(params, state, eps);

    SystemState dot;
    dot.d_target = params.theta2 *
                   (params.d0 + params.eta1 * g + params.eta2 * pi - state.d_target);
    dot.debt = params.theta1 * (state.d_target - state.debt);
    dot.employment = state.employment * (g - alpha);
    if (state.employment >= kEmploymentCap && g - alpha > 0.0) dot.employment = 0.0;
    dot.wage_share = state.wage_share * (phillips(params.phillips, state.employment) - alpha);
    return dot;
}

}  // namespace minsky
