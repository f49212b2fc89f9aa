#include "minsky/keen.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "minsky/dynamics.hpp"

namespace minsky {

double InvestmentFunction::operator()(double pi, double d) const {
    return kappa0 + kappa1 * std::exp(kappa2 * pi - kappa3 * d);
}

void validate(const InvestmentFunction& kappa) {
    if (!(kappa.kappa1 > 0.0)) throw ConfigError("kappa1: must be > 0");
    if (!(kappa.kappa2 > 0.0)) throw ConfigError("kappa2: must be > 0");
    if (kappa.kappa3 < 0.0) throw ConfigError("kappa3: must be >= 0");
    if (!std::isfinite(kappa.kappa0)) throw ConfigError("kappa0: must be finite");
}

std::array<double, 3> keen_derivatives(const ModelParams& params,
                                       const InvestmentFunction& kappa,
                                       const KeenState& state, double alpha) {
    const double pi = 1.0 - state.wage_share - params.r * state.debt;
    const double k = kappa(pi, state.debt);
    const double g = k / params.nu - params.delta;
    return {state.wage_share * (phillips(params.phillips, state.employment) - alpha),
            state.employment * (g - alpha),
            k - pi - g * state.debt};
}

std::array<double, 3> keen_u_system_derivatives(const ModelParams& params,
                                                const InvestmentFunction& kappa,
                                                const std::array<double, 3>& state,
                                                double alpha) {
    const double omega = state[0];
    const double lambda = state[1];
    const double u = state[2];

    double k, g, u_dot;
    if (u > 0.0) {
        const double pi = 1.0 - omega - params.r / u;
        k = kappa(pi, 1.0 / u);
        g = k / params.nu - params.delta;
        u_dot = (u * (1.0 - omega) - params.r + g - u * k) * u;
    } else {
        // Infinite-debt plane: kappa at its floor, u' = 0 by the factor of u.
        k = kappa.floor();
        g = k / params.nu - params.delta;
        u_dot = 0.0;
    }
    return {omega * (phillips(params.phillips, lambda) - alpha),
            lambda * (g - alpha), u_dot};
}

namespace {

// Bracketing bisection for a monotone residual; bracket endpoints must have
// opposite signs.
double bisect(double lo, double hi, double f_lo, const auto& f) {
    for (int iter = 0; iter < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo)); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

KeenFixedPoint keen_fixed_point(const ModelParams& params,
                                const InvestmentFunction& kappa, double alpha) {
    validate(kappa);
    const double target = params.nu * (alpha + params.delta);

    KeenFixedPoint fp;
    fp.lambda_bar = phillips_inverse(params.phillips, alpha);

    if (kappa.kappa3 == 0.0) {
        // Original model: kappa(pi) = target fixes pi; debt follows from
        // d = (kappa(pi) - pi) / alpha, which diverges as alpha -> 0.
        if (alpha <= 0.0) {
            throw DivergentDebtError(
                "keen_fixed_point: fixed-point debt diverges at alpha <= 0 when "
                "investment depends on profit alone (kappa3 = 0)");
        }
        if (target <= kappa.kappa0) {
            throw NoRootError("keen_fixed_point: kappa never attains nu*(alpha+delta) = " +
                              std::to_string(target));
        }
        // kappa is strictly increasing in pi; bracket pi in [-10, 10].
        const auto residual = [&](double pi) { return kappa(pi, 0.0) - target; };
        const double lo = -10.0, hi = 10.0;
        if (!(residual(lo) < 0.0) || !(residual(hi) > 0.0)) {
            throw NoRootError("keen_fixed_point: no profit share in [-10, 10] solves "
                              "kappa(pi) = nu*(alpha+delta)");
        }
        fp.pi_bar = bisect(lo, hi, residual(lo), residual);
        fp.d_bar = (target - fp.pi_bar) / alpha;
    } else {
        // Generalized model: pi(d) = nu(alpha+delta) - alpha d; residual is
        // strictly decreasing in d, bracketed on [0, 1e6].
        const auto residual = [&](double d) {
            return kappa(target - alpha * d, d) - target;
        };
        const double lo = 0.0, hi = 1e6;
        if (!(residual(lo) > 0.0) || !(residual(hi) < 0.0)) {
            throw NoRootError(
                "keen_fixed_point: kappa(pi(d), d) = nu*(alpha+delta) has no root "
                "for d in [0, 1e6]");
        }
        fp.d_bar = bisect(lo, hi, residual(lo), residual);
        fp.pi_bar = target - alpha * fp.d_bar;
    }
    fp.omega_bar = 1.0 - fp.pi_bar - params.r * fp.d_bar;
    return fp;
}

std::vector<double> keen_debt_divergence(const ModelParams& params,
                                         const InvestmentFunction& kappa,
                                         const std::vector<double>& alphas) {
    if (kappa.kappa3 != 0.0) {
        throw DomainError("keen_debt_divergence: requires the original model (kappa3 = 0)");
    }
    std::vector<double> debts;
    debts.reserve(alphas.size());
    for (double alpha : alphas) {
        debts.push_back(keen_fixed_point(params, kappa, alpha).d_bar);
    }
    return debts;
}

KeenRun simulate_keen(const ModelParams& params, const InvestmentFunction& kappa,
                      const KeenState& initial, double alpha, double dt, double horizon,
                      int record_stride, bool u_chart) {
    if (!(dt > 0.0) || !(horizon > 0.0) || record_stride < 1) {
        throw ConfigError("simulate_keen: dt and horizon must be positive, stride >= 1");
    }
    const long n_steps = std::lround(horizon / dt);

    KeenRun run;
    run.u_chart = u_chart;
    std::array<double, 3> y = {initial.wage_share, initial.employment,
                               u_chart ? 1.0 / initial.debt : initial.debt};

    const auto record = [&](double t) {
        const double d = u_chart ? (y[2] > 0.0 ? 1.0 / y[2] : 0.0) : y[2];
        const double pi =
            u_chart && y[2] <= 0.0 ? -std::numeric_limits<double>::infinity()
                                   : 1.0 - y[0] - params.r * d;
        const double k = u_chart && y[2] <= 0.0 ? kappa.floor() : kappa(pi, d);
        run.t.push_back(t);
        run.wage_share.push_back(y[0]);
        run.employment.push_back(y[1]);
        run.debt_or_u.push_back(y[2]);
        run.profit_share.push_back(pi);
        run.growth.push_back(k / params.nu - params.delta);
        run.kappa.push_back(k);
    };

    record(0.0);
    for (long i = 0; i < n_steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        y = rk4_step<3>(y, t, dt, [&](const std::array<double, 3>& v, double) {
            if (u_chart) return keen_u_system_derivatives(params, kappa, v, alpha);
            return keen_derivatives(params, kappa, {v[0], v[1], v[2]}, alpha);
        });
        if ((i + 1) % record_stride == 0 || i + 1 == n_steps) {
            record(static_cast<double>(i + 1) * dt);
        }
    }
    return run;
}

InfiniteDebtReport infinite_debt_attractive(const ModelParams& params,
                                            const InvestmentFunction& kappa,
                                            double alpha) {
    const double floor = kappa.floor();
    InfiniteDebtReport report;
    report.diagonal = {phillips(params.phillips, 0.0) - alpha,
                       (floor - params.nu * (alpha + params.delta)) / params.nu,
                       (floor - params.nu * (params.r + params.delta)) / params.nu};
    report.attractive = report.diagonal[0] < 0.0 && report.diagonal[1] < 0.0 &&
                        report.diagonal[2] < 0.0;
    return report;
}

}  // namespace minsky
