#pragma once

#include <array>
#include <vector>

#include "minsky/model.hpp"
#include "minsky/params.hpp"

namespace minsky {

// Investment share of output as a function of profit share and debt:
//   kappa(pi, d) = kappa0 + kappa1 * exp(kappa2*pi - kappa3*d)
// kappa3 = 0 recovers the original model where investment depends on profit
// alone. The worst-case limit kappa(-inf, +inf) is kappa0.
struct InvestmentFunction {
    double kappa0 = 0.03;
    double kappa1 = 0.03;
    double kappa2 = 10.0;
    double kappa3 = 0.2;

    double operator()(double pi, double d) const;
    double floor() const { return kappa0; }
};

void validate(const InvestmentFunction& kappa);

// (omega, lambda, d) in the debt chart; (omega, lambda, u = 1/d) in the
// transformed chart.
struct KeenState {
    double wage_share = 0.0;
    double employment = 0.0;
    double debt = 0.0;
};

struct KeenFixedPoint {
    double lambda_bar = 0.0;
    double d_bar = 0.0;
    double omega_bar = 0.0;
    double pi_bar = 0.0;
};

// d/dt of (omega, lambda, d):
//   omega' = omega [phi(lambda) - alpha]
//   lambda' = lambda (g - alpha),  g = kappa(pi, d)/nu - delta
//   d' = kappa(pi, d) - pi - g d,  pi = 1 - omega - r d
std::array<double, 3> keen_derivatives(const ModelParams& params,
                                       const InvestmentFunction& kappa,
                                       const KeenState& state, double alpha);

// d/dt of (omega, lambda, u) in the u = 1/d chart. The plane u = 0 (infinite
// debt) is invariant; there kappa takes its floor value.
std::array<double, 3> keen_u_system_derivatives(const ModelParams& params,
                                                const InvestmentFunction& kappa,
                                                const std::array<double, 3>& state,
                                                double alpha);

// The economically desirable fixed point. For kappa3 = 0 this requires
// alpha > 0 (DivergentDebtError at alpha = 0, where fixed-point debt grows
// without bound); otherwise solves kappa(pi(d), d) = nu(alpha + delta) for d
// by bracketing bisection on d in [0, 1e6] to 1e-12.
KeenFixedPoint keen_fixed_point(const ModelParams& params,
                                const InvestmentFunction& kappa, double alpha);

// Fixed-point debt for each alpha in a decreasing positive sequence
// (original model only, kappa3 = 0).
std::vector<double> keen_debt_divergence(const ModelParams& params,
                                         const InvestmentFunction& kappa,
                                         const std::vector<double>& alphas);

// Fixed-step RK4 run of a Keen variant in either chart. The third state
// column holds d (debt chart) or u = 1/d (transformed chart).
struct KeenRun {
    bool u_chart = false;
    std::vector<double> t;
    std::vector<double> wage_share;
    std::vector<double> employment;
    std::vector<double> debt_or_u;
    std::vector<double> profit_share;
    std::vector<double> growth;
    std::vector<double> kappa;  // investment share of output
};

KeenRun simulate_keen(const ModelParams& params, const InvestmentFunction& kappa,
                      const KeenState& initial, double alpha, double dt, double horizon,
                      int record_stride, bool u_chart);

struct InfiniteDebtReport {
    bool attractive = false;
    std::array<double, 3> diagonal{};  // Jacobian diagonal at (0, 0, 0)
};

// Attractivity of the infinite-debt fixed point (omega, lambda, u) = (0,0,0):
// all three diagonal Jacobian entries negative, which for phi(0) < 0 and
// alpha, r >= 0 reduces to kappa0/nu < delta.
InfiniteDebtReport infinite_debt_attractive(const ModelParams& params,
                                            const InvestmentFunction& kappa,
                                            double alpha = 0.0);

}  // namespace minsky
