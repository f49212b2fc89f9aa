#pragma once

#include <array>
#include <complex>

#include "minsky/model.hpp"
#include "minsky/params.hpp"

namespace minsky {

using Matrix4 = std::array<std::array<double, 4>, 4>;

// The economically desirable fixed point of the four-equation system.
struct FixedPoint {
    double lambda_bar = 0.0;  // employment rate
    double d_bar = 0.0;       // debt ratio (= target debt ratio)
    double omega_bar = 0.0;   // wages share
    double pi_bar = 0.0;      // profit share
    double g_bar = 0.0;       // growth rate (= alpha)
};

// Shorthand constants of the Jacobian at the fixed point:
//   K1 = lambda_bar / (nu - d_bar)      K2 = r + theta1 - alpha
//   K3 = eta2 * theta2                  K4 = omega_bar * phi'(lambda_bar)
//   K5 = eta1 * theta2 / (nu - d_bar)
struct KConstants {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0, k5 = 0.0;
};

// Monic quartic x^4 + p3 x^3 + p2 x^2 + p1 x + p0.
struct QuarticCoeffs {
    double p3 = 0.0, p2 = 0.0, p1 = 0.0, p0 = 0.0;
};

enum class Attractivity { Attractive, Repulsive, Marginal };

struct JacobianReport {
    Matrix4 jacobian{};
    KConstants k{};
};

struct FixedPointReport {
    FixedPoint point{};
    Matrix4 jacobian{};
    KConstants k{};
    QuarticCoeffs char_poly{};
    bool routh_hurwitz_attractive = false;
    bool eigen_attractive = false;
    std::array<std::complex<double>, 4> eigenvalues{};
    Attractivity verdict = Attractivity::Repulsive;
};

// Closed-form fixed point. Throws DomainError when phillips_inverse is
// undefined, SingularityError when 1 + eta2*alpha vanishes or d_bar hits nu.
FixedPoint fixed_point(const ModelParams& params, double alpha);

// Analytic Jacobian at the fixed point, ordered (d_T, d, lambda, omega).
JacobianReport jacobian_at_fixed_point(const ModelParams& params, double alpha);

// Coefficients of det(xI - J) in closed form from the K constants.
QuarticCoeffs characteristic_polynomial(const ModelParams& params, const KConstants& k);

// The six Routh-Hurwitz quantities that must all be positive:
// p0, p1, p2, p3, p3*p2 - p1, p3*p2*p1 - p1^2 - p3^2*p0.
std::array<double, 6> routh_hurwitz_quantities(const QuarticCoeffs& c);

// True iff every Routh-Hurwitz quantity is positive (all roots in the open
// left half-plane).
bool routh_hurwitz(const QuarticCoeffs& c);

// Attractive/Repulsive by the Routh-Hurwitz test, Marginal when any quantity
// lies within `margin` of zero.
Attractivity routh_hurwitz_verdict(const QuarticCoeffs& c, double margin = 1e-9);

// Roots of the monic quartic by Durand-Kerner iteration (tolerance 1e-10,
// at most 500 sweeps). Throws ConvergenceError if a residual exceeds
// 1e-8 * max(1, |coefficients|).
std::array<std::complex<double>, 4> quartic_roots(const QuarticCoeffs& c);

// Full analysis: fixed point, Jacobian, characteristic polynomial, both
// attractivity tests and eigenvalues.
FixedPointReport analyze_fixed_point(const ModelParams& params, double alpha);

}  // namespace minsky
