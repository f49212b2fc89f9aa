#include "minsky/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace minsky {

FixedPoint fixed_point(const ModelParams& params, double alpha) {
    const double lambda_bar = phillips_inverse(params.phillips, alpha);

    const double denom = 1.0 + params.eta2 * alpha;
    if (std::abs(denom) < 1e-12) {
        throw SingularityError("fixed_point: 1 + eta2*alpha vanishes");
    }
    const double d_bar =
        (params.d0 + params.eta1 * alpha + params.eta2 * params.nu * (params.delta + alpha)) /
        denom;
    if (std::abs(params.nu - d_bar) <= kSingularityEps) {
        throw SingularityError("fixed_point: d_bar coincides with nu");
    }

    FixedPoint fp;
    fp.lambda_bar = lambda_bar;
    fp.d_bar = d_bar;
    fp.omega_bar =
        1.0 - (alpha + params.delta) * params.nu - (params.r - alpha) * d_bar;
    fp.pi_bar = params.delta * params.nu + alpha * (params.nu - d_bar);
    fp.g_bar = alpha;
    return fp;
}

JacobianReport jacobian_at_fixed_point(const ModelParams& params, double alpha) {
    const FixedPoint fp = fixed_point(params, alpha);
    const double inv_nu_d = 1.0 / (params.nu - fp.d_bar);

    KConstants k;
    k.k1 = fp.lambda_bar * inv_nu_d;
    k.k2 = params.r + params.theta1 - alpha;
    k.k3 = params.eta2 * params.theta2;
    k.k4 = fp.omega_bar * phillips_slope(params.phillips, fp.lambda_bar);
    k.k5 = params.eta1 * params.theta2 * inv_nu_d;

    const double th1 = params.theta1;
    const double th2 = params.theta2;
    Matrix4 j{{{th1 * k.k5 - th2, -k.k2 * k.k5 - k.k3 * params.r, 0.0, -k.k5 - k.k3},
               {th1, -th1, 0.0, 0.0},
               {th1 * k.k1, -k.k2 * k.k1, 0.0, -k.k1},
               {0.0, 0.0, k.k4, 0.0}}};
    return {j, k};
}

QuarticCoeffs characteristic_polynomial(const ModelParams& params, const KConstants& k) {
    const double th1 = params.theta1;
    const double th2 = params.theta2;
    QuarticCoeffs c;
    c.p3 = th2 + th1 * (1.0 - k.k5);
    c.p2 = k.k1 * k.k4 + th1 * th2 - th1 * th1 * k.k5 +
           th1 * (k.k2 * k.k5 + k.k3 * params.r);
    c.p1 = k.k1 * k.k4 * (th1 * (1.0 + k.k3) + th2);
    c.p0 = k.k1 * k.k4 * th1 * (k.k3 * (params.r + th1 - k.k2) + th2);
    return c;
}

std::array<double, 6> routh_hurwitz_quantities(const QuarticCoeffs& c) {
    return {c.p0,
            c.p1,
            c.p2,
            c.p3,
            c.p3 * c.p2 - c.p1,
            c.p3 * c.p2 * c.p1 - c.p1 * c.p1 - c.p3 * c.p3 * c.p0};
}

bool routh_hurwitz(const QuarticCoeffs& c) {
    for (double q : routh_hurwitz_quantities(c)) {
        if (!(q > 0.0)) return false;
    }
    return true;
}

Attractivity routh_hurwitz_verdict(const QuarticCoeffs& c, double margin) {
    for (double q : routh_hurwitz_quantities(c)) {
        if (std::abs(q) < margin) return Attractivity::Marginal;
    }
    return routh_hurwitz(c) ? Attractivity::Attractive : Attractivity::Repulsive;
}

namespace {

std::complex<double> eval_quartic(const QuarticCoeffs& c, std::complex<double> x) {
    return (((x + c.p3) * x + c.p2) * x + c.p1) * x + c.p0;
}

}  // namespace

std::array<std::complex<double>, 4> quartic_roots(const QuarticCoeffs& c) {
    constexpr int kMaxSweeps = 500;
    constexpr double kStepTol = 1e-10;

    const double scale = std::max(
        {1.0, std::abs(c.p3), std::abs(c.p2), std::abs(c.p1), std::abs(c.p0)});

    // Aberth-style starting points: powers of 0.4 + 0.9i scaled to the
    // Cauchy root bound.
    const std::complex<double> base(0.4, 0.9);
    std::array<std::complex<double>, 4> z;
    std::complex<double> p = 1.0;
    for (auto& zi : z) {
        p *= base;
        zi = p * (1.0 + scale);
    }

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double max_step = 0.0;
        for (int i = 0; i < 4; ++i) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < 4; ++j) {
                if (j != i) denom *= z[i] - z[j];
            }
            if (denom == std::complex<double>(0.0, 0.0)) {
                z[i] += std::complex<double>(1e-8, 1e-8);
                max_step = 1.0;
                continue;
            }
            const std::complex<double> step = eval_quartic(c, z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < kStepTol * std::max(1.0, scale)) break;
    }

    const double residual_tol = 1e-8 * scale;
    for (const auto& zi : z) {
        if (!(std::abs(eval_quartic(c, zi)) < residual_tol)) {
            throw ConvergenceError("quartic_roots: residual " +
                                   std::to_string(std::abs(eval_quartic(c, zi))) +
                                   " exceeds tolerance");
        }
    }
    return z;
}

FixedPointReport analyze_fixed_point(const ModelParams& params, double alpha) {
    FixedPointReport report;
    report.point = fixed_point(params, alpha);
    const JacobianReport jac = jacobian_at_fixed_point(params, alpha);
    report.jacobian = jac.jacobian;
    report.k = jac.k;
    report.char_poly = characteristic_polynomial(params, jac.k);
    report.routh_hurwitz_attractive = routh_hurwitz(report.char_poly);
    report.eigenvalues = quartic_roots(report.char_poly);
    report.eigen_attractive = true;
    for (const auto& ev : report.eigenvalues) {
        if (!(ev.real() < 0.0)) report.eigen_attractive = false;
    }
    report.verdict = routh_hurwitz_verdict(report.char_poly);
    return report;
}

}  // namespace minsky
