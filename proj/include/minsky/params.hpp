#pragma once

namespace minsky {

// Wage growth as a function of the employment rate:
//   phi(lambda) = c1 * exp(c2 * (lambda - c3)) - c4
// Defaults give phi(0.95) = 0 and phi(0) ~ -0.01.
struct PhillipsCurve {
    double c1 = 0.01;   // amplitude
    double c2 = 50.0;   // slope
    double c3 = 0.95;   // pivot employment rate
    double c4 = 0.01;   // offset
};

// Structural and behavioural constants of the model. theta1/theta2 set the
// speeds at which debt chases target debt and target debt chases the
// benchmark d0 + eta1*g + eta2*pi. population and y0 only scale the
// reconstructed level series; the normalized dynamics are closed without them.
struct ModelParams {
    double r = 0.05;        // interest rate on loans, 1/year
    double delta = 0.07;    // capital depreciation rate, 1/year
    double nu = 3.0;        // capital-to-output ratio, years
    double theta1 = 0.25;   // debt-adjustment speed, 1/year
    double theta2 = 0.25;   // target-debt-adjustment speed, 1/year
    double eta1 = 5.0;      // benchmark-debt sensitivity to growth, years
    double eta2 = 2.0;      // benchmark-debt sensitivity to profit share
    double d0 = 0.5;        // benchmark-debt constant
    PhillipsCurve phillips{};
    double population = 1.0;  // constant labour force N
    double y0 = 1.0;          // initial output Y(0)
};

// Throws ConfigError naming the offending field.
void validate(const PhillipsCurve& curve);
void validate(const ModelParams& params);

}  // namespace minsky
