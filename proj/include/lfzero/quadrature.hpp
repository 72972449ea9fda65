#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace lfzero {

// Tolerances and budget for the adaptive integrator.  Every integral in the
// library routes through these so accuracy/runtime trade-offs are set in one
// place and can be overridden per call from the CLI.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
};

struct IntegrationResult {
    std::complex<double> value{0.0, 0.0};
    double abs_error = 0.0;      // error estimate actually achieved
    std::size_t evaluations = 0;
    int subdivisions = 0;
};

// Adaptive Gauss-Legendre 15/31 on [a, b]: each panel is estimated with
// 15- and 31-point rules, the difference drives worst-panel bisection.
// Nodes are interior, so integrands only defined on the open interval
// (removable endpoint limits, log endpoints) are fine.  `initial_panels`
// pre-splits [a, b] before adapting; callers integrating against an
// oscillation e^{i omega t} pass ~(b-a)|omega|/pi panels so the error
// estimate sees less than a period per panel.  Throws QuadratureError if
// the budget runs out.
IntegrationResult integrate(const std::function<std::complex<double>(double)>& f,
                            double a, double b,
                            const QuadratureSpec& spec = {},
                            int initial_panels = 1);

IntegrationResult integrate_real(const std::function<double(double)>& f,
                                 double a, double b,
                                 const QuadratureSpec& spec = {},
                                 int initial_panels = 1);

// Tail cutoff rules: smallest finite upper limit beyond which the named
// envelope contributes less than `tail_tol` in absolute value.
namespace tail_cutoff {

// envelope ~ amp * e^{-rate x}
double exponential(double rate, double amp, double tail_tol);

// envelope ~ amp * e^{-u t^2}, cutoff in |t|
double gaussian(double u, double amp, double tail_tol);

}  // namespace tail_cutoff

}  // namespace lfzero
