#pragma once

#include <complex>
#include <functional>
#include <string>

#include "lfzero/quadrature.hpp"

namespace lfzero {

// An admissible test function for the explicit formula: continuous f of
// bounded variation with a two-sided decay bound |f(x)| <= c e^{-(1/2+b)|x|},
// b > 0, together with its two transforms,
//
//   transform(s) = int f(x) e^{x s} dx      (|Re s| < 1/2 + b)
//   fourier(t)   = int f(x) e^{-i t x} dx   (= transform(-i t))
//
// Bundled members (parse_test_function):
//   gaussian:w=W   f(x) = e^{-x^2/(4W)} / sqrt(4 pi W), transform e^{W s^2}
//   biexp:a=A      f(x) = e^{-A|x|},                    transform 2A/(A^2-s^2)
//   bump:r=R       C^inf bump supported on [-R, R]; transforms numeric
struct TestFunction {
    std::string spec;
    std::function<double(double)> f;
    std::function<std::complex<double>(std::complex<double>)> transform;
    std::function<std::complex<double>(double)> fourier;
    double f0 = 0.0;        // f(0); the bundled family is continuous there
    double decay_c = 0.0;   // envelope amplitude
    double decay_b = 0.0;   // envelope margin b
    double support_radius = 0.0;   // > 0 for compactly supported members
    bool closed_transform = false; // transforms in closed form vs quadrature

    // Family-exact tail rule: weighted_tail(q, tol) returns the smallest X
    // with int_X^inf e^{q t} |f(t)| dt <= tol.  Optional; callers go through
    // weighted_tail_cutoff, which falls back to the decay envelope.
    std::function<double(double, double)> weighted_tail;
};

TestFunction gaussian_test_function(double w);
TestFunction biexp_test_function(double a);
TestFunction bump_test_function(double r);

// "gaussian:w=0.05", "biexp:a=1.2", "bump:r=3" (also accepts "gaussian:0.05").
TestFunction parse_test_function(const std::string& spec);

// Grid checks of the admissibility conditions: the decay envelope and a
// finite-difference Lipschitz bound on |x| <= 40 (4000 points), and for
// compact-support members that f vanishes outside the stated radius.
// Throws ConditionError naming the first violated condition.
void validate_conditions(const TestFunction& tf);

// Decay-based cutoff: smallest X with the envelope tail of |f| (and of the
// e^{x/2}-weighted pole terms) below tail_tol beyond X.
double test_function_cutoff(const TestFunction& tf, double tail_tol);

// Smallest X with int_X^inf e^{q t} |f(t)| dt <= tail_tol.  Uses the
// family-exact rule when the member is set, otherwise the decay envelope
// (which then requires q < 1/2 + decay_b).  Drives prime-sum truncation,
// where the e^{(log n)/2} weight competes with the decay of f.
double weighted_tail_cutoff(const TestFunction& tf, double q, double tail_tol);

}  // namespace lfzero
