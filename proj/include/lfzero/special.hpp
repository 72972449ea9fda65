#pragma once

#include <complex>

#include "lfzero/quadrature.hpp"
#include "lfzero/test_function.hpp"

namespace lfzero {

// Gamma'/Gamma on Re z > 0 (DomainError otherwise): downward recurrence to
// Re z >= 10, then the Stirling series.  Absolute accuracy ~1e-13.
std::complex<double> digamma(std::complex<double> z);

// int e^{-u t^2 + i t a} dt = sqrt(pi/u) e^{-a^2/(4u)}, u > 0.
std::complex<double> gaussian_fourier(double u, std::complex<double> a);

// The gamma-side kernel h(x) = 1/(e^x - 1) - 1/x + 1, extended by h(0) = 1/2;
// smooth and increasing from 1/2 to 1 on [0, inf).  Evaluated by series below
// x = 0.1 to dodge the 0/0.
struct KernelH {
    double operator()(double x) const;
};
double kernel_h(double x);

// I(lambda, mu; u, v) =
//     int_0^inf h(x) e^{-mu x}            e^{-(v+lambda x)^2/4u}/sqrt(4 pi u) dx
//   + int_0^inf h(x) e^{-(lambda+conj mu) x} e^{-(v-lambda x)^2/4u}/sqrt(4 pi u) dx
std::complex<double> kernel_integral_I(double lambda, std::complex<double> mu,
                                       double u, double v,
                                       const QuadratureSpec& spec = {});

// int_R log|lambda/2 + mu + i lambda t| e^{-u t^2 + i t (u - v)} dt.
// Splits at the oscillation scale of (u - v) before adapting.
std::complex<double> log_modulus_integral(double lambda, std::complex<double> mu,
                                          double u, double v,
                                          const QuadratureSpec& spec = {});

// sum_{l>=0} (l + a)^{-k}, k >= 2, Re a > 0: direct to l = 10^5 plus an
// Euler-Maclaurin tail; relative accuracy ~1e-12.
std::complex<double> hurwitz_power_sum(std::complex<double> a, int k);

// -1/a + sum_{l>=1} a/(l(l+a))  (equals digamma(1+a) + gamma0 - 1/a).
std::complex<double> psi_series_sum(std::complex<double> a);

// Two sides of the log-weighted transform identity
//   (1/(pi lambda)) int_0^inf fhat(-t/lambda) log t dt
//     = -int_0^inf ((f(lambda x)+f(-lambda x))/2 - f(0) e^{-x}) dx/x
// and their absolute difference.  Used as the self-check of the two
// quadrature routes (log-singular split + exponential-substitution tail on
// the left, regularized integrand on the right).
double lemma1_lhs(const TestFunction& f, double lambda, const QuadratureSpec& spec = {});
double lemma1_rhs(const TestFunction& f, double lambda, const QuadratureSpec& spec = {});
double lemma1_identity_residual(const TestFunction& f, double lambda,
                                const QuadratureSpec& spec = {});

// Euler-Mascheroni constant, used throughout the asymptotic main terms.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace lfzero
