#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lfzero/descriptor.hpp"
#include "lfzero/test_function.hpp"
#include "lfzero/zeros_io.hpp"

namespace lfzero {

struct TermGroup {
    std::string label;
    std::complex<double> value;
};

// Both sides of the explicit formula for one (f, u, v) evaluation, with the
// arithmetic side broken into its term groups.  arithmetic_side always
// equals the sum of term_breakdown; residual = zero_side - arithmetic_side
// (zero when only one side has been evaluated).
struct ExplicitFormulaReport {
    std::complex<double> zero_side{0.0, 0.0};
    std::complex<double> arithmetic_side{0.0, 0.0};
    std::vector<TermGroup> term_breakdown;
    std::complex<double> residual{0.0, 0.0};
    long prime_terms_used = 0;  // truncation actually applied to the n-sums
};

// Zero side: sum over listed zeros rho = beta + i gamma with gamma <= T of
//   e^{v z} u Phi(u z) + (conjugate zero),   z = (beta - 1/2) + i gamma,
// folded to 2 Re(...) per listed zero (f is real-valued, so Phi(conj s) =
// conj Phi(s)).  Throws CoverageError when T exceeds the table.
std::complex<double> zero_side(const ZeroTable& zeros, const TestFunction& f,
                               double u, double v, double T);

// Order-of-magnitude gauge of the zero-side truncation: ten times the summed
// term magnitudes over the trailing window gamma in (0.9 T, T].  For a
// ~gamma^{-2} transform decay (biexp) the infinite tail is ~9x that window,
// so the gauge is a mild overestimate; for super-polynomial decay (gaussian,
// bump) it vanishes along with the tail.  Feeds closure tolerances, never
// the computed values.
double zero_side_tail_gauge(const ZeroTable& zeros, const TestFunction& f,
                            double u, double v, double T);

// Arithmetic side: the eight term groups (two prime sums, two pole terms,
// the log Q term, the digamma terms, two gamma-factor integrals).  u in
// (0, 1]; n_max > 0 overrides the automatic prime-sum truncation.  Both
// prime sums and the truncation rule are detailed in weil.cpp.
ExplicitFormulaReport arithmetic_side(const SelbergDescriptor& desc,
                                      const TestFunction& f, double u, double v,
                                      long n_max = 0,
                                      const QuadratureSpec& spec = {});

// Evaluates both sides and fills residual = zero_side - arithmetic_side.
ExplicitFormulaReport weil_closure(const ZeroTable& zeros,
                                   const SelbergDescriptor& desc,
                                   const TestFunction& f, double u, double v,
                                   double T, long n_max = 0,
                                   const QuadratureSpec& spec = {});

// Small-u leading behaviour of the zero side, classified by v (tolerance
// 1e-12 against log m / -log m):
//   v = 0:        f(0)[2 log Q - d_F log u] + 2 sum_j lambda_j L1(f, lambda_j)
//                 where L1 is the lemma1_rhs integral (the remainder is O(u))
//   v = log m:    -Lambda_F(m)/sqrt(m) f(0)
//   v = -log m:   -conj(Lambda_F(m))/sqrt(m) f(0)
//   otherwise:    0
// Requires u in (0, 1/2).
std::complex<double> thm2_prediction(const SelbergDescriptor& desc,
                                     const TestFunction& f, double u, double v);

struct Thm3Report {
    double value = 0.0;            // zero_sum - smooth_integral
    double zero_sum = 0.0;         // u * sum_{gamma <= T_max} C(gamma)
    double smooth_integral = 0.0;  // u * int_0^{T_max} s'(T) C(T) dT
    long zeros_used = 0;
};

// The error-term integral -u int_0^inf (N_F(T) - smooth(T)) C'(T) dT with
// C(T) = fourier(-uT) + fourier(uT), evaluated by parts: jumps of the step
// function contribute point values u C(gamma_r) and the smooth density
// s'(T) = (d_F/2pi) log(T/2pi) + (log q_F)/2pi integrates against C.
// Requires an on-line zero table (the step function lives on the critical
// line) and throws CoverageError when the fourier mass beyond u*T_max
// exceeds 1e-8.
Thm3Report thm3_error_report(const SelbergDescriptor& desc,
                             const TestFunction& f, double u,
                             const ZeroTable& zeros, double T_max);

double thm3_error_integral(const SelbergDescriptor& desc, const TestFunction& f,
                           double u, const ZeroTable& zeros, double T_max);

}  // namespace lfzero
