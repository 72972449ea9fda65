#pragma once

#include <complex>
#include <utility>

#include "lfzero/descriptor.hpp"
#include "lfzero/quadrature.hpp"
#include "lfzero/zeros_io.hpp"

namespace lfzero {

struct ZeroSumParams {
    double u = 0.0;   // Gaussian width
    double v = 0.0;   // shift: canonical values 0, u, +-log m
    double T = 0.0;   // ordinate cutoff
    bool reproducible = true;  // strictly sequential summation order
};

struct SumReport {
    std::complex<double> computed = 0.0;
    std::complex<double> predicted = 0.0;
    std::complex<double> residual = 0.0;  // computed - predicted
    ZeroSumParams params;
    long zero_count_used = 0;
    double truncation_bound = 0.0;
};

// Magnitude bound on the dropped |gamma| > T tail of the Gaussian zero sum:
// e^{-u T^2} (log T)^2 / T times the beta-dependent scale factor
// (e^{u/4 + |v|/2} under RH, e^{u + |v|} when betas may range over (0,1)).
double truncation_bound(double u, double v, double T, bool off_rh = false);

// sum over |gamma| <= T of e^{u rho^2 - v rho}, each listed gamma > 0 paired
// with its conjugate, compensated summation in ascending gamma.
std::complex<double> gaussian_zero_sum(const ZeroTable& zeros,
                                       const ZeroSumParams& params);

// d_F/sqrt(16 pi u) (log(1/u) - gamma0) + log(q_F/(4 pi)^{d_F})/sqrt(4 pi u);
// the shared v=0 and v=u main value.
double thm1_main_term(const SelbergDescriptor& desc, double u);

// Predicted limit of the shifted sums: v = -log m ("plus", weight m^rho)
// gives -Lambda_F(m)/sqrt(4 pi u); v = +log m ("minus", weight m^-rho)
// gives -conj(Lambda_F(m))/(m sqrt(4 pi u)).
enum class PrimeSign { plus, minus };
std::complex<double> thm1_prime_term(const SelbergDescriptor& desc, double u,
                                     long m, PrimeSign sign);

// Smallest n_max with (|v| + log n_max)^2 / 4u > 40 for both prime-sum
// Gaussian centers (-v and +v), so every dropped term is < 1e-16.
long lemma2_default_n_max(double u, double v);

struct Lemma2Breakdown {
    std::complex<double> pole_term = 0.0;        // m_F e^{u-v}
    std::complex<double> logq_term = 0.0;        // 2 log Q Gaussian
    std::complex<double> constant_term = 0.0;    // digamma-pole crossings
    std::complex<double> prime_sum = 0.0;        // -Lambda_F(n) Gaussians
    std::complex<double> conj_prime_sum = 0.0;   // -conj(Lambda_F(n))/n ...
    std::complex<double> log_modulus_term = 0.0; // e^{u/4-v/2}/pi weighted
    std::complex<double> kernel_term = 0.0;      // -sum lambda_j I(lambda_j, mu_j)
    std::complex<double> total = 0.0;
    long n_max_used = 0;
};

// Every term of the explicit-formula right side except the truncation error.
// n_max <= 0 selects lemma2_default_n_max.
Lemma2Breakdown lemma2_rhs_breakdown(const SelbergDescriptor& desc, double u,
                                     double v, long n_max = 0,
                                     const QuadratureSpec& spec = {});
std::complex<double> lemma2_rhs(const SelbergDescriptor& desc, double u,
                                double v, long n_max = 0,
                                const QuadratureSpec& spec = {});

// computed = sum over |gamma| <= T of n^rho (conjugate-paired);
// predicted = -(T/pi) Lambda_F(n).
std::pair<std::complex<double>, std::complex<double>> landau_sum(
    const ZeroTable& zeros, const SelbergDescriptor& desc, long n, double T);

}  // namespace lfzero
