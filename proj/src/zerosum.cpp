// Gaussian-weighted zero sums and the explicit-formula right side they are
// tested against.
//
// Every listed ordinate gamma > 0 is paired with its conjugate zero, so a
// pair contributes 2 Re e^{u rho^2 - v rho} with rho = beta + i gamma:
//   Re(u rho^2 - v rho) = u(beta^2 - gamma^2) - v beta
//   Im(u rho^2 - v rho) = (2 u beta - v) gamma
// The dropped tail beyond T is below
//   e^{-u T^2} (log T)^2 / T * sup_beta e^{u beta^2 - v beta},
// the classical Gaussian-decay count bound; the beta sup is e^{u/4 + |v|/2}
// on the critical line and e^{u + |v|} for beta free in (0,1).

#include "lfzero/zerosum.hpp"

#include <algorithm>
#include <cmath>

#include "lfzero/errors.hpp"
#include "lfzero/special.hpp"
#include "summation.hpp"

namespace lfzero {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_unit_interval(double u, const char* who) {
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError(std::string(who) + " requires u in (0,1)");
    }
}

const CoeffProvider& coeffs_of(const SelbergDescriptor& desc) {
    if (!desc.coeffs) {
        throw DomainError("descriptor '" + desc.name +
                          "' has no coefficient provider");
    }
    return *desc.coeffs;
}

long checked_count(const ZeroTable& zeros, double T) {
    if (!(T >= 1.0)) {
        throw DomainError("zero sums require T >= 1");
    }
    if (T > zeros.max_ordinate) {
        throw CoverageError("zero table covers gamma <= " +
                            std::to_string(zeros.max_ordinate) +
                            ", requested T = " + std::to_string(T));
    }
    const auto it = std::upper_bound(zeros.ordinates.begin(),
                                     zeros.ordinates.end(), T);
    return static_cast<long>(it - zeros.ordinates.begin());
}

}  // namespace

double truncation_bound(double u, double v, double T, bool off_rh) {
    if (!(u > 0.0) || !(T > 1.0)) {
        throw DomainError("truncation_bound requires u > 0 and T > 1");
    }
    const double scale =
        off_rh ? std::exp(u + std::abs(v)) : std::exp(0.25 * u + 0.5 * std::abs(v));
    const double lt = std::log(T);
    return std::exp(-u * T * T) * lt * lt / T * scale;
}

std::complex<double> gaussian_zero_sum(const ZeroTable& zeros,
                                       const ZeroSumParams& params) {
    if (!(params.u > 0.0)) {
        throw DomainError("gaussian_zero_sum requires u > 0");
    }
    const long count = checked_count(zeros, params.T);
    const double u = params.u;
    const double v = params.v;

    auto pair_term = [&](long i) {
        const double gamma = zeros.ordinates[static_cast<std::size_t>(i)];
        const double beta = zeros.beta(static_cast<std::size_t>(i));
        const double re = u * (beta * beta - gamma * gamma) - v * beta;
        const double im = (2.0 * u * beta - v) * gamma;
        return 2.0 * std::exp(re) * std::cos(im);
    };

    detail::NeumaierSum acc;
    if (params.reproducible) {
        for (long i = 0; i < count; ++i) acc.add(pair_term(i));
    } else {
        // Blocked reduction: each block compensated independently, then
        // combined in index order.
        constexpr long kBlock = 1024;
        for (long start = 0; start < count; start += kBlock) {
            detail::NeumaierSum block;
            const long stop = std::min(count, start + kBlock);
            for (long i = start; i < stop; ++i) block.add(pair_term(i));
            acc.add(block.value());
        }
    }
    return {acc.value(), 0.0};
}

double thm1_main_term(const SelbergDescriptor& desc, double u) {
    require_unit_interval(u, "thm1_main_term");
    const double d = degree(desc);
    const double lq = log_conductor(desc);
    const double first =
        d / std::sqrt(16.0 * kPi * u) * (std::log(1.0 / u) - kEulerGamma);
    const double second =
        (lq - d * std::log(4.0 * kPi)) / std::sqrt(4.0 * kPi * u);
    return first + second;
}

std::complex<double> thm1_prime_term(const SelbergDescriptor& desc, double u,
                                     long m, PrimeSign sign) {
    require_unit_interval(u, "thm1_prime_term");
    if (m < 2) {
        throw DomainError("thm1_prime_term requires m >= 2");
    }
    const std::complex<double> lam = coeffs_of(desc).lambda_F(m);
    const double root = std::sqrt(4.0 * kPi * u);
    if (sign == PrimeSign::plus) {
        return -lam / root;
    }
    return -std::conj(lam) / (static_cast<double>(m) * root);
}

long lemma2_default_n_max(double u, double v) {
    if (!(u > 0.0)) {
        throw DomainError("lemma2_default_n_max requires u > 0");
    }
    // Both prime-sum Gaussians must be in their e^{-40} tails at n_max:
    // centers -v (direct sum) and +v (conjugate sum) in log n.
    const double reach = std::sqrt(160.0 * u);
    const double log_n = std::abs(v) + reach;
    if (log_n > 15.0) {
        throw DomainError(
            "lemma2_rhs shift needs prime sums past n = e^15; outside desk scale");
    }
    return static_cast<long>(std::ceil(std::exp(log_n))) + 1;
}

Lemma2Breakdown lemma2_rhs_breakdown(const SelbergDescriptor& desc, double u,
                                     double v, long n_max,
                                     const QuadratureSpec& spec) {
    require_unit_interval(u, "lemma2_rhs");
    validate(desc);
    const CoeffProvider& coeffs = coeffs_of(desc);
    if (n_max <= 0) n_max = lemma2_default_n_max(u, v);

    Lemma2Breakdown out;
    out.n_max_used = n_max;
    const double root = std::sqrt(4.0 * kPi * u);

    out.pole_term = desc.pole_order * std::exp(u - v);
    out.logq_term =
        2.0 * std::log(desc.q_scale) / root * std::exp(-v * v / (4.0 * u));
    // Moving the digamma integrals from Re s = -0 to the critical line crosses
    // the Gamma(lambda s + mu) pole at s0 = -mu/lambda exactly when Re mu = 0;
    // each crossing contributes e^{u s0^2 - v s0}.
    std::complex<double> crossings = 0.0;
    for (const auto& g : desc.gamma_factors) {
        if (std::real(g.mu) == 0.0) {
            const std::complex<double> s0 = -g.mu / g.lambda;
            crossings += std::exp(u * s0 * s0 - v * s0);
        }
    }
    out.constant_term = crossings;

    detail::NeumaierSumC direct, conjugate;
    for (long n = 2; n <= n_max; ++n) {
        const std::complex<double> lam = coeffs.lambda_F(n);
        if (lam == std::complex<double>(0.0, 0.0)) continue;
        const double log_n = std::log(static_cast<double>(n));
        const double e_direct = (v + log_n) * (v + log_n) / (4.0 * u);
        if (e_direct < 60.0) {
            direct.add(lam * std::exp(-e_direct));
        }
        const double e_conj = (v - log_n) * (v - log_n) / (4.0 * u);
        if (e_conj < 60.0) {
            conjugate.add(std::conj(lam) / static_cast<double>(n) *
                          std::exp(-e_conj));
        }
    }
    out.prime_sum = -direct.value() / root;
    out.conj_prime_sum = -conjugate.value() / root;

    std::complex<double> log_modulus = 0.0;
    std::complex<double> kernel = 0.0;
    for (const auto& g : desc.gamma_factors) {
        log_modulus += g.lambda * log_modulus_integral(g.lambda, g.mu, u, v, spec);
        kernel += g.lambda * kernel_integral_I(g.lambda, g.mu, u, v, spec);
    }
    out.log_modulus_term = std::exp(0.25 * u - 0.5 * v) / kPi * log_modulus;
    out.kernel_term = -kernel;

    out.total = out.pole_term + out.logq_term + out.constant_term +
                out.prime_sum + out.conj_prime_sum + out.log_modulus_term +
                out.kernel_term;
    return out;
}

std::complex<double> lemma2_rhs(const SelbergDescriptor& desc, double u,
                                double v, long n_max,
                                const QuadratureSpec& spec) {
    return lemma2_rhs_breakdown(desc, u, v, n_max, spec).total;
}

std::pair<std::complex<double>, std::complex<double>> landau_sum(
    const ZeroTable& zeros, const SelbergDescriptor& desc, long n, double T) {
    if (n < 2) {
        throw DomainError("landau_sum requires n >= 2");
    }
    const long count = checked_count(zeros, T);
    const double log_n = std::log(static_cast<double>(n));

    detail::NeumaierSum acc;
    for (long i = 0; i < count; ++i) {
        const double gamma = zeros.ordinates[static_cast<std::size_t>(i)];
        const double beta = zeros.beta(static_cast<std::size_t>(i));
        acc.add(2.0 * std::exp(beta * log_n) * std::cos(gamma * log_n));
    }
    const std::complex<double> predicted =
        -(T / kPi) * coeffs_of(desc).lambda_F(n);
    return {std::complex<double>(acc.value(), 0.0), predicted};
}

}  // namespace lfzero
