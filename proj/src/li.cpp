// Li coefficients three ways.
//
// Zero-sum definition.  lambda_F(n) = sum_rho [1 - (1 - 1/rho)^n].  A table
// row (beta, gamma) stands for the conjugate pair rho, conj(rho), whose
// joint contribution is 2 - 2 Re((1-1/rho)^n) — real, and for on-line zeros
// invariant under n -> -n (|1 - 1/rho| = 1 exactly when beta = 1/2, so the
// power is a pure phase).  Powers go through n * log(1 - 1/rho) to keep
// large n stable.  The truncation tail sum_{gamma>T} n/(1/4+gamma^2) is
// estimated from the table's own density: with N'(t) ~ a + b log t,
// int_T^inf N'(t) dt/(1/4+t^2) ~ (N'(T) + b)/T, and both N'(T) and the
// growth b come from counting zeros in trailing windows.
//
// Arithmetic formula.  lambda_F(-n) =
//     m_F + n (log Q - (d_F/2) gamma0)
//     - sum_{l=1}^n  C(n,l) (-1)^{l-1}/(l-1)!  S_l
//     + n sum_j lambda_j psi_series_sum(lambda_j + mu_j)
//     + sum_j sum_{k=2}^n C(n,k) (-lambda_j)^k hurwitz_power_sum(lambda_j+mu_j, k)
// where S_l are the extrapolated prime-sum limits.  The double sum enters
// with a plus sign: the classical n=2 value 0.0923457 pins it (the minus
// variant misses by exactly pi^2/4), and n=1 reproduces
// 1 + gamma0/2 - log(4 pi)/2 term by term.  The alternating binomial
// weights cancel to ~2^n, so accumulation runs in MPFR at working_digits
// with the largest term magnitude tracked; the inputs S_l and the Hurwitz
// values stay double precision, which the propagated error bar covers.
//
// Asymptotic.  lambda_F(-n) ~ (d_F/2) n log n + c_F n with
// c_F = (d_F/2)(gamma0 - 1) + log Q + sum_j lambda_j log lambda_j.

#include "lfzero/li.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "bigfloat.hpp"
#include "lfzero/coeffs.hpp"
#include "lfzero/errors.hpp"
#include "lfzero/special.hpp"
#include "summation.hpp"

namespace lfzero {

namespace {

using cplx = std::complex<double>;
using detail::BigFloat;
using detail::BigInt;
using detail::NeumaierSum;

constexpr long kArithmeticIndexCap = 150;

// Zeros per unit height near T, from the table itself.  Falls back to the
// global average when the trailing window is too thin.
double local_density(const ZeroTable& zeros, double T) {
    auto count_in = [&](double lo, double hi) {
        const auto& g = zeros.ordinates;
        return static_cast<double>(
            std::upper_bound(g.begin(), g.end(), hi) -
            std::upper_bound(g.begin(), g.end(), lo));
    };
    const double lo = 0.5 * T;
    const double in_window = count_in(lo, T);
    if (in_window >= 3.0) return in_window / (T - lo);
    if (zeros.max_ordinate > 0.0 && !zeros.ordinates.empty()) {
        return static_cast<double>(zeros.size()) / zeros.max_ordinate;
    }
    return 0.0;
}

// Omitted mass of the pair sum beyond T, per n^2.  A conjugate pair at
// height gamma contributes n^2 / gamma^2 + O(n^3 / gamma^3): expanding
// log(1 - 1/rho), the n Re(2/rho) = n / gamma^2 and
// -(n^2 - n) Re(1/rho^2) = (n^2 - n) / gamma^2 pieces add up.  Integrating
// against the density rho(gamma) gives about (rho(T) + rho') / T with rho'
// the growth per e-fold.
double pair_tail_base(const ZeroTable& zeros, double T) {
    const double den = local_density(zeros, T);
    const double den_half = local_density(zeros, 0.5 * T);
    const double growth = std::max(0.0, (den - den_half) / std::log(2.0));
    return (den + growth) / T;
}

cplx pair_power(double beta, double gamma, long n) {
    const cplx rho(beta, gamma);
    const cplx w = std::log(cplx(1.0, 0.0) - 1.0 / rho);
    return std::exp(static_cast<double>(n) * w);
}

}  // namespace

LiCoefficient li_zero_sum(const ZeroTable& zeros, long n, double T) {
    if (n == 0) throw DomainError("li_zero_sum: index must be nonzero");
    if (!(T > 0.0)) throw DomainError("li_zero_sum: T must be positive");
    if (T > zeros.max_ordinate * (1.0 + 1e-12)) {
        throw CoverageError("li_zero_sum: T exceeds the zero table (max " +
                            std::to_string(zeros.max_ordinate) + ")");
    }

    NeumaierSum acc;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const double gamma = zeros.ordinates[i];
        if (gamma > T) break;
        acc.add(2.0 - 2.0 * std::real(pair_power(zeros.beta(i), gamma, n)));
    }

    LiCoefficient out;
    out.n = n;
    out.method = LiMethod::ZeroSum;
    out.value = cplx(acc.value(), 0.0);
    const double dn = static_cast<double>(n);
    out.tail_estimate = dn * dn * pair_tail_base(zeros, T);
    // 1.5x headroom covers the window density estimates feeding the model
    out.error_bar = 1.5 * out.tail_estimate;
    return out;
}

LiCoefficient li_arithmetic(const SelbergDescriptor& desc, long n, double X,
                            const PrecisionContext& prec) {
    if (n < 1) throw DomainError("li_arithmetic: index must be >= 1");
    if (n > kArithmeticIndexCap) {
        throw DomainError("li_arithmetic: index beyond desk scale (max " +
                          std::to_string(kArithmeticIndexCap) + ")");
    }
    if (!(X >= 1e4)) throw DomainError("li_arithmetic: X must be at least 1e4");
    if (prec.working_digits < 15) {
        throw DomainError("li_arithmetic: working_digits must be at least 15");
    }
    if (n > 20 && prec.working_digits < 2 * n) {
        throw DomainError(
            "li_arithmetic: indices beyond 20 need working_digits >= 2n");
    }
    validate(desc);
    if (!desc.coeffs) {
        throw DomainError("li_arithmetic: descriptor " + desc.name +
                          " has no coefficient provider");
    }

    const auto sums =
        prime_sum_extrapolated_multi(*desc.coeffs, static_cast<int>(n), X);

    const mpfr_prec_t bits =
        static_cast<mpfr_prec_t>(prec.working_digits * 3.322) + 64;
    BigFloat acc_re(bits), acc_im(bits), weight(bits), tmp(bits), lam_pow(bits);
    BigInt binom, fact;

    double max_mag = 0.0;
    double bar = 0.0;
    auto add_term = [&](double re, double im) {
        mpfr_add_d(acc_re.get(), acc_re.get(), re, MPFR_RNDN);
        mpfr_add_d(acc_im.get(), acc_im.get(), im, MPFR_RNDN);
        max_mag = std::max(max_mag, std::hypot(re, im));
    };

    add_term(static_cast<double>(desc.pole_order), 0.0);
    add_term(static_cast<double>(n) *
                 (std::log(desc.q_scale) - 0.5 * degree(desc) * kEulerGamma),
             0.0);

    for (long l = 1; l <= n; ++l) {
        // term_l = (-1)^l C(n,l)/(l-1)! S_l  (outer minus folded in)
        mpz_bin_uiui(binom.get(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(l));
        mpz_fac_ui(fact.get(), static_cast<unsigned long>(l - 1));
        mpfr_set_z(weight.get(), binom.get(), MPFR_RNDN);
        mpfr_div_z(weight.get(), weight.get(), fact.get(), MPFR_RNDN);
        if (l % 2 == 1) mpfr_neg(weight.get(), weight.get(), MPFR_RNDN);

        const cplx s = sums[static_cast<std::size_t>(l - 1)].value;
        mpfr_mul_d(tmp.get(), weight.get(), s.real(), MPFR_RNDN);
        mpfr_add(acc_re.get(), acc_re.get(), tmp.get(), MPFR_RNDN);
        mpfr_mul_d(tmp.get(), weight.get(), s.imag(), MPFR_RNDN);
        mpfr_add(acc_im.get(), acc_im.get(), tmp.get(), MPFR_RNDN);

        const double w_abs = std::abs(mpfr_get_d(weight.get(), MPFR_RNDN));
        max_mag = std::max(max_mag, w_abs * std::abs(s));
        bar += w_abs * sums[static_cast<std::size_t>(l - 1)].error_bar;
    }

    for (const auto& g : desc.gamma_factors) {
        const cplx a = cplx(g.lambda, 0.0) + g.mu;
        const cplx psi_term =
            static_cast<double>(n) * g.lambda * psi_series_sum(a);
        add_term(psi_term.real(), psi_term.imag());

        for (long k = 2; k <= n; ++k) {
            mpz_bin_uiui(binom.get(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(k));
            mpfr_set_z(weight.get(), binom.get(), MPFR_RNDN);
            mpfr_set_d(lam_pow.get(), g.lambda, MPFR_RNDN);
            mpfr_pow_ui(lam_pow.get(), lam_pow.get(),
                        static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_mul(weight.get(), weight.get(), lam_pow.get(), MPFR_RNDN);
            if (k % 2 == 1) mpfr_neg(weight.get(), weight.get(), MPFR_RNDN);

            const cplx h = hurwitz_power_sum(a, static_cast<int>(k));
            mpfr_mul_d(tmp.get(), weight.get(), h.real(), MPFR_RNDN);
            mpfr_add(acc_re.get(), acc_re.get(), tmp.get(), MPFR_RNDN);
            mpfr_mul_d(tmp.get(), weight.get(), h.imag(), MPFR_RNDN);
            mpfr_add(acc_im.get(), acc_im.get(), tmp.get(), MPFR_RNDN);
            max_mag = std::max(
                max_mag,
                std::abs(mpfr_get_d(weight.get(), MPFR_RNDN)) * std::abs(h));
        }
    }

    LiCoefficient out;
    out.n = n;
    out.method = LiMethod::Arithmetic;
    out.value = cplx(acc_re.value(), acc_im.value());

    const double scale = std::max(std::abs(out.value), 1e-6);
    const double digits_lost =
        max_mag > scale ? std::log10(max_mag / scale) : 0.0;
    if (digits_lost > prec.working_digits - 12) {
        throw PrecisionError(
            "li_arithmetic: cancellation consumed " +
            std::to_string(digits_lost) + " of " +
            std::to_string(prec.working_digits) + " working digits");
    }

    // double-precision inputs (S_l, psi, Hurwitz) sit under the propagated
    // extrapolation bars; a flat allowance covers their rounding
    out.error_bar = bar + 1e-9 * static_cast<double>(n);
    return out;
}

double li_asymptotic(const SelbergDescriptor& desc, long n) {
    if (n < 1) throw DomainError("li_asymptotic: index must be >= 1");
    validate(desc);
    const double d = degree(desc);
    double c_f = 0.5 * d * (kEulerGamma - 1.0) + std::log(desc.q_scale);
    for (const auto& g : desc.gamma_factors) {
        c_f += g.lambda * std::log(g.lambda);
    }
    const double dn = static_cast<double>(n);
    return 0.5 * d * dn * std::log(dn) + c_f * dn;
}

std::vector<LiPositivityRow> li_positivity_report(const ZeroTable& zeros,
                                                  long n_max, double T) {
    if (n_max < 1) throw DomainError("li_positivity_report: n_max must be >= 1");
    std::vector<LiPositivityRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        const LiCoefficient c = li_zero_sum(zeros, n, T);
        rows.push_back({n, c.value.real(), c.error_bar, c.value.real() > 0.0});
    }
    return rows;
}

}  // namespace lfzero
