// Special-function toolbox shared by the sum, explicit-formula, and Li
// modules.
//
// Derivation notes for the less standard pieces:
//
//   digamma         psi(z) by the usual scheme: push Re z above 10 with
//                   psi(z) = psi(z + 1) - 1/z, then the asymptotic series
//                   psi(z) = log z - 1/(2z) - sum B_{2k} / (2k z^{2k}).
//                   With Re z >= 10 the series through B_14 leaves a
//                   remainder below 1e-15 relative.
//
//   kernel_h        h(x) = 1/(e^x - 1) - 1/x + 1, the bounded remainder of
//                   the Bose kernel after removing its pole.  Increasing
//                   from 1/2 at x = 0 to 1 at infinity.  Series below
//                   x = 0.1 to dodge the 0/0; the first omitted term (x^9)
//                   is < 3e-17 at the switch point.
//
//   kernel_integral_I
//                   I(lambda, mu; u, v) =
//                     int_0^inf h(x) e^{-mu x}            G(v + lambda x) dx
//                   + int_0^inf h(x) e^{-(lambda+conj mu) x} G(v - lambda x) dx
//                   where G(y) = e^{-y^2/4u} / sqrt(4 pi u).  Each integrand
//                   is a smooth envelope times a Gaussian bump of width
//                   ~ sqrt(2u)/lambda whose centre may sit inside the range;
//                   the integration range is pre-split around the bump so the
//                   adaptive pass cannot overlook it.
//
//   log_modulus_integral
//                   int_R log|lambda/2 + mu + i lambda t| e^{-u t^2 + i t (u - v)} dt.
//                   Smooth; the Gaussian factor sets the cutoff and the
//                   oscillation u - v sets the initial panel count.
//
//   hurwitz_power_sum
//                   sum_{l >= 0} (l + a)^{-k} for k >= 2: direct summation to
//                   l = 1e5, Euler-Maclaurin beyond.  The B_4 term of the
//                   tail correction is below 1e-25 of the total there.
//
//   lemma1_*        the two sides of the identity
//                   (1/(pi lambda)) int_0^inf fhat(-t/lambda) log t dt
//                     = - int_0^inf [ (f(lambda x) + f(-lambda x))/2
//                                     - f(0) e^{-x} ] dx / x,
//                   used as a cross-check between the Fourier and direct
//                   representations of the gamma-factor contribution.  The
//                   left side splits at t = 1 (the log singularity is
//                   integrated exactly against fhat(0)); the tail is summed
//                   in exponential blocks t = e^s until two consecutive
//                   blocks are negligible.  The right side removes the 0/0
//                   at the origin with expm1.

#include "lfzero/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lfzero/errors.hpp"
#include "lfzero/quadrature.hpp"
#include "summation.hpp"

namespace lfzero {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// B_{2k} / (2k) for the Stirling series of psi.
constexpr double kStirling[] = {
    1.0 / 12.0,        // B_2 / 2
    -1.0 / 120.0,      // B_4 / 4
    1.0 / 252.0,       // B_6 / 6
    -1.0 / 240.0,      // B_8 / 8
    1.0 / 132.0,       // B_10 / 10
    -691.0 / 32760.0,  // B_12 / 12
    1.0 / 12.0,        // B_14 / 14
};

}  // namespace

std::complex<double> digamma(std::complex<double> z) {
    if (!(z.real() > 0.0)) {
        throw DomainError("digamma requires Re z > 0");
    }
    std::complex<double> shift = 0.0;
    while (z.real() < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> series = 0.0;
    std::complex<double> power = inv2;
    for (double coeff : kStirling) {
        series += coeff * power;
        power *= inv2;
    }
    return std::log(z) - 0.5 * inv - series + shift;
}

std::complex<double> gaussian_fourier(double u, std::complex<double> a) {
    if (!(u > 0.0)) {
        throw DomainError("gaussian_fourier requires u > 0");
    }
    return std::sqrt(kPi / u) * std::exp(-a * a / (4.0 * u));
}

double kernel_h(double x) {
    if (x < 0.0) {
        throw DomainError("kernel_h requires x >= 0");
    }
    if (x < 0.1) {
        const double x2 = x * x;
        return 0.5 + x * (1.0 / 12.0 +
                          x2 * (-1.0 / 720.0 +
                                x2 * (1.0 / 30240.0 - x2 / 1209600.0)));
    }
    return 1.0 / std::expm1(x) - 1.0 / x + 1.0;
}

double KernelH::operator()(double x) const { return kernel_h(x); }

namespace {

// Integrates envelope(x) * exp(-(v + s * lambda * x)^2 / 4u) / sqrt(4 pi u)
// over [0, cutoff], pre-splitting around the Gaussian bump at x = -s v / lambda.
std::complex<double> bump_weighted_integral(
    const std::function<std::complex<double>(double)>& envelope, double lambda,
    double u, double v, double sign, double cutoff, const QuadratureSpec& spec,
    double* abs_error) {
    const double norm = 1.0 / std::sqrt(4.0 * kPi * u);
    const double centre = -sign * v / lambda;
    const double width = std::sqrt(2.0 * u) / lambda;

    auto integrand = [&](double x) {
        const double y = (v + sign * lambda * x) / (2.0 * std::sqrt(u));
        return envelope(x) * (norm * std::exp(-y * y));
    };

    std::vector<double> cuts = {0.0, cutoff};
    for (double k : {-12.0, -6.0, -2.0, 2.0, 6.0, 12.0}) {
        const double p = centre + k * width;
        if (p > 0.0 && p < cutoff) cuts.push_back(p);
    }
    std::sort(cuts.begin(), cuts.end());

    std::complex<double> total = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-300) continue;
        IntegrationResult r = integrate(integrand, cuts[i], cuts[i + 1], spec);
        total += r.value;
        err += r.abs_error;
    }
    if (abs_error != nullptr) *abs_error = err;
    return total;
}

}  // namespace

std::complex<double> kernel_integral_I(double lambda, std::complex<double> mu,
                                       double u, double v,
                                       const QuadratureSpec& spec) {
    if (!(lambda > 0.0)) {
        throw DomainError("kernel_integral_I requires lambda > 0");
    }
    if (!(u > 0.0)) {
        throw DomainError("kernel_integral_I requires u > 0");
    }

    const double norm_amp = 1.0 / std::sqrt(4.0 * kPi * u);
    const double tail_tol = 0.5 * spec.abs_tol;
    const double bump_reach =
        (std::sqrt(std::max(1.0, std::log(norm_amp / tail_tol)) * 4.0 * u) +
         6.0 * std::sqrt(u)) /
        lambda;

    // Plus branch: envelope h(x) e^{-mu x}; the Gaussian bump sits at
    // x = -v/lambda and the only guaranteed decay at large x is the bump
    // itself (Re mu may be 0), so cut past the bump.
    auto envelope_plus = [&](double x) {
        return kernel_h(x) * std::exp(-mu * x);
    };
    const double cutoff_plus =
        std::max(1.0, std::max(0.0, -v / lambda) + bump_reach);
    std::complex<double> plus = bump_weighted_integral(
        envelope_plus, lambda, u, v, +1.0, cutoff_plus, spec, nullptr);

    // Minus branch: envelope h(x) e^{-(lambda + conj mu) x} decays at rate
    // lambda + Re mu, so the cutoff is whichever of the exponential tail and
    // the bump tail comes first.
    auto envelope_minus = [&](double x) {
        return kernel_h(x) * std::exp(-(lambda + std::conj(mu)) * x);
    };
    const double exp_cut = tail_cutoff::exponential(lambda + mu.real(),
                                                    norm_amp, tail_tol);
    const double bump_cut = std::max(0.0, v / lambda) + bump_reach;
    const double cutoff_minus = std::max(1.0, std::min(exp_cut, bump_cut));
    std::complex<double> minus = bump_weighted_integral(
        envelope_minus, lambda, u, v, -1.0, cutoff_minus, spec, nullptr);

    return plus + minus;
}

std::complex<double> log_modulus_integral(double lambda, std::complex<double> mu,
                                          double u, double v,
                                          const QuadratureSpec& spec) {
    if (!(lambda > 0.0)) {
        throw DomainError("log_modulus_integral requires lambda > 0");
    }
    if (!(u > 0.0)) {
        throw DomainError("log_modulus_integral requires u > 0");
    }
    const double re_part = 0.5 * lambda + mu.real();
    if (!(re_part > 0.0)) {
        throw DomainError("log_modulus_integral requires Re(lambda/2 + mu) > 0");
    }

    auto log_mod = [&](double t) {
        return std::log(std::hypot(re_part, mu.imag() + lambda * t));
    };

    const double omega = u - v;
    double cut = tail_cutoff::gaussian(u, 1.0, spec.abs_tol);
    const double amp = std::max({1.0, std::abs(log_mod(cut)), std::abs(log_mod(-cut))});
    cut = tail_cutoff::gaussian(u, amp, spec.abs_tol);

    auto integrand = [&](double t) {
        return log_mod(t) *
               std::exp(std::complex<double>(-u * t * t, omega * t));
    };

    const int panels = static_cast<int>(
        std::min(4096.0, std::max(8.0, 2.0 * cut * std::abs(omega) / kPi)));
    IntegrationResult r = integrate(integrand, -cut, cut, spec, panels);
    return r.value;
}

std::complex<double> hurwitz_power_sum(std::complex<double> a, int k) {
    if (k < 2) {
        throw DomainError("hurwitz_power_sum requires k >= 2");
    }
    if (!(a.real() > 0.0)) {
        throw DomainError("hurwitz_power_sum requires Re a > 0");
    }
    constexpr long kDirect = 100000;
    detail::NeumaierSumC acc;
    for (long l = 0; l < kDirect; ++l) {
        acc.add(std::pow(std::complex<double>(l, 0.0) + a,
                         std::complex<double>(-k, 0.0)));
    }
    // Euler-Maclaurin tail from l = kDirect with f(x) = (x + a)^{-k}:
    //   sum_{l >= L} f(l) = int_L^inf f + f(L)/2 - f'(L)/12 + f'''(L)/720 + ...
    const std::complex<double> z = std::complex<double>(kDirect, 0.0) + a;
    const std::complex<double> zk = std::pow(z, std::complex<double>(-k, 0.0));
    const std::complex<double> integral = zk * z / double(k - 1);
    const std::complex<double> fprime = -double(k) * zk / z;
    const std::complex<double> ftriple =
        -double(k) * double(k + 1) * double(k + 2) * zk / (z * z * z);
    acc.add(integral + 0.5 * zk - fprime / 12.0 + ftriple / 720.0);
    return acc.value();
}

std::complex<double> psi_series_sum(std::complex<double> a) {
    if (std::abs(a) == 0.0) {
        throw DomainError("psi_series_sum requires a != 0");
    }
    // sum_{l >= 1} a/(l(l+a)) = sum_{l >= 1} (1/l - 1/(l+a)) = psi(1+a) + gamma;
    // psi(1+a) keeps the argument clear of the origin for small a.
    return digamma(1.0 + a) + kEulerGamma - 1.0 / a;
}

double lemma1_lhs(const TestFunction& f, double lambda,
                  const QuadratureSpec& spec) {
    if (!(lambda > 0.0)) {
        throw DomainError("lemma1_lhs requires lambda > 0");
    }
    const std::complex<double> fhat0 = f.fourier(0.0);

    // [0, 1]: int_0^1 fhat(-t/lambda) log t dt
    //       = -fhat(0) + int_0^1 (fhat(-t/lambda) - fhat(0)) log t dt,
    // the remainder vanishing at t = 0 fast enough for interior-node panels.
    auto head = [&](double t) {
        return (f.fourier(-t / lambda) - fhat0) * std::log(t);
    };
    IntegrationResult r_head = integrate(head, 0.0, 1.0, spec, 4);
    std::complex<double> total = -fhat0 + r_head.value;

    // [1, inf): substitute t = e^s, giving int_0^inf fhat(-e^s/lambda) s e^s ds,
    // summed in blocks of length 5 until two consecutive blocks are negligible.
    auto tail = [&](double s) {
        const double t = std::exp(s);
        return f.fourier(-t / lambda) * (s * t);
    };
    int quiet = 0;
    for (int block = 0; block < 40 && quiet < 2; ++block) {
        IntegrationResult r =
            integrate(tail, 5.0 * block, 5.0 * (block + 1), spec);
        total += r.value;
        if (std::abs(r.value) < 1e-15 * (1.0 + std::abs(total))) {
            ++quiet;
        } else {
            quiet = 0;
        }
    }

    return total.real() / (kPi * lambda);
}

double lemma1_rhs(const TestFunction& f, double lambda,
                  const QuadratureSpec& spec) {
    if (!(lambda > 0.0)) {
        throw DomainError("lemma1_rhs requires lambda > 0");
    }
    const double f0 = f.f0;

    // ((f(lx) + f(-lx))/2 - f0 e^{-x}) / x, written near 0 as
    // (avg - f0)/x - f0 expm1(-x)/x so both pieces stay finite.
    auto integrand = [&](double x) -> std::complex<double> {
        const double avg = 0.5 * (f.f(lambda * x) + f.f(-lambda * x));
        return (avg - f0) / x - f0 * std::expm1(-x) / x;
    };

    const double f_rate = std::min(1.0, (0.5 + f.decay_b) * lambda);
    const double cutoff = std::max(
        2.0, tail_cutoff::exponential(f_rate, std::max(f.decay_c, std::abs(f0)),
                                      0.5 * spec.abs_tol));

    IntegrationResult r_head = integrate(integrand, 0.0, 1.0, spec, 2);
    IntegrationResult r_tail = integrate(integrand, 1.0, cutoff, spec, 2);
    return -(r_head.value + r_tail.value).real();
}

double lemma1_identity_residual(const TestFunction& f, double lambda,
                                const QuadratureSpec& spec) {
    return std::abs(lemma1_lhs(f, lambda, spec) - lemma1_rhs(f, lambda, spec));
}

}  // namespace lfzero
