// Explicit-formula evaluation.
//
// Zero side.  For a zero rho = beta + i gamma put z = rho - 1/2.  The
// weighted sum over zeros is
//     sum_rho e^{v z} int f(x/u) e^{x z} dx = sum_rho e^{v z} u Phi(u z)
// after x -> u x.  Zeros come in conjugate pairs and f is real-valued, so
// Phi(conj s) = conj Phi(s) and each listed zero contributes
// 2 Re(e^{v z} u Phi(u z)).
//
// Arithmetic side, the eight term groups:
//   prime sum          -sum_{n>=2} Lambda_F(n) n^{-1/2} f((log n - v)/u)
//   dual prime sum     -sum_{n>=2} conj(Lambda_F(n)) n^{-1/2} f((-log n - v)/u)
//   pole terms         m_F u [e^{v/2} Phi(u/2) + e^{-v/2} Phi(-u/2)]
//   log Q term         2 f(-v/u) log Q
//   digamma terms      f(-v/u) sum_j lambda_j [psi(lambda_j/2 + mu_j)
//                                            + psi(lambda_j/2 + conj mu_j)]
//   gamma integral     -sum_j lambda_j int_0^inf (f((-lambda_j x - v)/u)
//     (mu branch)           - f(-v/u)) e^{-(lambda_j/2+mu_j)x}/(1-e^{-x}) dx
//   gamma integral     the mirror with +lambda_j x and conj mu_j
//     (conj branch)
//
// Prime-sum truncation.  With x = (log n - v)/u and Lambda of mean one the
// tail beyond n = e^{v + u X} is bounded by
//     u e^{v/2} int_X^inf e^{(u/2) t} |f(t)| dt,
// so X comes from weighted_tail_cutoff at rate u/2.  The dual sum mirrors
// with v -> -v.
//
// Gamma integrals.  1/(1 - e^{-x}) = 1/x + h(x) with h the bounded kernel,
// and the f-difference vanishes linearly at 0, so the integrand has a
// finite limit there.  The f-dependent part lives in the x-window where
// |arg| stays under the plain cutoff of f (width ~ u/lambda); past it the
// integrand settles to -f(-v/u) e^{-(lambda/2 + mu) x}/(1 - e^{-x}) and is
// truncated where that exponential is negligible.  The range is split at
// the window edges.
//
// Small-u prediction.  For v = 0 the zero side approaches
//     f(0) [2 log Q - d_F log u] - 2 sum_j lambda_j G(lambda_j) + O(u),
//     G(lambda) = int_0^inf ((f(lambda x)+f(-lambda x))/2 - f(0)e^{-x}) dx/x,
// i.e. + 2 sum_j lambda_j lemma1_rhs(f, lambda_j).  For v = +-log m exactly
// one prime term survives at order one; every other v gives O(u).
//
// Error-term integral.  Write R(T) = N_F(T) - smooth(T) for the counting
// remainder and C(T) = fourier(-uT) + fourier(uT).  Integrating
// -u int_0^inf R(T) C'(T) dT by parts turns the jumps of the step function
// into point values and leaves the smooth density behind:
//     u sum_r C(gamma_r) - u int_0^inf s'(T) C(T) dT,
//     s'(T) = (d_F/2pi) log(T/2pi) + (log q_F)/2pi.
// The logarithmic endpoint at T = 0 is handled as C(0) times the closed
// form int_0^a log(T/2pi) dT = a(log(a/2pi) - 1) plus a remainder that
// vanishes at 0.

#include "lfzero/weil.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "lfzero/errors.hpp"
#include "lfzero/special.hpp"
#include "summation.hpp"

namespace lfzero {

namespace {

using cplx = std::complex<double>;
using detail::NeumaierSum;
using detail::NeumaierSumC;

constexpr double kPrimeTailTol = 1e-10;
constexpr long kPrimeTermCap = 5'000'000;

struct PrimeSumPart {
    cplx value{0.0, 0.0};
    long n_limit = 1;
};

// Truncation point for sum_n Lambda_F(n) n^{-1/2} f((log n - v)/u).
long prime_truncation(const TestFunction& f, double u, double v) {
    const double budget = kPrimeTailTol / (u * std::exp(0.5 * v));
    const double x_cut = weighted_tail_cutoff(f, 0.5 * u, budget);
    const double log_n = v + u * x_cut;
    if (log_n < std::log(2.0)) return 1;
    if (log_n > std::log(static_cast<double>(kPrimeTermCap))) {
        throw DomainError(
            "prime sum truncation beyond desk scale (needs n > 5e6); use a "
            "faster-decaying test function or a smaller u");
    }
    return static_cast<long>(std::ceil(std::exp(log_n)));
}

PrimeSumPart prime_sum(const CoeffProvider& coeffs, const TestFunction& f,
                       double u, double v, bool dual, long n_max) {
    PrimeSumPart out;
    out.n_limit = n_max > 0 ? n_max : prime_truncation(f, u, dual ? -v : v);
    NeumaierSumC acc;
    for (long n = 2; n <= out.n_limit; ++n) {
        const cplx lam = coeffs.lambda_F(n);
        if (lam == 0.0) continue;
        const double log_n = std::log(static_cast<double>(n));
        const double arg = (dual ? -log_n - v : log_n - v) / u;
        const double fx = f.f(arg);
        if (fx == 0.0) continue;
        acc.add((dual ? std::conj(lam) : lam) *
                (fx / std::sqrt(static_cast<double>(n))));
    }
    out.value = acc.value();
    return out;
}

// One gamma-factor integral.  direction = -1 evaluates the mu branch with
// argument (-lambda x - v)/u, direction = +1 the conj-mu branch with
// (+lambda x - v)/u; `mu` is passed already conjugated in the latter case.
cplx gamma_integral(const TestFunction& f, const QuadratureSpec& spec,
                    double u, double v, double lambda, cplx mu, int direction) {
    const cplx c = cplx(0.5 * lambda, 0.0) + mu;
    const double rate = c.real();
    const double f0v = f.f(-v / u);
    const double s = static_cast<double>(direction);

    const double xc = weighted_tail_cutoff(f, 0.0, 1e-13);
    const double window_lo = (s * v - u * xc) / lambda;
    const double window_hi = (s * v + u * xc) / lambda;

    double x_tail = std::max(1.0, window_hi);
    if (std::abs(f0v) > 0.0) {
        x_tail = std::max(
            x_tail, std::log(std::abs(f0v) * 2.0 / (rate * 1e-13)) / rate);
    }

    auto integrand = [&](double x) -> cplx {
        const double arg = (s * lambda * x - v) / u;
        const double df = f.f(arg) - f0v;
        if (df == 0.0) return cplx(0.0, 0.0);
        const double w = 1.0 / x + kernel_h(x);
        return df * w * std::exp(-c * x);
    };

    std::vector<double> cuts = {0.0};
    for (double p : {window_lo, window_hi}) {
        if (p > 0.0 && p < x_tail) cuts.push_back(p);
    }
    cuts.push_back(x_tail);
    std::sort(cuts.begin(), cuts.end());

    NeumaierSumC acc;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        acc.add(integrate(integrand, cuts[i], cuts[i + 1], spec, 8).value);
    }
    return acc.value();
}

// Grid stand-in for the integrability of |fourier(t)| log t: dyadic block
// sums far out must decay.
void check_condition_d(const TestFunction& f) {
    auto block = [&](double a, double b) {
        double s = 0.0;
        const int n = 64;
        for (int i = 0; i < n; ++i) {
            const double t = a + (b - a) * (i + 0.5) / n;
            s += std::abs(f.fourier(t)) * std::log(t);
        }
        return s * (b - a) / n;
    };
    const double b0 = block(100.0, 200.0);
    const double b1 = block(200.0, 400.0);
    if (b0 > 1e-12 && b1 > 0.9 * b0) {
        throw ConditionError(f.spec +
                             ": |fourier| log t block sums do not decay");
    }
}

}  // namespace

cplx zero_side(const ZeroTable& zeros, const TestFunction& f, double u,
               double v, double T) {
    if (!(u > 0.0)) throw DomainError("zero_side: u must be positive");
    if (!(T > 0.0)) throw DomainError("zero_side: T must be positive");
    if (T > zeros.max_ordinate) {
        throw CoverageError("zero_side: T exceeds the zero table (max " +
                            std::to_string(zeros.max_ordinate) + ")");
    }
    NeumaierSum acc;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const double gamma = zeros.ordinates[i];
        if (gamma > T) break;
        const cplx z(zeros.beta(i) - 0.5, gamma);
        acc.add(2.0 * std::real(std::exp(v * z) * u * f.transform(u * z)));
    }
    return cplx(acc.value(), 0.0);
}

double zero_side_tail_gauge(const ZeroTable& zeros, const TestFunction& f,
                            double u, double v, double T) {
    if (!(u > 0.0)) throw DomainError("zero_side_tail_gauge: u must be positive");
    if (!(T > 0.0)) throw DomainError("zero_side_tail_gauge: T must be positive");
    NeumaierSum window;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const double gamma = zeros.ordinates[i];
        if (gamma > T) break;
        if (gamma <= 0.9 * T) continue;
        const cplx z(zeros.beta(i) - 0.5, gamma);
        window.add(std::abs(2.0 * std::exp(v * z) * u * f.transform(u * z)));
    }
    return 10.0 * window.value();
}

ExplicitFormulaReport arithmetic_side(const SelbergDescriptor& desc,
                                      const TestFunction& f, double u, double v,
                                      long n_max, const QuadratureSpec& spec) {
    if (!(u > 0.0 && u <= 1.0)) {
        throw DomainError("arithmetic_side: u must lie in (0, 1]");
    }
    validate(desc);
    if (!desc.coeffs) {
        throw DomainError("arithmetic_side: descriptor " + desc.name +
                          " has no coefficient provider");
    }
    validate_conditions(f);

    ExplicitFormulaReport rep;
    auto push = [&rep](const char* label, cplx value) {
        rep.term_breakdown.push_back({label, value});
    };

    const PrimeSumPart ps = prime_sum(*desc.coeffs, f, u, v, false, n_max);
    const PrimeSumPart psd = prime_sum(*desc.coeffs, f, u, v, true, n_max);
    push("prime sum", -ps.value);
    push("dual prime sum", -psd.value);
    rep.prime_terms_used = std::max(ps.n_limit, psd.n_limit);

    cplx pole(0.0, 0.0);
    if (desc.pole_order > 0) {
        pole = static_cast<double>(desc.pole_order) * u *
               (std::exp(0.5 * v) * f.transform(cplx(0.5 * u, 0.0)) +
                std::exp(-0.5 * v) * f.transform(cplx(-0.5 * u, 0.0)));
    }
    push("pole terms", pole);

    const double fv = f.f(-v / u);
    push("log Q term", cplx(2.0 * fv * std::log(desc.q_scale), 0.0));

    cplx dig(0.0, 0.0);
    for (const auto& g : desc.gamma_factors) {
        const cplx half(0.5 * g.lambda, 0.0);
        dig += g.lambda *
               (digamma(half + g.mu) + digamma(half + std::conj(g.mu)));
    }
    push("digamma terms", fv * dig);

    cplx branch_mu(0.0, 0.0);
    cplx branch_conj(0.0, 0.0);
    for (const auto& g : desc.gamma_factors) {
        branch_mu -= g.lambda *
                     gamma_integral(f, spec, u, v, g.lambda, g.mu, -1);
        branch_conj -= g.lambda * gamma_integral(f, spec, u, v, g.lambda,
                                                 std::conj(g.mu), +1);
    }
    push("gamma integral (mu)", branch_mu);
    push("gamma integral (conj mu)", branch_conj);

    NeumaierSumC total;
    for (const auto& t : rep.term_breakdown) total.add(t.value);
    rep.arithmetic_side = total.value();
    return rep;
}

ExplicitFormulaReport weil_closure(const ZeroTable& zeros,
                                   const SelbergDescriptor& desc,
                                   const TestFunction& f, double u, double v,
                                   double T, long n_max,
                                   const QuadratureSpec& spec) {
    ExplicitFormulaReport rep = arithmetic_side(desc, f, u, v, n_max, spec);
    rep.zero_side = zero_side(zeros, f, u, v, T);
    rep.residual = rep.zero_side - rep.arithmetic_side;
    return rep;
}

cplx thm2_prediction(const SelbergDescriptor& desc, const TestFunction& f,
                     double u, double v) {
    if (!(u > 0.0 && u < 0.5)) {
        throw DomainError("thm2_prediction: u must lie in (0, 1/2)");
    }
    validate(desc);

    if (std::abs(v) <= 1e-12) {
        double value =
            f.f0 * (2.0 * std::log(desc.q_scale) - degree(desc) * std::log(u));
        for (const auto& g : desc.gamma_factors) {
            value += 2.0 * g.lambda * lemma1_rhs(f, g.lambda);
        }
        return cplx(value, 0.0);
    }

    const double av = std::abs(v);
    // e^{|v|} beyond the desk-scale prime range cannot match any log m
    if (av > 15.5) return cplx(0.0, 0.0);

    const long m = std::llround(std::exp(av));
    long hits = 0;
    for (long cand : {m - 1, m, m + 1}) {
        if (cand >= 2 && std::abs(av - std::log(static_cast<double>(cand))) <= 1e-9) {
            ++hits;
        }
    }
    if (hits > 1) {
        throw DomainError("thm2_prediction: v lies within 1e-9 of two "
                          "different log m values");
    }
    if (m < 2 || std::abs(av - std::log(static_cast<double>(m))) > 1e-12) {
        return cplx(0.0, 0.0);
    }
    if (!desc.coeffs) {
        throw DomainError("thm2_prediction: descriptor " + desc.name +
                          " has no coefficient provider");
    }
    const cplx lead =
        -desc.coeffs->lambda_F(m) / std::sqrt(static_cast<double>(m)) * f.f0;
    return v > 0.0 ? lead : std::conj(lead);
}

Thm3Report thm3_error_report(const SelbergDescriptor& desc,
                             const TestFunction& f, double u,
                             const ZeroTable& zeros, double T_max) {
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError("thm3_error_integral: u must lie in (0, 1)");
    }
    if (!(T_max > 0.0)) {
        throw DomainError("thm3_error_integral: T_max must be positive");
    }
    validate(desc);
    if (zeros.off_rh()) {
        throw DomainError("thm3_error_integral: requires an on-line zero table");
    }
    if (T_max > zeros.max_ordinate) {
        throw CoverageError("thm3_error_integral: T_max exceeds the zero table (max " +
                            std::to_string(zeros.max_ordinate) + ")");
    }
    const double mass = std::abs(f.fourier(u * T_max)) +
                        std::abs(f.fourier(-u * T_max));
    if (mass > 1e-8) {
        throw CoverageError(
            "thm3_error_integral: fourier mass beyond u*T_max exceeds 1e-8");
    }
    check_condition_d(f);

    auto C = [&f, u](double T) {
        return std::real(f.fourier(-u * T) + f.fourier(u * T));
    };

    Thm3Report rep;
    NeumaierSum zero_acc;
    for (double gamma : zeros.ordinates) {
        if (gamma > T_max) break;
        zero_acc.add(C(gamma));
        ++rep.zeros_used;
    }
    rep.zero_sum = u * zero_acc.value();

    const CountingConstants cc = counting_constants(desc);
    const double d = cc.degree;
    const double lq = std::log(cc.conductor);
    const double two_pi = 2.0 * M_PI;
    QuadratureSpec qs;

    const double a = std::min(two_pi, T_max);
    const double C0 = C(0.0);
    NeumaierSum smooth;
    smooth.add((d / two_pi) * C0 * a * (std::log(a / two_pi) - 1.0));
    auto near_zero = [&](double T) {
        return std::log(T / two_pi) * (C(T) - C0);
    };
    smooth.add((d / two_pi) *
               integrate_real(near_zero, 0.0, a, qs, 8).value.real());
    auto plain = [&](double T) { return C(T); };
    smooth.add((lq / two_pi) * integrate_real(plain, 0.0, a, qs, 4).value.real());
    if (T_max > a) {
        auto density = [&](double T) {
            return ((d / two_pi) * std::log(T / two_pi) + lq / two_pi) * C(T);
        };
        const int panels =
            std::clamp(static_cast<int>(T_max / 25.0), 8, 512);
        smooth.add(integrate_real(density, a, T_max, qs, panels).value.real());
    }
    rep.smooth_integral = u * smooth.value();
    rep.value = rep.zero_sum - rep.smooth_integral;
    return rep;
}

double thm3_error_integral(const SelbergDescriptor& desc, const TestFunction& f,
                           double u, const ZeroTable& zeros, double T_max) {
    return thm3_error_report(desc, f, u, zeros, T_max).value;
}

}  // namespace lfzero
