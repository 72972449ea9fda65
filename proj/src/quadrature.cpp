#include "lfzero/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "lfzero/errors.hpp"

namespace lfzero {

namespace {

// Legendre nodes/weights computed at startup by Newton iteration on P_n;
// converges to machine precision in <= 6 steps from the Chebyshev-like
// initial guess, so no tabulated constants are needed.
template <int N>
struct GaussRule {
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussRule() {
        for (int i = 0; i < N; ++i) {
            double xi = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            double p1 = 0.0;
            for (int it = 0; it < 60; ++it) {
                // P_N(xi) and P_N'(xi) by the three-term recurrence
                double p0 = 1.0;
                p1 = xi;
                for (int k = 2; k <= N; ++k) {
                    double pk = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = pk;
                }
                double dp = N * (xi * p1 - p0) / (xi * xi - 1.0);
                double step = p1 / dp;
                xi -= step;
                if (std::abs(step) < 1e-16) {
                    // one last recurrence pass so w uses the converged node
                    p0 = 1.0;
                    p1 = xi;
                    for (int k = 2; k <= N; ++k) {
                        double pk = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                        p0 = p1;
                        p1 = pk;
                    }
                    dp = N * (xi * p1 - p0) / (xi * xi - 1.0);
                    break;
                }
            }
            double dp_final;
            {
                double p0 = 1.0;
                double pa = xi;
                for (int k = 2; k <= N; ++k) {
                    double pk = ((2 * k - 1) * xi * pa - (k - 1) * p0) / k;
                    p0 = pa;
                    pa = pk;
                }
                dp_final = N * (xi * pa - p0) / (xi * xi - 1.0);
            }
            x[i] = xi;
            w[i] = 2.0 / ((1.0 - xi * xi) * dp_final * dp_final);
        }
    }
};

const GaussRule<15>& rule15() {
    static const GaussRule<15> r;
    return r;
}
const GaussRule<31>& rule31() {
    static const GaussRule<31> r;
    return r;
}

using cplx = std::complex<double>;

struct Panel {
    double a, b;
    cplx value;      // 31-point estimate
    double error;    // |I31 - I15|
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<cplx(double)>& f, double a, double b,
                     std::size_t& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cplx i15{0.0, 0.0};
    for (int i = 0; i < 15; ++i) i15 += rule15().w[i] * f(mid + half * rule15().x[i]);
    cplx i31{0.0, 0.0};
    for (int i = 0; i < 31; ++i) i31 += rule31().w[i] * f(mid + half * rule31().x[i]);
    evals += 46;
    i15 *= half;
    i31 *= half;
    const cplx d = i31 - i15;
    return Panel{a, b, i31, std::abs(d.real()) + std::abs(d.imag())};
}

}  // namespace

IntegrationResult integrate(const std::function<cplx(double)>& f,
                            double a, double b,
                            const QuadratureSpec& spec,
                            int initial_panels) {
    IntegrationResult res;
    if (a == b) return res;
    if (std::isnan(a) || std::isnan(b)) {
        throw DomainError("integrate: limits must be finite numbers");
    }
    if (a > b) {
        res = integrate(f, b, a, spec, initial_panels);
        res.value = -res.value;
        return res;
    }
    initial_panels = std::clamp(initial_panels, 1, 4096);

    std::priority_queue<Panel> heap;
    cplx total{0.0, 0.0};
    double total_err = 0.0;
    for (int i = 0; i < initial_panels; ++i) {
        const double pa = a + (b - a) * i / initial_panels;
        const double pb = a + (b - a) * (i + 1) / initial_panels;
        Panel p = evaluate_panel(f, pa, pb, res.evaluations);
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }

    auto tolerance = [&] {
        return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    };

    while (total_err > tolerance()) {
        if (res.subdivisions >= spec.max_subdivisions) {
            throw QuadratureError("integrate: subdivision budget exhausted",
                                  tolerance(), total_err);
        }
        Panel worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) {
            // interval at floating-point resolution; accept its estimate
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, m, res.evaluations);
        Panel right = evaluate_panel(f, m, worst.b, res.evaluations);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++res.subdivisions;
    }

    res.value = total;
    res.abs_error = total_err;
    return res;
}

IntegrationResult integrate_real(const std::function<double(double)>& f,
                                 double a, double b,
                                 const QuadratureSpec& spec,
                                 int initial_panels) {
    return integrate([&f](double x) { return cplx(f(x), 0.0); }, a, b, spec,
                     initial_panels);
}

namespace tail_cutoff {

double exponential(double rate, double amp, double tail_tol) {
    if (!(rate > 0.0) || !(tail_tol > 0.0)) {
        throw DomainError("tail_cutoff::exponential: rate and tolerance must be positive");
    }
    const double amp_safe = std::max(std::abs(amp), 1e-300);
    // int_X^inf amp e^{-rate x} dx = amp e^{-rate X} / rate
    double X = std::log(amp_safe / (rate * tail_tol)) / rate;
    return std::max(X + 4.0 / rate, 1.0);
}

double gaussian(double u, double amp, double tail_tol) {
    if (!(u > 0.0) || !(tail_tol > 0.0)) {
        throw DomainError("tail_cutoff::gaussian: u and tolerance must be positive");
    }
    const double amp_safe = std::max(std::abs(amp), 1e-300);
    double r = std::log(amp_safe / tail_tol);
    double X = std::sqrt(std::max(r, 1.0) / u);
    // e^{-u t^2} tail integral ~ amp e^{-u X^2}/(2 u X); one extra width is
    // cheap insurance against the prefactor.
    return X + 2.0 / std::sqrt(u) / std::max(X, 1.0) + 1.0 / std::sqrt(u);
}

}  // namespace tail_cutoff

}  // namespace lfzero
