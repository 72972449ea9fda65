// Acceptance gate: eleven numbered checks over the bundled zero tables, each
// printing exactly one "criterion N: PASS/FAIL - ..." line that records the
// measured constants next to its fixed band.  Run with a criterion number
// (1..11) to execute one check, or with no arguments for the whole gate.
// Exit status: 0 when every requested criterion passes, 1 otherwise, 2 for a
// bad invocation.
//
// The bands are pinned here, not read from configuration, so a regression
// anywhere in the library trips the gate:
//
//   1  explicit-formula closure on zeta, gaussian widths 0.05 and 0.02,
//      |residual| <= 1e-6 (1 + |zero side|), under 30 s
//   2  shifted-sum identity vs its term breakdown at T = 300,
//      band 10 e^{-u T^2} (log T)^2 / T + 1e-6
//   3  thm1_main_term residual stays in a fixed band while the main term
//      crosses zero and grows to ~262 (max/min ratio <= 10), plus the
//      algebraic zeta specialization of the main term to 1e-12
//   4  prime-shifted sum at v = -log 2 within 2.0 of -log2/sqrt(4 pi u),
//      under 10 s
//   5  kernel-integral asymptotics at lambda = 1/2: residual <= 5 after
//      subtracting sqrt(pi/4u)(log(1/u) - gamma0) + sqrt(pi/u) log(lambda/2),
//      and the two wider readings of the log constant are shown to diverge
//   6  log-weighted transform identity residual < 1e-7 for gaussian and
//      biexp test functions, lambda in {1/2, 1, 2}
//   7  small-u zero-side limits: deviation <= K u with K fit at u = 0.04,
//      for v = 0.55 (limit 0), v = log 2 (prime constant), v = 0 (full
//      display)
//   8  thm3 error integral: integration-by-parts path vs the assembled
//      main-term path to 1e-6
//   9  li coefficients: lambda(1) vs its closed form to 2e-4; arithmetic vs
//      zero-sum within combined error bars for n = 1..5; the n log n trend
//      tightens from n = 50 to n = 400; positivity holds through n = 200 on
//      the genuine table and breaks on the off-line synthetic table
//  10  empirical_count(zeta, 100) = 29 and |N(T) - main| <= 2 log T on the
//      grid 50..1000
//  11  landau prime-power sums at n in {2, 3, 4, 6}, T = 500, band
//      3 n^{3/2} log T
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lfzero/descriptor.hpp"
#include "lfzero/li.hpp"
#include "lfzero/special.hpp"
#include "lfzero/test_function.hpp"
#include "lfzero/weil.hpp"
#include "lfzero/zeros_io.hpp"
#include "lfzero/zerosum.hpp"

#include "test_helpers.hpp"

namespace {

using cplx = std::complex<double>;
using steady = std::chrono::steady_clock;

double seconds_since(steady::time_point t0) {
    return std::chrono::duration<double>(steady::now() - t0).count();
}

std::string fmt(double x, const char* spec = "%.3g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

// --- criterion 1 -----------------------------------------------------------

Verdict criterion_1() {
    const auto t0 = steady::now();
    const auto& table = testutil::zeta_table();
    const auto zeta = testutil::zeta_descriptor();
    double worst = 0.0;
    for (double w : {0.05, 0.02}) {
        const auto f = lfzero::gaussian_test_function(w);
        const auto rep = lfzero::weil_closure(table, zeta, f, 1.0, 0.0,
                                              table.max_ordinate);
        const double band = 1e-6 * (1.0 + std::abs(rep.zero_side));
        worst = std::max(worst, std::abs(rep.residual) / band);
    }
    const double secs = seconds_since(t0);
    Verdict v;
    v.pass = worst <= 1.0 && secs < 30.0;
    v.detail = "weil closure, zeta, gaussian w=0.05/0.02: max |residual|/band " +
               fmt(worst) + ", " + fmt(secs, "%.1f") + " s (limit 30)";
    return v;
}

// --- criterion 2 -----------------------------------------------------------

Verdict criterion_2() {
    const auto& table = testutil::zeta_table();
    const auto zeta = testutil::zeta_descriptor();
    const double T = 300.0;
    const std::vector<std::pair<double, double>> points = {
        {0.05, 0.0}, {0.01, 0.01}, {0.01, std::log(2.0)}};
    double worst = 0.0;
    double band_used = 0.0;
    for (const auto& [u, v] : points) {
        const cplx lhs = lfzero::gaussian_zero_sum(table, {u, v, T, true});
        const cplx rhs = lfzero::lemma2_rhs(zeta, u, v);
        const double log_T = std::log(T);
        const double band =
            10.0 * std::exp(-u * T * T) * log_T * log_T / T + 1e-6;
        band_used = std::max(band_used, band);
        worst = std::max(worst, std::abs(lhs - rhs) / band);
    }
    Verdict out;
    out.pass = worst <= 1.0;
    out.detail = "shifted-sum identity at T=300, three (u,v) points: max "
                 "|lhs-rhs|/band " +
                 fmt(worst) + " (band " + fmt(band_used) + ")";
    return out;
}

// --- criterion 3 -----------------------------------------------------------

Verdict criterion_3() {
    const auto& table = testutil::zeta_table();
    const auto zeta = testutil::zeta_descriptor();
    const std::vector<double> us = {1e-2, 1e-3, 1e-4, 1e-5};
    double lo = 1e300, hi = 0.0, main_lo = 1e300, main_hi = 0.0;
    for (double u : us) {
        const cplx sum = lfzero::gaussian_zero_sum(table, {u, 0.0,
                                                   table.max_ordinate, true});
        const double main = lfzero::thm1_main_term(zeta, u);
        const double resid = std::abs(sum - main);
        lo = std::min(lo, resid);
        hi = std::max(hi, resid);
        main_lo = std::min(main_lo, std::abs(main));
        main_hi = std::max(main_hi, std::abs(main));
    }
    const double ratio = hi / lo;

    // zeta specialization: the main term collapses to
    // (log(1/u) - gamma0 - log(16 pi^2)) / sqrt(16 pi u)
    double ident_err = 0.0;
    for (double u : us) {
        const double root = std::sqrt(16.0 * M_PI * u);
        const double quoted = std::log(1.0 / u) / root -
                              (std::log(16.0 * M_PI * M_PI) +
                               lfzero::kEulerGamma) / root;
        const double err = std::abs(lfzero::thm1_main_term(zeta, u) - quoted) /
                           std::max(1.0, std::abs(quoted));
        ident_err = std::max(ident_err, err);
    }

    Verdict out;
    out.pass = ratio <= 10.0 && ident_err <= 1e-12;
    out.detail = "thm1 residual in [" + fmt(lo) + ", " + fmt(hi) +
                 "] (ratio " + fmt(ratio) + " <= 10) while |main| spans [" +
                 fmt(main_lo) + ", " + fmt(main_hi) +
                 "]; zeta specialization agrees to " + fmt(ident_err);
    return out;
}

// --- criterion 4 -----------------------------------------------------------

Verdict criterion_4() {
    const auto t0 = steady::now();
    const auto& table = testutil::zeta_table();
    double worst = 0.0;
    for (double u : {1e-3, 1e-4}) {
        const cplx sum = lfzero::gaussian_zero_sum(
            table, {u, -std::log(2.0), table.max_ordinate, true});
        const double pred = -std::log(2.0) / std::sqrt(4.0 * M_PI * u);
        worst = std::max(worst, std::abs(sum - pred));
    }
    const double secs = seconds_since(t0);
    Verdict out;
    out.pass = worst <= 2.0 && secs < 10.0;
    out.detail = "prime-shifted sum at v=-log 2, u=1e-3/1e-4: max deviation " +
                 fmt(worst) + " (band 2.0), " + fmt(secs, "%.2f") +
                 " s (limit 10)";
    return out;
}

// --- criterion 5 -----------------------------------------------------------

Verdict criterion_5() {
    const double lambda = 0.5;
    const cplx mu = 0.0;
    double worst = 0.0;           // with sqrt(pi/u) log(lambda/2)
    double worst_sq4 = 0.0;       // with sqrt(pi/u) log(lambda^2/4)
    double worst_sq2 = 0.0;       // with sqrt(pi/u) log(lambda^2/2)
    for (double u : {1e-2, 1e-3, 1e-4}) {
        for (double v : {0.0, u}) {
            const double J =
                lfzero::log_modulus_integral(lambda, mu, u, v).real();
            const double shared = std::sqrt(M_PI / (4.0 * u)) *
                                  (std::log(1.0 / u) - lfzero::kEulerGamma);
            const double scale = std::sqrt(M_PI / u);
            const double fit = shared + scale * std::log(lambda / 2.0);
            const double sq4 =
                shared + scale * std::log(lambda * lambda / 4.0);
            const double sq2 =
                shared + scale * std::log(lambda * lambda / 2.0);
            worst = std::max(worst, std::abs(J - fit));
            worst_sq4 = std::max(worst_sq4, std::abs(J - sq4));
            worst_sq2 = std::max(worst_sq2, std::abs(J - sq2));
        }
    }
    Verdict out;
    out.pass = worst <= 5.0;
    out.detail = "kernel asymptotics, lambda=1/2, v in {0, u}: residual " +
                 fmt(worst) +
                 " <= 5 with constant sqrt(pi/u) log(lambda/2); the "
                 "log(lambda^2/4) and log(lambda^2/2) readings leave " +
                 fmt(worst_sq4) + " and " + fmt(worst_sq2);
    return out;
}

// --- criterion 6 -----------------------------------------------------------

Verdict criterion_6() {
    const std::vector<lfzero::TestFunction> fs = {
        lfzero::gaussian_test_function(0.5), lfzero::biexp_test_function(2.0)};
    double worst = 0.0;
    for (const auto& f : fs)
        for (double lambda : {0.5, 1.0, 2.0})
            worst = std::max(worst,
                             lfzero::lemma1_identity_residual(f, lambda));
    Verdict out;
    out.pass = worst < 1e-7;
    out.detail = "log-weighted transform identity, gaussian + biexp, lambda "
                 "in {1/2, 1, 2}: max residual " +
                 fmt(worst) + " < 1e-7";
    return out;
}

// --- criterion 7 -----------------------------------------------------------

Verdict criterion_7() {
    const auto& table = testutil::zeta_table();
    const auto zeta = testutil::zeta_descriptor();
    const auto f = lfzero::gaussian_test_function(0.1);
    const std::vector<double> us = {0.04, 0.02, 0.01};

    // deviation from the small-u limit at each u; K is fixed by the first u.
    // The slope |dev|/u climbs toward its limit from below for v > 0 (the
    // next-order term enters with the opposite sign), so the anchored bound
    // carries a recorded 5% allowance; a sub-linear decay would overrun it
    // within one halving.
    const auto sweep = [&](double v) {
        std::vector<double> devs;
        for (double u : us) {
            const cplx zs =
                lfzero::zero_side(table, f, u, v, table.max_ordinate);
            const cplx pred = lfzero::thm2_prediction(zeta, f, u, v);
            devs.push_back(std::abs(zs - pred));
        }
        return devs;
    };

    bool pass = true;
    std::ostringstream detail;
    detail << "small-u sweeps (K fit at u=0.04, allowance 1.05):";
    const std::vector<std::pair<const char*, double>> cases = {
        {"v=0.55", 0.55}, {"v=log2", std::log(2.0)}, {"v=0", 0.0}};
    for (const auto& [label, v] : cases) {
        const auto devs = sweep(v);
        const double K = devs[0] / us[0];
        double slope = 0.0;
        bool ok = true;
        for (std::size_t i = 1; i < us.size(); ++i) {
            ok = ok && devs[i] <= 1.05 * K * us[i];
            slope = std::max(slope, devs[i] / us[i]);
        }
        pass = pass && ok;
        detail << " " << label << " K=" << fmt(K) << " slope<=" << fmt(slope)
               << (ok ? "" : " EXCEEDED");
    }
    Verdict out;
    out.pass = pass;
    out.detail = detail.str();
    return out;
}

// --- criterion 8 -----------------------------------------------------------

Verdict criterion_8() {
    const auto& table = testutil::zeta_table();
    const auto zeta = testutil::zeta_descriptor();
    const double u = 0.02, w = 0.05, T_max = 1000.0;
    const auto f = lfzero::gaussian_test_function(w);
    const auto rep = lfzero::thm3_error_report(zeta, f, u, table, T_max);

    // independent assembly: u sum C(gamma) + d f(0) log(2 pi u)
    //   - f(0) log q - (d/pi) int_0^inf e^{-w s^2} log s ds
    double csum = 0.0;
    long used = 0;
    for (double gamma : table.ordinates) {
        if (gamma > T_max) break;
        csum += 2.0 * std::exp(-w * u * u * gamma * gamma);
        ++used;
    }
    const double d = lfzero::degree(zeta);
    const double log_q = lfzero::log_conductor(zeta);
    const double log_integral = -(std::sqrt(M_PI / w) / 4.0) *
                                (lfzero::kEulerGamma + std::log(4.0 * w));
    const double assembled = u * csum + d * f.f0 * std::log(2.0 * M_PI * u) -
                             f.f0 * log_q - (d / M_PI) * log_integral;

    const double diff = std::abs(rep.value - assembled);
    Verdict out;
    out.pass = diff <= 1e-6 && rep.zeros_used == used;
    out.detail = "thm3 error integral, zeta gaussian w=0.05, u=0.02, "
                 "T_max=1000: paths differ by " +
                 fmt(diff) + " (<= 1e-6), zeros_used " +
                 std::to_string(rep.zeros_used) + "/" + std::to_string(used);
    return out;
}

// --- criterion 9 -----------------------------------------------------------

Verdict criterion_9() {
    const auto& table = testutil::zeta_table();
    const auto& synthetic = testutil::synthetic_offline_table();
    const auto zeta = testutil::zeta_descriptor();
    const double T = table.max_ordinate;

    // (a) lambda(1) against its closed form
    const auto z1 = lfzero::li_zero_sum(table, 1, T);
    const double closed =
        1.0 + lfzero::kEulerGamma / 2.0 - std::log(4.0 * M_PI) / 2.0;
    const double dev1 = std::abs(z1.value.real() - closed);
    const bool pass_a = dev1 <= 2e-4;

    // (b) arithmetic route vs the zero-sum at negated index
    bool pass_b = true;
    double worst_gap = 0.0;
    for (long n = 1; n <= 5; ++n) {
        const auto arith = lfzero::li_arithmetic(zeta, n, 1e6);
        const auto zsum = lfzero::li_zero_sum(table, -n, T);
        const double gap = std::abs(arith.value - zsum.value);
        const double bars = arith.error_bar + zsum.error_bar;
        worst_gap = std::max(worst_gap, bars > 0.0 ? gap / bars : 1e300);
        pass_b = pass_b && gap <= bars;
    }

    // (c) the n log n trend: lambda(-n)/n - (1/2) log n approaches c_F.
    // At n = 400 the raw truncated sum is short by tail/n ~ 0.05, which
    // would swamp the trend, so the edge-corrected estimate is the one
    // that measures it.
    const double c_f = lfzero::li_asymptotic(zeta, 1);
    const auto trend_dev = [&](long n) {
        const auto z = lfzero::li_zero_sum(table, -n, T);
        return std::abs((z.value.real() + z.tail_estimate) / double(n) -
                        0.5 * std::log(double(n)) - c_f);
    };
    const double dev50 = trend_dev(50);
    const double dev400 = trend_dev(400);
    const bool pass_c = dev400 < dev50;

    // (d) positivity: clean through n = 200 on the genuine table, broken
    // somewhere on the synthetic off-line table
    const auto good = lfzero::li_positivity_report(table, 200, T);
    bool all_pass = true;
    for (const auto& row : good) all_pass = all_pass && row.pass;
    const auto bad = lfzero::li_positivity_report(synthetic, 120, 55.0);
    long first_fail = 0;
    for (const auto& row : bad)
        if (!row.pass) { first_fail = row.n; break; }
    const bool pass_d = all_pass && first_fail > 0;

    Verdict out;
    out.pass = pass_a && pass_b && pass_c && pass_d;
    out.detail = "li: |lambda(1) - closed form| " + fmt(dev1) +
                 " (<= 2e-4); arithmetic vs zero-sum worst gap/bars " +
                 fmt(worst_gap) + "; trend dev " + fmt(dev50) + " -> " +
                 fmt(dev400) + " (c_F " + fmt(c_f, "%.4f") +
                 "); positivity 200/200 " + (all_pass ? "clean" : "BROKEN") +
                 ", synthetic first failure n=" + std::to_string(first_fail);
    return out;
}

// --- criterion 10 ----------------------------------------------------------

Verdict criterion_10() {
    const auto& table = testutil::zeta_table();
    const auto zeta = testutil::zeta_descriptor();
    const long count100 = lfzero::empirical_count(table, 100.0);
    std::vector<double> grid;
    for (double T = 50.0; T <= 1000.0; T += 50.0) grid.push_back(T);
    const auto profile = lfzero::deviation_profile(table, zeta, grid);
    // max_ratio is |deviation| / log T, so the 2 log T band means ratio <= 2
    Verdict out;
    out.pass = count100 == 29 && profile.max_ratio <= 2.0;
    out.detail = "N(100) = " + std::to_string(count100) +
                 " (expect 29); max |deviation|/log T over 50..1000 is " +
                 fmt(profile.max_ratio) + " (band 2)";
    return out;
}

// --- criterion 11 ----------------------------------------------------------

Verdict criterion_11() {
    const auto& table = testutil::zeta_table();
    const auto zeta = testutil::zeta_descriptor();
    const double T = 500.0;
    double worst = 0.0;
    for (long n : {2L, 3L, 4L, 6L}) {
        const auto [computed, predicted] =
            lfzero::landau_sum(table, zeta, n, T);
        const double band =
            3.0 * std::pow(double(n), 1.5) * std::log(T);
        worst = std::max(worst, std::abs(computed - predicted) / band);
    }
    Verdict out;
    out.pass = worst <= 1.0;
    out.detail = "landau sums, n in {2,3,4,6}, T=500: max |dev|/band " +
                 fmt(worst) + " (band 3 n^{3/2} log T)";
    return out;
}

// ---------------------------------------------------------------------------

Verdict run_criterion(int k) {
    switch (k) {
        case 1: return criterion_1();
        case 2: return criterion_2();
        case 3: return criterion_3();
        case 4: return criterion_4();
        case 5: return criterion_5();
        case 6: return criterion_6();
        case 7: return criterion_7();
        case 8: return criterion_8();
        case 9: return criterion_9();
        case 10: return criterion_10();
        case 11: return criterion_11();
    }
    return {false, "unknown criterion"};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> to_run;
    if (argc > 2) {
        std::cerr << "usage: " << argv[0] << " [criterion 1..11]\n";
        return 2;
    }
    if (argc == 2) {
        const int k = std::atoi(argv[1]);
        if (k < 1 || k > 11) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..11]\n";
            return 2;
        }
        to_run.push_back(k);
    } else {
        for (int k = 1; k <= 11; ++k) to_run.push_back(k);
    }

    int failures = 0;
    for (int k : to_run) {
        Verdict v;
        try {
            v = run_criterion(k);
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL")
                  << " - " << v.detail << "\n";
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
