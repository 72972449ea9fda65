#include <cmath>
#include <complex>

#include "doctest.h"
#include "lfzero/errors.hpp"
#include "lfzero/quadrature.hpp"
#include "lfzero/test_function.hpp"

using cplx = std::complex<double>;

TEST_SUITE("test_function") {

TEST_CASE("parse accepts the documented spellings") {
    CHECK(lfzero::parse_test_function("gaussian:w=0.05").spec ==
          lfzero::gaussian_test_function(0.05).spec);
    CHECK(lfzero::parse_test_function("gaussian:0.05").f0 ==
          lfzero::gaussian_test_function(0.05).f0);
    CHECK(lfzero::parse_test_function("biexp:a=1.2").f(0.0) == doctest::Approx(1.0));
    CHECK(lfzero::parse_test_function("bump:r=3").support_radius == doctest::Approx(3.0));
    CHECK_THROWS_AS(lfzero::parse_test_function("triangle:1"), lfzero::DomainError);
    CHECK_THROWS_AS(lfzero::parse_test_function("gaussian:w=-1"), lfzero::DomainError);
}

TEST_CASE("gaussian transform closed form") {
    const double w = 0.05;
    const auto g = lfzero::gaussian_test_function(w);
    // f integrates to 1, so transform(0) = 1
    CHECK(std::abs(g.transform(0.0) - cplx(1.0)) < 1e-12);
    const cplx s(0.3, -1.1);
    CHECK(std::abs(g.transform(s) - std::exp(w * s * s)) < 1e-12);
    CHECK(std::abs(g.fourier(2.0) - std::exp(cplx(-w * 4.0, 0.0))) < 1e-12);
    CHECK(g.f0 == doctest::Approx(1.0 / std::sqrt(4.0 * M_PI * w)));
}

TEST_CASE("biexp transform closed form vs direct quadrature") {
    const double a = 1.2;
    const auto b = lfzero::biexp_test_function(a);
    const cplx s(0.4, 0.9);
    auto integrand = [a, s](double x) { return std::exp(-a * std::abs(x) + x * s); };
    const auto direct = lfzero::integrate(integrand, -40.0, 40.0, {}, 8);
    CHECK(std::abs(b.transform(s) - direct.value) < 1e-9);
    CHECK(std::abs(b.transform(0.0) - cplx(2.0 / a)) < 1e-12);
}

// Spot values pinned against a 40-digit independent evaluation (mpmath).
TEST_CASE("bump transform numeric path") {
    const auto bp = lfzero::bump_test_function(2.0);
    CHECK(std::abs(bp.transform(0.0) - cplx(0.887987632336159)) < 1e-10);
    CHECK(std::abs(bp.fourier(5.0) - cplx(0.0292461733102654)) < 1e-10);
    CHECK(std::abs(bp.fourier(20.0) - cplx(0.000257489223742124)) < 1e-10);
    // fourier(t) = transform(-i t)
    CHECK(std::abs(bp.fourier(5.0) - bp.transform(cplx(0.0, -5.0))) < 1e-12);
    // large-argument evaluations must stay finite and tiny, not throw
    CHECK(std::abs(bp.transform(cplx(0.0, 900.0))) < 1e-9);
}

TEST_CASE("all bundled members pass the admissibility checks") {
    for (const char* spec : {"gaussian:w=0.05", "gaussian:w=0.02", "biexp:a=1.2",
                             "biexp:a=3", "bump:r=2", "bump:r=3"}) {
        const auto tf = lfzero::parse_test_function(spec);
        CHECK_NOTHROW(lfzero::validate_conditions(tf));
    }
}

TEST_CASE("validate_conditions rejects a broken envelope claim") {
    auto tf = lfzero::biexp_test_function(1.0);
    tf.decay_b = 5.0;  // claims e^{-5.5|x|} decay that e^{-|x|} cannot meet
    CHECK_THROWS_AS(lfzero::validate_conditions(tf), lfzero::ConditionError);
}

TEST_CASE("validate_conditions rejects support leakage") {
    auto tf = lfzero::biexp_test_function(1.0);
    tf.support_radius = 2.0;  // biexp is nonzero past any finite radius
    CHECK_THROWS_AS(lfzero::validate_conditions(tf), lfzero::ConditionError);
}

TEST_CASE("weighted tail cutoff bounds the weighted tail integral") {
    struct Case {
        const char* spec;
        double q;
    };
    for (const Case& c : {Case{"gaussian:w=0.05", 0.5}, Case{"gaussian:w=1", 0.5},
                          Case{"biexp:a=3", 0.5}, Case{"biexp:a=2", 0.25}}) {
        const auto tf = lfzero::parse_test_function(c.spec);
        const double tol = 1e-10;
        const double X = lfzero::weighted_tail_cutoff(tf, c.q, tol);
        auto weighted = [&tf, &c](double t) { return std::exp(c.q * t) * std::abs(tf.f(t)); };
        const double far = X + 60.0;  // numeric stand-in for the infinite tail
        const double tail = lfzero::integrate_real(weighted, X, far, {}, 16).value.real();
        CHECK(tail <= tol * (1.0 + 1e-6));
        // the cutoff is tight: pulling it back 30% must leak past tol
        const double early = lfzero::integrate_real(weighted, 0.7 * X, far, {}, 16).value.real();
        CHECK(early > tol);
    }
}

TEST_CASE("weighted tail cutoff for compact support is the radius") {
    const auto bp = lfzero::bump_test_function(2.0);
    CHECK(lfzero::weighted_tail_cutoff(bp, 0.5, 1e-12) == doctest::Approx(2.0));
}

TEST_CASE("weighted tail cutoff refuses a weight the decay cannot beat") {
    const auto b = lfzero::biexp_test_function(1.0);
    CHECK_THROWS_AS(lfzero::weighted_tail_cutoff(b, 1.5, 1e-10), lfzero::DomainError);
}

TEST_CASE("gaussian mass identity") {
    // int f = 1 for every width; checked through the library integrator
    for (double w : {0.02, 0.05, 0.3}) {
        const auto g = lfzero::gaussian_test_function(w);
        const double X = lfzero::test_function_cutoff(g, 1e-13);
        const auto total = lfzero::integrate_real(g.f, -X, X, {}, 8);
        CHECK(std::abs(total.value.real() - 1.0) < 1e-10);
    }
}

}  // TEST_SUITE
