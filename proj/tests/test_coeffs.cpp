#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "lfzero/coeffs.hpp"
#include "lfzero/errors.hpp"
#include "lfzero/special.hpp"
#include "test_helpers.hpp"

using cplx = std::complex<double>;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE("coeffs") {

TEST_CASE("sieve von mangoldt agrees with trial division") {
    lfzero::PrimeSieve sieve(2000);
    for (long n = 1; n <= 2000; ++n) {
        CHECK(sieve.von_mangoldt(n) == doctest::Approx(lfzero::von_mangoldt(n)).epsilon(1e-14));
    }
    // spot identities: Lambda(p^k) = log p, Lambda(composite with two primes) = 0
    CHECK(lfzero::von_mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(lfzero::von_mangoldt(729) == doctest::Approx(std::log(3.0)));
    CHECK(lfzero::von_mangoldt(6) == 0.0);
    CHECK(lfzero::von_mangoldt(1) == 0.0);
}

TEST_CASE("sieve prime walk enumerates exactly the primes") {
    lfzero::PrimeSieve sieve(100);
    long count = 0, last = 0;
    sieve.for_each_prime([&](long p) {
        ++count;
        last = p;
        CHECK(lfzero::von_mangoldt(p) > 0.0);
    });
    CHECK(count == 25);
    CHECK(last == 97);
}

TEST_CASE("zeta coefficients") {
    lfzero::ZetaCoeffs zc;
    CHECK(zc.pole_order() == 1);
    CHECK(zc.self_dual());
    CHECK(std::abs(zc.lambda_F(2) - cplx(std::log(2.0))) < 1e-14);
    CHECK(std::abs(zc.lambda_F(10)) == 0.0);
    CHECK(std::abs(zc.lambda_F_prime_power(2, 3, std::log(2.0)) - cplx(std::log(2.0))) < 1e-14);
}

TEST_CASE("dirichlet coefficients are chi times von mangoldt") {
    const auto desc = testutil::chi4_descriptor();
    const auto& dc = *desc.coeffs;
    CHECK(dc.pole_order() == 0);
    CHECK(std::abs(dc.lambda_F(2)) == 0.0);                              // chi(2) = 0
    CHECK(std::abs(dc.lambda_F(3) + cplx(std::log(3.0))) < 1e-14);       // chi(3) = -1
    CHECK(std::abs(dc.lambda_F(9) - cplx(std::log(3.0))) < 1e-14);       // chi(9) = +1
    CHECK(std::abs(dc.lambda_F(5) - cplx(std::log(5.0))) < 1e-14);
    CHECK(std::abs(dc.lambda_F(7) + cplx(std::log(7.0))) < 1e-14);
}

TEST_CASE("character table validation") {
    using V = std::vector<cplx>;
    CHECK_THROWS_AS(lfzero::DirichletCoeffs(4, V{0.0, 1.0, 0.0}, "short"),
                    lfzero::DomainError);
    CHECK_THROWS_AS(lfzero::DirichletCoeffs(4, V{0.0, 1.0, 0.0, 2.0}, "off-circle"),
                    lfzero::DomainError);
    CHECK_THROWS_AS(lfzero::DirichletCoeffs(4, V{0.0, -1.0, 0.0, 1.0}, "chi(1)!=1"),
                    lfzero::DomainError);
    CHECK_THROWS_AS(lfzero::DirichletCoeffs(4, V{1.0, 1.0, 0.0, 1.0}, "gcd!=1 nonzero"),
                    lfzero::DomainError);
}

TEST_CASE("character table file loading") {
    const auto chi = lfzero::load_character_table(
        fs::path(LFZERO_TEST_DATA_DIR) / "descriptors" / "chi_q4_1.txt", 4, "chi4");
    CHECK(chi->modulus() == 4);
    CHECK(std::abs(chi->chi(1) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(chi->chi(3) + cplx(1.0)) < 1e-14);
    CHECK(std::abs(chi->chi(7) + cplx(1.0)) < 1e-14);  // 7 = 3 mod 4
    CHECK(std::abs(chi->chi(6)) == 0.0);

    CHECK_THROWS_AS(lfzero::load_character_table("/nonexistent/chi.txt", 4, "x"),
                    lfzero::ParseError);
    const auto bad = write_temp("lfzero_bad_chi.txt", "1, 1, 0\nnot a number\n");
    CHECK_THROWS_AS(lfzero::load_character_table(bad, 4, "x"), lfzero::ParseError);
}

TEST_CASE("coeff provider resolution") {
    const auto zeta = lfzero::make_coeff_provider("zeta", ".");
    CHECK(zeta->name() == "zeta");
    const auto chi = lfzero::make_coeff_provider(
        "dirichlet:4:1", fs::path(LFZERO_TEST_DATA_DIR) / "descriptors");
    CHECK(chi->pole_order() == 0);
    CHECK_THROWS_AS(lfzero::make_coeff_provider("elliptic:11a", "."), lfzero::DomainError);
}

// The l = 1 limit is the classical sum_{k<=X} Lambda(k)/k - log X -> -gamma0;
// the l = 2 limit is -(gamma0^2 + 2 gamma1) = -0.18754623284 (gamma1 the
// first Stieltjes constant), the constant coefficient of the Laurent
// expansion of (-zeta'/zeta)' at s = 1; a 3e6 sieve agrees to 2e-7.
TEST_CASE("prime sum limits converge to the classical constants") {
    lfzero::ZetaCoeffs zc;
    const auto s1 = lfzero::prime_sum_extrapolated(zc, 1, 1e7);
    CHECK(std::abs(s1.value - cplx(-lfzero::kEulerGamma)) <
          std::max(1e-5, 5.0 * s1.error_bar));
    const auto s2 = lfzero::prime_sum_extrapolated(zc, 2, 1e7);
    CHECK(std::abs(s2.value - cplx(-0.18754623284)) <
          std::max(1e-4, 5.0 * s2.error_bar));
}

TEST_CASE("limit estimate never amplifies the partial-sum error") {
    lfzero::ZetaCoeffs zc;
    const cplx plain = lfzero::prime_sum_limit(zc, 1, 1e6);
    const auto extrap = lfzero::prime_sum_extrapolated(zc, 1, 1e6);
    const cplx truth(-lfzero::kEulerGamma);
    CHECK(std::abs(extrap.value - truth) <= std::abs(plain - truth) + 1e-9);
    CHECK(extrap.error_bar > 0.0);
    // the bar covers the distance to the classical limit
    CHECK(std::abs(extrap.value - truth) <= extrap.error_bar);
}

TEST_CASE("multi-l batch matches single-l calls") {
    lfzero::ZetaCoeffs zc;
    const auto batch = lfzero::prime_sum_extrapolated_multi(zc, 3, 1e5);
    REQUIRE(batch.size() == 3);
    for (int l = 1; l <= 3; ++l) {
        const auto single = lfzero::prime_sum_extrapolated(zc, l, 1e5);
        CHECK(std::abs(batch[l - 1].value - single.value) < 1e-12);
    }
}

TEST_CASE("dirichlet prime sums have no pole compensation") {
    // for chi4 the partial sums converge outright (m_F = 0): two checkpoints
    // a decade apart must agree to the extrapolation bar scale
    const auto desc = testutil::chi4_descriptor();
    const cplx a = lfzero::prime_sum_limit(*desc.coeffs, 1, 1e5);
    const cplx b = lfzero::prime_sum_limit(*desc.coeffs, 1, 1e6);
    CHECK(std::abs(a - b) < 5e-3);
}

}  // TEST_SUITE
