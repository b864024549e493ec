#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bergman/closedform.hpp"
#include "bergman/errors.hpp"
#include "bergman/quadrature.hpp"

using bergman::Complex;
using bergman::MapCoeffs;

namespace {

const double kPi = std::numbers::pi;

MapCoeffs real_map(std::initializer_list<double> coeffs) {
    std::vector<Complex> a;
    for (double c : coeffs) a.emplace_back(c, 0.0);
    return MapCoeffs(a);
}

// independent route for ||zbar||^2: tensor quadrature of |phi phi'|^2 over
// the unit disk, exact for polynomial integrands at these node counts
double zbar_norm_sq_quadrature(const MapCoeffs& map) {
    const auto [rx, rw] = bergman::gauss_legendre(48, 0.0, 1.0);
    const int m = 256;
    double total = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double rho = rx[i];
        double ring = 0.0;
        for (int j = 0; j < m; ++j) {
            const double th = 2 * kPi * j / m;
            const Complex zeta = rho * Complex(std::cos(th), std::sin(th));
            ring += std::norm(map.eval(zeta)) * std::norm(map.deriv(zeta));
        }
        total += rw[i] * rho * ring * (2 * kPi / m);
    }
    return total;
}

}  // namespace

TEST_CASE("product_coeffs") {
    const auto c1 = bergman::product_coeffs(real_map({1}));
    REQUIRE(c1.size() == 1);
    CHECK(std::abs(c1[0] - Complex(1, 0)) < 1e-15);

    // z + a z^n: c_1 = 1, c_n = (n+1) a, c_{2n-1} = n a^2
    const double a = 0.2;
    const int n = 5;
    std::vector<Complex> coeffs(n, Complex(0, 0));
    coeffs[0] = Complex(1, 0);
    coeffs[n - 1] = Complex(a, 0);
    const auto c = bergman::product_coeffs(MapCoeffs(coeffs));
    REQUIRE(c.size() == static_cast<std::size_t>(2 * n - 1));
    for (int m = 1; m <= 2 * n - 1; ++m) {
        Complex expect(0, 0);
        if (m == 1) expect = Complex(1, 0);
        if (m == n) expect = Complex((n + 1) * a, 0);
        if (m == 2 * n - 1) expect = Complex(n * a * a, 0);
        CHECK(std::abs(c[static_cast<std::size_t>(m - 1)] - expect) < 1e-15);
    }

    // cardioid: (1, 3/2, 1/2), matching the poly_mul convolution route
    const MapCoeffs card = real_map({1, 0.5});
    const auto cc = bergman::product_coeffs(card);
    const auto conv = bergman::poly_mul(card.poly(), card.derivative_poly());
    REQUIRE(cc.size() == 3);
    CHECK(std::abs(cc[0] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(cc[1] - Complex(1.5, 0)) < 1e-15);
    CHECK(std::abs(cc[2] - Complex(0.5, 0)) < 1e-15);
    for (int m = 1; m <= 3; ++m) {
        CHECK(std::abs(cc[static_cast<std::size_t>(m - 1)] - conv[static_cast<std::size_t>(m)]) < 1e-15);
    }
}

TEST_CASE("zbar_norm_sq") {
    CHECK(bergman::zbar_norm_sq(real_map({1})) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(bergman::zbar_norm_sq(real_map({3})) == doctest::Approx(kPi * 81.0 / 2).epsilon(1e-14));
    // z + z^4/4: c = (1, 5/4, 1/4) at degrees (1, 4, 7), so the sum is
    // 1/2 + (25/16)/5 + (1/16)/8 = 105/128
    const MapCoeffs epi4 = real_map({1, 0, 0, 0.25});
    const double expected = kPi * 105.0 / 128.0;
    CHECK(bergman::zbar_norm_sq(epi4) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(zbar_norm_sq_quadrature(epi4) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("best_approx_primitive") {
    const auto disk = bergman::best_approx_primitive(real_map({1}));
    CHECK(disk.constant == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(disk.coeffs.empty());

    // z + a z^n: only j = 1, k = n-1 contributes
    const auto epi = bergman::best_approx_primitive(real_map({1, 0, 0, 0, 0.15}));
    CHECK(epi.constant == doctest::Approx((1 + 0.15 * 0.15) / 2).epsilon(1e-15));
    REQUIRE(epi.coeffs.size() == 4);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(epi.coeffs[static_cast<std::size_t>(k - 1)]) < 1e-16);
    CHECK(std::abs(epi.coeffs[3] - Complex(0.15, 0)) < 1e-15);

    const auto card = bergman::best_approx_primitive(real_map({1, 0.5}));
    CHECK(card.constant == doctest::Approx(5.0 / 8).epsilon(1e-15));
    REQUIRE(card.coeffs.size() == 1);
    CHECK(std::abs(card.coeffs[0] - Complex(0.5, 0)) < 1e-15);
    // the derivative is the pullback (f o phi) phi': constant 1/2 here
    const auto p = card.derivative();
    REQUIRE(p.size() == 1);
    CHECK(std::abs(p[0] - Complex(0.5, 0)) < 1e-15);
}

TEST_CASE("projection_norm_sq") {
    CHECK(bergman::projection_norm_sq(real_map({1})) == 0.0);
    const double a = 0.22;
    CHECK(bergman::projection_norm_sq(real_map({1, 0, a})) ==
          doctest::Approx(kPi * 2 * a * a).epsilon(1e-14));
    CHECK(bergman::projection_norm_sq(real_map({1, 0.5})) ==
          doctest::Approx(kPi / 4).epsilon(1e-14));
}

TEST_CASE("bergman_content") {
    const auto disk = bergman::bergman_content(real_map({1}));
    CHECK(disk.content == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-14));
    CHECK(disk.proj_norm_sq == 0.0);

    const auto card = bergman::bergman_content(real_map({1, 0.5}));
    CHECK(card.content == doctest::Approx(std::sqrt(kPi * 17.0 / 16)).epsilon(1e-14));
    CHECK(card.zbar_norm_sq == doctest::Approx(kPi * 21.0 / 16).epsilon(1e-14));
    CHECK(card.proj_norm_sq == doctest::Approx(kPi / 4).epsilon(1e-14));
    REQUIRE(card.c.size() == 3);
    REQUIRE(card.b.size() == 1);

    // z + a z^n closed form
    for (const int n : {2, 3, 4, 6}) {
        for (const double a : {0.05, 0.5 / n, 1.0 / n}) {
            std::vector<Complex> coeffs(static_cast<std::size_t>(n), Complex(0, 0));
            coeffs[0] = Complex(1, 0);
            coeffs[static_cast<std::size_t>(n - 1)] = Complex(a, 0);
            const auto cb = bergman::bergman_content(MapCoeffs(coeffs));
            const double expect = std::sqrt(kPi * (1 + 4 * a * a + n * std::pow(a, 4)) / 2);
            CHECK(cb.content == doctest::Approx(expect).epsilon(1e-13));
        }
    }
}

TEST_CASE("torsional_rigidity_sc") {
    CHECK(bergman::torsional_rigidity_sc(real_map({2})) ==
          doctest::Approx(kPi * 16.0 / 2).epsilon(1e-14));
    CHECK(bergman::torsional_rigidity_sc(real_map({1, 0.5})) ==
          doctest::Approx(kPi * 17.0 / 16).epsilon(1e-14));
    CHECK(bergman::torsional_rigidity_sc(real_map({1, 0, 0, 0.25})) ==
          doctest::Approx(kPi * 81.0 / 128).epsilon(1e-14));
}

TEST_CASE("epicycloid_content") {
    CHECK(bergman::epicycloid_content(2, 0.0) == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-15));
    CHECK(bergman::epicycloid_content(2, 0.5) ==
          doctest::Approx(std::sqrt(17 * kPi / 16)).epsilon(1e-15));
    CHECK(bergman::epicycloid_content(4, 0.25) ==
          doctest::Approx(std::sqrt(81 * kPi / 128)).epsilon(1e-15));
    CHECK_THROWS_AS(bergman::epicycloid_content(2, 0.51), std::domain_error);
    CHECK_THROWS_AS(bergman::epicycloid_content(2, -0.01), std::domain_error);
    CHECK_THROWS_AS(bergman::epicycloid_content(1, 0.1), std::domain_error);
}

TEST_CASE("annulus_closedforms") {
    const bergman::AnnulusDomain dom(1.0, 2.0);
    const auto cf = bergman::annulus_closedforms(dom);
    const double ln2 = std::log(2.0);
    CHECK(cf.best_coeff == doctest::Approx(3.0 / (2 * ln2)).epsilon(1e-14));
    CHECK(cf.content_sq == doctest::Approx(kPi / 2 * (15.0 - 9.0 / ln2)).epsilon(1e-14));
    CHECK(cf.torsion == doctest::Approx(15 * kPi / 2).epsilon(1e-14));
    CHECK(cf.content_sq < cf.torsion);
    // the gap is exactly (pi/2)(R^2 - r^2)^2 / log(R/r)
    CHECK(cf.torsion - cf.content_sq == doctest::Approx(kPi / 2 * 9.0 / ln2).epsilon(1e-13));

    CHECK_THROWS_AS(bergman::AnnulusDomain(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bergman::AnnulusDomain(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bergman::AnnulusDomain(2.0, 1.0), std::domain_error);

    // r -> 0 limit approaches the disk value along (pi/2)(1 - 1/(-log r))
    const bergman::AnnulusDomain thin(1e-6, 1.0);
    const double asym = kPi / 2 * (1.0 - 1.0 / (-std::log(1e-6)));
    CHECK(std::abs(bergman::annulus_closedforms(thin).content_sq - asym) < 1e-4);
}

TEST_CASE("confocal_coeffs") {
    const bergman::ConfocalDomain dom(1.2, 2.5);
    const auto k = bergman::confocal_coeffs(dom);
    CHECK(k.C == doctest::Approx(1.0 / 7.69).epsilon(1e-13));
    CHECK(k.D == doctest::Approx(1.44 * 6.25 / 7.69).epsilon(1e-13));
    const double L = std::log(2.5 / 1.2);
    CHECK(k.B == doctest::Approx((6.25 + 0.16 - 1.44 - 1.0 / 1.44) / L).epsilon(1e-13));

    // defining equations
    const double r = 1.2, R = 2.5;
    CHECK(k.C * r * r + k.D / (r * r) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(k.C * R * R + k.D / (R * R) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(k.A + k.B * std::log(R) == doctest::Approx(R * R + 1 / (R * R)).epsilon(1e-13));
    CHECK(k.A + k.B * std::log(r) == doctest::Approx(r * r + 1 / (r * r)).epsilon(1e-13));

    CHECK_THROWS_AS(bergman::ConfocalDomain(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(bergman::ConfocalDomain(2.0, 1.5), std::domain_error);
}

TEST_CASE("confocal_content_sq") {
    const bergman::ConfocalDomain dom(1.2, 2.5);
    // frozen regression constant, computed once with the Laurent-basis Gram
    // oracle at high resolution
    CHECK(bergman::confocal_content_sq(dom) == doctest::Approx(11.8366767974263).epsilon(1e-11));

    // decomposition consistency
    CHECK(bergman::confocal_content_sq(dom) ==
          doctest::Approx(bergman::confocal_zbar_norm_sq(dom) -
                          bergman::confocal_best_norm_sq(dom)).epsilon(1e-14));

    // degenerate limit: content vanishes as R -> r
    const bergman::ConfocalDomain thin(1.5, 1.501);
    CHECK(std::abs(bergman::confocal_content_sq(thin)) < 1e-4);
    CHECK(bergman::confocal_content_sq(thin) > -1e-9);
}

TEST_CASE("monomial_critical_constant") {
    CHECK(bergman::monomial_critical_constant(2) == 1.0);
    CHECK(bergman::monomial_critical_constant(3) ==
          doctest::Approx(2.0 / (3 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(bergman::monomial_critical_constant(4) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK_THROWS_AS(bergman::monomial_critical_constant(1), std::domain_error);
}

TEST_CASE("monomial_radial_profile") {
    const auto p1 = bergman::monomial_radial_profile(bergman::MonomialLevelParams(3, 0.5));
    CHECK_FALSE(p1.bounded);

    const auto p2 = bergman::monomial_radial_profile(bergman::MonomialLevelParams(3, 0.38));
    CHECK(p2.bounded);
    CHECK(p2.f_at_r <= 0.0);

    // proposition equality case: F(r_crit) = 0 at the critical constant
    for (int n = 3; n <= 8; ++n) {
        const double cc = bergman::monomial_critical_constant(n);
        const auto prof = bergman::monomial_radial_profile(bergman::MonomialLevelParams(n, cc));
        CHECK(std::abs(prof.f_at_r) <= 1e-10);
    }

    CHECK_THROWS_AS(bergman::monomial_radial_profile(bergman::MonomialLevelParams(2, 0.5)),
                    std::domain_error);
    CHECK_THROWS_AS(bergman::monomial_radial_profile(bergman::MonomialLevelParams(3, 0.0)),
                    std::domain_error);

    // n = 2 special case: the level set is a conic, bounded iff C < 1
    CHECK(bergman::monomial_bounded(bergman::MonomialLevelParams(2, 0.99)));
    CHECK_FALSE(bergman::monomial_bounded(bergman::MonomialLevelParams(2, 1.0)));
    CHECK(bergman::monomial_bounded(bergman::MonomialLevelParams(5, 0.0)));
}
