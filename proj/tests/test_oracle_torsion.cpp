#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bergman/closedform.hpp"
#include "bergman/errors.hpp"
#include "bergman/oracle.hpp"
#include "test_util.hpp"

using bergman::MapCoeffs;
using testutil::real_map;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("fd_torsion: unit disk at a coarse grid") {
    const auto res = bergman::fd_torsion(real_map({1}), 2.0 / 100.0);
    CHECK(res.interior_cells > 100);
    CHECK(res.iterations == 1);
    CHECK(res.rho == doctest::Approx(kPi / 2).epsilon(5e-3));
    CHECK(res.nu_min >= -1e-12);  // discrete maximum principle
    // the cell-integral route must land close to the energy route
    CHECK(res.rho_cell_integral == doctest::Approx(res.rho).epsilon(2e-2));
    // Richardson diagnostic should not be wild
    CHECK(res.rho_richardson == doctest::Approx(kPi / 2).epsilon(5e-3));
}

TEST_CASE("fd_torsion: cardioid at a coarse grid") {
    const auto res = bergman::fd_torsion(real_map({1, 0.5}), 2.08 / 120.0);
    CHECK(res.rho == doctest::Approx(kPi * 17.0 / 16).epsilon(1e-2));
}

TEST_CASE("fd_torsion: successive refinement contracts") {
    const double h = 2.0 / 40.0;
    const double r1 = bergman::fd_torsion(real_map({1}), h).rho;
    const double r2 = bergman::fd_torsion(real_map({1}), h / 2).rho;
    const double r4 = bergman::fd_torsion(real_map({1}), h / 4).rho;
    const double d1 = std::abs(r1 - r2);
    const double d2 = std::abs(r2 - r4);
    CHECK(d2 > 0.0);
    CHECK(d1 / d2 >= 3.0);
}

TEST_CASE("fd_torsion errors") {
    CHECK_THROWS_AS(bergman::fd_torsion(real_map({1}), 0.0), std::invalid_argument);
    // grid far coarser than the domain: no interior nodes at all
    CHECK_THROWS_AS(bergman::fd_torsion(real_map({1}), 10.0), bergman::EmptyMaskError);
    // a handful of interior nodes is still below the guard
    CHECK_THROWS_AS(bergman::fd_torsion(real_map({1}), 0.4), std::invalid_argument);
}
