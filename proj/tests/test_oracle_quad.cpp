#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bergman/closedform.hpp"
#include "bergman/oracle.hpp"
#include "test_util.hpp"

using bergman::MapCoeffs;
using testutil::real_map;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("quad_project_disk: identity map at minimal settings") {
    const auto pr = bergman::quad_project_disk(real_map({1}), 4, 8, 16);
    CHECK(pr.residual_norm == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-10));
}

TEST_CASE("quad_project_disk agrees with the exact-algebra oracle") {
    // node counts in the exact regime for these integrands
    const MapCoeffs card = real_map({1, 0.5});
    const auto quad = bergman::quad_project_disk(card, 16, 64, 256);
    const auto gram = bergman::gram_project_disk(card, 16);
    CHECK(std::abs(quad.residual_norm - gram.residual_norm) / gram.residual_norm < 1e-8);
    for (std::size_t k = 0; k < 16; ++k) {
        CHECK(std::abs(quad.basis_coeffs[k] - gram.basis_coeffs[k]) < 1e-6);
    }

    const MapCoeffs epi = real_map({1, 0, 0.2});
    const auto quad2 = bergman::quad_project_disk(epi, 12, 64, 256);
    const auto gram2 = bergman::gram_project_disk(epi, 12);
    CHECK(std::abs(quad2.residual_norm - gram2.residual_norm) / gram2.residual_norm < 1e-10);
}

TEST_CASE("quad_project_disk: radial error drops by more than the order ratio") {
    // under-resolved radial rule on a degree-2 map with basis 16: the
    // integrands have radial degree ~ 60, so 12 and 24 nodes are both
    // inexact and Gauss-Legendre converges fast between them
    const MapCoeffs card = real_map({1, 0.5});
    const auto exact = bergman::gram_project_disk(card, 16);
    const auto coarse = bergman::quad_project_disk(card, 16, 12, 256);
    const auto fine = bergman::quad_project_disk(card, 16, 24, 256);
    const double e_coarse = std::abs(coarse.residual_norm - exact.residual_norm);
    const double e_fine = std::abs(fine.residual_norm - exact.residual_norm);
    CHECK(e_fine < 1e-8);          // fine rule is already essentially exact
    if (e_fine > 1e-15) {
        CHECK(e_coarse / e_fine > 4.0);
    } else {
        CHECK(e_coarse > 4.0 * 1e-15);
    }
}

TEST_CASE("quad_project_disk validates node counts") {
    CHECK_THROWS_AS(bergman::quad_project_disk(real_map({1}), 4, 4, 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(bergman::quad_project_disk(real_map({1}), 4, 16, 8),
                    std::invalid_argument);
}
