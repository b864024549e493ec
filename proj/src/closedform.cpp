#include "bergman/closedform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bergman/errors.hpp"

namespace bergman {

namespace {
constexpr double kPi = std::numbers::pi;

// Clamp band for roundoff in zbar_norm_sq - proj_norm_sq. The difference is
// a squared distance, so genuine negatives signal a bug upstream.
constexpr double kDiscriminantBand = 1e-10;

double content_from_norms(double z2, double p2) {
    const double diff = z2 - p2;
    if (diff < -kDiscriminantBand) {
        throw NegativeDiscriminantError(
            "bergman_content: zbar_norm_sq - proj_norm_sq < -1e-10");
    }
    return std::sqrt(diff > 0.0 ? diff : 0.0);
}
}  // namespace

std::vector<Complex> product_coeffs(const MapCoeffs& map) {
    const int n = map.degree();
    std::vector<Complex> c(static_cast<std::size_t>(2 * n - 1), Complex(0.0, 0.0));
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
            const int m = k + j - 1;  // c_m collects k + j = m + 1
            c[static_cast<std::size_t>(m - 1)] +=
                static_cast<double>(k) * map.a(k) * map.a(j);
        }
    }
    return c;
}

double zbar_norm_sq(const MapCoeffs& map) {
    const std::vector<Complex> c = product_coeffs(map);
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double m = static_cast<double>(i + 1);
        s += std::norm(c[i]) / (m + 1.0);
    }
    return kPi * s;
}

BestApproxPrimitive best_approx_primitive(const MapCoeffs& map) {
    const int n = map.degree();
    BestApproxPrimitive out;
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += std::norm(map.a(k));
    out.constant = 0.5 * s;
    out.coeffs.resize(static_cast<std::size_t>(n - 1), Complex(0.0, 0.0));
    for (int k = 1; k <= n - 1; ++k) {
        Complex b(0.0, 0.0);
        for (int j = 1; j <= n - k; ++j) b += map.a(k + j) * std::conj(map.a(j));
        out.coeffs[static_cast<std::size_t>(k - 1)] = b;
    }
    return out;
}

Poly BestApproxPrimitive::poly() const {
    Poly p(coeffs.size() + 1);
    p[0] = Complex(constant, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p[i + 1] = coeffs[i];
    return p;
}

Poly BestApproxPrimitive::derivative() const { return poly_derivative(poly()); }

double projection_norm_sq(const MapCoeffs& map) {
    const BestApproxPrimitive prim = best_approx_primitive(map);
    double s = 0.0;
    for (std::size_t i = 0; i < prim.coeffs.size(); ++i) {
        s += static_cast<double>(i + 1) * std::norm(prim.coeffs[i]);
    }
    return kPi * s;
}

ContentBreakdown bergman_content(const MapCoeffs& map) {
    ContentBreakdown out;
    out.c = product_coeffs(map);
    const BestApproxPrimitive prim = best_approx_primitive(map);
    out.b = prim.coeffs;
    out.zbar_norm_sq = zbar_norm_sq(map);
    out.proj_norm_sq = projection_norm_sq(map);
    out.content = content_from_norms(out.zbar_norm_sq, out.proj_norm_sq);
    return out;
}

double torsional_rigidity_sc(const MapCoeffs& map) {
    const ContentBreakdown cb = bergman_content(map);
    return cb.content * cb.content;
}

double epicycloid_content(int n, double a) {
    if (n < 2) throw std::domain_error("epicycloid_content: need n >= 2");
    if (!(a >= 0.0) || a > 1.0 / static_cast<double>(n)) {
        throw std::domain_error("epicycloid_content: need 0 <= a <= 1/n");
    }
    const double nd = static_cast<double>(n);
    return std::sqrt(kPi * (1.0 + 4.0 * a * a + nd * a * a * a * a) / 2.0);
}

AnnulusClosedForms annulus_closedforms(const AnnulusDomain& domain) {
    const double r = domain.inner;
    const double R = domain.outer;
    const double L = std::log(R / r);
    const double r2 = r * r, R2 = R * R;
    const double r4 = r2 * r2, R4 = R2 * R2;
    AnnulusClosedForms out;
    out.best_coeff = (R2 - r2) / (2.0 * L);
    out.content_sq = kPi / 2.0 * ((R4 - r4) - (R2 - r2) * (R2 - r2) / L);
    out.torsion = kPi / 2.0 * (R4 - r4);
    return out;
}

ConfocalCoeffs confocal_coeffs(const ConfocalDomain& domain) {
    const double r = domain.inner;
    const double R = domain.outer;
    const double L = std::log(R) - std::log(r);
    const double r2 = r * r, R2 = R * R;
    ConfocalCoeffs out;
    out.A = (-std::log(r) * (R2 + 1.0 / R2) + std::log(R) * (r2 + 1.0 / r2)) / L;
    out.B = (R2 + 1.0 / R2 - r2 - 1.0 / r2) / L;
    out.C = 1.0 / (R2 + r2);
    out.D = r2 * R2 / (R2 + r2);
    return out;
}

double confocal_zbar_norm_sq(const ConfocalDomain& domain) {
    const double r = domain.inner;
    const double R = domain.outer;
    const double r4 = r * r * r * r, R4 = R * R * R * R;
    return kPi / 2.0 * (R4 - r4 + 1.0 / r4 - 1.0 / R4);
}

double confocal_best_norm_sq(const ConfocalDomain& domain) {
    // The pullback of f is B/(2 zeta) + 2 C zeta - 2 D zeta^{-3}, the
    // zeta-derivative of (A + B Log zeta)/2 + C zeta^2 + D zeta^{-2}; note
    // the factor 2 that differentiation puts on the C and D terms.
    const ConfocalCoeffs k = confocal_coeffs(domain);
    const double r = domain.inner;
    const double R = domain.outer;
    const double L = std::log(R / r);
    const double r4 = r * r * r * r, R4 = R * R * R * R;
    return kPi / 2.0 *
           (k.B * k.B * L + 4.0 * k.C * k.C * (R4 - r4) +
            4.0 * k.D * k.D * (1.0 / r4 - 1.0 / R4));
}

double confocal_content_sq(const ConfocalDomain& domain) {
    return confocal_zbar_norm_sq(domain) - confocal_best_norm_sq(domain);
}

double monomial_critical_constant(int n) {
    if (n < 2) throw std::domain_error("monomial_critical_constant: need n >= 2");
    if (n == 2) return 1.0;  // 0^0 = 1 convention
    const double nd = static_cast<double>(n);
    return 2.0 * std::pow(nd - 2.0, (nd - 2.0) / 2.0) / std::pow(nd, nd / 2.0);
}

MonomialRadialProfile monomial_radial_profile(const MonomialLevelParams& params) {
    if (params.n < 3) {
        throw std::domain_error("monomial_radial_profile: need n >= 3");
    }
    if (!(params.c > 0.0)) {
        throw std::domain_error("monomial_radial_profile: need C > 0");
    }
    const double nd = static_cast<double>(params.n);
    MonomialRadialProfile out;
    out.r_crit = std::pow(2.0 / (nd * params.c), 1.0 / (nd - 2.0));
    out.f_at_r = params.c * std::pow(out.r_crit, nd) - out.r_crit * out.r_crit + 1.0;
    out.bounded = out.f_at_r <= 0.0;
    return out;
}

bool monomial_bounded(const MonomialLevelParams& params) {
    if (params.n == 2) return params.c < 1.0;  // conic: bounded iff an ellipse
    if (params.c == 0.0) return true;          // the unit disk
    return monomial_radial_profile(params).bounded;
}

}  // namespace bergman
