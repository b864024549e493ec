#pragma once

#include <vector>

#include "bergman/domain.hpp"
#include "bergman/polynomial.hpp"

namespace bergman {

/// Full breakdown of the analytic-content computation for a polynomial-map
/// domain: content^2 = zbar_norm_sq - proj_norm_sq.
struct ContentBreakdown {
    double zbar_norm_sq;       ///< ||zbar||^2 over the domain
    double proj_norm_sq;       ///< ||f||^2 of the best approximation f
    double content;            ///< lambda = sqrt(zbar_norm_sq - proj_norm_sq)
    std::vector<Complex> c;    ///< c_1..c_{2n-1}, coefficients of phi * phi'
    std::vector<Complex> b;    ///< b_1..b_{n-1}, b_k = sum_j a_{k+j} conj(a_j)
};

/// The polynomial P with F = P o phi^{-1}, f = F': P(0) = (1/2) sum |a_k|^2
/// and P's coefficient of zeta^k is b_k for k = 1..n-1.
struct BestApproxPrimitive {
    double constant;
    std::vector<Complex> coeffs;  ///< coeffs[k-1] multiplies zeta^k

    /// Dense coefficients {constant, b_1, ..., b_{n-1}}.
    Poly poly() const;
    /// p = P', the pullback (f o phi) phi' of the best approximation.
    Poly derivative() const;
};

struct AnnulusClosedForms {
    double best_coeff;  ///< C in f(z) = C/z
    double content_sq;  ///< lambda^2
    double torsion;     ///< rho
};

/// Coefficients of the harmonic solution on the confocal-ellipse region:
/// 2u(phi(zeta)) = A + B log|zeta| + C(zeta^2 + conj(zeta)^2)
///                 + D(zeta^-2 + conj(zeta)^-2).
struct ConfocalCoeffs {
    double A;
    double B;
    double C;
    double D;
};

struct MonomialRadialProfile {
    double r_crit;   ///< (2/(nC))^{1/(n-2)}
    double f_at_r;   ///< C r_crit^n - r_crit^2 + 1
    bool bounded;    ///< f_at_r <= 0
};

/// (c_1, ..., c_{2n-1}) with c_m = sum_{k+j=m+1} k a_k a_j: the coefficients
/// of phi * phi'.
std::vector<Complex> product_coeffs(const MapCoeffs& map);

/// Integral of |z|^2 over the domain: pi sum_m |c_m|^2 / (m+1).
double zbar_norm_sq(const MapCoeffs& map);

BestApproxPrimitive best_approx_primitive(const MapCoeffs& map);

/// ||f||^2 = pi sum_k k |b_k|^2; zero exactly when the domain is a disk.
double projection_norm_sq(const MapCoeffs& map);

/// Analytic content lambda and its ingredients. Differences in
/// [-1e-10, 0] are clamped to zero; anything more negative throws
/// NegativeDiscriminantError.
ContentBreakdown bergman_content(const MapCoeffs& map);

/// Torsional rigidity of the simply-connected domain: content^2.
double torsional_rigidity_sc(const MapCoeffs& map);

/// lambda for phi = z + a z^n: sqrt(pi (1 + 4a^2 + n a^4) / 2).
/// Requires n >= 2 and 0 <= a <= 1/n.
double epicycloid_content(int n, double a);

/// C = (R^2-r^2)/(2 log(R/r)), lambda^2, and rho for the annulus; the gap
/// rho - lambda^2 equals (pi/2)(R^2-r^2)^2/log(R/r).
AnnulusClosedForms annulus_closedforms(const AnnulusDomain& domain);

ConfocalCoeffs confocal_coeffs(const ConfocalDomain& domain);

/// Integral of |z|^2 over the confocal region:
/// (pi/2)(R^4 - r^4 + 1/r^4 - 1/R^4).
double confocal_zbar_norm_sq(const ConfocalDomain& domain);

/// ||f||^2 = (pi/2)(B^2 log(R/r) + 4 C^2 (R^4-r^4) + 4 D^2 (1/r^4-1/R^4)).
double confocal_best_norm_sq(const ConfocalDomain& domain);

/// lambda^2 = confocal_zbar_norm_sq - confocal_best_norm_sq.
double confocal_content_sq(const ConfocalDomain& domain);

/// 2 (n-2)^{(n-2)/2} / n^{n/2}; equals 1 at n = 2 (0^0 = 1).
double monomial_critical_constant(int n);

/// Radial profile F(r) = C r^n - r^2 + 1 at its interior critical point.
/// Requires n >= 3 and C > 0.
MonomialRadialProfile monomial_radial_profile(const MonomialLevelParams& params);

/// Whether the level set C Re(z^n) - |z|^2 + 1 > 0 has a bounded component
/// containing the origin. Handles n = 2 (bounded iff C < 1) and C = 0.
bool monomial_bounded(const MonomialLevelParams& params);

}  // namespace bergman
