#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bergman/errors.hpp"
#include "bergman/oracle.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;

// <u, v> over the unit disk for analytic polynomials, via
// integral of zeta^p conj(zeta)^q = delta_{pq} pi / (p+1).
Complex disk_ip(const Poly& u, const Poly& v) {
    const std::size_t m = std::min(u.size(), v.size());
    Complex s(0.0, 0.0);
    for (std::size_t p = 0; p < m; ++p) {
        s += u[p] * std::conj(v[p]) / static_cast<double>(p + 1);
    }
    return kPi * s;
}

// Shared tail of the normal-equations oracles: factor the Hermitian Gram
// matrix, check its condition estimate, and assemble a ProjectionResult
// whose residual is computed from the full quadratic form (so the
// Pythagoras identity is a genuine certificate of the solve).
ProjectionResult solve_normal_equations(const Eigen::MatrixXcd& gram,
                                        const Eigen::VectorXcd& rhs,
                                        double zbar_sq) {
    const auto ldlt = gram.ldlt();
    const double rc = ldlt.rcond();
    const double condition = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(condition <= kMaxGramCondition)) {
        throw IllConditionedError(
            "gram projection: condition estimate " + std::to_string(condition) +
            " exceeds 1e12; reduce basis_size");
    }
    const Eigen::VectorXcd x = ldlt.solve(rhs);
    const double quad = std::real(x.dot(gram * x));  // x^H G x
    const double cross = std::real(x.dot(rhs));      // Re x^H rhs
    double res_sq = zbar_sq - 2.0 * cross + quad;
    if (res_sq < 0.0) res_sq = 0.0;  // roundoff when the residual is ~ 0

    ProjectionResult out;
    out.basis_coeffs.assign(x.data(), x.data() + x.size());
    out.residual_norm = std::sqrt(res_sq);
    out.gram_condition = condition;
    out.basis_size = static_cast<int>(x.size());
    out.min_degree = 0;
    return out;
}

// integral of |z|^{2p} over the annulus r < |z| < R
double laurent_moment(double r, double R, int p) {
    if (p == -1) return 2.0 * kPi * std::log(R / r);
    const double e = 2.0 * static_cast<double>(p) + 2.0;
    return 2.0 * kPi * (std::pow(R, e) - std::pow(r, e)) / e;
}

}  // namespace

ProjectionResult gram_project_disk(const MapCoeffs& map, int basis_size) {
    if (basis_size < 1) throw std::invalid_argument("gram_project_disk: need basis_size >= 1");
    const int N = basis_size;
    const Poly phi = map.poly();
    const Poly dphi = map.derivative_poly();

    // pullbacks Q_k = phi^k phi' of the basis monomials, plus one more for
    // the right-hand side
    std::vector<Poly> Q(static_cast<std::size_t>(N + 1));
    Q[0] = dphi;
    for (int k = 1; k <= N; ++k) Q[static_cast<std::size_t>(k)] = poly_mul(Q[static_cast<std::size_t>(k - 1)], phi);

    Eigen::MatrixXcd gram(N, N);
    for (int k = 0; k < N; ++k) {
        for (int l = 0; l <= k; ++l) {
            // <z^l, z^k> over the image domain
            const Complex g = disk_ip(Q[static_cast<std::size_t>(l)], Q[static_cast<std::size_t>(k)]);
            gram(k, l) = g;
            gram(l, k) = std::conj(g);
        }
    }
    Eigen::VectorXcd rhs(N);
    for (int k = 0; k < N; ++k) {
        rhs(k) = std::conj(disk_ip(Q[static_cast<std::size_t>(k + 1)], dphi));
    }
    const double z2 = std::real(disk_ip(poly_mul(phi, dphi), poly_mul(phi, dphi)));
    return solve_normal_equations(gram, rhs, z2);
}

ProjectionResult gram_project_annulus(const AnnulusDomain& domain, int min_deg,
                                      int max_deg) {
    if (min_deg > max_deg) {
        throw std::invalid_argument("gram_project_annulus: need min_deg <= max_deg");
    }
    const double r = domain.inner;
    const double R = domain.outer;
    const int N = max_deg - min_deg + 1;

    ProjectionResult out;
    out.basis_coeffs.assign(static_cast<std::size_t>(N), Complex(0.0, 0.0));
    out.basis_size = N;
    out.min_degree = min_deg;

    // Monomials of distinct degree are orthogonal over the annulus, and
    // <zbar, z^k> = conj(integral of z^{k+1}) vanishes except at k = -1,
    // where it equals the area.
    double dmin = std::numeric_limits<double>::infinity();
    double dmax = 0.0;
    double proj_sq = 0.0;
    for (int k = min_deg; k <= max_deg; ++k) {
        const double g = laurent_moment(r, R, k);
        dmin = std::min(dmin, g);
        dmax = std::max(dmax, g);
        if (k == -1) {
            const double area = kPi * (R * R - r * r);
            const double coeff = area / g;  // (R^2 - r^2) / (2 log(R/r))
            out.basis_coeffs[static_cast<std::size_t>(k - min_deg)] = coeff;
            proj_sq += coeff * coeff * g;
        }
    }
    const double z2 = kPi / 2.0 * (std::pow(R, 4) - std::pow(r, 4));
    out.residual_norm = std::sqrt(std::max(z2 - proj_sq, 0.0));
    out.gram_condition = dmax / dmin;
    return out;
}

ProjectionResult gram_project_confocal(const ConfocalDomain& domain,
                                       int min_deg, int max_deg) {
    if (min_deg > -3 || max_deg < 1) {
        throw std::invalid_argument(
            "gram_project_confocal: need min_deg <= -3 and max_deg >= 1");
    }
    const double r = domain.inner;
    const double R = domain.outer;
    const int N = max_deg - min_deg + 1;

    ProjectionResult out;
    out.basis_coeffs.assign(static_cast<std::size_t>(N), Complex(0.0, 0.0));
    out.basis_size = N;
    out.min_degree = min_deg;

    // Basis h_k with (h_k o phi) phi' = zeta^k. Then
    //   <h_k, h_l> = integral of zeta^k conj(zeta)^l over the annulus (diagonal)
    //   <zbar, h_k> = integral of conj(phi zeta^k) phi' over the annulus,
    // and with phi zeta^k = zeta^{k+1} + zeta^{k-1}, phi' = 1 - zeta^{-2}
    // the pairing picks out matching Laurent exponents.
    double dmin = std::numeric_limits<double>::infinity();
    double dmax = 0.0;
    double proj_sq = 0.0;
    const int conj_exps[2] = {0, -2};
    const double conj_coefs[2] = {1.0, -1.0};
    for (int k = min_deg; k <= max_deg; ++k) {
        const double g = laurent_moment(r, R, k);
        dmin = std::min(dmin, g);
        dmax = std::max(dmax, g);
        double rhs = 0.0;
        for (const int s : {k + 1, k - 1}) {
            for (int t = 0; t < 2; ++t) {
                if (s == conj_exps[t]) rhs += conj_coefs[t] * laurent_moment(r, R, s);
            }
        }
        if (rhs != 0.0) {
            const double coeff = rhs / g;
            out.basis_coeffs[static_cast<std::size_t>(k - min_deg)] = coeff;
            proj_sq += coeff * coeff * g;
        }
    }
    const double z2 = laurent_moment(r, R, 1) + laurent_moment(r, R, -3);
    out.residual_norm = std::sqrt(std::max(z2 - proj_sq, 0.0));
    out.gram_condition = dmax / dmin;
    return out;
}

ProjectionResult quad_project_disk(const MapCoeffs& map, int basis_size,
                                   int radial_nodes, int angular_nodes) {
    if (basis_size < 1) throw std::invalid_argument("quad_project_disk: need basis_size >= 1");
    if (radial_nodes < 8) throw std::invalid_argument("quad_project_disk: need radial_nodes >= 8");
    if (angular_nodes < 16) throw std::invalid_argument("quad_project_disk: need angular_nodes >= 16");

    const int N = basis_size;
    const auto [rx, rw] = gauss_legendre(radial_nodes, 0.0, 1.0);
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(N, N);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(N);
    double z2 = 0.0;

    std::vector<Complex> pw(static_cast<std::size_t>(N + 1));
    for (int i = 0; i < radial_nodes; ++i) {
        const double rho = rx[static_cast<std::size_t>(i)];
        const double wr = rw[static_cast<std::size_t>(i)] * rho * (2.0 * kPi / angular_nodes);
        for (int j = 0; j < angular_nodes; ++j) {
            const double th = 2.0 * kPi * static_cast<double>(j) / angular_nodes;
            const Complex zeta = rho * Complex(std::cos(th), std::sin(th));
            const Complex z = map.eval(zeta);
            const double mu = wr * std::norm(map.deriv(zeta));
            pw[0] = Complex(1.0, 0.0);
            for (int k = 1; k <= N; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * z;
            for (int k = 0; k < N; ++k) {
                // row k of the normal equations pairs against conj(z^k)
                const Complex ck = mu * std::conj(pw[static_cast<std::size_t>(k)]);
                for (int l = 0; l <= k; ++l) gram(k, l) += ck * pw[static_cast<std::size_t>(l)];
                rhs(k) += ck * std::conj(z);
            }
            z2 += mu * std::norm(z);
        }
    }
    for (int k = 0; k < N; ++k) {
        for (int l = k + 1; l < N; ++l) gram(k, l) = std::conj(gram(l, k));
    }
    return solve_normal_equations(gram, rhs, z2);
}

}  // namespace bergman
