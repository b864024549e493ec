#include <Eigen/Sparse>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/oracle.hpp"

namespace bergman {

namespace {

constexpr int kBoundarySamples = 4096;
constexpr double kMinArmFraction = 1e-3;

struct GridSolve {
    double rho_energy = 0.0;
    double rho_cell_integral = 0.0;
    double nu_min = 0.0;
    long interior = 0;
};

struct Crossing {
    double x;
    int sign;
};

// Fraction t in (0, 1] at which the segment p -> p + d first crosses the
// polygon, or 1 if no crossing is found.
double arm_fraction(const std::vector<Complex>& poly, double px, double py,
                    double dx, double dy) {
    double best = 1.0;
    bool found = false;
    const std::size_t m = poly.size();
    for (std::size_t e = 0; e < m; ++e) {
        const Complex q1 = poly[e];
        const Complex q2 = poly[(e + 1) % m];
        const double rx_ = q2.real() - q1.real();
        const double ry_ = q2.imag() - q1.imag();
        const double denom = dx * ry_ - dy * rx_;
        if (denom == 0.0) continue;
        const double qx = q1.real() - px;
        const double qy = q1.imag() - py;
        const double t = (qx * ry_ - qy * rx_) / denom;
        const double s = (qx * dy - qy * dx) / denom;
        if (s >= 0.0 && s <= 1.0 && t > 0.0 && t <= 1.0) {
            if (t < best || !found) best = std::min(best, t);
            found = true;
        }
    }
    return found ? std::max(best, kMinArmFraction) : 1.0;
}

GridSolve solve_on_grid(const std::vector<Complex>& poly, double h) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Complex& p : poly) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    }
    // fractional offsets keep grid lines away from polygon vertices
    const double x0 = xmin - 2.0 * h + 0.2371 * h;
    const double y0 = ymin - 2.0 * h + 0.1713 * h;
    const int nx = static_cast<int>(std::ceil((xmax + 2.0 * h - x0) / h)) + 1;
    const int ny = static_cast<int>(std::ceil((ymax + 2.0 * h - y0) / h)) + 1;

    // winding-number mask, one scanline per grid row
    std::vector<int> index(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), -1);
    std::vector<std::pair<int, int>> nodes;
    const std::size_t m = poly.size();
    std::vector<Crossing> crossings;
    for (int j = 0; j < ny; ++j) {
        const double y = y0 + h * j;
        crossings.clear();
        for (std::size_t e = 0; e < m; ++e) {
            const Complex a = poly[e];
            const Complex b = poly[(e + 1) % m];
            const bool up = a.imag() <= y && b.imag() > y;
            const bool down = b.imag() <= y && a.imag() > y;
            if (!up && !down) continue;
            const double t = (y - a.imag()) / (b.imag() - a.imag());
            crossings.push_back({a.real() + t * (b.real() - a.real()), up ? 1 : -1});
        }
        if (crossings.empty()) continue;
        std::sort(crossings.begin(), crossings.end(),
                  [](const Crossing& u, const Crossing& v) { return u.x < v.x; });
        // winding at x = sum of signs of crossings to the right
        std::vector<int> suffix(crossings.size() + 1, 0);
        for (std::size_t c = crossings.size(); c-- > 0;) {
            suffix[c] = suffix[c + 1] + crossings[c].sign;
        }
        std::size_t c = 0;
        for (int i = 0; i < nx; ++i) {
            const double x = x0 + h * i;
            while (c < crossings.size() && crossings[c].x <= x) ++c;
            if (suffix[c] != 0) {
                index[static_cast<std::size_t>(i) * ny + j] = static_cast<int>(nodes.size());
                nodes.emplace_back(i, j);
            }
        }
    }

    const long n = static_cast<long>(nodes.size());
    if (n == 0) throw EmptyMaskError("fd_torsion: no interior grid nodes");
    if (n < 100) {
        throw std::invalid_argument("fd_torsion: grid_h too coarse, fewer than 100 interior cells");
    }

    const auto node_index = [&](int i, int j) -> int {
        if (i < 0 || i >= nx || j < 0 || j >= ny) return -1;
        return index[static_cast<std::size_t>(i) * ny + j];
    };

    // Symmetric assembly: arm weight h/l, where l is the distance to the
    // neighbor (l = h) or to the boundary polygon along the arm.
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(5 * n));
    std::vector<std::array<double, 4>> arms(static_cast<std::size_t>(n));
    Eigen::VectorXd b(n);
    for (long t = 0; t < n; ++t) {
        const auto [i, j] = nodes[static_cast<std::size_t>(t)];
        const double px = x0 + h * i;
        const double py = y0 + h * j;
        double diag = 0.0;
        for (int d = 0; d < 4; ++d) {
            const int nb = node_index(i + di[d], j + dj[d]);
            if (nb >= 0) {
                arms[static_cast<std::size_t>(t)][static_cast<std::size_t>(d)] = h;
                trips.emplace_back(static_cast<int>(t), nb, -1.0);
                diag += 1.0;
            } else {
                const double frac = arm_fraction(poly, px, py, di[d] * h, dj[d] * h);
                arms[static_cast<std::size_t>(t)][static_cast<std::size_t>(d)] = frac * h;
                diag += 1.0 / frac;
            }
        }
        trips.emplace_back(static_cast<int>(t), static_cast<int>(t), diag);
        b(t) = 2.0 * h * h;
    }

    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trips.begin(), trips.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
    solver.compute(A);
    if (solver.info() != Eigen::Success) {
        throw NoConvergenceError("fd_torsion: factorization failed");
    }
    const Eigen::VectorXd nu = solver.solve(b);
    // componentwise backward error; the denominator is positive since b is
    const Eigen::VectorXd resid = (A * nu - b).cwiseAbs();
    const Eigen::VectorXd scale =
        (A.cwiseAbs() * nu.cwiseAbs() + b.cwiseAbs()).eval();
    if (!(resid.cwiseQuotient(scale).maxCoeff() <= 1e-10)) {
        throw NoConvergenceError("fd_torsion: linear solve residual above 1e-10");
    }

    GridSolve out;
    out.interior = n;
    out.nu_min = nu.minCoeff();
    for (long t = 0; t < n; ++t) {
        const auto [i, j] = nodes[static_cast<std::size_t>(t)];
        const double v = nu(t);
        // east and north interior edges once; boundary arms in all directions
        for (int d = 0; d < 4; ++d) {
            const int nb = node_index(i + di[d], j + dj[d]);
            if (nb >= 0) {
                if (d == 0 || d == 2) {
                    const double dv = v - nu(nb);
                    out.rho_energy += dv * dv;
                }
            } else {
                const double l = arms[static_cast<std::size_t>(t)][static_cast<std::size_t>(d)];
                out.rho_energy += v * v * (h / l);
            }
        }
        const auto& a = arms[static_cast<std::size_t>(t)];
        const double wcell = 0.5 * (a[0] + a[1]) * 0.5 * (a[2] + a[3]);
        out.rho_cell_integral += 2.0 * v * wcell;
    }
    return out;
}

}  // namespace

TorsionSolveResult fd_torsion(const MapCoeffs& map, double grid_h) {
    if (!(grid_h > 0.0)) throw std::invalid_argument("fd_torsion: need grid_h > 0");
    const std::vector<Complex> poly = boundary_points(map, kBoundarySamples);

    const GridSolve fine = solve_on_grid(poly, grid_h);
    TorsionSolveResult out;
    out.rho = fine.rho_energy;
    out.grid_h = grid_h;
    out.interior_cells = fine.interior;
    out.iterations = 1;  // direct factorization
    out.rho_cell_integral = fine.rho_cell_integral;
    out.nu_min = fine.nu_min;
    out.rho_richardson = fine.rho_energy;
    try {
        const GridSolve coarse = solve_on_grid(poly, 2.0 * grid_h);
        // second-order extrapolation against the 2h solve
        out.rho_richardson = fine.rho_energy + (fine.rho_energy - coarse.rho_energy) / 3.0;
    } catch (const std::exception&) {
        // coarse grid too small for the diagnostic; keep the fine value
    }
    return out;
}

}  // namespace bergman
