#include "bergman/domain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bergman/errors.hpp"
#include "bergman/geometry.hpp"

namespace bergman {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

MapCoeffs::MapCoeffs(std::vector<Complex> a) : a_(std::move(a)) {
    while (!a_.empty() && a_.back() == Complex(0.0, 0.0)) a_.pop_back();
    if (a_.empty()) {
        throw std::invalid_argument("MapCoeffs: at least one nonzero coefficient required");
    }
    if (a_[0] == Complex(0.0, 0.0)) {
        throw std::invalid_argument("MapCoeffs: a_1 must be nonzero (phi'(0) != 0)");
    }
}

Complex MapCoeffs::a(int k) const {
    if (k < 1 || k > degree()) {
        throw std::out_of_range("MapCoeffs::a: index outside [1, degree]");
    }
    return a_[static_cast<std::size_t>(k - 1)];
}

Poly MapCoeffs::poly() const {
    Poly p(a_.size() + 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a_.size(); ++i) p[i + 1] = a_[i];
    return p;
}

Poly MapCoeffs::derivative_poly() const {
    Poly d(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
        d[i] = static_cast<double>(i + 1) * a_[i];
    }
    return d;
}

Complex MapCoeffs::eval(Complex zeta) const {
    Complex y(0.0, 0.0);
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) y = (y + *it) * zeta;
    return y;
}

Complex MapCoeffs::deriv(Complex zeta) const {
    Complex y(0.0, 0.0);
    double k = static_cast<double>(a_.size());
    for (auto it = a_.rbegin(); it != a_.rend(); ++it, k -= 1.0) {
        y = y * zeta + k * (*it);
    }
    return y;
}

MapCoeffs MapCoeffs::scaled(Complex s) const {
    std::vector<Complex> a(a_);
    for (auto& c : a) c *= s;
    return MapCoeffs(std::move(a));
}

PolyMapDomain PolyMapDomain::verified(MapCoeffs map, int boundary_samples) {
    if (!univalence_heuristic(map, boundary_samples)) {
        throw std::domain_error("PolyMapDomain: univalence heuristic failed");
    }
    PolyMapDomain d(std::move(map));
    d.univalence_checked_ = true;
    return d;
}

AnnulusDomain::AnnulusDomain(double r, double R) : inner(r), outer(R) {
    if (!(r > 0.0) || !(r < R)) {
        throw std::domain_error("AnnulusDomain: need 0 < r < R");
    }
}

ConfocalDomain::ConfocalDomain(double r, double R) : inner(r), outer(R) {
    if (!(r > 1.0) || !(r < R)) {
        throw std::domain_error("ConfocalDomain: need 1 < r < R");
    }
}

MonomialLevelParams::MonomialLevelParams(int n_, double c_) : n(n_), c(c_) {
    if (n < 2) throw std::domain_error("MonomialLevelParams: need n >= 2");
    if (!(c >= 0.0)) throw std::domain_error("MonomialLevelParams: need C >= 0");
}

std::vector<Complex> boundary_points(const MapCoeffs& map, int count) {
    if (count < 3) throw std::invalid_argument("boundary_points: need count >= 3");
    std::vector<Complex> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(count);
        pts[static_cast<std::size_t>(k)] = map.eval(Complex(std::cos(th), std::sin(th)));
    }
    return pts;
}

std::vector<Complex> boundary_points(const PolyMapDomain& domain, int count) {
    return boundary_points(domain.map(), count);
}

bool univalence_heuristic(const MapCoeffs& map, int boundary_samples) {
    if (boundary_samples < 16) boundary_samples = 16;
    const std::vector<Complex> polygon = boundary_points(map, boundary_samples);

    // |phi'| must not vanish strictly inside the disk (boundary zeros are
    // allowed: cusped domains are still univalent).
    for (int ir = 0; ir <= 24; ++ir) {
        const double rho = 0.98 * static_cast<double>(ir) / 24.0;
        for (int it = 0; it < 96; ++it) {
            const double th = kTwoPi * static_cast<double>(it) / 96.0;
            const Complex zeta = rho * Complex(std::cos(th), std::sin(th));
            if (std::abs(map.deriv(zeta)) < 1e-9) return false;
        }
    }

    // Winding number 1 about probe points that are images of interior points.
    for (const double rho : {0.0, 0.35, 0.7, 0.9}) {
        for (int j = 0; j < 16; ++j) {
            const double th = kTwoPi * static_cast<double>(j) / 16.0;
            const Complex probe = map.eval(rho * Complex(std::cos(th), std::sin(th)));
            if (winding_number(polygon, probe) != 1) return false;
            if (rho == 0.0) break;  // all angles coincide at the origin
        }
    }

    return !polygon_self_intersects(polygon);
}

namespace {

Complex newton_invert(const MapCoeffs& map, Complex z, Complex seed, int max_iter) {
    const double tol = 1e-12 * (1.0 + std::abs(z));
    Complex zeta = seed;
    for (int it = 0; it <= max_iter; ++it) {
        const Complex w = map.eval(zeta) - z;
        if (std::abs(w) <= tol) {
            if (std::abs(zeta) < 1.0) return zeta;
            throw NoConvergenceError("invert_map: converged outside the unit disk");
        }
        const Complex d = map.deriv(zeta);
        if (std::abs(d) < 1e-14) {
            throw DerivativeVanishedError("invert_map: |phi'| < 1e-14 at an iterate");
        }
        zeta -= w / d;
        // keep iterates bounded so high powers cannot overflow
        const double m = std::abs(zeta);
        if (m > 3.0) zeta *= 3.0 / m;
    }
    std::ostringstream os;
    os << "invert_map: no convergence after " << max_iter << " iterations";
    throw NoConvergenceError(os.str());
}

}  // namespace

Complex invert_map(const MapCoeffs& map, Complex z, Complex seed, int max_iter) {
    return newton_invert(map, z, seed, max_iter);
}

Complex invert_map(const MapCoeffs& map, Complex z) {
    try {
        return newton_invert(map, z, z / map.a(1), 100);
    } catch (const NumericError&) {
        // coarse grid search for a better seed
        Complex best(0.0, 0.0);
        double best_err = std::abs(map.eval(best) - z);
        for (int ir = 1; ir <= 10; ++ir) {
            const double rho = 0.097 * static_cast<double>(ir);
            for (int it = 0; it < 64; ++it) {
                const double th = kTwoPi * static_cast<double>(it) / 64.0;
                const Complex zeta = rho * Complex(std::cos(th), std::sin(th));
                const double err = std::abs(map.eval(zeta) - z);
                if (err < best_err) {
                    best = zeta;
                    best_err = err;
                }
            }
        }
        return newton_invert(map, z, best, 100);
    }
}

}  // namespace bergman
