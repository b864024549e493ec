#pragma once

#include <vector>

#include "bergman/polynomial.hpp"

namespace bergman {

/// Conformal map phi(z) = a_1 z + ... + a_n z^n from the unit disk,
/// normalized so phi(0) = 0. Requires a_1 != 0; trailing zero coefficients
/// are trimmed so that the stored degree is exact (a_n != 0).
///
/// Immutable after construction.
class MapCoeffs {
  public:
    /// a[0] holds a_1, a[1] holds a_2, ...
    explicit MapCoeffs(std::vector<Complex> a);

    int degree() const { return static_cast<int>(a_.size()); }

    /// 1-based accessor: a(k) = a_k for k in [1, degree()].
    Complex a(int k) const;

    /// The stored (a_1, ..., a_n).
    const std::vector<Complex>& coeffs() const { return a_; }

    /// Dense coefficients {0, a_1, ..., a_n} (index = degree).
    Poly poly() const;

    /// Dense coefficients of phi'.
    Poly derivative_poly() const;

    Complex eval(Complex zeta) const;
    Complex deriv(Complex zeta) const;

    /// The map s * phi.
    MapCoeffs scaled(Complex s) const;

  private:
    std::vector<Complex> a_;
};

/// A simply-connected one-point quadrature domain, described by its
/// polynomial conformal map. Univalence of the map is the caller's
/// responsibility; `verified` runs the heuristic check below and only
/// constructs the domain when it passes.
class PolyMapDomain {
  public:
    explicit PolyMapDomain(MapCoeffs map)
        : map_(std::move(map)), univalence_checked_(false) {}

    /// Runs univalence_heuristic; throws std::domain_error on failure.
    static PolyMapDomain verified(MapCoeffs map, int boundary_samples = 512);

    const MapCoeffs& map() const { return map_; }
    bool univalence_checked() const { return univalence_checked_; }

  private:
    MapCoeffs map_;
    bool univalence_checked_;
};

/// The annulus r < |z| < R. Requires 0 < r < R.
struct AnnulusDomain {
    double inner;
    double outer;
    AnnulusDomain(double r, double R);
};

/// The region between two confocal ellipses: the image of the annulus
/// r < |zeta| < R under zeta + 1/zeta. Requires 1 < r < R.
struct ConfocalDomain {
    double inner;
    double outer;
    ConfocalDomain(double r, double R);
};

/// Parameters of the level set C Re(z^n) - |z|^2 + 1 > 0. Requires n >= 2
/// and C >= 0.
struct MonomialLevelParams {
    int n;
    double c;
    MonomialLevelParams(int n_, double c_);
};

/// phi(e^{2 pi i k / count}) for k = 0..count-1. Requires count >= 3.
std::vector<Complex> boundary_points(const MapCoeffs& map, int count);
std::vector<Complex> boundary_points(const PolyMapDomain& domain, int count);

/// Heuristic univalence check: the sampled boundary polygon is simple and
/// has winding number 1 about a spread of interior probe points, and
/// |phi'| does not vanish on a polar grid strictly inside the disk.
/// A pass is strong practical evidence, not a proof.
bool univalence_heuristic(const MapCoeffs& map, int boundary_samples = 512);

/// Newton iteration for phi(zeta) = z starting from `seed`. Returns zeta
/// with |phi(zeta) - z| <= 1e-12 (1 + |z|) and |zeta| < 1.
/// Throws NoConvergenceError after max_iter steps (or if the iteration
/// converges outside the disk) and DerivativeVanishedError when
/// |phi'| < 1e-14 at an iterate. No fallback: the caller chose the seed.
Complex invert_map(const MapCoeffs& map, Complex z, Complex seed,
                   int max_iter = 100);

/// Convenience inversion with the default seed z / a_1 and, if that Newton
/// run fails, a coarse grid search over the disk for a better seed.
Complex invert_map(const MapCoeffs& map, Complex z);

}  // namespace bergman
