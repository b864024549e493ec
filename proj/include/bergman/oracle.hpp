#pragma once

#include <vector>

#include "bergman/domain.hpp"
#include "bergman/polynomial.hpp"

namespace bergman {

/// Result of a least-squares projection of zbar onto a finite basis.
struct ProjectionResult {
    std::vector<Complex> basis_coeffs;  ///< ordered by ascending degree
    double residual_norm;               ///< ||zbar - projection||, the lambda estimate
    double gram_condition;              ///< condition estimate of the Gram matrix
    int basis_size;
    int min_degree;                     ///< degree of basis_coeffs.front()
};

/// Result of the finite-difference torsion solve.
struct TorsionSolveResult {
    double rho;                 ///< discrete Dirichlet energy of the solution
    double grid_h;
    long interior_cells;
    long iterations;            ///< 1 for the direct solve
    double rho_cell_integral;   ///< 2 * integral of nu, cut-cell-aware weights
    double rho_richardson;      ///< extrapolated from an extra solve at 2h
    double nu_min;              ///< smallest interior value (maximum principle: >= 0)
};

/// Cap on the reported Gram condition estimate before the exact-algebra and
/// quadrature projections refuse to answer.
inline constexpr double kMaxGramCondition = 1e12;

/// Projects zbar onto span{1, z, ..., z^{basis_size-1}} in L2 of the image
/// domain. All inner products are pulled back to the unit disk and evaluated
/// as exact finite coefficient sums; the normal equations are solved by a
/// Hermitian factorization. Throws IllConditionedError when the condition
/// estimate exceeds kMaxGramCondition.
ProjectionResult gram_project_disk(const MapCoeffs& map, int basis_size);

/// Projects zbar onto span{z^k : min_deg <= k <= max_deg} over the annulus.
/// The Gram matrix is diagonal; the only nonzero coefficient sits at
/// k = -1 (when the range contains it) and equals (R^2-r^2)/(2 log(R/r)).
ProjectionResult gram_project_annulus(const AnnulusDomain& domain, int min_deg,
                                      int max_deg);

/// Projects zbar over the confocal-ellipse region onto the pullback basis
/// {h_k} defined by (h_k o phi) phi' = zeta^k, phi = zeta + 1/zeta, for
/// min_deg <= k <= max_deg. Requires min_deg <= -3 and max_deg >= 1 so the
/// basis can represent the projection exactly.
ProjectionResult gram_project_confocal(const ConfocalDomain& domain,
                                       int min_deg, int max_deg);

/// Same projection as gram_project_disk, but with every inner product
/// evaluated by tensor-product quadrature on the disk (Gauss-Legendre in
/// radius, trapezoid in angle). Requires radial_nodes >= 8 and
/// angular_nodes >= 16.
ProjectionResult quad_project_disk(const MapCoeffs& map, int basis_size,
                                   int radial_nodes, int angular_nodes);

/// Solves the torsion problem (Laplacian of nu = -2, nu = 0 on the boundary)
/// on a uniform grid of spacing grid_h. Interior nodes are masked by a
/// winding-number test against a dense boundary polygon; stencil arms that
/// cross the boundary are snapped to the polygon intersection with boundary
/// value 0. rho is the discrete Dirichlet energy.
TorsionSolveResult fd_torsion(const MapCoeffs& map, double grid_h);

}  // namespace bergman
