#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bergman/domain_spec.hpp"

namespace bergman {

struct ToleranceConfig {
    double closed = 1e-12;  ///< closed-form identities
    double oracle = 1e-6;   ///< oracle vs closed form
    double fd = 2e-2;       ///< FD torsion vs closed form
};

struct VerifyOptions {
    int basis_size = 24;   ///< disk Gram basis size
    double fd_h = 0.0;     ///< grid spacing for the FD check; 0 skips it
    int quad_radial = 0;   ///< quadrature cross-check nodes; 0 skips it
    int quad_angular = 0;
    int laurent_min = -8;  ///< Laurent degree range for annulus/confocal
    int laurent_max = 8;
};

/// Fixed agreement tolerance between the quadrature and exact-algebra
/// projections (both compute the same finite-dimensional object).
inline constexpr double kQuadAgreementTol = 1e-8;

/// Column-oriented numeric table with deterministic CSV/JSON rendering.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
};

/// %.17g-style formatting via std::to_chars: locale-independent and
/// deterministic.
std::string format_double(double v);

const char* library_version();

/// Closed-form report for a domain spec; deterministic field order and
/// byte-identical output for identical input.
nlohmann::ordered_json compute_report(const DomainSpec& spec,
                                      const ToleranceConfig& tol);

/// Runs the oracles applicable to the spec and compares them against the
/// closed forms. Sets all_passed; the caller maps it to the exit status.
nlohmann::ordered_json verify_report(const DomainSpec& spec,
                                     const VerifyOptions& opt,
                                     const ToleranceConfig& tol,
                                     bool& all_passed);

/// Table of (a, lambda, lambda^2) over a uniform grid of [0, 1/n],
/// endpoints included. Requires n >= 2 and steps >= 2.
Table sweep_epicycloid(int n, int steps);

struct ExportResult {
    Table table;
    long skipped = 0;  ///< samples dropped (vanishing derivative etc.)
};

/// Boundary curves or best-approximation field samples for offline
/// plotting. `what` is "boundary" or "field".
ExportResult export_data(const DomainSpec& spec, const std::string& what,
                         int resolution);

}  // namespace bergman
