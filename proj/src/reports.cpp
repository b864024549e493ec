#include "bergman/reports.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "bergman/closedform.hpp"
#include "bergman/errors.hpp"
#include "bergman/oracle.hpp"

#ifndef BERGMAN_VERSION
#define BERGMAN_VERSION "0.0.0"
#endif

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_error(double observed, double expected) {
    const double denom = std::max(std::abs(expected), std::abs(observed));
    if (denom == 0.0) return 0.0;
    return std::abs(observed - expected) / denom;
}

nlohmann::ordered_json complex_list(const std::vector<Complex>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Complex& c : v) arr.push_back({c.real(), c.imag()});
    return arr;
}

nlohmann::ordered_json report_shell(const DomainSpec& spec, const ToleranceConfig& tol) {
    nlohmann::ordered_json j;
    j["tool"] = "bac";
    j["version"] = library_version();
    j["spec"] = spec.to_json();
    j["tolerances"] = {{"closed", tol.closed}, {"oracle", tol.oracle}, {"fd", tol.fd}};
    return j;
}

MapCoeffs map_from_spec(const DomainSpec& spec) {
    try {
        return MapCoeffs(spec.coeffs);
    } catch (const std::exception& e) {
        throw ValidationError("invalid-domain", e.what());
    }
}

AnnulusDomain annulus_from_spec(const DomainSpec& spec) {
    try {
        return AnnulusDomain(spec.r, spec.R);
    } catch (const std::exception& e) {
        throw ValidationError("invalid-domain", e.what());
    }
}

ConfocalDomain confocal_from_spec(const DomainSpec& spec) {
    try {
        return ConfocalDomain(spec.r, spec.R);
    } catch (const std::exception& e) {
        throw ValidationError("invalid-domain", e.what());
    }
}

MonomialLevelParams monomial_from_spec(const DomainSpec& spec) {
    try {
        return MonomialLevelParams(spec.n, spec.C);
    } catch (const std::exception& e) {
        throw ValidationError("invalid-domain", e.what());
    }
}

nlohmann::ordered_json check_entry(const std::string& name, double observed,
                                   double expected, double rel, double tolerance,
                                   bool pass) {
    nlohmann::ordered_json c;
    c["name"] = name;
    c["observed"] = observed;
    c["expected"] = expected;
    c["rel_error"] = rel;
    c["tolerance"] = tolerance;
    c["pass"] = pass;
    return c;
}

nlohmann::ordered_json agreement_check(const std::string& name, double observed,
                                       double expected, double tolerance) {
    const double rel = rel_error(observed, expected);
    return check_entry(name, observed, expected, rel, tolerance, rel <= tolerance);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

const char* library_version() { return BERGMAN_VERSION; }

nlohmann::ordered_json Table::to_json() const {
    nlohmann::ordered_json j;
    j["columns"] = columns;
    nlohmann::ordered_json rws = nlohmann::ordered_json::array();
    for (const auto& row : rows) rws.push_back(row);
    j["rows"] = std::move(rws);
    return j;
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json compute_report(const DomainSpec& spec,
                                      const ToleranceConfig& tol) {
    nlohmann::ordered_json j = report_shell(spec, tol);
    nlohmann::ordered_json r;
    switch (spec.kind) {
        case DomainSpec::Kind::polymap: {
            const MapCoeffs map = map_from_spec(spec);
            const ContentBreakdown cb = bergman_content(map);
            const BestApproxPrimitive prim = best_approx_primitive(map);
            r["kind"] = "polymap";
            r["degree"] = map.degree();
            r["univalence_heuristic"] = univalence_heuristic(map);
            r["lambda"] = cb.content;
            r["lambda_sq"] = cb.content * cb.content;
            r["zbar_norm_sq"] = cb.zbar_norm_sq;
            r["proj_norm_sq"] = cb.proj_norm_sq;
            r["torsion"] = cb.content * cb.content;
            r["primitive_constant"] = prim.constant;
            r["primitive_coeffs"] = complex_list(prim.coeffs);
            r["product_coeffs"] = complex_list(cb.c);
            break;
        }
        case DomainSpec::Kind::annulus: {
            const AnnulusDomain dom = annulus_from_spec(spec);
            const AnnulusClosedForms cf = annulus_closedforms(dom);
            r["kind"] = "annulus";
            r["best_coeff"] = cf.best_coeff;
            r["content_sq"] = cf.content_sq;
            r["lambda"] = std::sqrt(cf.content_sq);
            r["torsion"] = cf.torsion;
            r["gap"] = cf.torsion - cf.content_sq;
            break;
        }
        case DomainSpec::Kind::confocal: {
            const ConfocalDomain dom = confocal_from_spec(spec);
            const ConfocalCoeffs k = confocal_coeffs(dom);
            r["kind"] = "confocal";
            r["A"] = k.A;
            r["B"] = k.B;
            r["C"] = k.C;
            r["D"] = k.D;
            r["zbar_norm_sq"] = confocal_zbar_norm_sq(dom);
            r["best_norm_sq"] = confocal_best_norm_sq(dom);
            r["content_sq"] = confocal_content_sq(dom);
            r["lambda"] = std::sqrt(confocal_content_sq(dom));
            break;
        }
        case DomainSpec::Kind::monomial_level: {
            const MonomialLevelParams p = monomial_from_spec(spec);
            r["kind"] = "monomial-level";
            r["n"] = p.n;
            r["C"] = p.c;
            r["critical_constant"] = monomial_critical_constant(p.n);
            r["bounded"] = monomial_bounded(p);
            if (p.n >= 3 && p.c > 0.0) {
                const MonomialRadialProfile prof = monomial_radial_profile(p);
                r["r_crit"] = prof.r_crit;
                r["f_at_r_crit"] = prof.f_at_r;
            }
            break;
        }
    }
    j["result"] = std::move(r);
    return j;
}

nlohmann::ordered_json verify_report(const DomainSpec& spec,
                                     const VerifyOptions& opt,
                                     const ToleranceConfig& tol,
                                     bool& all_passed) {
    nlohmann::ordered_json j = report_shell(spec, tol);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();

    switch (spec.kind) {
        case DomainSpec::Kind::polymap: {
            const MapCoeffs map = map_from_spec(spec);
            const ContentBreakdown cb = bergman_content(map);
            const ProjectionResult gram = gram_project_disk(map, opt.basis_size);
            checks.push_back(agreement_check("gram residual vs closed-form lambda",
                                             gram.residual_norm, cb.content,
                                             tol.oracle));
            if (opt.quad_radial > 0 && opt.quad_angular > 0) {
                const ProjectionResult quad = quad_project_disk(
                    map, opt.basis_size, opt.quad_radial, opt.quad_angular);
                checks.push_back(agreement_check("quad residual vs gram residual",
                                                 quad.residual_norm,
                                                 gram.residual_norm,
                                                 kQuadAgreementTol));
            }
            if (opt.fd_h > 0.0) {
                const TorsionSolveResult fd = fd_torsion(map, opt.fd_h);
                checks.push_back(agreement_check("fd torsion vs lambda^2", fd.rho,
                                                 cb.content * cb.content, tol.fd));
            }
            break;
        }
        case DomainSpec::Kind::annulus: {
            const AnnulusDomain dom = annulus_from_spec(spec);
            const AnnulusClosedForms cf = annulus_closedforms(dom);
            const ProjectionResult pr =
                gram_project_annulus(dom, opt.laurent_min, opt.laurent_max);
            checks.push_back(agreement_check(
                "laurent residual^2 vs closed-form content_sq",
                pr.residual_norm * pr.residual_norm, cf.content_sq, tol.oracle));
            checks.push_back(check_entry(
                "content_sq strictly below torsion", cf.content_sq, cf.torsion,
                (cf.torsion - cf.content_sq) / cf.torsion, 0.0,
                cf.content_sq < cf.torsion));
            const double gap_expected = kPi / 2.0 *
                                        std::pow(dom.outer * dom.outer - dom.inner * dom.inner, 2) /
                                        std::log(dom.outer / dom.inner);
            checks.push_back(agreement_check("torsion gap identity",
                                             cf.torsion - cf.content_sq,
                                             gap_expected, tol.closed));
            break;
        }
        case DomainSpec::Kind::confocal: {
            const ConfocalDomain dom = confocal_from_spec(spec);
            const ConfocalCoeffs k = confocal_coeffs(dom);
            const double r = dom.inner, R = dom.outer;
            const double eq[4] = {
                rel_error(k.C * r * r + k.D / (r * r), 1.0),
                rel_error(k.C * R * R + k.D / (R * R), 1.0),
                rel_error(k.A + k.B * std::log(R), R * R + 1.0 / (R * R)),
                rel_error(k.A + k.B * std::log(r), r * r + 1.0 / (r * r)),
            };
            const double worst = std::max(std::max(eq[0], eq[1]), std::max(eq[2], eq[3]));
            checks.push_back(check_entry("coefficient defining equations", worst,
                                         0.0, worst, tol.closed, worst <= tol.closed));

            const ProjectionResult pr =
                gram_project_confocal(dom, opt.laurent_min, opt.laurent_max);
            checks.push_back(agreement_check(
                "laurent residual^2 vs closed-form content_sq",
                pr.residual_norm * pr.residual_norm, confocal_content_sq(dom),
                tol.oracle));

            // the pullback of the projection, times phi', has coefficients
            // B/2, 2C, -2D at zeta-degrees -1, 1, -3
            const double expect[3] = {k.B / 2.0, 2.0 * k.C, -2.0 * k.D};
            const int at[3] = {-1, 1, -3};
            double dev = 0.0, scale = 0.0;
            for (int i = 0; i < 3; ++i) {
                const Complex got =
                    pr.basis_coeffs[static_cast<std::size_t>(at[i] - pr.min_degree)];
                dev = std::max(dev, std::abs(got - expect[i]));
                scale = std::max(scale, std::abs(expect[i]));
            }
            checks.push_back(check_entry("projection coefficients (B/2, 2C, -2D)",
                                         dev, 0.0, dev / scale, tol.oracle,
                                         dev / scale <= tol.oracle));
            break;
        }
        case DomainSpec::Kind::monomial_level:
            throw ValidationError("bad-kind",
                                  "verify supports polymap, annulus and confocal domains");
    }

    all_passed = true;
    for (const auto& c : checks) {
        if (!c["pass"].get<bool>()) all_passed = false;
    }
    j["checks"] = std::move(checks);
    j["pass"] = all_passed;
    return j;
}

Table sweep_epicycloid(int n, int steps) {
    if (n < 2) throw ValidationError("invalid-domain", "sweep-epicycloid: need n >= 2");
    if (steps < 2) throw ValidationError("invalid-domain", "sweep-epicycloid: need steps >= 2");
    Table t;
    t.columns = {"a", "lambda", "lambda_sq"};
    for (int i = 0; i < steps; ++i) {
        const double a =
            (1.0 / static_cast<double>(n)) * (static_cast<double>(i) / (steps - 1.0));
        const double lam = epicycloid_content(n, a);
        t.rows.push_back({a, lam, lam * lam});
    }
    return t;
}

namespace {

ExportResult export_boundary(const DomainSpec& spec, int resolution) {
    ExportResult out;
    out.table.columns = {"curve", "x", "y"};
    switch (spec.kind) {
        case DomainSpec::Kind::polymap: {
            const MapCoeffs map = map_from_spec(spec);
            for (const Complex& z : boundary_points(map, resolution)) {
                out.table.rows.push_back({0.0, z.real(), z.imag()});
            }
            break;
        }
        case DomainSpec::Kind::annulus: {
            const AnnulusDomain dom = annulus_from_spec(spec);
            const double radii[2] = {dom.outer, dom.inner};
            for (int c = 0; c < 2; ++c) {
                for (int k = 0; k < resolution; ++k) {
                    const double th = 2.0 * kPi * k / resolution;
                    out.table.rows.push_back({static_cast<double>(c),
                                              radii[c] * std::cos(th),
                                              radii[c] * std::sin(th)});
                }
            }
            break;
        }
        case DomainSpec::Kind::confocal: {
            const ConfocalDomain dom = confocal_from_spec(spec);
            const double radii[2] = {dom.outer, dom.inner};
            for (int c = 0; c < 2; ++c) {
                const double rho = radii[c];
                for (int k = 0; k < resolution; ++k) {
                    const double th = 2.0 * kPi * k / resolution;
                    const Complex zeta = rho * Complex(std::cos(th), std::sin(th));
                    const Complex z = zeta + 1.0 / zeta;
                    out.table.rows.push_back({static_cast<double>(c), z.real(), z.imag()});
                }
            }
            break;
        }
        case DomainSpec::Kind::monomial_level: {
            const MonomialLevelParams p = monomial_from_spec(spec);
            if (p.c == 0.0) {  // unit circle
                for (int k = 0; k < resolution; ++k) {
                    const double th = 2.0 * kPi * k / resolution;
                    out.table.rows.push_back({0.0, std::cos(th), std::sin(th)});
                }
                break;
            }
            // trace the zero level of F(r; theta) = C cos(n theta) r^n - r^2 + 1
            // along each ray; one row per root, curve = root index on the ray
            const double nd = static_cast<double>(p.n);
            const double r_cap =
                p.n > 2 ? 4.0 * std::pow(2.0 / (nd * p.c), 1.0 / (nd - 2.0)) + 4.0 : 20.0;
            const int scan = 4000;
            for (int k = 0; k < resolution; ++k) {
                const double th = 2.0 * kPi * k / resolution;
                const double cn = std::cos(nd * th);
                const auto F = [&](double rr) {
                    return p.c * cn * std::pow(rr, nd) - rr * rr + 1.0;
                };
                int branch = 0;
                double prev_r = 0.0, prev_f = F(0.0);
                for (int s = 1; s <= scan; ++s) {
                    const double rr = r_cap * s / scan;
                    const double fv = F(rr);
                    if ((prev_f > 0.0) != (fv > 0.0)) {
                        double lo = prev_r, hi = rr;
                        for (int it = 0; it < 60; ++it) {
                            const double mid = 0.5 * (lo + hi);
                            if ((F(mid) > 0.0) == (prev_f > 0.0)) lo = mid; else hi = mid;
                        }
                        const double root = 0.5 * (lo + hi);
                        out.table.rows.push_back({static_cast<double>(branch),
                                                  root * std::cos(th),
                                                  root * std::sin(th)});
                        ++branch;
                    }
                    prev_r = rr;
                    prev_f = fv;
                }
            }
            break;
        }
    }
    return out;
}

ExportResult export_field(const DomainSpec& spec, int resolution) {
    ExportResult out;
    out.table.columns = {"x", "y", "re_f", "im_f", "abs_resid"};
    const auto emit = [&](Complex z, Complex f) {
        out.table.rows.push_back(
            {z.real(), z.imag(), f.real(), f.imag(), std::abs(std::conj(z) - f)});
    };
    switch (spec.kind) {
        case DomainSpec::Kind::polymap: {
            // the grid lives in the zeta-disk and is pushed forward through
            // phi, so no point-in-domain tests are needed
            const MapCoeffs map = map_from_spec(spec);
            const Poly p = best_approx_primitive(map).derivative();
            for (int i = 0; i < resolution; ++i) {
                const double rho = (i + 0.5) / resolution;
                for (int k = 0; k < resolution; ++k) {
                    const double th = 2.0 * kPi * k / resolution;
                    const Complex zeta = rho * Complex(std::cos(th), std::sin(th));
                    const Complex d = map.deriv(zeta);
                    if (std::abs(d) < 1e-12) {
                        ++out.skipped;
                        continue;
                    }
                    emit(map.eval(zeta), poly_eval(p, zeta) / d);
                }
            }
            break;
        }
        case DomainSpec::Kind::annulus: {
            const AnnulusDomain dom = annulus_from_spec(spec);
            const double C = annulus_closedforms(dom).best_coeff;
            for (int i = 0; i < resolution; ++i) {
                const double rho = dom.inner + (dom.outer - dom.inner) * (i + 0.5) / resolution;
                for (int k = 0; k < resolution; ++k) {
                    const double th = 2.0 * kPi * k / resolution;
                    const Complex z = rho * Complex(std::cos(th), std::sin(th));
                    emit(z, C / z);
                }
            }
            break;
        }
        case DomainSpec::Kind::confocal: {
            const ConfocalDomain dom = confocal_from_spec(spec);
            const ConfocalCoeffs kf = confocal_coeffs(dom);
            for (int i = 0; i < resolution; ++i) {
                const double rho = dom.inner + (dom.outer - dom.inner) * (i + 0.5) / resolution;
                for (int k = 0; k < resolution; ++k) {
                    const double th = 2.0 * kPi * k / resolution;
                    const Complex zeta = rho * Complex(std::cos(th), std::sin(th));
                    const Complex d = 1.0 - 1.0 / (zeta * zeta);
                    const Complex pullback = kf.B / (2.0 * zeta) + 2.0 * kf.C * zeta -
                                             2.0 * kf.D / (zeta * zeta * zeta);
                    emit(zeta + 1.0 / zeta, pullback / d);
                }
            }
            break;
        }
        case DomainSpec::Kind::monomial_level: {
            const MonomialLevelParams p = monomial_from_spec(spec);
            if (!monomial_bounded(p)) {
                throw ValidationError("invalid-domain",
                                      "field export needs a bounded component");
            }
            const double nd = static_cast<double>(p.n);
            for (int k = 0; k < resolution; ++k) {
                const double th = 2.0 * kPi * k / resolution;
                const double cn = std::cos(nd * th);
                // smallest positive root of C cos(n th) r^n - r^2 + 1
                double lo = 0.0, hi = 1.0;
                const auto F = [&](double rr) {
                    return p.c * cn * std::pow(rr, nd) - rr * rr + 1.0;
                };
                while (F(hi) > 0.0 && hi < 64.0) hi *= 1.25;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (F(mid) > 0.0) lo = mid; else hi = mid;
                }
                const double rb = 0.5 * (lo + hi);
                for (int i = 0; i < resolution; ++i) {
                    const double rho = rb * (i + 0.5) / resolution;
                    const Complex z = rho * Complex(std::cos(th), std::sin(th));
                    const Complex f =
                        p.c * nd / 2.0 * std::pow(z, static_cast<double>(p.n - 1));
                    emit(z, f);
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace

ExportResult export_data(const DomainSpec& spec, const std::string& what,
                         int resolution) {
    if (resolution < 3) throw ValidationError("bad-field", "resolution must be at least 3");
    if (what == "boundary") return export_boundary(spec, resolution);
    if (what == "field") return export_field(spec, resolution);
    throw ValidationError("bad-field", "what must be 'boundary' or 'field'");
}

}  // namespace bergman
