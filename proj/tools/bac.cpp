// bac: analytic content, best approximation and torsional rigidity for
// polynomial-map quadrature domains, annuli and confocal-ellipse regions.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "bergman/domain_spec.hpp"
#include "bergman/errors.hpp"
#include "bergman/reports.hpp"

namespace {

using bergman::DomainSpec;
using bergman::ToleranceConfig;
using bergman::VerifyOptions;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitOracleFail = 2;
constexpr int kExitNumeric = 3;

DomainSpec load_domain(const std::string& arg) {
    if (arg.empty()) {
        throw bergman::ValidationError("missing-field", "--domain is required");
    }
    if (arg.front() == '{') return DomainSpec::from_string(arg);
    std::string path = arg;
    if (path.front() == '@') path = path.substr(1);
    std::ifstream in(path);
    if (!in) {
        throw bergman::ValidationError("io", "cannot open domain file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return DomainSpec::from_string(buf.str());
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw bergman::ValidationError("io", "cannot open output file: " + out_path);
    }
    out << text;
}

void emit_error(const std::string& code, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = {{"code", code}, {"message", message}};
    std::cout << j.dump(2) << "\n";
}

struct CommonArgs {
    std::string domain;
    std::string format = "json";
    std::string out;
    ToleranceConfig tol;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_domain = true) {
    if (with_domain) {
        cmd->add_option("--domain", args.domain,
                        "domain spec: inline JSON or a file path (optionally @file)");
    }
    cmd->add_option("--format", args.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", args.out, "write output to a file instead of stdout");
    cmd->add_option("--tol-closed", args.tol.closed, "tolerance for closed-form identities");
    cmd->add_option("--tol-oracle", args.tol.oracle, "tolerance for oracle agreement");
    cmd->add_option("--tol-fd", args.tol.fd, "tolerance for the FD torsion check");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman analytic content and torsional rigidity toolkit"};
    app.require_subcommand(1);

    CommonArgs compute_args;
    auto* compute = app.add_subcommand("compute", "closed-form report for a domain");
    add_common(compute, compute_args);

    CommonArgs verify_args;
    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "closed forms vs numerical oracles");
    add_common(verify, verify_args);
    verify->add_option("--basis-size", verify_opt.basis_size, "Gram basis size (disk oracle)");
    verify->add_option("--fd-h", verify_opt.fd_h, "grid spacing for the FD torsion check (0 = skip)");
    verify->add_option("--radial-nodes", verify_opt.quad_radial, "radial quadrature nodes (0 = skip quad check)");
    verify->add_option("--angular-nodes", verify_opt.quad_angular, "angular quadrature nodes");
    verify->add_option("--min-deg", verify_opt.laurent_min, "lowest Laurent degree (annulus/confocal)");
    verify->add_option("--max-deg", verify_opt.laurent_max, "highest Laurent degree (annulus/confocal)");

    CommonArgs sweep_args;
    int sweep_n = 2;
    int sweep_steps = 2;
    auto* sweep = app.add_subcommand("sweep-epicycloid", "lambda over the family z + a z^n, a in [0, 1/n]");
    add_common(sweep, sweep_args, /*with_domain=*/false);
    sweep->add_option("--n", sweep_n, "monomial degree (n >= 2)")->required();
    sweep->add_option("--steps", sweep_steps, "number of grid points (>= 2)")->required();

    CommonArgs export_args;
    std::string export_what = "boundary";
    int export_resolution = 360;
    auto* exp = app.add_subcommand("export", "boundary curves or field samples for plotting");
    add_common(exp, export_args);
    exp->add_option("--what", export_what, "boundary or field")
        ->check(CLI::IsMember({"boundary", "field"}));
    exp->add_option("--resolution", export_resolution, "samples per curve / grid size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (compute->parsed()) {
            if (compute_args.format != "json") {
                throw bergman::ValidationError("bad-field", "compute reports are JSON only");
            }
            const DomainSpec spec = load_domain(compute_args.domain);
            const auto report = bergman::compute_report(spec, compute_args.tol);
            write_output(report.dump(2) + "\n", compute_args.out);
            return kExitOk;
        }
        if (verify->parsed()) {
            if (verify_args.format != "json") {
                throw bergman::ValidationError("bad-field", "verify reports are JSON only");
            }
            const DomainSpec spec = load_domain(verify_args.domain);
            bool pass = false;
            const auto report = bergman::verify_report(spec, verify_opt, verify_args.tol, pass);
            write_output(report.dump(2) + "\n", verify_args.out);
            return pass ? kExitOk : kExitOracleFail;
        }
        if (sweep->parsed()) {
            const bergman::Table table = bergman::sweep_epicycloid(sweep_n, sweep_steps);
            if (sweep_args.format == "csv") {
                write_output(table.to_csv(), sweep_args.out);
            } else {
                nlohmann::ordered_json j;
                j["tool"] = "bac";
                j["version"] = bergman::library_version();
                j["sweep"] = {{"n", sweep_n}, {"steps", sweep_steps}};
                j["table"] = table.to_json();
                write_output(j.dump(2) + "\n", sweep_args.out);
            }
            return kExitOk;
        }
        if (exp->parsed()) {
            const DomainSpec spec = load_domain(export_args.domain);
            const bergman::ExportResult result =
                bergman::export_data(spec, export_what, export_resolution);
            if (export_args.format == "csv") {
                if (result.skipped > 0) {
                    std::cerr << "skipped " << result.skipped << " samples\n";
                }
                write_output(result.table.to_csv(), export_args.out);
            } else {
                nlohmann::ordered_json j;
                j["tool"] = "bac";
                j["version"] = bergman::library_version();
                j["spec"] = spec.to_json();
                j["what"] = export_what;
                j["resolution"] = export_resolution;
                j["skipped"] = result.skipped;
                j["table"] = result.table.to_json();
                write_output(j.dump(2) + "\n", export_args.out);
            }
            return kExitOk;
        }
    } catch (const bergman::ValidationError& e) {
        emit_error(e.code(), e.what());
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        emit_error("invalid-argument", e.what());
        return kExitValidation;
    } catch (const std::domain_error& e) {
        emit_error("invalid-domain", e.what());
        return kExitValidation;
    } catch (const bergman::NumericError& e) {
        emit_error("numeric", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitNumeric;
    }
    return kExitOk;
}
