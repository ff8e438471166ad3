#include "minlam/io/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "minlam/core/errors.hpp"
#include "minlam/family/certificates.hpp"
#include "minlam/io/export.hpp"
#include "minlam/io/mesh.hpp"
#include "minlam/io/report.hpp"
#include "minlam/limit/limit.hpp"

namespace minlam::io {

namespace {

/// Thrown for argument values CLI11 cannot validate on its own.
struct UsageError : Error {
    using Error::Error;
};

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

/// Flat `key = value` file turned into `--key value` tokens.
std::vector<std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    std::vector<std::string> tokens;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
        }
        tokens.push_back("--" + trim(line.substr(0, eq)));
        tokens.push_back(trim(line.substr(eq + 1)));
    }
    return tokens;
}

std::vector<int> parse_k_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || value < 1) {
            throw UsageError("--k-list expects positive integers separated by commas, got '" + text + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) {
        throw UsageError("--k-list is empty");
    }
    return out;
}

family::Side parse_side(const std::string& text) { return text == "minus" ? family::Side::minus : family::Side::plus; }

/// Writes to the file at `path`, or to `fallback` when the path is empty.
template <typename Writer>
void with_sink(const std::string& path, std::ostream& fallback, Writer&& write)
{
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    write(file);
}

int emit_report(const ReportDocument& doc, const std::string& path, std::ostream& out, std::ostream& err)
{
    with_sink(path, out, [&](std::ostream& sink) {
        const std::string text = doc.dump();
        sink.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!sink) {
            throw SinkFailure("failed to write report");
        }
    });
    if (!doc.passed()) {
        err << "minlam: " << to_string(doc.kind) << " report has failing certificates\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weierstrass-representation engine for a family of embedded minimal disks", "minlam"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(MINLAM_VERSION));
    std::string config_path;
    app.add_option("--config", config_path, "Read flags from a flat key=value file; command-line flags win");

    // mesh
    auto* mesh_cmd = app.add_subcommand("mesh", "Sample a surface and export it as OBJ, PLY or CSV");
    std::optional<double> mesh_a;
    std::string mesh_limit, mesh_format = "obj", mesh_out, mesh_spacing = "uniform";
    bool mesh_helicoid = false;
    MeshOptions mesh_options;
    mesh_cmd->add_option("--a", mesh_a, "Family parameter in (0, 1/2)");
    mesh_cmd->add_option("--limit", mesh_limit, "Limit disk instead of a family member")
        ->check(CLI::IsMember({"plus", "minus"}));
    mesh_cmd->add_flag("--helicoid", mesh_helicoid, "Helicoid oracle over [-pi, pi] x [-1, 1]");
    mesh_cmd->add_option("--nx", mesh_options.nx, "Columns")->capture_default_str();
    mesh_cmd->add_option("--ns", mesh_options.ns, "Rows")->capture_default_str();
    mesh_cmd->add_option("--tol", mesh_options.tol, "Quadrature tolerance")->capture_default_str();
    mesh_cmd->add_option("--xmin", mesh_options.limit_x_min, "Inner |x| of limit meshes")->capture_default_str();
    mesh_cmd->add_option("--format", mesh_format, "obj, ply or csv")
        ->check(CLI::IsMember({"obj", "ply", "csv"}))
        ->capture_default_str();
    mesh_cmd->add_option("--spacing", mesh_spacing, "Column spacing: uniform or phase")
        ->check(CLI::IsMember({"uniform", "phase"}))
        ->capture_default_str();
    mesh_cmd->add_option("--out", mesh_out, "Output path (stdout when omitted)");

    // slice
    auto* slice_cmd = app.add_subcommand("slice", "Sample one horizontal slice and certify it is a graph");
    double slice_a = 0.1, slice_x = 0.0, slice_tol = 1e-12;
    int slice_n = family::AcceptanceGrid::slice_samples;
    std::string slice_out;
    slice_cmd->add_option("--a", slice_a, "Family parameter")->required();
    slice_cmd->add_option("--x", slice_x, "Slice height")->required();
    slice_cmd->add_option("--n", slice_n, "Odd sample count")->capture_default_str();
    slice_cmd->add_option("--tol", slice_tol, "Quadrature tolerance")->capture_default_str();
    slice_cmd->add_option("--out", slice_out, "CSV output path (stdout when omitted)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the embedding certificates on a parameter grid");
    std::string verify_preset = "acceptance", verify_out;
    VerifyOptions verify_options;
    verify_cmd->add_option("--grid-preset", verify_preset, "Parameter grid")
        ->check(CLI::IsMember({"acceptance"}))
        ->capture_default_str();
    verify_cmd->add_option("--tol", verify_options.tol, "Quadrature tolerance")->capture_default_str();
    verify_cmd->add_option("--n", verify_options.slice_samples, "Samples per slice")->capture_default_str();
    verify_cmd->add_option("--out", verify_out, "JSON report path (stdout when omitted)");

    // theorem
    auto* theorem_cmd = app.add_subcommand("theorem", "Blow-up, bounded curvature, multigraphs and convergence");
    TheoremOptions theorem_options;
    std::string theorem_k = "3,6,12,24", theorem_out;
    theorem_cmd->add_option("--k-list", theorem_k, "Subsequence indices")->capture_default_str();
    theorem_cmd->add_option("--delta", theorem_options.delta, "Radius of the excluded ball")->capture_default_str();
    theorem_cmd->add_option("--stability-factor", theorem_options.stability_factor,
                            "Largest admissible max/min ratio of the curvature sup away from the origin")
        ->capture_default_str();
    theorem_cmd->add_option("--tol", theorem_options.tol, "Quadrature tolerance")->capture_default_str();
    theorem_cmd->add_option("--nx", theorem_options.mesh_nx, "Curvature mesh columns")->capture_default_str();
    theorem_cmd->add_option("--ns", theorem_options.mesh_ns, "Curvature mesh rows")->capture_default_str();
    theorem_cmd->add_option("--xmin", theorem_options.convergence_x_min, "Inner x of the convergence set")
        ->capture_default_str();
    theorem_cmd->add_option("--out", theorem_out, "JSON report path (stdout when omitted)");

    // converge
    auto* converge_cmd = app.add_subcommand("converge", "Convergence table toward a limit disk");
    limit::CompactSet converge_set;
    std::string converge_k = "3,6,12,24", converge_side = "plus", converge_out;
    double converge_tol = 1e-12;
    converge_cmd->add_option("--k-list", converge_k, "Subsequence indices")->capture_default_str();
    converge_cmd->add_option("--xmin", converge_set.x_min, "Inner |x| of the compact set")->capture_default_str();
    converge_cmd->add_option("--side", converge_side, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    converge_cmd->add_option("--nx", converge_set.nx, "Columns of the compact set")->capture_default_str();
    converge_cmd->add_option("--ns", converge_set.ns, "Rows of the compact set")->capture_default_str();
    converge_cmd->add_option("--tol", converge_tol, "Quadrature tolerance")->capture_default_str();
    converge_cmd->add_option("--out", converge_out, "JSON report path (stdout when omitted)");

    // winding
    auto* winding_cmd = app.add_subcommand("winding", "Turns of the slice direction between two heights");
    std::optional<double> winding_a;
    double t1 = 0.0, t2 = 0.0;
    winding_cmd->add_option("--a", winding_a, "Family parameter (limit only when omitted)");
    winding_cmd->add_option("--t1", t1, "Lower height")->required();
    winding_cmd->add_option("--t2", t2, "Upper height")->required();

    // splice config-file tokens in right after the subcommand name
    std::vector<std::string> args;
    std::string config_file;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
        const std::string& a = raw_args[i];
        if (a == "--config" && i + 1 < raw_args.size()) {
            config_file = raw_args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            config_file = a.substr(9);
        } else {
            args.push_back(a);
        }
    }

    try {
        if (!config_file.empty()) {
            const auto tokens = read_config(config_file);
            auto sub = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
                for (const auto* cmd : app.get_subcommands({})) {
                    if (cmd->get_name() == a) {
                        return true;
                    }
                }
                return false;
            });
            if (sub == args.end()) {
                throw UsageError("--config needs a subcommand on the command line");
            }
            args.insert(sub + 1, tokens.begin(), tokens.end());
        }
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "minlam: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "minlam: " << e.what() << "\n";
        return 2;
    }

    try {
        if (mesh_cmd->parsed()) {
            const int chosen = (mesh_a ? 1 : 0) + (mesh_limit.empty() ? 0 : 1) + (mesh_helicoid ? 1 : 0);
            if (chosen != 1) {
                throw UsageError("mesh needs exactly one of --a, --limit, --helicoid");
            }
            MeshSource source = HelicoidOracle{};
            if (mesh_a) {
                source = family::FamilyParameter(*mesh_a);
            } else if (!mesh_limit.empty()) {
                source = parse_side(mesh_limit);
            }
            mesh_options.spacing = mesh_spacing == "phase" ? ColumnSpacing::phase : ColumnSpacing::uniform;
            const SurfaceMesh mesh = sample_mesh(source, mesh_options);
            std::size_t bytes = 0;
            with_sink(mesh_out, out,
                      [&](std::ostream& sink) { bytes = export_mesh(mesh, parse_mesh_format(mesh_format), sink); });
            if (!mesh_out.empty()) {
                out << "wrote " << bytes << " bytes to " << mesh_out << "\n";
            }
            return 0;
        }
        if (slice_cmd->parsed()) {
            const auto curve = family::slice(family::FamilyParameter(slice_a), slice_x, slice_n, slice_tol);
            const auto cert = family::certify_slice(curve);
            with_sink(slice_out, out, [&](std::ostream& sink) { export_samples_csv(curve.samples, sink); });
            if (!slice_out.empty()) {
                out << "max phase deviation " << format_double(cert.max_phase_deviation) << " (bound "
                    << format_double(cert.phase_bound) << "), min cos " << format_double(cert.min_cos_phase)
                    << ", projection " << (cert.projection_monotone ? "monotone" : "NOT monotone") << "\n";
            }
            if (!cert.valid()) {
                err << "minlam: slice is not certified as a graph\n";
                return 1;
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            return emit_report(embedding_report(verify_options), verify_out, out, err);
        }
        if (theorem_cmd->parsed()) {
            theorem_options.k_list = parse_k_list(theorem_k);
            return emit_report(theorem_report(theorem_options), theorem_out, out, err);
        }
        if (converge_cmd->parsed()) {
            converge_set.side = parse_side(converge_side);
            const auto report = limit::convergence_report(parse_k_list(converge_k), converge_set, converge_tol);
            return emit_report(convergence_document(report), converge_out, out, err);
        }
        if (winding_cmd->parsed()) {
            if (!(t1 > 0.0 && t2 > 0.0)) {
                throw UsageError("winding needs positive heights");
            }
            if (winding_a) {
                out << "turns " << format_double(limit::winding_count(family::FamilyParameter(*winding_a), t1, t2))
                    << "\n";
            }
            out << "limit " << format_double(limit::winding_count(family::Side::plus, t1, t2)) << "\n";
            return 0;
        }
    } catch (const UsageError& e) {
        err << "minlam: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParameter& e) {
        err << "minlam: " << e.what() << "\n";
        return 2;
    } catch (const DomainViolation& e) {
        err << "minlam: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "minlam: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace minlam::io
