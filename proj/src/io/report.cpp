#include "minlam/io/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "minlam/core/errors.hpp"
#include "minlam/family/certificates.hpp"
#include "minlam/family/family.hpp"
#include "minlam/io/mesh.hpp"
#include "minlam/io/multigraph.hpp"

#ifndef MINLAM_VERSION
#define MINLAM_VERSION "0.0.0"
#endif

namespace minlam::io {

using std::numbers::pi;

std::string to_string(ReportKind kind)
{
    switch (kind) {
    case ReportKind::theorem:
        return "theorem";
    case ReportKind::convergence:
        return "convergence";
    case ReportKind::blowup:
        return "blowup";
    case ReportKind::embedding:
        return "embedding";
    }
    return "?";
}

Json ReportDocument::to_json() const
{
    Json doc;
    doc["kind"] = to_string(kind);
    doc["tool_version"] = tool_version;
    doc["parameters"] = parameters;
    doc["passed"] = passed();
    doc["payload"] = payload;
    return doc;
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

namespace {

bool all_pass(const Json& node)
{
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (key == "pass" && value.is_boolean() && !value.get<bool>()) {
                return false;
            }
            if (!all_pass(value)) {
                return false;
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (!all_pass(value)) {
                return false;
            }
        }
    }
    return true;
}

ReportDocument make_document(ReportKind kind, Json parameters)
{
    return {kind, Json::object(), MINLAM_VERSION, std::move(parameters)};
}

}  // namespace

bool ReportDocument::passed() const { return all_pass(payload); }

Json check_record(const std::string& name, double measured, double bound, const std::string& comparison, bool pass)
{
    Json record;
    record["name"] = name;
    record["measured"] = measured;
    record["bound"] = bound;
    record["comparison"] = comparison;
    record["pass"] = pass;
    return record;
}

ReportDocument embedding_report(const VerifyOptions& options)
{
    using family::FamilyParameter;
    const auto a_values = family::AcceptanceGrid::a_values();
    const auto x_values = family::AcceptanceGrid::x_values();

    Json params;
    params["grid_preset"] = "acceptance";
    params["a"] = Json::array();
    for (const auto& a : a_values) {
        params["a"].push_back(a.value());
    }
    params["x"] = x_values;
    params["slice_samples"] = options.slice_samples;
    params["tol"] = options.tol;
    ReportDocument doc = make_document(ReportKind::embedding, params);

    Json slices = Json::array();
    double r0 = std::numeric_limits<double>::infinity();
    for (const auto& a : a_values) {
        const double aa = a.value();
        for (double x : x_values) {
            const auto curve = family::slice(a, x, options.slice_samples, options.tol);
            const auto graph = family::certify_slice(curve);
            const auto sep = family::separation(a, x, options.tol);
            r0 = std::min(r0, sep.measured_separation);

            double height_error = 0.0;
            bool v_sign_ok = true;
            for (const auto& s : curve.samples) {
                height_error = std::max(height_error, std::abs(s.position.z() - x));
                const double y = s.param.imag();
                const double v = s.exponent.imag();
                v_sign_ok = v_sign_ok && (y == 0.0 ? v == 0.0 : (v > 0.0) == (y > 0.0));
            }
            const double s2 = x * x + aa * aa;
            const double v_end = std::min(std::abs(curve.samples.front().exponent.imag()),
                                          std::abs(curve.samples.back().exponent.imag()));
            const double v_floor = 3.0 / (32.0 * std::pow(s2, 0.25));

            Json entry;
            entry["a"] = aa;
            entry["x"] = x;
            entry["checks"] = Json::array({
                check_record("height_identity", height_error, 1e-11, "<=", height_error <= 1e-11),
                check_record("phase_deviation", graph.max_phase_deviation, graph.phase_bound + 1e-10, "<=",
                             graph.max_phase_deviation <= graph.phase_bound + 1e-10),
                check_record("min_cos_phase", graph.min_cos_phase, 0.5, ">", graph.min_cos_phase > 0.5),
                check_record("projection_monotone", graph.projection_monotone ? 1.0 : 0.0, 1.0, ">=",
                             graph.projection_monotone),
                check_record("separation", sep.measured_separation, sep.lower_bound, ">", sep.valid()),
                check_record("endpoint_v_floor", v_end, v_floor, ">=", v_end >= v_floor),
                check_record("v_sign_matches_y", v_sign_ok ? 1.0 : 0.0, 1.0, ">=", v_sign_ok),
            });
            slices.push_back(entry);
        }
    }

    Json axis = Json::array();
    for (const auto& a : a_values) {
        for (double t : {0.0, 0.125, -0.125, 0.25, -0.25, 0.49, -0.49}) {
            const Vec3d p = family::immerse_Fa(a, Complexd(t, 0.0), options.tol);
            const double err = (p - Vec3d(0.0, 0.0, t)).norm();
            Json rec = check_record("axis_identity", err, 1e-12, "<=", err <= 1e-12);
            rec["a"] = a.value();
            rec["t"] = t;
            axis.push_back(rec);
        }
    }

    doc.payload["slices"] = slices;
    doc.payload["axis"] = axis;
    doc.payload["r0"] = check_record("r0_positive", r0, 0.0, ">", r0 > 0.0);
    doc.payload["ball_radius"] = std::min(r0 / 2.0, 0.25);
    return doc;
}

namespace {

Json convergence_rows(const limit::ConvergenceReport& report)
{
    Json rows = Json::array();
    for (const auto& e : report.entries) {
        Json row;
        row["k"] = e.k;
        row["a"] = e.a;
        row["sup_position_error"] = e.sup_position_error;
        row["sup_v_error"] = e.sup_v_error;
        rows.push_back(row);
    }
    return rows;
}

Json convergence_checks(const limit::ConvergenceReport& report)
{
    Json checks = Json::array();
    const bool single = report.entries.size() < 2;
    checks.push_back(check_record("position_strictly_decreasing", report.position_strictly_decreasing() ? 1.0 : 0.0,
                                  1.0, ">=", report.position_strictly_decreasing()));
    checks.push_back(check_record("v_strictly_decreasing", report.v_strictly_decreasing() ? 1.0 : 0.0, 1.0, ">=",
                                  report.v_strictly_decreasing()));
    if (!single) {
        const double pr = report.position_rate();
        const double vr = report.v_rate();
        Json p = check_record("position_rate", pr, 1.5, "in", pr >= 1.5 && pr <= 2.5);
        p["upper"] = 2.5;
        Json v = check_record("v_rate", vr, 1.5, "in", vr >= 1.5 && vr <= 2.5);
        v["upper"] = 2.5;
        checks.push_back(p);
        checks.push_back(v);
    }
    return checks;
}

Json compact_set_json(const limit::CompactSet& set)
{
    Json j;
    j["side"] = family::to_string(set.side);
    j["x_min"] = set.x_min;
    j["x_max"] = set.x_max;
    j["nx"] = set.nx;
    j["ns"] = set.ns;
    return j;
}

Json blowup_rows(const limit::BlowupReport& report)
{
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json row;
        row["k"] = r.k;
        row["a"] = r.a;
        row["curvature_norm_at_origin"] = r.curvature_norm_at_origin;
        row["sup_outside_ball"] = r.sup_outside_ball;
        const double law = r.curvature_norm_at_origin * std::pow(r.a, 4);
        row["blowup_law"] = check_record("curvature_norm_times_a4", law, 2.0, "in", std::abs(law - 2.0) <= 2e-10);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

ReportDocument convergence_document(const limit::ConvergenceReport& report)
{
    Json params;
    params["compact_set"] = compact_set_json(report.compact_set);
    ReportDocument doc = make_document(ReportKind::convergence, params);
    doc.payload["rows"] = convergence_rows(report);
    doc.payload["checks"] = convergence_checks(report);
    return doc;
}

ReportDocument blowup_document(const limit::BlowupReport& report)
{
    Json params;
    params["delta"] = report.delta;
    params["mesh"] = {{"nx", report.options.nx}, {"ns", report.options.ns}};
    params["stability_factor"] = report.options.stability_factor;
    ReportDocument doc = make_document(ReportKind::blowup, params);
    doc.payload["rows"] = blowup_rows(report);
    doc.payload["origin_diverges"] =
        check_record("origin_strictly_increasing", report.origin_strictly_increasing() ? 1.0 : 0.0, 1.0, ">=",
                     report.origin_strictly_increasing());
    doc.payload["outside_bounded"] = check_record("outside_sup_max_over_min", report.outside_sup_ratio(),
                                                  report.options.stability_factor, "<", report.outside_bounded());
    return doc;
}

ReportDocument theorem_report(const TheoremOptions& options)
{
    Json params;
    params["k_list"] = options.k_list;
    params["delta"] = options.delta;
    params["tol"] = options.tol;
    params["stability_factor"] = options.stability_factor;
    params["mesh"] = {{"nx", options.mesh_nx}, {"ns", options.mesh_ns}};
    params["convergence_x_min"] = options.convergence_x_min;
    params["decomposition_phase_step"] = options.decomposition_phase_step;
    ReportDocument doc = make_document(ReportKind::theorem, params);

    // ball radius from the acceptance-grid separation estimate
    const auto grid_a = family::AcceptanceGrid::a_values();
    const auto grid_x = family::AcceptanceGrid::x_values();
    const double r0 = family::estimate_r0(grid_a, grid_x, options.tol);
    const double radius = std::min(r0 / 2.0, 0.25);
    Json scale;
    scale["r0"] = check_record("r0_positive", r0, 0.0, ">", r0 > 0.0);
    scale["ball_radius"] = radius;
    scale["scale_factor"] = 1.0 / radius;
    doc.payload["scale"] = scale;

    // (1) and (2)
    limit::BlowupOptions blowup_options;
    blowup_options.nx = options.mesh_nx;
    blowup_options.ns = options.mesh_ns;
    blowup_options.tol = options.tol;
    blowup_options.stability_factor = options.stability_factor;
    const auto blowup = limit::blowup_report(options.k_list, options.delta, blowup_options);
    const auto blowup_doc = blowup_document(blowup);
    Json item1;
    item1["rows"] = blowup_doc.payload["rows"];
    item1["check"] = blowup_doc.payload["origin_diverges"];
    doc.payload["curvature_blowup"] = item1;
    Json item2;
    item2["delta"] = options.delta;
    item2["sup_outside_ball"] = Json::array();
    for (const auto& r : blowup.rows) {
        item2["sup_outside_ball"].push_back({{"k", r.k}, {"a", r.a}, {"sup", r.sup_outside_ball}});
    }
    item2["check"] = blowup_doc.payload["outside_bounded"];
    doc.payload["bounded_curvature"] = item2;

    // (3)
    Json item3 = Json::array();
    for (int k : options.k_list) {
        const auto choice = limit::select_subsequence(k);
        const family::FamilyParameter a(choice.a);
        MeshOptions mo;
        mo.nx = phase_resolved_columns(a, options.decomposition_phase_step);
        mo.ns = options.mesh_ns;
        mo.tol = options.tol;
        mo.spacing = ColumnSpacing::phase;
        const SurfaceMesh mesh = sample_mesh(a, mo);
        Json row;
        row["k"] = k;
        row["a"] = choice.a;
        row["mesh"] = {{"nx", mo.nx}, {"ns", mo.ns}, {"spacing", "phase"}};
        try {
            const auto dec = decompose_multigraph(mesh, r0);
            Json sheets = Json::array();
            for (const auto& sheet : dec.sheets) {
                sheets.push_back({{"sign", sheet.sign},
                                  {"samples", sheet.points.size()},
                                  {"triangles", sheet.triangle_count},
                                  {"turns", sheet.turns()},
                                  {"shared_bins", sheet.shared_bins},
                                  {"max_bin_spread", sheet.max_bin_spread},
                                  {"bin_tolerance", sheet.bin_tolerance}});
            }
            row["sheets"] = sheets;
            row["check"] = check_record("graph_violations", 0.0, 0.0, "<=", true);
        } catch (const DecompositionFailure& failure) {
            row["error"] = failure.what();
            row["check"] = check_record("graph_violations", 1.0, 0.0, "<=", false);
        }
        item3.push_back(row);
    }
    doc.payload["multigraphs"] = item3;

    // (4)
    Json item4;
    limit::CompactSet set;
    set.x_min = options.convergence_x_min;
    const auto conv = limit::convergence_report(options.k_list, set, options.tol);
    item4["compact_set"] = compact_set_json(set);
    item4["rows"] = convergence_rows(conv);
    item4["checks"] = convergence_checks(conv);

    Json winding = Json::array();
    for (double t : {0.05, 0.1, 0.2}) {
        const double limit_product = limit::winding_count(family::Side::plus, t, 2.0 * t) * 4.0 * pi * t;
        const double finite_product =
            limit::winding_count(family::FamilyParameter(t / 10.0), t, 2.0 * t) * 4.0 * pi * t;
        Json w;
        w["t"] = t;
        w["limit"] = check_record("limit_turns_times_4pi_t", limit_product, 1.0, "in",
                                  std::abs(limit_product - 1.0) <= 1e-12);
        w["finite"] = check_record("turns_times_4pi_t_at_a=t/10", finite_product, 1.0, "in",
                                   std::abs(finite_product - 1.0) <= 0.01);
        winding.push_back(w);
    }
    item4["winding"] = winding;

    Json spiral = Json::array();
    for (auto side : {family::Side::plus, family::Side::minus}) {
        for (bool upper : {true, false}) {
            double previous = 0.0;
            for (double t : {0.2, 0.1, 0.05, 0.025}) {
                const auto span = limit::spiral_theta_span(side, upper, t, options.tol);
                Json entry;
                entry["side"] = family::to_string(side);
                entry["sheet"] = upper ? "y>0" : "y<0";
                entry["t"] = t;
                entry["theta_range"] = span.theta_range;
                entry["containment"] =
                    check_record("signed_height_min", span.min_height, 0.0, ">", span.min_height > 0.0);
                if (previous > 0.0) {
                    const double ratio = span.theta_range / previous;
                    Json c = check_record("range_ratio_on_halving", ratio, 1.9, "in", ratio >= 1.9 && ratio <= 2.1);
                    c["upper"] = 2.1;
                    entry["growth"] = c;
                }
                previous = span.theta_range;
                spiral.push_back(entry);
            }
        }
    }
    item4["spiral"] = spiral;
    doc.payload["convergence"] = item4;
    return doc;
}

}  // namespace minlam::io
