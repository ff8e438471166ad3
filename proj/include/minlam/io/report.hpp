#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "minlam/limit/limit.hpp"

namespace minlam::io {

using Json = nlohmann::ordered_json;

enum class ReportKind { theorem, convergence, blowup, embedding };

std::string to_string(ReportKind kind);

/// Structured verification output. Every record with a "pass" flag also carries
/// the measured value and the bound it was compared against.
struct ReportDocument {
    ReportKind kind;
    Json payload;
    std::string tool_version;
    Json parameters;

    Json to_json() const;
    /// Pretty-printed JSON with insertion-ordered keys and a trailing newline.
    std::string dump() const;
    /// True iff every "pass" flag anywhere in the payload is true.
    bool passed() const;
};

/// {name, measured, bound, comparison, pass}; comparison is one of
/// "<", "<=", ">", ">=", "in".
Json check_record(const std::string& name, double measured, double bound, const std::string& comparison,
                  bool pass);

struct VerifyOptions {
    double tol = 1e-12;
    int slice_samples = 41;
};

/// Embedding certificates of the family over the default acceptance grid.
ReportDocument embedding_report(const VerifyOptions& options = {});

ReportDocument convergence_document(const limit::ConvergenceReport& report);

ReportDocument blowup_document(const limit::BlowupReport& report);

struct TheoremOptions {
    std::vector<int> k_list{3, 6, 12, 24};
    double delta = 0.1;
    double tol = 1e-12;
    double stability_factor = 1.10;
    double convergence_x_min = 0.125;
    int mesh_nx = 129;
    int mesh_ns = 41;
    /// Phase step (radians) between columns of the decomposition meshes.
    double decomposition_phase_step = 0.25;
};

/// Four sections: curvature blow-up at the origin, bounded curvature away from
/// it, multi-valued graph decomposition, and convergence to the limit disks.
ReportDocument theorem_report(const TheoremOptions& options = {});

}  // namespace minlam::io
