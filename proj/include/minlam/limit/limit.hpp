#pragma once

#include <span>
#include <variant>
#include <vector>

#include "minlam/core/weierstrass.hpp"
#include "minlam/family/domain.hpp"

namespace minlam::limit {

using family::FamilyParameter;
using family::Side;

/// Either a member F_a of the family or one of the two limit disks.
using SurfaceSource = std::variant<FamilyParameter, Side>;

/// (1/a) arctan(1/(2a)) = u_a(1/2, 0), strictly decreasing in a.
double anchored_phase(double a);

struct SubsequenceChoice {
    int k;
    double a;             // root of anchored_phase(a) = 2 pi k
    double anchor_phase;  // u_a(1/2, 0) evaluated at the root
};

/// Picks a_k in (0, 1/2) with u_{a_k}(1/2, 0) = 2 pi k. By oddness of arctan
/// this also puts u_{a_k}(-1/2, 0) at -2 pi k.
SubsequenceChoice select_subsequence(int k);

/// -1/z + 2 on the plus side, -1/z - 2 on the minus side; zero at z = +-1/2.
Complexd limit_exponent(Side side, const Complexd& z);

/// Weierstrass data of the limit disk: g = exp(i limit_exponent), phi = dz,
/// base point (+-1/2, 0).
GaussData<double> limit_gauss_data(Side side);

/// Axis leg (+-1/2, 0) -> (x, 0), then vertical leg to (x, y).
PolyPath<double> limit_path(Side side, const Complexd& z);

/// Position on the limit disk, normalized so (+-1/2, 0) maps to (0, 0, +-1/2).
Vec3d immerse_limit(Side side, const Complexd& z, double tol);

/// Real part of the exponent on the real axis at height x.
double axis_phase(const SurfaceSource& source, double x);

/// Number of turns |u(t1, 0) - u(t2, 0)| / (2 pi) of the slice direction.
double winding_count(const SurfaceSource& source, double t1, double t2);

/// Parameter rectangle {x in [x_min, x_max], s in [-1, 1]} with y = s |x|^{3/2} / 2
/// on one component of the limit domain.
struct CompactSet {
    Side side = Side::plus;
    double x_min = 0.125;
    double x_max = 0.5;
    int nx = 25;
    int ns = 21;
};

/// Grid nodes of a compact set.
std::vector<Complexd> compact_set_points(const CompactSet& set);

struct ConvergenceRow {
    int k;
    double a;
    double sup_position_error;  // sup |F_{a_k} - F_limit|
    double sup_v_error;         // sup |v_{a_k} - Im(-1/z)|
};

struct ConvergenceReport {
    CompactSet compact_set;
    std::vector<ConvergenceRow> entries;

    bool position_strictly_decreasing() const;
    bool v_strictly_decreasing() const;
    /// Least-squares slopes of log(sup) against log(a_k).
    double position_rate() const;
    double v_rate() const;
};

ConvergenceReport convergence_report(std::span<const int> k_list, const CompactSet& set, double tol);

/// Least-squares slope of log(ys) against log(xs).
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

struct BlowupRow {
    int k;
    double a;
    double curvature_norm_at_origin;  // |A|^2(0) = 2 a^-4
    double sup_outside_ball;          // max |A|^2 over samples with |F| >= delta
};

struct BlowupOptions {
    int nx = 129;
    int ns = 41;
    double tol = 1e-12;
    /// Largest admissible max/min ratio of the outside-ball sup across k.
    double stability_factor = 1.10;
};

struct BlowupReport {
    double delta;
    BlowupOptions options;
    std::vector<BlowupRow> rows;

    bool origin_strictly_increasing() const;
    double outside_sup_ratio() const;
    bool outside_bounded() const { return outside_sup_ratio() < options.stability_factor; }
};

BlowupReport blowup_report(std::span<const int> k_list, double delta, const BlowupOptions& options = {});

/// Span of the unwrapped polar angle over samples of one sheet of a limit disk
/// with t < |x3| < 2t. The sheet is chosen by the sign of y.
struct SpiralSpan {
    double t;
    double theta_range;
    double min_height;  // min of +-x3 over the sampled disk
    std::size_t samples;
};

SpiralSpan spiral_theta_span(Side side, bool upper_sheet, double t, double tol);

}  // namespace minlam::limit
