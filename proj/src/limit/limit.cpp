#include "minlam/limit/limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "minlam/core/errors.hpp"
#include "minlam/core/sampling.hpp"
#include "minlam/family/family.hpp"

namespace minlam::limit {

using std::numbers::pi;

double anchored_phase(double a) { return std::atan(1.0 / (2.0 * a)) / a; }

SubsequenceChoice select_subsequence(int k)
{
    if (k < 1) {
        throw InvalidParameter("subsequence index must be >= 1");
    }
    const double target = 2.0 * pi * k;
    double hi = 0.5 * (1.0 - std::numeric_limits<double>::epsilon());
    double lo = (pi / 2.0) / (target + 2.0) / 2.0;
    for (int i = 0; i < 64 && anchored_phase(lo) <= target; ++i) {
        lo /= 2.0;
    }
    if (!(anchored_phase(lo) > target && anchored_phase(hi) < target)) {
        throw RootNotBracketed("no root of the anchoring equation in (0, 1/2) for k = " + std::to_string(k));
    }
    // bisect to adjacent doubles
    for (;;) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) {
            break;
        }
        (anchored_phase(mid) > target ? lo : hi) = mid;
    }
    auto residual = [&](double a) { return std::abs(family::axis_phase(FamilyParameter(a), 0.5) - target); };
    const double a = residual(lo) <= residual(hi) ? lo : hi;
    return {k, a, family::axis_phase(FamilyParameter(a), 0.5)};
}

Complexd limit_exponent(Side side, const Complexd& z)
{
    if (!family::DomainSpec::omega_limit(side).contains(z)) {
        throw DomainViolation("point outside Omega_0" + std::string(side == Side::plus ? "+" : "-"));
    }
    return -1.0 / z + 2.0 * family::sign_of(side);
}

GaussData<double> limit_gauss_data(Side side)
{
    const double shift = 2.0 * family::sign_of(side);
    return GaussData<double>::exponential([shift](Complexd z) { return -1.0 / z + shift; },
                                          [](Complexd z) { return 1.0 / (z * z); },
                                          Complexd(0.5 * family::sign_of(side), 0.0),
                                          family::DomainSpec::omega_limit(side).as_domain());
}

PolyPath<double> limit_path(Side side, const Complexd& z)
{
    if (!family::DomainSpec::omega_limit(side).contains(z)) {
        throw DomainViolation("point outside the limit domain component");
    }
    const Complexd base(0.5 * family::sign_of(side), 0.0);
    std::vector<Complexd> vertices{base};
    if (z.real() != base.real()) {
        vertices.emplace_back(z.real(), 0.0);
    }
    if (z.imag() != 0.0) {
        vertices.push_back(z);
    }
    return PolyPath<double>(std::move(vertices));
}

Vec3d immerse_limit(Side side, const Complexd& z, double tol)
{
    const Vec3d base(0.0, 0.0, 0.5 * family::sign_of(side));
    return base + immerse(limit_gauss_data(side), limit_path(side, z), tol);
}

double axis_phase(const SurfaceSource& source, double x)
{
    if (const auto* a = std::get_if<FamilyParameter>(&source)) {
        return family::axis_phase(*a, x);
    }
    return limit_exponent(std::get<Side>(source), Complexd(x, 0.0)).real();
}

double winding_count(const SurfaceSource& source, double t1, double t2)
{
    if (t1 == t2) {
        return 0.0;
    }
    return std::abs(axis_phase(source, t1) - axis_phase(source, t2)) / (2.0 * pi);
}

std::vector<Complexd> compact_set_points(const CompactSet& set)
{
    if (set.nx < 1 || set.ns < 1 || !(set.x_min > 0.0) || set.x_max > 0.5 || set.x_min > set.x_max) {
        throw InvalidParameter("compact set must satisfy 0 < x_min <= x_max <= 1/2");
    }
    const double sign = family::sign_of(set.side);
    const auto domain = family::DomainSpec::omega_limit(set.side);
    std::vector<Complexd> points;
    for (double x : linspace(set.x_min, set.x_max, static_cast<std::size_t>(set.nx))) {
        const double w = domain.half_width(x);
        for (double s : linspace(-1.0, 1.0, static_cast<std::size_t>(set.ns))) {
            points.emplace_back(sign * x, s * w);
        }
    }
    return points;
}

namespace {

bool strictly_decreasing(const std::vector<double>& values)
{
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] < values[i - 1])) {
            return false;
        }
    }
    return true;
}

template <typename Proj>
std::vector<double> column(const std::vector<ConvergenceRow>& rows, Proj proj)
{
    std::vector<double> out;
    for (const auto& r : rows) {
        out.push_back(proj(r));
    }
    return out;
}

}  // namespace

bool ConvergenceReport::position_strictly_decreasing() const
{
    return strictly_decreasing(column(entries, [](const auto& r) { return r.sup_position_error; }));
}

bool ConvergenceReport::v_strictly_decreasing() const
{
    return strictly_decreasing(column(entries, [](const auto& r) { return r.sup_v_error; }));
}

double ConvergenceReport::position_rate() const
{
    return loglog_slope(column(entries, [](const auto& r) { return r.a; }),
                        column(entries, [](const auto& r) { return r.sup_position_error; }));
}

double ConvergenceReport::v_rate() const
{
    return loglog_slope(column(entries, [](const auto& r) { return r.a; }),
                        column(entries, [](const auto& r) { return r.sup_v_error; }));
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw InvalidParameter("slope needs at least two paired values");
    }
    double mx = 0.0, my = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += std::log(xs[i]) / n;
        my += std::log(ys[i]) / n;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

ConvergenceReport convergence_report(std::span<const int> k_list, const CompactSet& set, double tol)
{
    if (k_list.empty()) {
        throw InvalidParameter("convergence report needs at least one k");
    }
    const std::vector<Complexd> points = compact_set_points(set);

    std::vector<Vec3d> limit_positions(points.size());
    parallel_for(points.size(), [&](std::size_t i) { limit_positions[i] = immerse_limit(set.side, points[i], tol); });

    ConvergenceReport report{set, {}};
    for (int k : k_list) {
        const SubsequenceChoice choice = select_subsequence(k);
        const FamilyParameter a(choice.a);
        std::vector<double> position_error(points.size()), v_error(points.size());
        parallel_for(points.size(), [&](std::size_t i) {
            const Complexd& z = points[i];
            position_error[i] = (family::immerse_Fa(a, z, tol) - limit_positions[i]).norm();
            v_error[i] = std::abs(family::eval_h(a, z).imag() - (-1.0 / z).imag());
        });
        report.entries.push_back({k, choice.a, *std::max_element(position_error.begin(), position_error.end()),
                                  *std::max_element(v_error.begin(), v_error.end())});
    }
    return report;
}

bool BlowupReport::origin_strictly_increasing() const
{
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].curvature_norm_at_origin > rows[i - 1].curvature_norm_at_origin)) {
            return false;
        }
    }
    return true;
}

double BlowupReport::outside_sup_ratio() const
{
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& r : rows) {
        lo = std::min(lo, r.sup_outside_ball);
        hi = std::max(hi, r.sup_outside_ball);
    }
    return hi / lo;
}

BlowupReport blowup_report(std::span<const int> k_list, double delta, const BlowupOptions& options)
{
    if (!(delta > 0.0) || k_list.empty()) {
        throw InvalidParameter("blow-up report needs delta > 0 and a non-empty k list");
    }
    BlowupReport report{delta, options, {}};
    for (int k : k_list) {
        const SubsequenceChoice choice = select_subsequence(k);
        const FamilyParameter a(choice.a);
        const auto domain = family::DomainSpec::omega(a);
        ColumnGrid<double> grid{linspace(-0.5, 0.5, static_cast<std::size_t>(options.nx)),
                                static_cast<std::size_t>(options.ns),
                                [domain](double x) { return domain.half_width(x); }};
        const auto samples = sample_grid(family::gauss_data(a), grid, options.tol);
        double sup = 0.0;
        for (const auto& s : samples) {
            if (s.position.norm() >= delta) {
                sup = std::max(sup, s.second_fundamental_norm_sq);
            }
        }
        report.rows.push_back({k, choice.a, -2.0 * family::curvature_Ka(a, Complexd(0.0, 0.0)), sup});
    }
    return report;
}

namespace {

double unwrap_near(double theta, double reference)
{
    return theta + 2.0 * pi * std::round((reference - theta) / (2.0 * pi));
}

}  // namespace

SpiralSpan spiral_theta_span(Side side, bool upper_sheet, double t, double tol)
{
    if (!(t > 0.0) || 2.0 * t > 0.5) {
        throw InvalidParameter("spiral span needs 0 < t <= 1/4");
    }
    const double sign = family::sign_of(side);
    // columns in the open interval t < |x| < 2t, fine enough that neighbouring
    // columns differ by well under pi in axis phase (du/dx = 1/x^2)
    const int nx = std::max(33, static_cast<int>(std::ceil(8.0 / t)));
    const int ns = 21;
    const auto domain = family::DomainSpec::omega_limit(side);
    ColumnGrid<double> grid;
    for (int i = nx - 1; i >= 0; --i) {
        grid.xs.push_back(sign * (t + (i + 0.5) * t / nx));
    }
    grid.ns = ns;
    grid.half_width = [domain](double x) { return domain.half_width(x); };
    grid.base_position = Vec3d(0.0, 0.0, 0.5 * sign);
    const auto samples = sample_grid(limit_gauss_data(side), grid, tol);

    SpiralSpan span{t, 0.0, std::numeric_limits<double>::infinity(), 0};
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    double previous_seed = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t ix = 0; ix < grid.xs.size(); ++ix) {
        // sheet rows ordered from the outermost sample toward the axis
        std::vector<std::size_t> rows;
        for (int j = 0; j < ns; ++j) {
            const auto row = static_cast<std::size_t>(upper_sheet ? ns - 1 - j : j);
            const double y = samples[ix * ns + row].param.imag();
            if (upper_sheet ? y > 0.0 : y < 0.0) {
                rows.push_back(row);
            }
        }
        double previous = previous_seed;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& s = samples[ix * ns + rows[r]];
            const double raw = std::atan2(s.position.y(), s.position.x());
            const double theta = std::isnan(previous) ? raw : unwrap_near(raw, previous);
            if (r == 0) {
                previous_seed = theta;
            }
            previous = theta;
            lo = std::min(lo, theta);
            hi = std::max(hi, theta);
            span.min_height = std::min(span.min_height, sign * s.position.z());
            ++span.samples;
        }
    }
    span.theta_range = hi - lo;
    return span;
}

}  // namespace minlam::limit
