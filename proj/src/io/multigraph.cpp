#include "minlam/io/multigraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "minlam/core/errors.hpp"

namespace minlam::io {

using std::numbers::pi;

double SheetDescriptor::turns() const { return (theta_max - theta_min) / (2.0 * pi); }

namespace {

constexpr double kThetaBin = pi / 8.0;
constexpr int kRhoBins = 16;

double unwrap_near(double theta, double reference)
{
    return theta + 2.0 * pi * std::round((reference - theta) / (2.0 * pi));
}

std::string describe_pair(const SurfaceMesh& mesh, std::size_t i, std::size_t j)
{
    auto at = [&](std::size_t k) {
        const auto& p = mesh.samples[k].param;
        return "#" + std::to_string(k) + " (" + std::to_string(p.real()) + ", " + std::to_string(p.imag()) + ")";
    };
    return at(i) + " and " + at(j);
}

SheetDescriptor build_sheet(const SurfaceMesh& mesh, int sign, double r0)
{
    const std::size_t n = mesh.samples.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    // theta and rho for every sample on this side of the axis; the sheet keeps
    // those with 0 < rho < r0, the rest only feed the slope estimates
    std::vector<double> theta(n, nan), rho(n, nan);
    std::vector<bool> member(n, false);

    SheetDescriptor sheet;
    sheet.sign = sign;
    double previous_seed = nan;
    for (std::size_t ix = 0; ix < mesh.nx; ++ix) {
        double previous = nan;
        for (std::size_t step = 0; step < mesh.ns; ++step) {
            const std::size_t is = sign > 0 ? mesh.ns - 1 - step : step;
            const std::size_t k = ix * mesh.ns + is;
            const auto& s = mesh.samples[k];
            if (s.param.imag() * sign <= 0.0) {
                continue;
            }
            const double r = std::hypot(s.position.x(), s.position.y());
            const double raw = std::atan2(s.position.y(), s.position.x());
            const double reference = std::isnan(previous) ? previous_seed : previous;
            const double t = std::isnan(reference) ? raw : unwrap_near(raw, reference);
            if (std::isnan(previous)) {
                previous_seed = t;
            }
            previous = t;
            theta[k] = t;
            rho[k] = r;
            if (r > 0.0 && r < r0) {
                member[k] = true;
                sheet.points.push_back({k, r, t, s.position.z()});
            }
        }
    }
    if (sheet.points.empty()) {
        throw DecompositionFailure("sheet " + std::to_string(sign) + " has no off-axis samples with 0 < rho < r0");
    }
    sheet.theta_min = std::numeric_limits<double>::infinity();
    sheet.theta_max = -sheet.theta_min;
    for (const auto& p : sheet.points) {
        sheet.theta_min = std::min(sheet.theta_min, p.theta);
        sheet.theta_max = std::max(sheet.theta_max, p.theta);
    }

    // orientation of sheet triangles in the (theta, rho) plane
    struct Oriented {
        std::size_t triangle;
        double area;
    };
    std::vector<Oriented> oriented;
    // per-sample slope of x3 in (theta, rho), from the incident triangles
    std::vector<double> grad_theta(n, 0.0), grad_rho(n, 0.0);
    for (std::size_t ti = 0; ti < mesh.triangles.size(); ++ti) {
        const auto& t = mesh.triangles[ti];
        if (std::isnan(theta[t[0]]) || std::isnan(theta[t[1]]) || std::isnan(theta[t[2]])) {
            continue;
        }
        const double a1 = theta[t[1]] - theta[t[0]], b1 = rho[t[1]] - rho[t[0]];
        const double a2 = theta[t[2]] - theta[t[0]], b2 = rho[t[2]] - rho[t[0]];
        const double det = a1 * b2 - a2 * b1;
        if (member[t[0]] && member[t[1]] && member[t[2]]) {
            oriented.push_back({ti, det});
        }
        if (det != 0.0) {
            const double h1 = mesh.samples[t[1]].position.z() - mesh.samples[t[0]].position.z();
            const double h2 = mesh.samples[t[2]].position.z() - mesh.samples[t[0]].position.z();
            const double gt = std::abs((h1 * b2 - h2 * b1) / det);
            const double gr = std::abs((a1 * h2 - a2 * h1) / det);
            for (std::size_t k : t) {
                grad_theta[k] = std::max(grad_theta[k], gt);
                grad_rho[k] = std::max(grad_rho[k], gr);
            }
        }
    }
    sheet.triangle_count = oriented.size();
    const auto positive = std::count_if(oriented.begin(), oriented.end(), [](auto& o) { return o.area > 0.0; });
    const auto negative = std::count_if(oriented.begin(), oriented.end(), [](auto& o) { return o.area < 0.0; });
    const bool expect_positive = positive >= negative;
    for (const auto& o : oriented) {
        if (o.area == 0.0 || (o.area > 0.0) != expect_positive) {
            const auto& t = mesh.triangles[o.triangle];
            throw DecompositionFailure("sheet " + std::to_string(sign) + " folds over the plane at triangle " +
                                       std::to_string(o.triangle) + ": " + describe_pair(mesh, t[0], t[1]));
        }
    }

    // height agreement inside (rho, theta) bins; the tolerance is the local
    // slope of x3 times the bin size
    const double rho_bin = r0 / kRhoBins;
    struct Bin {
        std::size_t lo, hi;
        double slope_theta, slope_rho;
        std::size_t count;
    };
    std::map<std::pair<long long, long long>, Bin> bins;
    for (const auto& p : sheet.points) {
        const std::pair key{static_cast<long long>(std::floor(p.rho / rho_bin)),
                            static_cast<long long>(std::floor(p.theta / kThetaBin))};
        auto [it, inserted] = bins.try_emplace(key, Bin{p.index, p.index, 0.0, 0.0, 0});
        auto& b = it->second;
        if (p.height < mesh.samples[b.lo].position.z()) {
            b.lo = p.index;
        }
        if (p.height > mesh.samples[b.hi].position.z()) {
            b.hi = p.index;
        }
        b.slope_theta = std::max(b.slope_theta, grad_theta[p.index]);
        b.slope_rho = std::max(b.slope_rho, grad_rho[p.index]);
        ++b.count;
    }
    for (const auto& [key, b] : bins) {
        if (b.count < 2) {
            continue;
        }
        ++sheet.shared_bins;
        const double spread = mesh.samples[b.hi].position.z() - mesh.samples[b.lo].position.z();
        const double tolerance = 2.0 * (b.slope_theta * kThetaBin + b.slope_rho * rho_bin) + 1e-12;
        sheet.max_bin_spread = std::max(sheet.max_bin_spread, spread);
        sheet.bin_tolerance = std::max(sheet.bin_tolerance, tolerance);
        if (spread > tolerance) {
            throw DecompositionFailure("sheet " + std::to_string(sign) + " is not a graph: samples " +
                                       describe_pair(mesh, b.lo, b.hi) + " share a (rho, theta) bin");
        }
    }
    return sheet;
}

}  // namespace

MultigraphDecomposition decompose_multigraph(const SurfaceMesh& mesh, double r0)
{
    if (!(r0 > 0.0)) {
        throw InvalidParameter("decomposition radius must be positive");
    }
    if (mesh.samples.size() != mesh.nx * mesh.ns || mesh.samples.empty()) {
        throw DecompositionFailure("mesh sample count does not match its grid");
    }
    MultigraphDecomposition out{r0, 0, 0, {}};
    for (std::size_t k = 0; k < mesh.samples.size(); ++k) {
        const auto& s = mesh.samples[k];
        if (s.param.imag() == 0.0) {
            ++out.axis_samples;
            continue;
        }
        ++out.off_axis_samples;
        if (s.exponent.imag() == 0.0 || s.normal.z() == 0.0) {
            throw DecompositionFailure("vertical normal off the axis at sample " + std::to_string(k));
        }
    }
    if (out.off_axis_samples == 0) {
        throw DecompositionFailure("mesh has no off-axis samples");
    }
    out.sheets = {build_sheet(mesh, +1, r0), build_sheet(mesh, -1, r0)};
    return out;
}

}  // namespace minlam::io
