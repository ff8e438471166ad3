#include "minlam/io/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "minlam/core/classical.hpp"
#include "minlam/core/errors.hpp"
#include "minlam/core/sampling.hpp"
#include "minlam/family/family.hpp"
#include "minlam/limit/limit.hpp"

namespace minlam::io {

using std::numbers::pi;

std::string describe(const MeshSource& source)
{
    if (const auto* a = std::get_if<family::FamilyParameter>(&source)) {
        return "family a=" + std::to_string(a->value());
    }
    if (const auto* side = std::get_if<family::Side>(&source)) {
        return "limit " + family::to_string(*side);
    }
    return "helicoid";
}

bool SurfaceMesh::valid() const
{
    if (nx < 2 || ns < 2 || samples.size() != nx * ns) {
        return false;
    }
    for (const auto& t : triangles) {
        for (std::size_t idx : t) {
            if (idx >= samples.size()) {
                return false;
            }
        }
        const Complexd p0 = samples[t[0]].param;
        const Complexd e1 = samples[t[1]].param - p0;
        const Complexd e2 = samples[t[2]].param - p0;
        if (e1.real() * e2.imag() - e1.imag() * e2.real() == 0.0) {
            return false;
        }
    }
    return true;
}

std::vector<Triangle> grid_triangles(std::size_t nx, std::size_t ns)
{
    std::vector<Triangle> out;
    out.reserve(2 * (nx - 1) * (ns - 1));
    auto idx = [ns](std::size_t i, std::size_t j) { return i * ns + j; };
    for (std::size_t i = 0; i + 1 < nx; ++i) {
        for (std::size_t j = 0; j + 1 < ns; ++j) {
            out.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
            out.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
        }
    }
    return out;
}

int phase_resolved_columns(family::FamilyParameter a, double max_step)
{
    const double span = 2.0 * family::axis_phase(a, 0.5);
    int n = static_cast<int>(std::ceil(span / max_step)) + 1;
    return n % 2 == 0 ? n + 1 : n;
}

namespace {

struct Layout {
    GaussData<double> data;
    std::vector<double> xs;
    std::function<double(double)> half_width;
    Vec3d base_position = Vec3d::Zero();
    std::optional<double> a;
};

Layout layout_for(const MeshSource& source, const MeshOptions& options)
{
    const auto nx = static_cast<std::size_t>(options.nx);
    const bool by_phase = options.spacing == ColumnSpacing::phase;

    if (const auto* a = std::get_if<family::FamilyParameter>(&source)) {
        const auto domain = family::DomainSpec::omega(*a);
        const double aa = a->value();
        std::vector<double> xs = linspace(-0.5, 0.5, nx);
        if (by_phase) {
            const double top = family::axis_phase(*a, 0.5);
            xs = linspace(-top, top, nx);
            for (double& x : xs) {
                x = aa * std::tan(aa * x);
            }
            xs.front() = -0.5;
            xs.back() = 0.5;
        }
        return {family::gauss_data(*a), std::move(xs), [domain](double x) { return domain.half_width(x); },
                Vec3d::Zero(), aa};
    }
    if (const auto* side = std::get_if<family::Side>(&source)) {
        const double sign = family::sign_of(*side);
        const double lo = options.limit_x_min;
        if (!(lo > 0.0 && lo < 0.5)) {
            throw InvalidParameter("limit meshes need 0 < limit_x_min < 1/2");
        }
        std::vector<double> magnitudes = linspace(lo, 0.5, nx);
        if (by_phase) {
            // u = -1/|x| up to a constant, so equal phase steps are equal steps in 1/|x|
            magnitudes = linspace(1.0 / lo, 2.0, nx);
            for (double& m : magnitudes) {
                m = 1.0 / m;
            }
            magnitudes.front() = lo;
            magnitudes.back() = 0.5;
        }
        std::vector<double> xs;
        for (double m : magnitudes) {
            xs.push_back(sign * m);
        }
        if (sign < 0) {
            std::reverse(xs.begin(), xs.end());
        }
        const auto domain = family::DomainSpec::omega_limit(*side);
        return {limit::limit_gauss_data(*side), std::move(xs), [domain](double x) { return domain.half_width(x); },
                Vec3d(0.0, 0.0, 0.5 * sign), std::nullopt};
    }
    return {classical::helicoid_data<double>(), linspace(-pi, pi, nx), [](double) { return 1.0; }, Vec3d::Zero(),
            std::nullopt};
}

}  // namespace

SurfaceMesh sample_mesh(const MeshSource& source, const MeshOptions& options)
{
    if (options.nx < 2 || options.ns < 2) {
        throw InvalidParameter("mesh needs nx, ns >= 2");
    }
    Layout layout = layout_for(source, options);
    ColumnGrid<double> grid{layout.xs, static_cast<std::size_t>(options.ns), layout.half_width, layout.base_position};

    SurfaceMesh mesh;
    mesh.nx = static_cast<std::size_t>(options.nx);
    mesh.ns = static_cast<std::size_t>(options.ns);
    mesh.samples = sample_grid(layout.data, grid, options.tol);
    mesh.triangles = grid_triangles(mesh.nx, mesh.ns);
    mesh.provenance = {describe(source),
                       layout.a,
                       options.nx,
                       options.ns,
                       options.tol,
                       options.spacing == ColumnSpacing::phase ? "phase" : "uniform",
                       std::nullopt};
    return mesh;
}

}  // namespace minlam::io
