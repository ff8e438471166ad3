#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minlam/core/weierstrass.hpp"
#include "minlam/family/domain.hpp"

namespace minlam::io {

/// Helicoid over [-pi, pi] x [-1, 1]; used to check the sampler and decomposition.
struct HelicoidOracle {};

using MeshSource = std::variant<family::FamilyParameter, family::Side, HelicoidOracle>;

std::string describe(const MeshSource& source);

/// Column placement: equal steps in x, or equal steps in the axis phase u(x, 0).
enum class ColumnSpacing { uniform, phase };

struct MeshOptions {
    int nx = 129;
    int ns = 41;
    double tol = 1e-12;
    ColumnSpacing spacing = ColumnSpacing::uniform;
    /// Inner end of the x-range for the limit disks, which exclude x = 0.
    double limit_x_min = 0.125;
};

struct Provenance {
    std::string source;
    std::optional<double> a;
    int nx = 0;
    int ns = 0;
    double tol = 0.0;
    std::string spacing;
    std::optional<double> ball_radius;
};

using Triangle = std::array<std::size_t, 3>;

/// Grid of samples indexed (ix, is) -> ix * ns + is, with y = s * half_width(x).
struct SurfaceMesh {
    std::size_t nx = 0;
    std::size_t ns = 0;
    std::vector<SurfaceSample<double>> samples;
    std::vector<Triangle> triangles;
    Provenance provenance;

    const SurfaceSample<double>& at(std::size_t ix, std::size_t is) const { return samples[ix * ns + is]; }

    /// Grid dims, index ranges and non-degenerate parameter-space triangles.
    bool valid() const;
};

/// Two triangles per grid cell, counter-clockwise in the (x, s) parameter plane.
std::vector<Triangle> grid_triangles(std::size_t nx, std::size_t ns);

SurfaceMesh sample_mesh(const MeshSource& source, const MeshOptions& options);

/// Column count giving phase steps of at most `max_step` radians over the
/// full x-range of a family member (always odd so x = 0 is a column).
int phase_resolved_columns(family::FamilyParameter a, double max_step);

}  // namespace minlam::io
