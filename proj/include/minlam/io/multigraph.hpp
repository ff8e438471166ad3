#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "minlam/io/mesh.hpp"

namespace minlam::io {

/// A sheet sample in cylindrical coordinates about the x3-axis.
struct CylindricalPoint {
    std::size_t index;  // into SurfaceMesh::samples
    double rho;
    double theta;  // unwrapped
    double height;
};

/// One of the two multi-valued graphs: samples with y > 0 (sign +1) or y < 0 (sign -1)
/// and 0 < rho < r0.
struct SheetDescriptor {
    int sign = 0;
    std::vector<CylindricalPoint> points;
    std::size_t triangle_count = 0;
    double theta_min = 0.0;
    double theta_max = 0.0;
    std::size_t shared_bins = 0;  // (rho, theta) bins holding two or more samples
    double max_bin_spread = 0.0;  // largest x3 spread inside one bin
    double bin_tolerance = 0.0;   // largest tolerance applied to a shared bin

    /// Turns of the unwrapped angle, (theta_max - theta_min) / (2 pi).
    double turns() const;
};

struct MultigraphDecomposition {
    double r0;
    std::size_t axis_samples = 0;
    std::size_t off_axis_samples = 0;
    std::array<SheetDescriptor, 2> sheets;
};

/// Splits a mesh into the sheets y > 0 and y < 0 and certifies that each is a
/// multi-valued graph over the punctured disk of radius r0:
///  - the normal is never vertical off the axis (v != 0 for y != 0);
///  - every sheet triangle keeps one orientation in the (theta, rho) plane;
///  - samples sharing a (rho, theta) bin agree in x3 up to the bin tolerance.
/// Theta is unwrapped along each x-column from its outermost sample, whose
/// branch follows the outermost sample of the previous column.
/// Throws DecompositionFailure naming the offending samples.
MultigraphDecomposition decompose_multigraph(const SurfaceMesh& mesh, double r0);

}  // namespace minlam::io
