#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minlam/core/errors.hpp"
#include "minlam/io/mesh.hpp"
#include "minlam/io/multigraph.hpp"

namespace minlam::io {
namespace {

using std::numbers::pi;

SurfaceMesh helicoid_mesh(int nx, int ns)
{
    MeshOptions options;
    options.nx = nx;
    options.ns = ns;
    return sample_mesh(HelicoidOracle{}, options);
}

TEST(Multigraph, HelicoidSheetsAreOffsetByHalfTurn)
{
    const auto mesh = helicoid_mesh(33, 17);
    const auto dec = decompose_multigraph(mesh, 2.0);
    EXPECT_EQ(dec.axis_samples, 33u);
    EXPECT_EQ(dec.off_axis_samples, 33u * 16u);
    for (const auto& sheet : dec.sheets) {
        ASSERT_FALSE(sheet.points.empty());
        EXPECT_GT(sheet.shared_bins, 0u);
        // x3 - theta is constant on each helicoid sheet
        const double offset = sheet.points.front().height - sheet.points.front().theta;
        for (const auto& p : sheet.points) {
            EXPECT_NEAR(p.height - p.theta, offset, 1e-9);
            EXPECT_EQ(mesh.samples[p.index].param.imag() > 0.0, sheet.sign > 0);
        }
    }
    const double plus = dec.sheets[0].points.front().height - dec.sheets[0].points.front().theta;
    const double minus = dec.sheets[1].points.front().height - dec.sheets[1].points.front().theta;
    const double gap = std::remainder(plus - minus, 2.0 * pi);
    EXPECT_NEAR(std::abs(gap), pi, 1e-9);
}

TEST(Multigraph, FamilyMemberDecomposes)
{
    const family::FamilyParameter a(0.05);
    MeshOptions options;
    options.nx = phase_resolved_columns(a, 0.25);
    options.ns = 21;
    options.spacing = ColumnSpacing::phase;
    const auto dec = decompose_multigraph(sample_mesh(a, options), 0.006);
    EXPECT_GT(dec.sheets[0].turns(), 1.0);
    EXPECT_NEAR(dec.sheets[0].turns(), dec.sheets[1].turns(), 1e-9);
}

TEST(Multigraph, SparseSheetUsesNeighbourSlopes)
{
    // only one or two samples per column fall inside r0 here
    MeshOptions options;
    options.nx = 129;
    options.ns = 41;
    const auto dec = decompose_multigraph(sample_mesh(family::FamilyParameter(0.1), options), 0.0069);
    EXPECT_GT(dec.sheets[0].shared_bins, 0u);
    EXPECT_LE(dec.sheets[0].max_bin_spread, dec.sheets[0].bin_tolerance);
}

TEST(Multigraph, AxisOnlyMeshFails)
{
    auto mesh = helicoid_mesh(5, 3);
    // keep only the y = 0 row
    SurfaceMesh axis;
    axis.nx = mesh.nx;
    axis.ns = 1;
    for (std::size_t ix = 0; ix < mesh.nx; ++ix) {
        axis.samples.push_back(mesh.at(ix, 1));
    }
    EXPECT_THROW(decompose_multigraph(axis, 1.0), DecompositionFailure);
}

TEST(Multigraph, FoldIsDetected)
{
    // swapping two samples of one column folds the sheet over itself
    auto mesh = helicoid_mesh(9, 5);
    std::swap(mesh.samples[4 * 5 + 3], mesh.samples[4 * 5 + 4]);
    EXPECT_THROW(decompose_multigraph(mesh, 2.0), DecompositionFailure);
}

TEST(Multigraph, VerticalNormalOffAxisFails)
{
    auto mesh = helicoid_mesh(5, 5);
    mesh.samples[3].exponent = Complexd(mesh.samples[3].exponent.real(), 0.0);
    EXPECT_THROW(decompose_multigraph(mesh, 2.0), DecompositionFailure);
}

TEST(Multigraph, RejectsNonPositiveRadius)
{
    EXPECT_THROW(decompose_multigraph(helicoid_mesh(3, 3), 0.0), InvalidParameter);
}

}  // namespace
}  // namespace minlam::io
