#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include "minlam/core/classical.hpp"
#include "minlam/core/errors.hpp"
#include "minlam/io/export.hpp"
#include "minlam/io/mesh.hpp"

namespace minlam::io {
namespace {

using family::FamilyParameter;
using classical::helicoid_position;

std::size_t count_prefix(const std::string& text, const std::string& prefix)
{
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        n += line.rfind(prefix, 0) == 0 ? 1 : 0;
    }
    return n;
}

SurfaceMesh small_mesh(int nx, int ns)
{
    MeshOptions options;
    options.nx = nx;
    options.ns = ns;
    return sample_mesh(FamilyParameter(0.1), options);
}

TEST(Mesh, MinimalGrid)
{
    const auto mesh = small_mesh(2, 2);
    EXPECT_EQ(mesh.samples.size(), 4u);
    EXPECT_EQ(mesh.triangles.size(), 2u);
    EXPECT_TRUE(mesh.valid());
    EXPECT_EQ(mesh.provenance.a, 0.1);
}

TEST(Mesh, RejectsDegenerateGrid)
{
    MeshOptions options;
    options.nx = 1;
    EXPECT_THROW(sample_mesh(FamilyParameter(0.1), options), InvalidParameter);
}

TEST(Mesh, TrianglesAreCounterClockwise)
{
    const auto tris = grid_triangles(3, 4);
    EXPECT_EQ(tris.size(), 2u * 2u * 3u);
    const auto mesh = small_mesh(5, 5);
    for (const auto& t : mesh.triangles) {
        const Complexd e1 = mesh.samples[t[1]].param - mesh.samples[t[0]].param;
        const Complexd e2 = mesh.samples[t[2]].param - mesh.samples[t[0]].param;
        EXPECT_GT(e1.real() * e2.imag() - e1.imag() * e2.real(), 0.0);
    }
}

TEST(Mesh, HeightAndAxisIdentities)
{
    const auto mesh = small_mesh(17, 9);
    for (const auto& s : mesh.samples) {
        EXPECT_NEAR(s.position.z(), s.param.real(), 1e-11);
        if (s.param.imag() == 0.0) {
            EXPECT_LE(s.position.head<2>().norm(), 1e-12);
        }
    }
}

TEST(Mesh, HelicoidOracle)
{
    MeshOptions options;
    options.nx = 9;
    options.ns = 5;
    const auto mesh = sample_mesh(HelicoidOracle{}, options);
    for (const auto& s : mesh.samples) {
        EXPECT_LE((s.position - helicoid_position(s.param)).norm(), 1e-10);
    }
}

TEST(Mesh, PhaseSpacingIsOddAndSymmetric)
{
    const FamilyParameter a(0.05);
    const int nx = phase_resolved_columns(a, 0.25);
    EXPECT_EQ(nx % 2, 1);
    MeshOptions options;
    options.nx = nx;
    options.ns = 5;
    options.spacing = ColumnSpacing::phase;
    const auto mesh = sample_mesh(a, options);
    for (std::size_t ix = 0; ix + 1 < mesh.nx; ++ix) {
        const double du = mesh.at(ix + 1, 2).exponent.real() - mesh.at(ix, 2).exponent.real();
        EXPECT_LE(std::abs(du), 0.25 + 1e-12);
    }
    EXPECT_EQ(mesh.at(mesh.nx / 2, 2).param, Complexd(0, 0));
}

TEST(Export, ObjCounts)
{
    const auto mesh = small_mesh(2, 2);
    std::ostringstream out;
    const std::size_t bytes = export_mesh(mesh, MeshFormat::obj, out);
    EXPECT_EQ(bytes, out.str().size());
    EXPECT_EQ(count_prefix(out.str(), "v "), 4u);
    EXPECT_EQ(count_prefix(out.str(), "f "), 2u);
}

TEST(Export, PlyHeader)
{
    const auto mesh = small_mesh(3, 3);
    std::ostringstream out;
    export_mesh(mesh, MeshFormat::ply, out);
    const std::string text = out.str();
    EXPECT_EQ(text.rfind("ply\nformat ascii 1.0\n", 0), 0u);
    EXPECT_NE(text.find("element vertex 9\n"), std::string::npos);
    EXPECT_NE(text.find("element face 8\n"), std::string::npos);
    EXPECT_NE(text.find("property double quality\n"), std::string::npos);
}

TEST(Export, CsvRoundTripIsBitExact)
{
    const auto mesh = small_mesh(5, 7);
    std::ostringstream out;
    export_mesh(mesh, MeshFormat::csv, out);
    EXPECT_EQ(count_prefix(out.str(), ""), 5u * 7u + 1u);
    EXPECT_EQ(out.str().rfind("x,y,F1,F2,F3,u,v,K\r\n", 0), 0u);

    std::istringstream in(out.str());
    const auto rows = parse_samples_csv(in);
    ASSERT_EQ(rows.size(), mesh.samples.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& s = mesh.samples[i];
        const double expected[] = {s.param.real(),    s.param.imag(),    s.position.x(),   s.position.y(),
                                   s.position.z(),    s.exponent.real(), s.exponent.imag(), s.gauss_curvature};
        EXPECT_EQ(std::memcmp(rows[i].data(), expected, sizeof expected), 0) << "row " << i;
    }
}

TEST(Export, Deterministic)
{
    std::ostringstream first, second;
    export_mesh(small_mesh(9, 5), MeshFormat::ply, first);
    export_mesh(small_mesh(9, 5), MeshFormat::ply, second);
    EXPECT_EQ(first.str(), second.str());
}

TEST(Export, FailingSink)
{
    const auto mesh = small_mesh(2, 2);
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    EXPECT_THROW(export_mesh(mesh, MeshFormat::obj, out), SinkFailure);
}

TEST(Export, FormatNames)
{
    EXPECT_EQ(parse_mesh_format("ply"), MeshFormat::ply);
    EXPECT_THROW(parse_mesh_format("stl"), InvalidParameter);
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace minlam::io
