#include <gtest/gtest.h>

#include <cmath>

#include "minlam/core/errors.hpp"
#include "minlam/family/certificates.hpp"
#include "minlam/family/family.hpp"

namespace minlam::family {
namespace {

constexpr double kTol = 1e-12;

TEST(Slice, Layout)
{
    const FamilyParameter a(0.1);
    const auto curve = slice(a, 0.25, 41, kTol);
    ASSERT_EQ(curve.samples.size(), 41u);
    EXPECT_EQ(curve.middle().param, Complexd(0.25, 0.0));
    EXPECT_LE((curve.middle().position - Vec3d(0, 0, 0.25)).norm(), 1e-12);
    EXPECT_NEAR(curve.samples.front().param.imag(), -half_width(a, 0.25), 1e-16);
    EXPECT_NEAR(curve.samples.back().param.imag(), half_width(a, 0.25), 1e-16);
    const double u = axis_phase(a, 0.25);
    EXPECT_NEAR(curve.axis_direction.x(), std::sin(u), 1e-15);
    EXPECT_NEAR(curve.axis_direction.y(), -std::cos(u), 1e-15);
}

TEST(Slice, RejectsBadSampleCounts)
{
    const FamilyParameter a(0.1);
    EXPECT_THROW(slice(a, 0.0, 40, kTol), InvalidParameter);
    EXPECT_THROW(slice(a, 0.0, 1, kTol), InvalidParameter);
    EXPECT_THROW(slice(a, 0.6, 41, kTol), DomainViolation);
}

TEST(Slice, CentralSliceIsPointSymmetric)
{
    const auto curve = slice(FamilyParameter(0.05), 0.0, 21, kTol);
    EXPECT_LE(curve.middle().position.norm(), 1e-15);
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        const Vec3d p = curve.samples[i].position;
        const Vec3d q = curve.samples[curve.samples.size() - 1 - i].position;
        EXPECT_LE((p + q).head<2>().norm(), 1e-10);
    }
}

TEST(Slice, GraphCertificatesOnGrid)
{
    for (const auto& a : AcceptanceGrid::a_values()) {
        for (double x : AcceptanceGrid::x_values()) {
            const auto cert = certify_slice(slice(a, x, AcceptanceGrid::slice_samples, kTol));
            EXPECT_TRUE(cert.valid()) << a.value() << " " << x;
            EXPECT_LT(cert.max_phase_deviation, 1.0);
            EXPECT_GT(cert.min_cos_phase, 0.5);
        }
    }
}

TEST(Separation, LowerBoundValue)
{
    EXPECT_NEAR(separation_lower_bound(0.1, 0.25), 0.0104044694119535, 1e-15);
}

TEST(Separation, LowerBoundAtCenter)
{
    // decreasing for moderate a, growing without bound only once a is tiny
    EXPECT_GT(separation_lower_bound(0.1, 0.0), separation_lower_bound(0.05, 0.0));
    EXPECT_GT(separation_lower_bound(0.05, 0.0), separation_lower_bound(0.02, 0.0));
    EXPECT_LT(separation_lower_bound(5e-4, 0.0), separation_lower_bound(1e-4, 0.0));
    EXPECT_LT(separation_lower_bound(1e-4, 0.0), separation_lower_bound(2e-5, 0.0));
    EXPECT_GT(separation_lower_bound(2e-5, 0.0), 1.0);
}

TEST(Separation, HoldsOnGrid)
{
    for (const auto& a : AcceptanceGrid::a_values()) {
        for (double x : AcceptanceGrid::x_values()) {
            const auto cert = separation(a, x, kTol);
            EXPECT_TRUE(cert.valid()) << a.value() << " " << x << ": " << cert.measured_separation << " vs "
                                      << cert.lower_bound;
        }
    }
}

TEST(EstimateR0, Properties)
{
    const auto grid_a = AcceptanceGrid::a_values();
    const auto grid_x = AcceptanceGrid::x_values();
    const double r0 = estimate_r0(grid_a, grid_x, kTol);
    EXPECT_GT(r0, 0.005);

    const std::vector<FamilyParameter> one_a{FamilyParameter(0.05)};
    const std::vector<double> one_x{0.125};
    EXPECT_EQ(estimate_r0(one_a, one_x, kTol), separation(one_a[0], 0.125, kTol).measured_separation);

    const std::vector<FamilyParameter> fewer(grid_a.begin(), grid_a.begin() + 2);
    EXPECT_GE(estimate_r0(fewer, grid_x, kTol), r0);
    EXPECT_THROW(estimate_r0({}, grid_x, kTol), InvalidParameter);
}

TEST(VerticalNormal, FloorAtSliceEnds)
{
    for (const auto& a : AcceptanceGrid::a_values()) {
        for (double x : AcceptanceGrid::x_values()) {
            const double s2 = x * x + a.value() * a.value();
            const double floor = 3.0 / (32.0 * std::pow(s2, 0.25));
            const double y = half_width(a, x);
            EXPECT_GE(vertical_normal_locus(a, Complexd(x, y)), floor);
            EXPECT_LE(vertical_normal_locus(a, Complexd(x, -y)), -floor);
        }
    }
}

}  // namespace
}  // namespace minlam::family
