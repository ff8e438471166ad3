#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minlam/core/errors.hpp"
#include "minlam/family/family.hpp"
#include "minlam/limit/limit.hpp"

namespace minlam::limit {
namespace {

using family::FamilyParameter;
using family::Side;
using std::numbers::pi;

struct RootCase {
    int k;
    double a;
};

TEST(Subsequence, MatchesHighPrecisionRoots)
{
    // roots of (1/a) atan(1/(2a)) = 2 pi k, computed at 50 digits
    const RootCase cases[] = {
        {1, 0.19172430138534496},  {2, 0.10806192645372045},  {3, 0.07539363418188052},
        {6, 0.03957169010600565},  {10, 0.02422935840994558}, {12, 0.02029527968756279},
        {24, 0.01028033864894962}, {100, 0.002492067568244237},
    };
    for (const auto& c : cases) {
        EXPECT_NEAR(select_subsequence(c.k).a / c.a, 1.0, 1e-14) << c.k;
    }
}

TEST(Subsequence, MonotoneAndAnchored)
{
    double previous = 0.5;
    for (int k = 1; k <= 10; ++k) {
        const auto choice = select_subsequence(k);
        EXPECT_LT(choice.a, previous);
        previous = choice.a;
        EXPECT_LT(std::abs(choice.anchor_phase - 2.0 * pi * k), 1e-12);
        EXPECT_NEAR(family::axis_phase(FamilyParameter(choice.a), 0.5), 2.0 * pi * k, 1e-12);
    }
    EXPECT_THROW(select_subsequence(0), InvalidParameter);
}

TEST(LimitExponent, Values)
{
    EXPECT_EQ(limit_exponent(Side::plus, Complexd(0.5, 0)), Complexd(0, 0));
    EXPECT_EQ(limit_exponent(Side::minus, Complexd(-0.5, 0)), Complexd(0, 0));
    const Complexd z(0.3, 0.05);
    EXPECT_NEAR(limit_exponent(Side::plus, z).imag(), 0.05 / (0.09 + 0.0025), 1e-15);
    EXPECT_THROW(limit_exponent(Side::plus, Complexd(-0.3, 0)), DomainViolation);
    EXPECT_THROW(limit_exponent(Side::plus, Complexd(0.1, 0.1)), DomainViolation);
}

TEST(LimitImmersion, BasePointAndHeight)
{
    EXPECT_LE((immerse_limit(Side::plus, Complexd(0.5, 0), 1e-12) - Vec3d(0, 0, 0.5)).norm(), 1e-15);
    EXPECT_LE((immerse_limit(Side::minus, Complexd(-0.5, 0), 1e-12) - Vec3d(0, 0, -0.5)).norm(), 1e-15);
    for (const Complexd z : {Complexd(0.2, 0.03), Complexd(0.45, -0.1), Complexd(0.13, 0.0)}) {
        const Vec3d p = immerse_limit(Side::plus, z, 1e-12);
        EXPECT_NEAR(p.z(), z.real(), 1e-12);
        EXPECT_NEAR(immerse_limit(Side::minus, -z, 1e-12).z(), -z.real(), 1e-12);
    }
}

TEST(Winding, FiniteParameter)
{
    const double turns = winding_count(FamilyParameter(1e-3), 0.1, 0.2);
    EXPECT_NEAR(turns, 0.795728298351143, 1e-12);
    EXPECT_NEAR(turns * 2.0 * pi, 4.99970835270692, 1e-11);
    EXPECT_EQ(winding_count(FamilyParameter(1e-3), 0.1, 0.1), 0.0);
}

TEST(Winding, LimitIsExact)
{
    for (double t : {0.05, 0.1, 0.2}) {
        EXPECT_NEAR(winding_count(Side::plus, t, 2.0 * t) * 4.0 * pi * t, 1.0, 1e-12);
        EXPECT_NEAR(winding_count(FamilyParameter(t / 10.0), t, 2.0 * t) * 4.0 * pi * t, 1.0, 0.01);
    }
}

TEST(LogLogSlope, PowerLaw)
{
    const std::vector<double> xs{0.1, 0.05, 0.02, 0.01};
    std::vector<double> ys;
    for (double x : xs) {
        ys.push_back(3.0 * x * x);
    }
    EXPECT_NEAR(loglog_slope(xs, ys), 2.0, 1e-12);
}

TEST(Convergence, SingleRow)
{
    CompactSet set;
    set.nx = 5;
    set.ns = 5;
    const std::vector<int> ks{3};
    const auto report = convergence_report(ks, set, 1e-12);
    ASSERT_EQ(report.entries.size(), 1u);
    EXPECT_GT(report.entries[0].sup_position_error, 0.0);
}

TEST(Convergence, DecreasesAtSecondOrder)
{
    CompactSet set;
    set.nx = 9;
    set.ns = 9;
    const std::vector<int> ks{3, 6, 12, 24};
    const auto report = convergence_report(ks, set, 1e-12);
    EXPECT_TRUE(report.position_strictly_decreasing());
    EXPECT_TRUE(report.v_strictly_decreasing());
    EXPECT_GE(report.position_rate(), 1.5);
    EXPECT_LE(report.position_rate(), 2.5);
    EXPECT_GE(report.v_rate(), 1.5);
    EXPECT_LE(report.v_rate(), 2.5);
}

TEST(Blowup, OriginColumn)
{
    BlowupOptions options;
    options.nx = 17;
    options.ns = 9;
    const std::vector<int> ks{3, 6};
    const auto report = blowup_report(ks, 0.1, options);
    ASSERT_EQ(report.rows.size(), 2u);
    for (const auto& row : report.rows) {
        EXPECT_NEAR(row.curvature_norm_at_origin * std::pow(row.a, 4), 2.0, 1e-10);
        EXPECT_GT(row.sup_outside_ball, 0.0);
        EXPECT_LT(row.sup_outside_ball, row.curvature_norm_at_origin);
    }
    EXPECT_TRUE(report.origin_strictly_increasing());
    EXPECT_THROW(blowup_report(ks, 0.0, options), InvalidParameter);
}

TEST(Spiral, ContainmentAndGrowth)
{
    for (const Side side : {Side::plus, Side::minus}) {
        for (bool upper : {true, false}) {
            const auto coarse = spiral_theta_span(side, upper, 0.1, 1e-12);
            const auto fine = spiral_theta_span(side, upper, 0.05, 1e-12);
            EXPECT_GT(coarse.min_height, 0.0);
            EXPECT_GT(fine.min_height, 0.0);
            const double ratio = fine.theta_range / coarse.theta_range;
            EXPECT_GE(ratio, 1.9);
            EXPECT_LE(ratio, 2.1);
        }
    }
}

}  // namespace
}  // namespace minlam::limit
