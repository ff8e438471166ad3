#include "minlam/family/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "minlam/core/errors.hpp"
#include "minlam/core/sampling.hpp"
#include "minlam/family/family.hpp"

namespace minlam::family {

SliceCurve slice(FamilyParameter a, double x, int n_samples, double tol)
{
    if (n_samples < 3 || n_samples % 2 == 0) {
        throw InvalidParameter("slice needs an odd sample count >= 3");
    }
    if (std::abs(x) > 0.5) {
        throw DomainViolation("slice height must satisfy |x| <= 1/2");
    }
    const auto n = static_cast<std::size_t>(n_samples);
    const double w = half_width(a, x);
    std::vector<double> ys = linspace(-w, w, n);
    ys[n / 2] = 0.0;

    const GaussData<double> data = gauss_data(a);
    const Vec3d axis_position = immerse_Fa(a, Complexd(x, 0.0), tol);
    const double u0 = axis_phase(a, x);
    return {a, x, sample_vertical_line(data, x, ys, n / 2, axis_position, tol), Vec2d(std::sin(u0), -std::cos(u0))};
}

SliceGraphCertificate certify_slice(const SliceCurve& curve)
{
    const double a = curve.a.value();
    const double x = curve.x;
    const auto& mid = curve.middle();
    const double u0 = mid.exponent.real();

    SliceGraphCertificate cert{0.0, std::abs(x) / (2.0 * std::sqrt(x * x + a * a)), 1.0, true};
    double previous_projection = -std::numeric_limits<double>::infinity();
    for (const auto& s : curve.samples) {
        const double du = s.exponent.real() - u0;
        cert.max_phase_deviation = std::max(cert.max_phase_deviation, std::abs(du));
        cert.min_cos_phase = std::min(cert.min_cos_phase, std::cos(du));
        const Vec3d offset = s.position - mid.position;
        const double projection = offset.x() * curve.axis_direction.x() + offset.y() * curve.axis_direction.y();
        if (!(projection > previous_projection)) {
            cert.projection_monotone = false;
        }
        previous_projection = projection;
    }
    return cert;
}

double separation_lower_bound(double a, double x)
{
    const double s = x * x + a * a;
    return std::pow(s, 0.75) / 16.0 * std::exp(std::pow(s, -0.25) / 11.0);
}

SeparationCertificate separation(FamilyParameter a, double x, double tol)
{
    if (std::abs(x) > 0.5) {
        throw DomainViolation("separation height must satisfy |x| <= 1/2");
    }
    const double w = half_width(a, x);
    const Vec3d center = immerse_Fa(a, Complexd(x, 0.0), tol);
    const double upper = (immerse_Fa(a, Complexd(x, w), tol) - center).norm();
    const double lower = (immerse_Fa(a, Complexd(x, -w), tol) - center).norm();
    return {a.value(), x, std::min(upper, lower), separation_lower_bound(a.value(), x)};
}

double estimate_r0(std::span<const FamilyParameter> a_list, std::span<const double> x_grid, double tol)
{
    if (a_list.empty() || x_grid.empty()) {
        throw InvalidParameter("r0 estimate needs a non-empty grid");
    }
    double r0 = std::numeric_limits<double>::infinity();
    for (const auto& a : a_list) {
        for (double x : x_grid) {
            r0 = std::min(r0, separation(a, x, tol).measured_separation);
        }
    }
    return r0;
}

std::vector<FamilyParameter> AcceptanceGrid::a_values()
{
    return {FamilyParameter(0.1), FamilyParameter(0.05), FamilyParameter(0.02), FamilyParameter(0.01)};
}

std::vector<double> AcceptanceGrid::x_values()
{
    return {-0.5, -0.25, -0.125, -0.0625, 0.0, 0.0625, 0.125, 0.25, 0.5};
}

}  // namespace minlam::family
