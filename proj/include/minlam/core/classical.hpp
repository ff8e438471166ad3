#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "minlam/core/weierstrass.hpp"

namespace minlam::classical {

/// Helicoid: g = exp(iz), phi = dz, z0 = 0 on the whole plane.
template <typename Scalar>
GaussData<Scalar> helicoid_data()
{
    return GaussData<Scalar>::exponential([](Complex<Scalar> z) { return z; },
                                          [](Complex<Scalar>) { return Complex<Scalar>(1); });
}

template <typename Scalar>
Vec3<Scalar> helicoid_position(const Complex<Scalar>& z)
{
    const Scalar x = z.real(), y = z.imag();
    return Vec3<Scalar>(std::sinh(y) * std::sin(x), -std::sinh(y) * std::cos(x), x);
}

/// Punctured plane, or the plane slit along the non-positive real axis.
template <typename Scalar>
Domain<Scalar> punctured_plane(bool slit)
{
    if (slit) {
        return {"C minus (-inf, 0]", [](Complex<Scalar> z) { return !(z.imag() == 0 && z.real() <= 0); }};
    }
    return {"C minus {0}", [](Complex<Scalar> z) { return z != Complex<Scalar>(0); }};
}

/// Catenoid: g = z, phi = dz/z, z0 = 1.
template <typename Scalar>
GaussData<Scalar> catenoid_data(bool slit = false)
{
    return GaussData<Scalar>::direct([](Complex<Scalar> z) { return z; },
                                     [](Complex<Scalar>) { return Complex<Scalar>(1); }, PhiKind::dz_over_z,
                                     Complex<Scalar>(1), punctured_plane<Scalar>(slit));
}

template <typename Scalar>
Vec3<Scalar> catenoid_position(const Complex<Scalar>& z)
{
    const Complex<Scalar> inv = Scalar(1) / z;
    return Vec3<Scalar>(1 - (z + inv).real() / 2, -(z - inv).imag() / 2, std::log(std::abs(z)));
}

/// Radial leg 1 -> r followed by a polygonal arc of radius r to angle theta,
/// with at most `max_step` radians per chord.
template <typename Scalar>
PolyPath<Scalar> radial_arc_path(Scalar r, Scalar theta, Scalar max_step = std::numbers::pi_v<Scalar> / 16)
{
    std::vector<Complex<Scalar>> vertices{Complex<Scalar>(1)};
    if (r != Scalar(1)) {
        vertices.emplace_back(r, Scalar(0));
    }
    const auto steps = static_cast<int>(std::ceil(std::abs(theta) / max_step));
    for (int i = 1; i <= steps; ++i) {
        vertices.push_back(std::polar(r, theta * Scalar(i) / Scalar(steps)));
    }
    return PolyPath<Scalar>(std::move(vertices));
}

}  // namespace minlam::classical
