#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace minlam {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

/// Stateless holomorphic function handle z -> f(z).
template <typename Scalar>
using HolomorphicFn = std::function<Complex<Scalar>(Complex<Scalar>)>;

template <typename Scalar>
bool is_finite(const Complex<Scalar>& z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename Scalar>
bool is_finite(const Vec3<Scalar>& v)
{
    return v.allFinite();
}

using Complexd = Complex<double>;
using Vec3d = Vec3<double>;
using Vec2d = Vec2<double>;

}  // namespace minlam
