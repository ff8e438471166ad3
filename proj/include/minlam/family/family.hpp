#pragma once

#include "minlam/core/weierstrass.hpp"
#include "minlam/family/domain.hpp"

namespace minlam::family {

/// h_a(z) = arctan(z / a) / a on the principal branch. The cuts of arctan(z/a)
/// sit on {x = 0, |y| >= a}, which Omega_a never meets.
Complexd eval_h(FamilyParameter a, const Complexd& z);

/// Same value reached by integrating dh/dz along the canonical path from 0.
Complexd eval_h_by_quadrature(FamilyParameter a, const Complexd& z, double tol);

/// dh_a/dz = 1 / (z^2 + a^2). Throws PoleHit at z = +-ia.
Complexd eval_dzh(FamilyParameter a, const Complexd& z);

/// K_a(z) = -|z^2 + a^2|^{-2} / cosh^4(v_a(z)).
double curvature_Ka(FamilyParameter a, const Complexd& z);

/// Phase u_a(x, 0) = arctan(x / a) / a along the real axis.
double axis_phase(FamilyParameter a, double x);

/// The L-shaped path 0 -> (x, 0) -> (x, y). Degenerate legs are dropped.
PolyPath<double> canonical_path(FamilyParameter a, const Complexd& z);

/// Weierstrass data g = exp(i h_a), phi = dz, z0 = 0 on Omega_a.
GaussData<double> gauss_data(FamilyParameter a);

Vec3d immerse_Fa(FamilyParameter a, const Complexd& z, double tol);

/// v_a(z). Zero exactly on the real axis, where the normal is horizontal;
/// its sign follows the sign of y.
double vertical_normal_locus(FamilyParameter a, const Complexd& z);

}  // namespace minlam::family
