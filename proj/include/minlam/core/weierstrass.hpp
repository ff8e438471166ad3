#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minlam/core/errors.hpp"
#include "minlam/core/quadrature.hpp"
#include "minlam/core/types.hpp"

namespace minlam {

/// Region of the parameter plane, given by a membership predicate.
template <typename Scalar>
struct Domain {
    std::string name = "C";
    std::function<bool(Complex<Scalar>)> membership;

    bool contains(const Complex<Scalar>& z) const { return !membership || membership(z); }

    static Domain whole_plane() { return {"C", {}}; }
};

/// Polygonal integration path. A single vertex is the trivial path.
template <typename Scalar>
class PolyPath {
public:
    explicit PolyPath(std::vector<Complex<Scalar>> vertices) : vertices_(std::move(vertices))
    {
        if (vertices_.empty()) {
            throw InvalidParameter("path needs at least one vertex");
        }
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            if (vertices_[i] == vertices_[i - 1]) {
                throw InvalidParameter("consecutive path vertices must be distinct");
            }
        }
    }

    static PolyPath trivial(const Complex<Scalar>& z) { return PolyPath({z}); }

    const std::vector<Complex<Scalar>>& vertices() const { return vertices_; }
    const Complex<Scalar>& front() const { return vertices_.front(); }
    const Complex<Scalar>& back() const { return vertices_.back(); }
    std::size_t segment_count() const { return vertices_.size() - 1; }

private:
    std::vector<Complex<Scalar>> vertices_;
};

enum class PhiKind { dz, dz_over_z };

/// Weierstrass data (g, phi, z0, domain).
///
/// Exponential form stores the exponent h with g = exp(i h); the direct form
/// stores g itself and exists for the catenoid.
template <typename Scalar>
struct GaussData {
    HolomorphicFn<Scalar> h;
    HolomorphicFn<Scalar> dzh;
    HolomorphicFn<Scalar> g_direct;
    HolomorphicFn<Scalar> dzg_direct;
    PhiKind phi_kind = PhiKind::dz;
    Complex<Scalar> z0{};
    Domain<Scalar> domain = Domain<Scalar>::whole_plane();

    static GaussData exponential(HolomorphicFn<Scalar> h, HolomorphicFn<Scalar> dzh,
                                 Complex<Scalar> z0 = {},
                                 Domain<Scalar> domain = Domain<Scalar>::whole_plane())
    {
        GaussData data;
        data.h = std::move(h);
        data.dzh = std::move(dzh);
        data.z0 = z0;
        data.domain = std::move(domain);
        return data;
    }

    static GaussData direct(HolomorphicFn<Scalar> g, HolomorphicFn<Scalar> dzg, PhiKind phi,
                            Complex<Scalar> z0, Domain<Scalar> domain)
    {
        GaussData data;
        data.g_direct = std::move(g);
        data.dzg_direct = std::move(dzg);
        data.phi_kind = phi;
        data.z0 = z0;
        data.domain = std::move(domain);
        return data;
    }

    bool is_exponential() const { return static_cast<bool>(h); }

    Complex<Scalar> exponent(const Complex<Scalar>& z) const
    {
        if (is_exponential()) {
            return h(z);
        }
        // h = -i log g on the principal branch
        return Complex<Scalar>(0, -1) * std::log(g_direct(z));
    }

    Complex<Scalar> gauss_map(const Complex<Scalar>& z) const
    {
        if (is_exponential()) {
            return std::exp(Complex<Scalar>(0, 1) * h(z));
        }
        return g_direct(z);
    }

    Complex<Scalar> gauss_map_derivative(const Complex<Scalar>& z) const
    {
        if (is_exponential()) {
            return Complex<Scalar>(0, 1) * dzh(z) * gauss_map(z);
        }
        return dzg_direct(z);
    }

    /// Coefficient of the height differential, phi = phi_coefficient(z) dz.
    Complex<Scalar> phi_coefficient(const Complex<Scalar>& z) const
    {
        return phi_kind == PhiKind::dz ? Complex<Scalar>(1) : Scalar(1) / z;
    }
};

/// Partial derivatives of F in the conformal coordinates z = x + iy.
template <typename Scalar>
struct Differential {
    Vec3<Scalar> dx;
    Vec3<Scalar> dy;
};

/// Closed-form dF for g = exp(i(u + iv)), phi = dz.
template <typename Scalar>
Differential<Scalar> differential_from_exponent(const Complex<Scalar>& exponent)
{
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    const Scalar u = exponent.real();
    const Scalar v = exponent.imag();
    const Scalar cu = cos(u), su = sin(u), sv = sinh(v), cv = cosh(v);
    return {Vec3<Scalar>(sv * cu, sv * su, Scalar(1)), Vec3<Scalar>(cv * su, -cv * cu, Scalar(0))};
}

template <typename Scalar>
Differential<Scalar> differential(const GaussData<Scalar>& data, const Complex<Scalar>& z)
{
    if (!data.is_exponential() || data.phi_kind != PhiKind::dz) {
        throw UnsupportedData("closed-form differential needs g = exp(ih) and phi = dz");
    }
    return differential_from_exponent<Scalar>(data.h(z));
}

/// Stereographic preimage of g: (2 Re g, 2 Im g, |g|^2 - 1) / (|g|^2 + 1).
template <typename Scalar>
Vec3<Scalar> unit_normal(const Complex<Scalar>& g)
{
    const Scalar mod2 = std::norm(g);
    return Vec3<Scalar>(2 * g.real(), 2 * g.imag(), mod2 - 1) / (mod2 + 1);
}

template <typename Scalar>
Scalar gauss_curvature(const Complex<Scalar>& g, const Complex<Scalar>& dzg, Scalar phi_density)
{
    if (phi_density == Scalar(0)) {
        throw ZeroDensity("height differential vanishes");
    }
    const Scalar mod2 = std::norm(g);
    const Scalar root = 4 * std::abs(dzg) * std::abs(g) / (phi_density * (1 + mod2) * (1 + mod2));
    return -root * root;
}

/// Real integrand of the immersion along a unit direction in the parameter plane.
template <typename Scalar>
Vec3<Scalar> immersion_integrand(const GaussData<Scalar>& data, const Complex<Scalar>& z,
                                 const Complex<Scalar>& direction)
{
    if (data.is_exponential() && data.phi_kind == PhiKind::dz) {
        const auto d = differential_from_exponent<Scalar>(data.h(z));
        return d.dx * direction.real() + d.dy * direction.imag();
    }
    const Complex<Scalar> g = data.gauss_map(z);
    const Complex<Scalar> ginv = Scalar(1) / g;
    const Complex<Scalar> weight = data.phi_coefficient(z) * direction;
    const Complex<Scalar> i(0, 1);
    return Vec3<Scalar>((Scalar(0.5) * (ginv - g) * weight).real(),
                        (Scalar(0.5) * i * (ginv + g) * weight).real(), weight.real());
}

/// F(path.back()) relative to F(path.front()) = F(z0) = 0.
template <typename Scalar>
Vec3<Scalar> integrate_path(const GaussData<Scalar>& data, const PolyPath<Scalar>& path, Scalar tol,
                            const QuadratureOptions& options = {})
{
    const auto& vs = path.vertices();
    for (const auto& v : vs) {
        if (!data.domain.contains(v)) {
            throw DomainViolation("path vertex outside " + data.domain.name);
        }
    }
    Vec3<Scalar> total = Vec3<Scalar>::Zero();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Complex<Scalar> direction = (vs[i + 1] - vs[i]) / std::abs(vs[i + 1] - vs[i]);
        auto field = [&](const Complex<Scalar>& z) -> Vec3<Scalar> {
            if (!data.domain.contains(z)) {
                throw DomainViolation("quadrature node outside " + data.domain.name);
            }
            return immersion_integrand(data, z, direction);
        };
        total += integrate_segment<Scalar>(field, vs[i], vs[i + 1], tol, options);
    }
    return total;
}

template <typename Scalar>
Vec3<Scalar> immerse(const GaussData<Scalar>& data, const PolyPath<Scalar>& path, Scalar tol,
                     const QuadratureOptions& options = {})
{
    if (path.front() != data.z0) {
        throw EndpointMismatch("path must start at the base point");
    }
    return integrate_path(data, path, tol, options);
}

template <typename Scalar>
Scalar path_independence_residual(const GaussData<Scalar>& data, const PolyPath<Scalar>& first,
                                  const PolyPath<Scalar>& second, Scalar tol)
{
    if (first.front() != second.front() || first.back() != second.back()) {
        throw EndpointMismatch("paths do not share endpoints");
    }
    return (integrate_path(data, first, tol) - integrate_path(data, second, tol)).norm();
}

/// Evaluated immersion point with its first- and second-order geometry.
template <typename Scalar>
struct SurfaceSample {
    Complex<Scalar> param;
    Vec3<Scalar> position;
    Vec3<Scalar> normal;
    Scalar gauss_curvature;
    Scalar second_fundamental_norm_sq;
    Complex<Scalar> exponent;  // h = u + iv with g = exp(ih)
};

/// Attach normal, curvature and exponent at `z` to an already computed position.
template <typename Scalar>
SurfaceSample<Scalar> make_sample(const GaussData<Scalar>& data, const Complex<Scalar>& z,
                                  const Vec3<Scalar>& position)
{
    const Complex<Scalar> g = data.gauss_map(z);
    const Scalar k = gauss_curvature<Scalar>(g, data.gauss_map_derivative(z), std::abs(data.phi_coefficient(z)));
    return {z, position, unit_normal<Scalar>(g), k, Scalar(-2) * k, data.exponent(z)};
}

}  // namespace minlam
