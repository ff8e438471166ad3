#include "minlam/family/family.hpp"

#include <cmath>
#include <vector>

#include "minlam/core/errors.hpp"
#include "minlam/core/quadrature.hpp"

namespace minlam::family {

namespace {

void require_inside(FamilyParameter a, const Complexd& z)
{
    if (!DomainSpec::omega(a).contains(z)) {
        throw DomainViolation("point (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                              ") is outside Omega_a");
    }
}

Complexd h_unchecked(double a, const Complexd& z) { return std::atan(z / a) / a; }

Complexd dzh_unchecked(double a, const Complexd& z) { return 1.0 / (z * z + a * a); }

}  // namespace

Complexd eval_h(FamilyParameter a, const Complexd& z)
{
    require_inside(a, z);
    return h_unchecked(a.value(), z);
}

Complexd eval_h_by_quadrature(FamilyParameter a, const Complexd& z, double tol)
{
    const PolyPath<double> path = canonical_path(a, z);
    const auto& vs = path.vertices();
    Complexd total{};
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Complexd direction = (vs[i + 1] - vs[i]) / std::abs(vs[i + 1] - vs[i]);
        auto field = [&](const Complexd& w) {
            const Complexd value = eval_dzh(a, w) * direction;
            return Vec3d(value.real(), value.imag(), 0.0);
        };
        const Vec3d leg = integrate_segment<double>(field, vs[i], vs[i + 1], tol);
        total += Complexd(leg.x(), leg.y());
    }
    return total;
}

Complexd eval_dzh(FamilyParameter a, const Complexd& z)
{
    const double aa = a.value();
    if (z.real() == 0.0 && std::abs(z.imag()) == aa) {
        throw PoleHit("dh/dz has a pole at z = +-ia");
    }
    return dzh_unchecked(aa, z);
}

double curvature_Ka(FamilyParameter a, const Complexd& z)
{
    require_inside(a, z);
    const double aa = a.value();
    const double modulus = std::abs(z * z + aa * aa);
    const double c = std::cosh(h_unchecked(aa, z).imag());
    const double c2 = c * c;
    return -1.0 / (modulus * modulus * c2 * c2);
}

double axis_phase(FamilyParameter a, double x) { return eval_h(a, Complexd(x, 0.0)).real(); }

PolyPath<double> canonical_path(FamilyParameter a, const Complexd& z)
{
    require_inside(a, z);
    std::vector<Complexd> vertices{Complexd(0.0, 0.0)};
    if (z.real() != 0.0) {
        vertices.emplace_back(z.real(), 0.0);
    }
    if (z.imag() != 0.0) {
        vertices.push_back(z);
    }
    return PolyPath<double>(std::move(vertices));
}

GaussData<double> gauss_data(FamilyParameter a)
{
    const double aa = a.value();
    return GaussData<double>::exponential([aa](Complexd z) { return h_unchecked(aa, z); },
                                          [aa](Complexd z) { return dzh_unchecked(aa, z); }, Complexd(0.0, 0.0),
                                          DomainSpec::omega(a).as_domain());
}

Vec3d immerse_Fa(FamilyParameter a, const Complexd& z, double tol)
{
    return immerse(gauss_data(a), canonical_path(a, z), tol);
}

double vertical_normal_locus(FamilyParameter a, const Complexd& z) { return eval_h(a, z).imag(); }

}  // namespace minlam::family
