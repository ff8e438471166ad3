#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "minlam/core/errors.hpp"
#include "minlam/core/types.hpp"

namespace minlam {

struct QuadratureOptions {
    /// Maximum number of interval subdivisions before giving up.
    std::size_t subdivision_budget = std::size_t{1} << 16;
};

namespace detail {

// Gauss-Kronrod 7/15 pair on [-1, 1]. Odd Kronrod indices are the Gauss nodes.
inline constexpr std::array<long double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};

inline constexpr std::array<long double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};

inline constexpr std::array<long double, 4> kGaussWeights = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <typename Scalar>
struct RuleResult {
    Vec3<Scalar> kronrod;
    Scalar error;
};

template <typename Scalar, typename Field>
RuleResult<Scalar> gauss_kronrod_15(Field& field, const Complex<Scalar>& origin,
                                    const Complex<Scalar>& direction, Scalar lo, Scalar hi)
{
    const Scalar center = (lo + hi) / 2;
    const Scalar half = (hi - lo) / 2;

    auto eval = [&](Scalar s) -> Vec3<Scalar> {
        const Complex<Scalar> z = origin + direction * s;
        Vec3<Scalar> value = field(z);
        if (!is_finite<Scalar>(value)) {
            throw NonFiniteField("integrand is not finite at z = (" + std::to_string(double(z.real())) +
                                 ", " + std::to_string(double(z.imag())) + ")");
        }
        return value;
    };

    const Vec3<Scalar> f_center = eval(center);
    Vec3<Scalar> kronrod = f_center * Scalar(kKronrodWeights[7]);
    Vec3<Scalar> gauss = f_center * Scalar(kGaussWeights[3]);

    for (std::size_t j = 0; j < 7; ++j) {
        const Scalar offset = half * Scalar(kKronrodNodes[j]);
        const Vec3<Scalar> pair_sum = eval(center - offset) + eval(center + offset);
        kronrod += pair_sum * Scalar(kKronrodWeights[j]);
        if (j % 2 == 1) {
            gauss += pair_sum * Scalar(kGaussWeights[j / 2]);
        }
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, (kronrod - gauss).cwiseAbs().maxCoeff()};
}

}  // namespace detail

/// Integral of a vector field along the straight segment z_start -> z_end,
/// parametrized by real arclength s in [0, |z_end - z_start|].
///
/// Intervals whose Kronrod/Gauss discrepancy exceeds their share of `tol`
/// (proportional to length) are trisected. Throws NonConvergence when the
/// budget is exhausted or an interval shrinks to rounding level, and
/// NonFiniteField when the integrand returns NaN/Inf.
template <typename Scalar, typename Field>
Vec3<Scalar> integrate_segment(Field&& field, const Complex<Scalar>& z_start,
                               const Complex<Scalar>& z_end, Scalar tol,
                               const QuadratureOptions& options = {})
{
    if (!(tol > Scalar(0))) {
        throw InvalidParameter("quadrature tolerance must be positive");
    }
    const Scalar length = std::abs(z_end - z_start);
    if (length == Scalar(0)) {
        return Vec3<Scalar>::Zero();
    }
    const Complex<Scalar> direction = (z_end - z_start) / length;
    const Scalar min_width = Scalar(64) * std::numeric_limits<Scalar>::epsilon() * length;

    struct Interval {
        Scalar lo, hi;
    };
    std::vector<Interval> pending{{Scalar(0), length}};
    Vec3<Scalar> total = Vec3<Scalar>::Zero();
    std::size_t subdivisions = 0;

    while (!pending.empty()) {
        const Interval iv = pending.back();
        pending.pop_back();
        const auto rule = detail::gauss_kronrod_15<Scalar>(field, z_start, direction, iv.lo, iv.hi);
        const Scalar width = iv.hi - iv.lo;
        if (rule.error <= tol * (width / length)) {
            total += rule.kronrod;
            continue;
        }
        if (++subdivisions > options.subdivision_budget || width / 3 < min_width) {
            throw NonConvergence("adaptive quadrature did not reach tolerance " + std::to_string(double(tol)) +
                                 " after " + std::to_string(subdivisions) + " subdivisions");
        }
        const Scalar third = width / 3;
        pending.push_back({iv.lo + 2 * third, iv.hi});
        pending.push_back({iv.lo + third, iv.lo + 2 * third});
        pending.push_back({iv.lo, iv.lo + third});
    }
    return total;
}

}  // namespace minlam
