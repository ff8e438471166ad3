#pragma once

#include <span>
#include <vector>

#include "minlam/core/weierstrass.hpp"
#include "minlam/family/domain.hpp"

namespace minlam::family {

/// Horizontal slice {x3 = x} of F_a, i.e. the image of the segment Re z = x.
struct SliceCurve {
    FamilyParameter a;
    double x;
    std::vector<SurfaceSample<double>> samples;  // ascending y, middle sample at y = 0
    Vec2d axis_direction;                        // (sin u_a(x,0), -cos u_a(x,0))

    const SurfaceSample<double>& middle() const { return samples[samples.size() / 2]; }
};

/// Samples the slice uniformly in y over [-y_{x,a}, y_{x,a}]; n_samples must be odd and >= 3.
SliceCurve slice(FamilyParameter a, double x, int n_samples, double tol);

/// Graph-over-a-line evidence for one slice.
struct SliceGraphCertificate {
    double max_phase_deviation;  // max_y |u_a(x,y) - u_a(x,0)|
    double phase_bound;          // |x| / (2 sqrt(x^2 + a^2))
    double min_cos_phase;        // min_y cos(u_a(x,y) - u_a(x,0))
    bool projection_monotone;    // <gamma(y) - gamma(0), gamma'(0)> strictly increasing in y

    bool valid(double slack = 1e-10) const
    {
        return max_phase_deviation <= phase_bound + slack && min_cos_phase > 0.5 && projection_monotone;
    }
};

SliceGraphCertificate certify_slice(const SliceCurve& curve);

/// Endpoint separation of a slice from its axis point.
struct SeparationCertificate {
    double a;
    double x;
    double measured_separation;
    double lower_bound;

    bool valid() const { return lower_bound > 0.0 && measured_separation > lower_bound; }
};

/// (x^2 + a^2)^{3/4} / 16 * exp((x^2 + a^2)^{-1/4} / 11).
double separation_lower_bound(double a, double x);

SeparationCertificate separation(FamilyParameter a, double x, double tol);

/// Smallest measured separation over the grid.
double estimate_r0(std::span<const FamilyParameter> a_list, std::span<const double> x_grid, double tol);

/// Default grid used by the certificate suite.
struct AcceptanceGrid {
    static std::vector<FamilyParameter> a_values();
    static std::vector<double> x_values();
    static constexpr int slice_samples = 41;
};

}  // namespace minlam::family
