#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "minlam/core/weierstrass.hpp"

namespace minlam {

/// Runs body(i) for i in [0, count) over the available hardware threads.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename Body>
void parallel_for(std::size_t count, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Samples along the vertical line Re z = x at heights `ys` (ascending).
/// ys[anchor] has known position `anchor_position`; the others are reached by
/// integrating vertical legs outward from the anchor.
template <typename Scalar>
std::vector<SurfaceSample<Scalar>> sample_vertical_line(const GaussData<Scalar>& data, Scalar x,
                                                        const std::vector<Scalar>& ys, std::size_t anchor,
                                                        const Vec3<Scalar>& anchor_position, Scalar tol)
{
    std::vector<SurfaceSample<Scalar>> out(ys.size());
    auto at = [x](Scalar y) { return Complex<Scalar>(x, y); };
    out[anchor] = make_sample(data, at(ys[anchor]), anchor_position);

    Vec3<Scalar> pos = anchor_position;
    for (std::size_t j = anchor + 1; j < ys.size(); ++j) {
        pos += integrate_path(data, PolyPath<Scalar>({at(ys[j - 1]), at(ys[j])}), tol);
        out[j] = make_sample(data, at(ys[j]), pos);
    }
    pos = anchor_position;
    for (std::size_t j = anchor; j-- > 0;) {
        pos += integrate_path(data, PolyPath<Scalar>({at(ys[j + 1]), at(ys[j])}), tol);
        out[j] = make_sample(data, at(ys[j]), pos);
    }
    return out;
}

/// Curvilinear grid z = x + i s w(x), s in [-1, 1], over columns `xs`.
template <typename Scalar>
struct ColumnGrid {
    std::vector<Scalar> xs;
    std::size_t ns = 2;
    std::function<Scalar(Scalar)> half_width;
    /// Position assigned to the base point z0 (which must be real).
    Vec3<Scalar> base_position = Vec3<Scalar>::Zero();
};

template <typename Scalar>
std::vector<Scalar> linspace(Scalar lo, Scalar hi, std::size_t n)
{
    std::vector<Scalar> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * Scalar(i) / Scalar(n - 1);
    }
    out.back() = hi;
    return out;
}

/// Samples every grid node; result is column-major by x: index = ix * ns + is.
/// Each column costs one axis integration plus incremental vertical legs.
template <typename Scalar>
std::vector<SurfaceSample<Scalar>> sample_grid(const GaussData<Scalar>& data, const ColumnGrid<Scalar>& grid,
                                               Scalar tol)
{
    if (data.z0.imag() != Scalar(0)) {
        throw InvalidParameter("column sampling needs a base point on the real axis");
    }
    if (grid.ns < 2 || grid.xs.empty()) {
        throw InvalidParameter("grid needs at least one column and two rows");
    }
    const std::size_t ns = grid.ns;
    const std::vector<Scalar> s_values = linspace<Scalar>(-1, 1, ns);
    std::vector<SurfaceSample<Scalar>> out(grid.xs.size() * ns);

    parallel_for(grid.xs.size(), [&](std::size_t ix) {
        const Scalar x = grid.xs[ix];
        const Scalar w = grid.half_width(x);
        std::vector<Scalar> ys(ns);
        for (std::size_t j = 0; j < ns; ++j) {
            ys[j] = s_values[j] * w;
        }
        // anchor at the row closest to the axis; insert y = 0 leg through it
        const Complex<Scalar> axis_point(x, 0);
        Vec3<Scalar> axis_pos = grid.base_position;
        if (axis_point != data.z0) {
            axis_pos += integrate_path(data, PolyPath<Scalar>({data.z0, axis_point}), tol);
        }
        std::size_t anchor = 0;
        for (std::size_t j = 1; j < ns; ++j) {
            if (std::abs(ys[j]) < std::abs(ys[anchor])) {
                anchor = j;
            }
        }
        Vec3<Scalar> anchor_pos = axis_pos;
        if (ys[anchor] != Scalar(0)) {
            anchor_pos += integrate_path(data, PolyPath<Scalar>({axis_point, Complex<Scalar>(x, ys[anchor])}), tol);
        }
        auto column = sample_vertical_line(data, x, ys, anchor, anchor_pos, tol);
        std::copy(column.begin(), column.end(), out.begin() + static_cast<std::ptrdiff_t>(ix * ns));
    });
    return out;
}

}  // namespace minlam
