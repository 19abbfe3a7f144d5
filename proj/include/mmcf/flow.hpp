#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmcf/curve.hpp"
#include "mmcf/geometry.hpp"

namespace mmcf {

// End condition for the curve evolution, expressed with ghost points:
//   MirrorX(a): x reflects oddly about a, y evenly   (junction / wall columns)
//   MirrorY(b): y reflects oddly about b, x evenly   (bottom wall)
//   Clamp:      endpoint pinned
struct FlowBc {
    enum class Kind { MirrorX, MirrorY, Clamp };
    Kind kind = Kind::Clamp;
    double value = 0.0;

    static FlowBc mirror_x(double a) { return {Kind::MirrorX, a}; }
    static FlowBc mirror_y(double b) { return {Kind::MirrorY, b}; }
    static FlowBc clamp() { return {Kind::Clamp, 0.0}; }
};

struct FlowParams {
    double duration = 0.0;     // total evolution time (sigma * mu * dt)
    double dt_sub = 0.0;       // substep size for the implicit scheme
    double newton_tol = 1e-12; // stop when |sum h^(l) - sum h^(l+1)| < tol
    int max_newton = 50;

    std::int64_t substeps() const {
        if (!(dt_sub > 0.0) || !(duration > 0.0))
            throw std::invalid_argument("FlowParams: duration and dt_sub must be positive");
        const double k = duration / dt_sub;
        const std::int64_t K = static_cast<std::int64_t>(std::llround(k));
        if (K < 1 || std::abs(k - static_cast<double>(K)) > 1e-6 * k)
            throw std::invalid_argument("FlowParams: duration must be an integer multiple of dt_sub");
        return K;
    }
};

namespace detail {

inline Vec2 ghost_point(const FlowBc& bc, const Vec2& inner) {
    switch (bc.kind) {
        case FlowBc::Kind::MirrorX: return {2.0 * bc.value - inner.x, inner.y};
        case FlowBc::Kind::MirrorY: return {inner.x, 2.0 * bc.value - inner.y};
        default: return inner;
    }
}

struct FlowWorkspace {
    std::vector<double> x, y, px, py;            // iterate and previous substep
    std::vector<double> hhalf, inv_hhalf;        // chords |g_i - g_{i-1}| with ghosts
    std::vector<double> cl, cr, bb;              // row coefficients
    std::vector<double> diag, rhs, upper;        // Thomas scratch
    std::vector<double> nx, ny;
};

// The ghost unknown at a mirror end equals (const) +/- the interior neighbor.
// Returns the neighbor's extra coefficient and adds the constant to rhs.
inline double fold_ghost(const FlowBc& bc, bool is_x, double cg, double& rhs) {
    const bool reflects = (bc.kind == FlowBc::Kind::MirrorX) == is_x;
    if (reflects) {
        rhs += 2.0 * bc.value * cg;
        return +cg;
    }
    return -cg;
}

// Frozen-coefficient tridiagonal solve for one coordinate.
inline void thomas_component(FlowWorkspace& w, std::size_t n, bool is_x, const FlowBc& bl,
                             const FlowBc& br, const std::vector<double>& prev,
                             std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
        w.diag[i] = w.bb[i];
        w.rhs[i] = prev[i];
        w.upper[i] = -w.cr[i];
    }
    double lower_last = -w.cl[n - 1];

    if (bl.kind == FlowBc::Kind::Clamp) {
        w.diag[0] = 1.0;
        w.upper[0] = 0.0;
        w.rhs[0] = prev[0];
    } else {
        w.upper[0] = -w.cr[0] + fold_ghost(bl, is_x, w.cl[0], w.rhs[0]);
    }
    if (br.kind == FlowBc::Kind::Clamp) {
        w.diag[n - 1] = 1.0;
        lower_last = 0.0;
        w.rhs[n - 1] = prev[n - 1];
    } else {
        lower_last = -w.cl[n - 1] + fold_ghost(br, is_x, w.cr[n - 1], w.rhs[n - 1]);
    }

    for (std::size_t i = 1; i < n; ++i) {
        const double a = (i == n - 1) ? lower_last : -w.cl[i];
        const double m = a / w.diag[i - 1];
        w.diag[i] -= m * w.upper[i - 1];
        w.rhs[i] -= m * w.rhs[i - 1];
    }
    out[n - 1] = w.rhs[n - 1] / w.diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        out[i] = (w.rhs[i] - w.upper[i] * out[i + 1]) / w.diag[i];
}

} // namespace detail

// Evolves a polyline by curvature motion with the fully implicit scheme
//   -dt/(h_i h_{i-1/2}) g_{i-1} + [1 + dt/h_i (1/h_{i-1/2} + 1/h_{i+1/2})] g_i
//   - dt/(h_i h_{i+1/2}) g_{i+1} = g_i^k,
// h_i = |g_{i-1} - g_{i+1}|/2, h_{i+1/2} = |g_i - g_{i+1}|. Each substep
// re-solves with refreshed coefficients until the total length h-sum changes
// by less than newton_tol between iterates.
inline std::vector<Vec2> evolve_polyline(std::vector<Vec2> pts, const FlowParams& params,
                                         const FlowBc& bl, const FlowBc& br) {
    const std::size_t n = pts.size();
    if (n < 4) throw std::invalid_argument("evolve_polyline: need >= 4 points");
    const std::int64_t K = params.substeps();
    const double dt = params.dt_sub;

    detail::FlowWorkspace w;
    w.x.resize(n); w.y.resize(n); w.px.resize(n); w.py.resize(n);
    w.hhalf.resize(n + 1); w.inv_hhalf.resize(n + 1);
    w.cl.resize(n); w.cr.resize(n); w.bb.resize(n);
    w.diag.resize(n); w.rhs.resize(n); w.upper.resize(n);
    w.nx.resize(n); w.ny.resize(n);
    for (std::size_t i = 0; i < n; ++i) { w.x[i] = pts[i].x; w.y[i] = pts[i].y; }

    auto chord_pass = [&](const std::vector<double>& X, const std::vector<double>& Y) -> double {
        const Vec2 gl = detail::ghost_point(bl, {X[1], Y[1]});
        const Vec2 gr = detail::ghost_point(br, {X[n - 2], Y[n - 2]});
        double dx = X[0] - gl.x, dy = Y[0] - gl.y;
        w.hhalf[0] = std::sqrt(dx * dx + dy * dy);
        for (std::size_t i = 1; i < n; ++i) {
            dx = X[i] - X[i - 1];
            dy = Y[i] - Y[i - 1];
            w.hhalf[i] = std::sqrt(dx * dx + dy * dy);
        }
        dx = gr.x - X[n - 1];
        dy = gr.y - Y[n - 1];
        w.hhalf[n] = std::sqrt(dx * dx + dy * dy);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += 0.5 * (w.hhalf[i] + w.hhalf[i + 1]);
        return sum;
    };

    auto build_coeffs = [&]() {
        for (std::size_t i = 0; i <= n; ++i) {
            if (w.hhalf[i] < 1e-14)
                throw std::runtime_error("evolve_polyline: coincident points (h < 1e-14) at chord " +
                                         std::to_string(i));
            w.inv_hhalf[i] = 1.0 / w.hhalf[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double inv_hi = 2.0 / (w.hhalf[i] + w.hhalf[i + 1]);
            w.cl[i] = dt * inv_hi * w.inv_hhalf[i];
            w.cr[i] = dt * inv_hi * w.inv_hhalf[i + 1];
            w.bb[i] = 1.0 + w.cl[i] + w.cr[i];
        }
    };

    double sum_h = chord_pass(w.x, w.y);
    for (std::int64_t k = 0; k < K; ++k) {
        w.px = w.x;
        w.py = w.y;
        bool done = false;
        for (int l = 0; l < params.max_newton; ++l) {
            build_coeffs(); // frozen at iterate l
            detail::thomas_component(w, n, true, bl, br, w.px, w.nx);
            detail::thomas_component(w, n, false, bl, br, w.py, w.ny);
            std::swap(w.x, w.nx);
            std::swap(w.y, w.ny);
            const double sum_new = chord_pass(w.x, w.y);
            const double delta = std::abs(sum_new - sum_h);
            sum_h = sum_new;
            if (delta < params.newton_tol) { done = true; break; }
        }
        if (!done)
            throw std::runtime_error("evolve_polyline: length iteration stagnated (max_newton reached)");
    }

    for (std::size_t i = 0; i < n; ++i) pts[i] = {w.x[i], w.y[i]};
    return pts;
}

// Curve-level wrapper: evolves the world-coordinate samples and re-expresses
// the result as a graph, carrying the inside orientation through.
inline ParamCurve evolve_curve(const ParamCurve& curve, const FlowParams& params, const FlowBc& bl,
                               const FlowBc& br) {
    curve.validate();
    const Vec2 normal = curve.inward_normal_world(curve.size() / 2);
    auto pts = evolve_polyline(curve.world_points(), params, bl, br);
    return to_graph_frame(pts, normal);
}

} // namespace mmcf
