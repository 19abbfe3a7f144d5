#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mmcf/curve.hpp"
#include "mmcf/grim_reaper.hpp"
#include "mmcf/spline.hpp"

namespace mmcf {

using Window = std::pair<double, double>;

// Measurement windows excluding the junction neighborhood: [0, 0.21] for the
// symmetric half-domain runs, [0, beta-0.04] u [beta+0.04, 0.5] for full-width
// runs.
inline std::vector<Window> error_windows(const GrimReaperConfig& cfg, bool full_domain) {
    if (!full_domain) return {{0.0, 0.21}};
    return {{0.0, cfg.beta - 0.04}, {cfg.beta + 0.04, 0.5}};
}

template <typename F>
double simpson(F&& f, double a, double b, std::size_t panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    double s = f(a) + f(b);
    for (std::size_t k = 1; k < panels; ++k)
        s += f(a + h * static_cast<double>(k)) * (k % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Relative error of the estimated interface against the exact profile at time
// t: the L1 distance of the graphs over the windows divided by the L1 size of
// the exact displacement, both by composite Simpson quadrature.
inline double relative_error(const ParamCurve& estimate, const GrimReaperConfig& cfg, double t,
                             const std::vector<Window>& windows) {
    if (!estimate.frame.is_identity())
        throw std::invalid_argument("relative_error: estimate must be a graph in world coordinates");
    const CubicSpline sp(estimate.xs, estimate.ys, true);
    for (const auto& w : windows)
        if (w.first < sp.x_min() - 1e-9 || w.second > sp.x_max() + 1e-9)
            throw std::invalid_argument("relative_error: estimate does not cover the window");

    const std::size_t n = estimate.size();
    double num = 0.0, den = 0.0;
    for (const auto& w : windows) {
        const double frac = (w.second - w.first) / 0.5;
        std::size_t panels = static_cast<std::size_t>(4.0 * static_cast<double>(n) * frac) + 64;
        int hint = -1;
        num += simpson(
            [&](double x) { return std::abs(sp.eval_hint(x, 0, hint) - cfg.f(x, t)); }, w.first,
            w.second, panels);
        den += simpson([&](double x) { return std::abs(cfg.f(x, t) - cfg.f(x, 0.0)); }, w.first,
                       w.second, panels);
    }
    if (den == 0.0) return 0.0; // t = 0: no displacement, estimate must match exactly
    return num / den;
}

// Total interfacial energy sum sigma * length (polygonal lengths).
inline double interface_energy(const std::vector<std::pair<ParamCurve, double>>& curves) {
    double e = 0.0;
    for (const auto& [c, s] : curves) e += s * total_length(c);
    return e;
}

} // namespace mmcf
