#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mmcf/geometry.hpp"
#include "mmcf/spline.hpp"

namespace mmcf {

enum class Side { Above, Below };

// An interface stored as a graph y(x) in its own rigid frame. `inside`
// records on which side of the graph (in frame coordinates) the enclosed
// phase lies; signed distances are positive there.
struct ParamCurve {
    std::vector<double> xs;
    std::vector<double> ys;
    Side inside = Side::Above;
    Frame frame{};

    std::size_t size() const { return xs.size(); }

    Vec2 point_world(std::size_t i) const { return frame.to_world({xs[i], ys[i]}); }

    std::vector<Vec2> world_points() const {
        std::vector<Vec2> p(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) p[i] = frame.to_world({xs[i], ys[i]});
        return p;
    }

    void validate() const {
        if (xs.size() != ys.size() || xs.size() < 4)
            throw std::invalid_argument("ParamCurve: need >= 4 samples with matching sizes");
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            if (!(xs[i] < xs[i + 1]))
                throw std::invalid_argument("ParamCurve: abscissae must be strictly increasing");
    }

    // Inward unit normal (world coordinates) estimated at sample i from the
    // neighboring chord.
    Vec2 inward_normal_world(std::size_t i) const {
        const std::size_t n = xs.size();
        const std::size_t a = i == 0 ? 0 : i - 1;
        const std::size_t b = i + 1 < n ? i + 1 : n - 1;
        Vec2 t{xs[b] - xs[a], ys[b] - ys[a]};
        Vec2 nloc = t.perp().normalized(); // points "above" the graph
        if (inside == Side::Below) nloc = nloc * -1.0;
        return frame.dir_to_world(nloc);
    }
};

inline double polyline_length(const std::vector<Vec2>& pts) {
    double L = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) L += dist(pts[i], pts[i + 1]);
    return L;
}

// Polygonal length of the sampled interface.
inline double total_length(const ParamCurve& c) {
    double L = 0.0;
    for (std::size_t i = 0; i + 1 < c.xs.size(); ++i) {
        const double dx = c.xs[i + 1] - c.xs[i];
        const double dy = c.ys[i + 1] - c.ys[i];
        L += std::sqrt(dx * dx + dy * dy);
    }
    return L;
}

namespace detail {

// Checks whether rotating the polyline by -angle yields a single-valued
// graph; fills the curve samples (sorted by frame x) on success.
inline bool try_frame(const std::vector<Vec2>& pts, double angle, ParamCurve& out) {
    Frame f{angle, {0.0, 0.0}};
    const std::size_t n = pts.size();
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 q = f.to_local(pts[i]);
        u[i] = q.x;
        v[i] = q.y;
    }
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(u[i] < u[i + 1])) inc = false;
        if (!(u[i] > u[i + 1])) dec = false;
    }
    if (!inc && !dec) return false;
    if (dec) {
        std::reverse(u.begin(), u.end());
        std::reverse(v.begin(), v.end());
    }
    out.xs = std::move(u);
    out.ys = std::move(v);
    out.frame = f;
    return true;
}

inline double frame_max_slope(const ParamCurve& c) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < c.xs.size(); ++i)
        s = std::max(s, std::abs((c.ys[i + 1] - c.ys[i]) / (c.xs[i + 1] - c.xs[i])));
    return s;
}

} // namespace detail

// Re-expresses a simple polyline as a graph in a rotated frame. Candidate
// rotations are multiples of 15 degrees plus the endpoint chord angle; the
// identity is kept whenever the curve is already a mild graph. The inward
// normal at a reference point carries the orientation through the change of
// frame.
inline ParamCurve to_graph_frame(const std::vector<Vec2>& pts, const Vec2& inward_normal_world) {
    if (pts.size() < 4) throw std::invalid_argument("to_graph_frame: need >= 4 points");

    std::vector<double> candidates;
    candidates.push_back(0.0);
    const Vec2 chord = pts.back() - pts.front();
    if (chord.norm() > 0.0) candidates.push_back(std::atan2(chord.y, chord.x));
    for (int k = 1; k < 12; ++k) {
        candidates.push_back(deg2rad(15.0 * k));
        candidates.push_back(-deg2rad(15.0 * k));
    }

    ParamCurve best;
    double best_slope = 0.0;
    bool have = false;
    for (double a : candidates) {
        ParamCurve c;
        if (!detail::try_frame(pts, a, c)) continue;
        const double s = detail::frame_max_slope(c);
        if (a == 0.0 && s <= std::tan(deg2rad(60.0))) { // prefer identity when benign
            best = std::move(c);
            have = true;
            break;
        }
        if (!have || s < best_slope) {
            best = std::move(c);
            best_slope = s;
            have = true;
        }
    }
    if (!have)
        throw std::runtime_error("to_graph_frame: no candidate rotation yields a single-valued graph");

    const Vec2 nloc = best.frame.dir_to_local(inward_normal_world);
    best.inside = nloc.y >= 0.0 ? Side::Above : Side::Below;
    best.validate();
    return best;
}

inline ParamCurve to_graph_frame(const ParamCurve& c) {
    const std::size_t mid = c.size() / 2;
    return to_graph_frame(c.world_points(), c.inward_normal_world(mid));
}

} // namespace mmcf
