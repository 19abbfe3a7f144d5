#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mmcf/curve.hpp"
#include "mmcf/spline.hpp"

namespace mmcf {

struct DistanceResult {
    double d = 0.0;    // signed distance, positive on the inside
    double foot = 0.0; // frame x-coordinate of the closest point
};

// Signed distance from a point to a spline-interpolated graph curve.
// Newton iteration on the foot-point orthogonality condition, seeded at the
// nearest sample; golden-section search on the squared distance as fallback.
// Instances keep warm-start hints, so share one evaluator per thread.
class DistanceEvaluator {
public:
    explicit DistanceEvaluator(const ParamCurve& curve, double tol = 1e-12 * 1.25,
                               bool linear_extension = true)
        : curve_(curve), spline_(curve.xs, curve.ys, linear_extension), tol_(tol) {}

    const CubicSpline& spline() const { return spline_; }
    const ParamCurve& curve() const { return curve_; }
    double tol() const { return tol_; }

    DistanceResult eval(const Vec2& world_p) const {
        const Vec2 p = curve_.frame.to_local(world_p);
        const double foot = find_foot(p);
        double f, fp, fpp;
        int h = interval_hint_;
        spline_.eval_all(foot, h, f, fp, fpp);
        interval_hint_ = h;
        const double dx = p.x - foot, dy = p.y - f;
        const double cross = dy - fp * dx; // > 0 above the graph
        double d = std::sqrt(dx * dx + dy * dy);
        d = (cross >= 0.0 ? d : -d);
        if (curve_.inside == Side::Below) d = -d;
        return {d, foot};
    }

    double distance(const Vec2& world_p) const { return eval(world_p).d; }

    // Orthogonality residual r(x) = (x - px) + (f(x) - py) f'(x) at the foot.
    double foot_residual(const Vec2& world_p, double foot) const {
        const Vec2 p = curve_.frame.to_local(world_p);
        int h = -1;
        double f, fp, fpp;
        spline_.eval_all(foot, h, f, fp, fpp);
        return (foot - p.x) + (f - p.y) * fp;
    }

private:
    std::size_t nearest_knot(const Vec2& p) const {
        const auto& xs = curve_.xs;
        const auto& ys = curve_.ys;
        const std::size_t n = xs.size();
        auto d2 = [&](std::size_t i) {
            const double dx = xs[i] - p.x, dy = ys[i] - p.y;
            return dx * dx + dy * dy;
        };
        std::size_t i;
        if (knot_hint_ >= 0 && static_cast<std::size_t>(knot_hint_) < n) {
            i = static_cast<std::size_t>(knot_hint_);
            double di = d2(i);
            for (;;) {
                if (i + 1 < n && d2(i + 1) < di) { di = d2(++i); continue; }
                if (i > 0 && d2(i - 1) < di) { di = d2(--i); continue; }
                break;
            }
        } else {
            i = 0;
            double best = d2(0);
            for (std::size_t k = 1; k < n; ++k) {
                const double v = d2(k);
                if (v < best) { best = v; i = k; }
            }
        }
        knot_hint_ = static_cast<int>(i);
        return i;
    }

    double find_foot(const Vec2& p) const {
        const auto& xs = curve_.xs;
        const std::size_t I = nearest_knot(p);
        const double span_lo = xs.front(), span_hi = xs.back();
        const double margin_lo = xs[1] - xs[0];
        const double margin_hi = xs[xs.size() - 1] - xs[xs.size() - 2];

        double x = xs[I];
        int h = interval_hint_;
        bool ok = false;
        for (int it = 0; it < 20; ++it) {
            double f, fp, fpp;
            spline_.eval_all(x, h, f, fp, fpp);
            const double r = (x - p.x) + (f - p.y) * fp;
            if (std::abs(r) < tol_) { ok = true; break; }
            const double rp = 1.0 + fp * fp + (f - p.y) * fpp;
            if (!(rp > 0.0) || !std::isfinite(rp)) break;
            x -= r / rp;
            if (x < span_lo - margin_lo || x > span_hi + margin_hi) break;
            if (!spline_.extends()) x = std::min(std::max(x, span_lo), span_hi);
        }
        interval_hint_ = h;
        if (ok) return x;
        return golden_foot(p, I);
    }

    double golden_foot(const Vec2& p, std::size_t I) const {
        const auto& xs = curve_.xs;
        const std::size_t n = xs.size();
        double a = xs[I > 0 ? I - 1 : 0];
        double b = xs[I + 1 < n ? I + 1 : n - 1];
        if (a == b) { a = xs.front(); b = xs.back(); }
        int h = interval_hint_;
        auto D = [&](double x) {
            double f, fp, fpp;
            spline_.eval_all(x, h, f, fp, fpp);
            const double dx = x - p.x, dy = f - p.y;
            return dx * dx + dy * dy;
        };
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = D(c), fd = D(d);
        for (int it = 0; it < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
            if (fc < fd) {
                b = d; d = c; fd = fc;
                c = b - gr * (b - a);
                fc = D(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + gr * (b - a);
                fd = D(d);
            }
        }
        interval_hint_ = h;
        const double x = 0.5 * (a + b);
        // Interior minimum must satisfy the orthogonality condition; a minimum
        // pinned at the span ends is accepted as-is (nearest point is the end).
        if (x > xs.front() && x < xs.back()) {
            const double r = foot_residual(curve_.frame.to_world(p), x);
            const double scale = 1.0 + std::abs(x - p.x);
            if (std::abs(r) > 1e6 * tol_ * scale && std::abs(r) > 1e-9 * scale)
                throw std::runtime_error("DistanceEvaluator: Newton and golden-section both failed");
        }
        return x;
    }

    const ParamCurve& curve_;
    CubicSpline spline_;
    double tol_;
    mutable int knot_hint_ = -1;
    mutable int interval_hint_ = -1;
};

inline DistanceResult signed_distance(const ParamCurve& curve, const Vec2& p, double tol = 1.25e-12) {
    DistanceEvaluator ev(curve, tol);
    return ev.eval(p);
}

} // namespace mmcf
