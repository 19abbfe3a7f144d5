#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "mmcf/error_metric.hpp"
#include "mmcf/flow.hpp"
#include "mmcf/grim_reaper.hpp"
#include "mmcf/spline.hpp"

using namespace mmcf;

namespace {

ParamCurve make_graph(std::size_t n, double a, double b, auto&& f) {
    ParamCurve c;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
        c.xs.push_back(x);
        c.ys.push_back(f(x));
    }
    return c;
}

} // namespace

TEST_CASE("total length") {
    ParamCurve two;
    two.xs = {0.0, 3.0};
    two.ys = {0.0, 4.0};
    REQUIRE(total_length(two) == Catch::Approx(5.0));

    auto seg = make_graph(100, 0.0, 1.0, [](double) { return 0.2; });
    REQUIRE(total_length(seg) == Catch::Approx(1.0).margin(1e-14));

    auto cfg = gr::config_120();
    auto c = grim_reaper_curve(cfg, 0.0, 2048);
    const double quad = simpson(
        [&](double x) {
            const double fp = cfg.fx(x);
            return std::sqrt(1.0 + fp * fp);
        },
        0.0, 0.25, 1 << 16);
    REQUIRE(total_length(c) == Catch::Approx(quad).margin(1e-6));
}

TEST_CASE("flat line is stationary") {
    auto c = make_graph(33, 0.0, 0.5, [](double) { return 0.125; });
    FlowParams p{1e-4, 1e-6};
    auto out = evolve_polyline(c.world_points(), p, FlowBc::mirror_x(0.0), FlowBc::mirror_x(0.5));
    for (std::size_t i = 0; i < out.size(); ++i) {
        REQUIRE(out[i].y == Catch::Approx(0.125).margin(1e-13));
        REQUIRE(out[i].x == Catch::Approx(c.xs[i]).margin(1e-13));
    }
}

TEST_CASE("translating soliton speed") {
    const double lam = pi;
    auto u0 = [&](double x) { return -std::log(std::cos(lam * x)) / lam; };
    auto c = make_graph(289, 0.0, 0.45, u0);
    FlowParams p{1e-3, 1e-6};
    auto out = evolve_polyline(c.world_points(), p, FlowBc::mirror_x(0.0), FlowBc::clamp());

    std::vector<double> xs(out.size()), ys(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) { xs[i] = out[i].x; ys[i] = out[i].y; }
    CubicSpline s(xs, ys);
    const double moved = lam * 1e-3;
    for (double x : {0.0, 0.04, 0.08, 0.12, 0.16, 0.2}) {
        const double dy = s.eval(x) - u0(x);
        REQUIRE(dy == Catch::Approx(moved).epsilon(0.005));
    }
    // Even extension at the wall: graph slope vanishes at x = 0.
    REQUIRE(std::abs(s.eval(0.0, 1)) < 5e-3);
}

TEST_CASE("sinusoidal perturbation decays monotonically") {
    auto c = make_graph(129, 0.0, 0.5, [](double x) { return 1e-3 * std::sin(4.0 * pi * x); });
    auto pts = c.world_points();
    double amp = 1e-3;
    for (int k = 0; k < 20; ++k) {
        FlowParams p{1e-6, 1e-6};
        pts = evolve_polyline(std::move(pts), p, FlowBc::mirror_x(0.0), FlowBc::mirror_x(0.5));
        double a = 0.0;
        for (const auto& q : pts) a = std::max(a, std::abs(q.y));
        REQUIRE(a < amp);
        amp = a;
    }
    // Agreement with a fine-substep reference run.
    auto fine = c.world_points();
    FlowParams pf{20e-6, 1e-6 / 16.0};
    fine = evolve_polyline(std::move(fine), pf, FlowBc::mirror_x(0.0), FlowBc::mirror_x(0.5));
    double diff = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) diff = std::max(diff, dist(pts[i], fine[i]));
    REQUIRE(diff < 2e-8);
}

TEST_CASE("length is non-increasing per substep") {
    auto cfg = gr::config_90();
    auto c = grim_reaper_curve(cfg, 0.0, 256);
    auto pts = c.world_points();
    double len = polyline_length(pts);
    for (int k = 0; k < 50; ++k) {
        FlowParams p{2e-6, 2e-6};
        pts = evolve_polyline(std::move(pts), p, FlowBc::mirror_x(0.0), FlowBc::mirror_x(0.25));
        const double l2 = polyline_length(pts);
        REQUIRE(l2 <= len * (1.0 + 1e-12));
        len = l2;
    }
}

TEST_CASE("first order in the substep size") {
    auto cfg = gr::config_120();
    auto c = grim_reaper_curve(cfg, 0.0, 128);
    const double T = 4e-4;
    auto run = [&](double dt) {
        FlowParams p{T, dt};
        return evolve_polyline(c.world_points(), p, FlowBc::mirror_x(0.0), FlowBc::mirror_x(0.25));
    };
    auto ref = run(T / 512.0);
    auto sup = [&](const std::vector<Vec2>& a) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, dist(a[i], ref[i]));
        return m;
    };
    const double e1 = sup(run(T / 8.0));
    const double e2 = sup(run(T / 16.0));
    REQUIRE(e1 / e2 == Catch::Approx(2.0).epsilon(0.35));
}

TEST_CASE("parameter validation and degeneracy guards") {
    REQUIRE_THROWS_AS((FlowParams{1e-3, 3e-4}.substeps()), std::invalid_argument);
    REQUIRE(FlowParams{1e-3, 1e-4}.substeps() == 10);

    std::vector<Vec2> bad{{0.0, 0.0}, {0.1, 0.0}, {0.1, 0.0}, {0.2, 0.0}};
    FlowParams p{1e-6, 1e-6};
    REQUIRE_THROWS_AS(evolve_polyline(bad, p, FlowBc::clamp(), FlowBc::clamp()),
                      std::runtime_error);
}

TEST_CASE("evolve_curve carries frame and orientation") {
    auto cfg = gr::config_120();
    auto c = grim_reaper_curve(cfg, 0.0, 256);
    FlowParams p{1e-4, 1e-6};
    auto out = evolve_curve(c, p, FlowBc::mirror_x(0.0), FlowBc::mirror_x(0.25));
    REQUIRE(out.inside == Side::Above);
    REQUIRE(out.frame.angle == 0.0);
    // Interior points moved down by roughly speed * duration.
    CubicSpline s(out.xs, out.ys, true);
    const double dy = s.eval(0.1) - cfg.f(0.1, 0.0);
    REQUIRE(dy == Catch::Approx(-cfg.speed * 1e-4).epsilon(0.05));
}
