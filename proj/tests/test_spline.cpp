#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "mmcf/grim_reaper.hpp"
#include "mmcf/spline.hpp"

using namespace mmcf;

namespace {
std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}
} // namespace

TEST_CASE("cubic data is reproduced exactly") {
    auto xs = linspace(-1.0, 1.0, 8);
    std::vector<double> ys(8);
    for (std::size_t i = 0; i < 8; ++i) ys[i] = xs[i] * xs[i] * xs[i];
    CubicSpline s(xs, ys);
    for (std::size_t i = 0; i + 1 < 8; ++i) {
        const double xm = 0.5 * (xs[i] + xs[i + 1]);
        REQUIRE(s.eval(xm) == Catch::Approx(xm * xm * xm).margin(1e-14));
    }
    REQUIRE(s.eval(0.5, 1) == Catch::Approx(0.75).margin(1e-13));
}

TEST_CASE("flat data gives a flat spline") {
    auto xs = linspace(0.0, 1.0, 6);
    std::vector<double> ys(6, 3.25);
    CubicSpline s(xs, ys);
    for (double x : {0.05, 0.3, 0.77, 1.0}) {
        REQUIRE(s.eval(x) == Catch::Approx(3.25).margin(1e-14));
        REQUIRE(s.eval(x, 1) == Catch::Approx(0.0).margin(1e-13));
        REQUIRE(s.eval(x, 2) == Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("interpolation error for sin(2 pi x) on 64 knots") {
    const std::size_t n = 64;
    auto xs = linspace(0.0, 1.0, n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = std::sin(2.0 * pi * xs[i]);
    CubicSpline s(xs, ys);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xm = 0.5 * (xs[i] + xs[i + 1]);
        worst = std::max(worst, std::abs(s.eval(xm) - std::sin(2.0 * pi * xm)));
    }
    REQUIRE(worst < 1e-5);
}

TEST_CASE("interpolation and smoothness invariants") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> jitter(0.2, 1.0);
    std::vector<double> xs{0.0};
    for (int i = 0; i < 20; ++i) xs.push_back(xs.back() + jitter(rng));
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = std::cos(1.7 * xs[i]) + 0.3 * xs[i];
    CubicSpline s(xs, ys);

    for (std::size_t i = 0; i < xs.size(); ++i)
        REQUIRE(s.eval(xs[i]) == Catch::Approx(ys[i]).margin(1e-13));

    // C2 continuity at interior knots.
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const double left = s.eval(std::nextafter(xs[i], xs[i - 1]), 2);
        const double right = s.eval(xs[i], 2);
        REQUIRE(left == Catch::Approx(right).margin(1e-8));
    }

    // Not-a-knot: the second derivative is piecewise linear; its slope must
    // match across the first and last interior knots.
    auto d2slope = [&](std::size_t i) {
        const double m = 0.5 * (xs[i] + xs[i + 1]);
        const double d = 0.2 * (xs[i + 1] - xs[i]);
        return (s.eval(m + d, 2) - s.eval(m - d, 2)) / (2.0 * d);
    };
    REQUIRE(d2slope(0) == Catch::Approx(d2slope(1)).margin(1e-8));
    const std::size_t last = xs.size() - 2;
    REQUIRE(d2slope(last) == Catch::Approx(d2slope(last - 1)).margin(1e-8));
}

TEST_CASE("grim reaper profile evaluation through the spline") {
    auto cfg = gr::config_120();
    const std::size_t n = 96;
    auto xs = linspace(0.0, 0.25, n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = cfg.f(xs[i], 0.0);
    CubicSpline s(xs, ys);
    const double expect = (3.0 / (2.0 * pi)) * std::log(std::cos(2.0 * pi / 3.0 * 0.1));
    REQUIRE(s.eval(0.1) == Catch::Approx(expect).margin(1e-8));
}

TEST_CASE("domain handling") {
    auto xs = linspace(0.0, 1.0, 5);
    std::vector<double> ys{0.0, 0.5, 0.2, 0.8, 1.0};
    CubicSpline s(xs, ys);
    REQUIRE_THROWS_AS(s.eval(1.5), std::domain_error);
    REQUIRE_THROWS_AS(s.eval(-0.1), std::domain_error);

    CubicSpline e(xs, ys, true);
    const double slope = e.eval(1.0, 1);
    REQUIRE(e.eval(1.25) == Catch::Approx(1.0 + 0.25 * slope).margin(1e-13));
    REQUIRE(e.eval(1.25, 2) == Catch::Approx(0.0));

    REQUIRE_THROWS_AS(CubicSpline({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(CubicSpline({0.0, 1.0, 1.0, 2.0}, {0.0, 1.0, 2.0, 3.0}),
                      std::invalid_argument);
}
