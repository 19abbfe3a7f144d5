#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmcf/curve.hpp"
#include "mmcf/geometry.hpp"
#include "mmcf/tensions.hpp"

namespace mmcf {

// Exact translating three-phase solutions on [0,1/2] x [-1/2,1]:
//   Sigma_1 = { y >= f(x,t) },  Sigma_2 = { x <= beta, y <= f },
//   Sigma_3 = { x >= beta, y <= f },
// with f built from log-cos pieces meeting at the junction column x = beta
// and translating downward at constant speed.
struct GrimReaperConfig {
    std::string name;
    std::array<double, 3> angles_deg{}; // at (Sigma_1, Sigma_2, Sigma_3)
    std::array<double, 3> sigma{};      // per-phase additive tensions
    std::array<double, 3> mu{};         // per-phase mobilities
    double beta = 0.25;
    double lam1 = 0.0, lam2 = 0.0; // frequencies of the two pieces
    double amp2 = 1.0;             // amplitude inside the right piece's log
    double speed = 0.0;            // downward translation speed
    bool symmetric = true;
    double T_final = 18.0 / 512.0;

    double f(double x, double t) const {
        const double base = x <= beta ? std::log(std::cos(lam1 * x)) / lam1
                                      : std::log(amp2 * std::cos(lam2 * (0.5 - x))) / lam2;
        return base - speed * t;
    }
    // df/dx (time independent).
    double fx(double x) const {
        return x <= beta ? -std::tan(lam1 * x) : std::tan(lam2 * (0.5 - x));
    }

    double sigma_ij(std::size_t i, std::size_t j) const {
        return i == j ? 0.0 : 0.5 * (sigma[i] + sigma[j]);
    }
    double mubar(std::size_t i) const { return mu[i] * sigma[i]; }

    SurfaceTensionSpec tensions() const {
        return SurfaceTensionSpec::additive({sigma[0], sigma[1], sigma[2]},
                                            {mu[0], mu[1], mu[2]});
    }
};

namespace gr {

inline GrimReaperConfig config_120() {
    GrimReaperConfig c;
    c.name = "gr120";
    c.angles_deg = {120.0, 120.0, 120.0};
    c.sigma = {1.0, 1.0, 1.0};
    c.mu = {1.0, 1.0, 1.0};
    c.beta = 0.25;
    c.lam1 = c.lam2 = 2.0 * pi / 3.0;
    c.amp2 = 1.0;
    c.speed = 2.0 * pi / 3.0;
    c.symmetric = true;
    return c;
}

inline GrimReaperConfig config_90() {
    const double r2 = std::sqrt(2.0);
    GrimReaperConfig c;
    c.name = "gr90";
    c.angles_deg = {90.0, 135.0, 135.0};
    c.sigma = {2.0 - r2, r2, r2};
    c.mu = {1.0, 1.0, 1.0};
    c.beta = 0.25;
    c.lam1 = c.lam2 = pi;
    c.amp2 = 1.0;
    c.speed = pi;
    c.symmetric = true;
    return c;
}

// (75, 135, 150) with unit mobilities. The per-phase tensions are assigned so
// that sigma_12 = 1/2, sigma_13 = sqrt(2)/2, sigma_23 = (sqrt(2)+sqrt(6))/4,
// matching both the Herring condition and the translation speed of the
// printed profile.
inline GrimReaperConfig config_75() {
    const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
    GrimReaperConfig c;
    c.name = "gr75";
    c.angles_deg = {75.0, 135.0, 150.0};
    c.sigma = {0.25 * (2.0 + r2 - r6), 0.25 * (2.0 - r2 + r6), 0.25 * (-2.0 + 3.0 * r2 + r6)};
    c.mu = {1.0, 1.0, 1.0};
    c.beta = (3.0 / 46.0) * (4.0 * r2 - 3.0);
    c.lam1 = (pi / 6.0) * (3.0 + 4.0 * r2);
    c.lam2 = (pi / 12.0) * (3.0 * r2 + 8.0);
    c.amp2 = std::pow(2.0, 1.0 - r2 / 4.0);
    c.speed = (pi / 12.0) * (3.0 + 4.0 * r2);
    c.symmetric = false;
    return c;
}

// (75, 135, 150) with mobilities mu_i = 1/sigma_i, i.e. unit reduced
// mobilities, which realizes mu_ij = 1/sigma_ij.
inline GrimReaperConfig config_75_mobility() {
    GrimReaperConfig c = config_75();
    c.name = "gr75mob";
    c.mu = {1.0 / c.sigma[0], 1.0 / c.sigma[1], 1.0 / c.sigma[2]};
    c.beta = 3.0 / 14.0;
    c.lam1 = c.lam2 = 7.0 * pi / 6.0;
    c.amp2 = std::sqrt(2.0);
    c.speed = 7.0 * pi / 6.0;
    return c;
}

} // namespace gr

inline GrimReaperConfig grim_reaper_config(const std::string& name) {
    if (name == "gr120") return gr::config_120();
    if (name == "gr90") return gr::config_90();
    if (name == "gr75") return gr::config_75();
    if (name == "gr75mob") return gr::config_75_mobility();
    throw std::invalid_argument("unknown Grim Reaper config: " + name);
}

// Abscissae in [a,b] whose samples of f(.,0) have all chords equal; endpoints
// included, n points. The common chord is found by a secant iteration on the
// marching endpoint.
template <typename F>
std::vector<double> equal_chord_abscissae(F&& f, double a, double b, std::size_t n) {
    if (n < 2 || !(a < b)) throw std::invalid_argument("equal_chord_abscissae: bad arguments");
    auto march = [&](double c) {
        // Advance n-1 chords of length c from a; returns final x (may pass b).
        double x = a, y = f(a);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            double lo = x, hi = x + c;
            double fy = f(hi);
            double g = (hi - x) * (hi - x) + (fy - y) * (fy - y) - c * c;
            int guard = 0;
            while (g < 0.0 && guard++ < 60) {
                hi += c;
                fy = f(hi);
                g = (hi - x) * (hi - x) + (fy - y) * (fy - y) - c * c;
            }
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                const double gm = (mid - x) * (mid - x) + (fm - y) * (fm - y) - c * c;
                (gm < 0.0 ? lo : hi) = mid;
                if (hi - lo < 1e-15 * (1.0 + std::abs(hi))) break;
            }
            x = 0.5 * (lo + hi);
            y = f(x);
        }
        return x;
    };

    // Bracket the chord length via the polyline length of a fine sampling.
    double L = 0.0;
    {
        const std::size_t m = 64 * n;
        double px = a, py = f(a);
        for (std::size_t k = 1; k <= m; ++k) {
            const double x = a + (b - a) * static_cast<double>(k) / static_cast<double>(m);
            const double y = f(x);
            L += std::hypot(x - px, y - py);
            px = x;
            py = y;
        }
    }
    double c0 = (b - a) / static_cast<double>(n - 1);
    double c1 = L / static_cast<double>(n - 1);
    double g0 = march(c0) - b;
    double g1 = march(c1) - b;
    for (int it = 0; it < 80 && std::abs(g1) > 1e-14; ++it) {
        if (g1 == g0) break;
        const double c2 = c1 - g1 * (c1 - c0) / (g1 - g0);
        c0 = c1; g0 = g1;
        c1 = std::max(c2, 0.5 * (b - a) / static_cast<double>(n - 1));
        g1 = march(c1) - b;
    }

    std::vector<double> xs(n);
    xs[0] = a;
    double x = a, y = f(a);
    const double c = c1;
    for (std::size_t i = 1; i < n; ++i) {
        double lo = x, hi = x + 1.5 * c;
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            const double gm = (mid - x) * (mid - x) + (fm - y) * (fm - y) - c * c;
            (gm < 0.0 ? lo : hi) = mid;
            if (hi - lo < 1e-15 * (1.0 + std::abs(hi))) break;
        }
        x = 0.5 * (lo + hi);
        y = f(x);
        xs[i] = x;
    }
    xs[n - 1] = b; // marching lands within round-off; pin exactly
    return xs;
}

// Samples the exact interface at time t on [a,b] with abscissae chosen by
// equal chords of the t=0 profile. Defaults to the symmetric half domain.
inline ParamCurve grim_reaper_curve(const GrimReaperConfig& cfg, double t, std::size_t n,
                                    double a = 0.0, double b = -1.0) {
    if (n < 4) throw std::invalid_argument("grim_reaper_curve: need n >= 4");
    if (b < 0.0) b = cfg.symmetric ? 0.25 : 0.5;
    ParamCurve c;
    if (!cfg.symmetric && a < cfg.beta && cfg.beta < b) {
        // Force the junction column as a knot, splitting points by length.
        auto f0 = [&](double x) { return cfg.f(x, 0.0); };
        auto piece_len = [&](double lo, double hi) {
            double L = 0.0, px = lo, py = f0(lo);
            for (int k = 1; k <= 512; ++k) {
                const double x = lo + (hi - lo) * k / 512.0;
                const double y = f0(x);
                L += std::hypot(x - px, y - py);
                px = x; py = y;
            }
            return L;
        };
        const double Ll = piece_len(a, cfg.beta), Lr = piece_len(cfg.beta, b);
        std::size_t nl = static_cast<std::size_t>(
            std::lround((static_cast<double>(n) - 1.0) * Ll / (Ll + Lr)));
        nl = std::max<std::size_t>(3, std::min(nl, n - 4));
        auto left = equal_chord_abscissae(f0, a, cfg.beta, nl + 1);
        auto right = equal_chord_abscissae(f0, cfg.beta, b, n - nl);
        c.xs = std::move(left);
        c.xs.insert(c.xs.end(), right.begin() + 1, right.end());
    } else {
        c.xs = equal_chord_abscissae([&](double x) { return cfg.f(x, 0.0); }, a, b, n);
    }
    c.ys.resize(c.xs.size());
    for (std::size_t i = 0; i < c.xs.size(); ++i) c.ys[i] = cfg.f(c.xs[i], t);
    c.inside = Side::Above; // Sigma_1 side
    c.validate();
    return c;
}

} // namespace mmcf
