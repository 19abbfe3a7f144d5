#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mmcf/geometry.hpp"

namespace mmcf {

// Herring condition at a triple junction: sin(t1)/s23 = sin(t2)/s13 = sin(t3)/s12
// with t1 + t2 + t3 = 360 degrees. Solved by damped Newton in (t1, t2) with
// analytic Jacobian, seeded at (120, 120). Angles returned in degrees.
inline std::array<double, 3> herring_angles(double s12, double s13, double s23) {
    if (!(s12 > 0.0 && s13 > 0.0 && s23 > 0.0))
        throw std::invalid_argument("herring_angles: tensions must be positive");
    if (!(s12 + s13 > s23 && s12 + s23 > s13 && s13 + s23 > s12))
        throw std::invalid_argument("herring_angles: strict triangle inequality violated");

    double t1 = deg2rad(120.0), t2 = deg2rad(120.0);
    auto residual = [&](double a, double b, double& r1, double& r2) {
        const double s3 = -std::sin(a + b); // sin(t3), t3 = 2 pi - a - b
        r1 = std::sin(a) * s13 - std::sin(b) * s23;
        r2 = std::sin(b) * s12 - s3 * s13;
    };
    double r1, r2;
    residual(t1, t2, r1, r2);
    double rn = std::abs(r1) + std::abs(r2);
    for (int it = 0; it < 100 && rn >= 1e-12; ++it) {
        const double j11 = std::cos(t1) * s13;
        const double j12 = -std::cos(t2) * s23;
        const double j21 = std::cos(t1 + t2) * s13;
        const double j22 = std::cos(t2) * s12 + std::cos(t1 + t2) * s13;
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0) throw std::runtime_error("herring_angles: singular Jacobian");
        double d1 = (-r1 * j22 + r2 * j12) / det;
        double d2 = (-j11 * r2 + j21 * r1) / det;
        double step = 1.0;
        for (int bt = 0; bt < 40; ++bt) {
            const double a = t1 + step * d1, b = t2 + step * d2;
            if (a > 0.0 && b > 0.0 && a + b < 2.0 * pi && a < pi && b < pi) {
                double q1, q2;
                residual(a, b, q1, q2);
                const double qn = std::abs(q1) + std::abs(q2);
                if (qn < rn) {
                    t1 = a; t2 = b; r1 = q1; r2 = q2; rn = qn;
                    break;
                }
            }
            step *= 0.5;
            if (bt == 39) throw std::runtime_error("herring_angles: Newton failed to make progress");
        }
    }
    if (rn >= 1e-12) throw std::runtime_error("herring_angles: residual did not converge");
    return {rad2deg(t1), rad2deg(t2), rad2deg(360.0 * pi / 180.0 - t1 - t2)};
}

// sigma_ij = (sigma_i + sigma_j)/2.
inline std::vector<std::vector<double>> additive_tensions(const std::vector<double>& s) {
    const std::size_t n = s.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i] < 0.0) throw std::invalid_argument("additive_tensions: negative tension");
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = 0.5 * (s[i] + s[j]);
    }
    return m;
}

// Mobility induced at the interface between phases with per-phase (mu, sigma).
inline double interface_mobility(double mu_i, double sigma_i, double mu_j, double sigma_j,
                                 double sigma_ij) {
    if (!(sigma_ij > 0.0)) throw std::invalid_argument("interface_mobility: sigma_ij must be positive");
    return (mu_i * sigma_i + mu_j * sigma_j) / (2.0 * sigma_ij);
}

// Surface tensions of a phase network, either in additive per-phase form
// (which induces sigma_ij by averaging) or as a full symmetric matrix with an
// explicit list of reduced mobilities.
class SurfaceTensionSpec {
public:
    static SurfaceTensionSpec additive(std::vector<double> sigma, std::vector<double> mu = {}) {
        SurfaceTensionSpec s;
        s.additive_ = true;
        s.sigma_phase_ = std::move(sigma);
        if (mu.empty()) mu.assign(s.sigma_phase_.size(), 1.0);
        if (mu.size() != s.sigma_phase_.size())
            throw std::invalid_argument("SurfaceTensionSpec: mu size mismatch");
        s.mu_ = std::move(mu);
        for (double v : s.sigma_phase_)
            if (!(v > 0.0)) throw std::invalid_argument("SurfaceTensionSpec: tensions must be positive");
        return s;
    }

    static SurfaceTensionSpec matrix(std::vector<std::vector<double>> sij,
                                     std::vector<double> mubar = {}) {
        SurfaceTensionSpec s;
        s.additive_ = false;
        s.sij_ = std::move(sij);
        const std::size_t n = s.sij_.size();
        if (mubar.empty()) mubar.assign(n, 1.0);
        if (mubar.size() != n) throw std::invalid_argument("SurfaceTensionSpec: mubar size mismatch");
        s.mubar_ = std::move(mubar);
        for (std::size_t i = 0; i < n; ++i) {
            if (s.sij_[i].size() != n) throw std::invalid_argument("SurfaceTensionSpec: matrix not square");
            if (s.sij_[i][i] != 0.0) throw std::invalid_argument("SurfaceTensionSpec: diagonal must be zero");
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (!(s.sij_[i][j] > 0.0))
                    throw std::invalid_argument("SurfaceTensionSpec: off-diagonal tensions must be positive");
                if (std::abs(s.sij_[i][j] - s.sij_[j][i]) > 1e-14)
                    throw std::invalid_argument("SurfaceTensionSpec: matrix must be symmetric");
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (i != j && i != k && j != k &&
                        s.sij_[i][j] + s.sij_[i][k] < s.sij_[j][k] - 1e-12)
                        throw std::invalid_argument("SurfaceTensionSpec: triangle inequality violated");
        return s;
    }

    bool is_additive() const { return additive_; }
    std::size_t phases() const { return additive_ ? sigma_phase_.size() : sij_.size(); }

    double sigma(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        return additive_ ? 0.5 * (sigma_phase_[i] + sigma_phase_[j]) : sij_[i][j];
    }
    double phase_sigma(std::size_t i) const {
        if (!additive_) throw std::logic_error("SurfaceTensionSpec: per-phase sigma needs additive mode");
        return sigma_phase_[i];
    }
    double mu(std::size_t i) const {
        if (!additive_) throw std::logic_error("SurfaceTensionSpec: per-phase mu needs additive mode");
        return mu_[i];
    }
    // Reduced mobility mu_i * sigma_i; in matrix mode the stored value.
    double mubar(std::size_t i) const {
        return additive_ ? mu_[i] * sigma_phase_[i] : mubar_[i];
    }

private:
    bool additive_ = true;
    std::vector<double> sigma_phase_;
    std::vector<double> mu_;
    std::vector<std::vector<double>> sij_;
    std::vector<double> mubar_;
};

} // namespace mmcf
