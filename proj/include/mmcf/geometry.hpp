#pragma once

#include <cmath>
#include <numbers>

namespace mmcf {

inline constexpr double pi = std::numbers::pi;

inline double deg2rad(double d) { return d * pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / pi; }

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double xx, double yy) : x(xx), y(yy) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    Vec2 normalized() const { double n = norm(); return {x / n, y / n}; }
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Rigid motion: world = R(angle) * local + shift.
struct Frame {
    double angle = 0.0;
    Vec2 shift{};

    static Frame identity() { return {}; }

    bool is_identity() const { return angle == 0.0 && shift.x == 0.0 && shift.y == 0.0; }

    Vec2 to_world(const Vec2& p) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
    }
    Vec2 to_local(const Vec2& p) const {
        const double c = std::cos(angle), s = std::sin(angle);
        const double dx = p.x - shift.x, dy = p.y - shift.y;
        return {c * dx + s * dy, -s * dx + c * dy};
    }
    // Rotate a direction vector (no translation).
    Vec2 dir_to_world(const Vec2& v) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * v.x - s * v.y, s * v.x + c * v.y};
    }
    Vec2 dir_to_local(const Vec2& v) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * v.x + s * v.y, -s * v.x + c * v.y};
    }
};

} // namespace mmcf
