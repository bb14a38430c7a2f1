#pragma once

#include <cmath>

namespace swarmalator {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Vec2& operator-=(Vec2 o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    constexpr Vec2& operator*=(double s) {
        x *= s;
        y *= s;
        return *this;
    }

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    friend constexpr Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    constexpr double squared_norm() const { return x * x + y * y; }
    double norm() const { return std::sqrt(squared_norm()); }
    double angle() const { return std::atan2(y, x); }

    constexpr bool is_zero() const { return x == 0.0 && y == 0.0; }

    Vec2 rotated(double a) const {
        const double c = std::cos(a);
        const double s = std::sin(a);
        return {c * x - s * y, s * x + c * y};
    }
};

inline Vec2 unit_from_angle(double a) { return {std::cos(a), std::sin(a)}; }

}  // namespace swarmalator
