#pragma once

#include <cmath>
#include <numbers>

namespace swarmalator {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps a finite angle into [0, 2*pi).
inline double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;  // fmod(-eps) + 2pi can round up to 2pi
    return w;
}

/// Principal-value difference b - a, in (-pi, pi].
inline double angle_diff(double b, double a) {
    return std::atan2(std::sin(b - a), std::cos(b - a));
}

}  // namespace swarmalator
