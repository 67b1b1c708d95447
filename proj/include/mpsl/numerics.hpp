#pragma once

#include <cmath>
#include <numbers>

namespace mpsl {

inline constexpr double pi = std::numbers::pi;

// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double x) {
    double y = std::fmod(x, 2.0 * pi);
    if (y < 0.0) y += 2.0 * pi;
    return y;
}

// Reduce an angle to [0, pi).
inline double wrap_pi(double x) {
    double y = std::fmod(x, pi);
    if (y < 0.0) y += pi;
    return y;
}

// Signed circular difference in [-pi, pi).
inline double wrap_pm_pi(double x) {
    double y = std::fmod(x + pi, 2.0 * pi);
    if (y < 0.0) y += 2.0 * pi;
    return y - pi;
}

}  // namespace mpsl
