#include "mpsl/phase.hpp"

#include <algorithm>
#include <cmath>

#include "mpsl/numerics.hpp"

namespace mpsl {

WValue eval_w(const PhaseSolution& p, double x) {
    const double arg = p.s * x + p.theta;
    return WValue{std::sin(arg), p.s * std::cos(arg)};
}

double prufer_angle(const PhaseSolution& p, double x) {
    return wrap_two_pi(p.theta - p.s) + p.s * (x + 1.0);
}

TargetAngles target_angles(double lambda, const ProblemSpec& spec) {
    if (!(lambda > 0.0)) throw DomainError("target angles need lambda > 0");
    const double s = std::sqrt(lambda);

    auto half_plane_angle = [s](const EndpointCondition& c) {
        // Angle in [0, pi/2] made by the separated pair (alpha0, orient*beta0),
        // orient = -1 left / +1 right; the sign condition guarantees the second
        // entry is >= 0.
        const double num = s * side_sign(c.side) * c.beta0;
        if (c.alpha0 == 0.0) return pi / 2.0;
        return std::atan(num / c.alpha0);
    };

    TargetAngles t;
    t.omega_minus = half_plane_angle(spec.left);
    t.omega_plus = pi - half_plane_angle(spec.right);
    return t;
}

std::optional<OscillationClass> classify_oscillation(const PhaseSolution& p,
                                                     const ProblemSpec& spec) {
    if (!(p.s > 0.0)) return std::nullopt;
    const TargetAngles tgt = target_angles(p.lambda(), spec);

    // Phase at the left endpoint, as an angle on the circle.
    const double phi = wrap_two_pi(p.theta - p.s);

    // Resolve the orientation: the left phase must sit within a quarter turn
    // of the left target (positive class) or of its antipode (negative class).
    double d = wrap_pm_pi(phi - tgt.omega_minus);
    OscSign sign = OscSign::Plus;
    if (!(std::abs(d) < pi / 2.0)) {
        d = wrap_pm_pi(phi - pi - tgt.omega_minus);
        sign = OscSign::Minus;
        if (!(std::abs(d) < pi / 2.0)) return std::nullopt;
    }

    // Transport the resolved left angle across the interval and count how many
    // half turns separate it from the right target.
    const double omega_left = tgt.omega_minus + d;
    const double omega_right = omega_left + 2.0 * p.s;
    const double k_real = (omega_right - tgt.omega_plus) / pi;
    const long k = std::lround(k_real);
    if (k < 0) return std::nullopt;

    const double right_dev = std::abs(omega_right - tgt.omega_plus - static_cast<double>(k) * pi);
    const double margin = std::min(pi / 2.0 - std::abs(d), pi / 2.0 - right_dev);
    if (!(margin > 0.0)) return std::nullopt;

    return OscillationClass{static_cast<int>(k), sign, margin};
}

int count_interior_zeros(const PhaseSolution& p, bool of_derivative) {
    // Zeros of sin(sx + theta) (or cos for the derivative) are the points where
    // sx + theta hits shift + n*pi; count those with sx + theta strictly inside
    // (theta - s, theta + s), with a guard band against endpoint grazing.
    const double tol = 1e-12;
    const double shift = of_derivative ? pi / 2.0 : 0.0;
    const double a = p.theta - p.s;
    const double b = p.theta + p.s;
    const long n_lo = static_cast<long>(std::ceil((a + tol - shift) / pi));
    const long n_hi = static_cast<long>(std::floor((b - tol - shift) / pi));
    return n_hi >= n_lo ? static_cast<int>(n_hi - n_lo + 1) : 0;
}

double sup_norm_w(const PhaseSolution& p) {
    // sup |sin(sx + theta)| over [-1, 1]: 1 if the argument range covers a peak,
    // otherwise the larger endpoint value.
    const double a = p.theta - p.s;
    const double b = p.theta + p.s;
    const long n_lo = static_cast<long>(std::ceil((a - pi / 2.0) / pi));
    const long n_hi = static_cast<long>(std::floor((b - pi / 2.0) / pi));
    if (n_hi >= n_lo) return 1.0;
    return std::max(std::abs(std::sin(a)), std::abs(std::sin(b)));
}

}  // namespace mpsl
