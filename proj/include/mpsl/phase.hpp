#pragma once

#include <optional>

#include "mpsl/problem.hpp"

namespace mpsl {

/// Trial solution w(x) = sin(s*x + theta) of -u'' = lambda*u with lambda = s^2, s > 0.
struct PhaseSolution {
    double s = 1.0;
    double theta = 0.0;
    double lambda() const { return s * s; }
};

struct WValue {
    double u;
    double uprime;
};

WValue eval_w(const PhaseSolution& p, double x);

/// Oriented phase angle of the vector (u'(x), s*u(x)) along w. For the trial
/// solution this is exactly affine, omega(x) = omega(-1) + s*(x+1), with the
/// value at x = -1 pinned into [0, 2*pi).
double prufer_angle(const PhaseSolution& p, double x);

struct TargetAngles {
    double omega_minus;  // in [0, pi/2]; equals pi/2 exactly when alpha0(-1) = 0
    double omega_plus;   // in [pi/2, pi]; equals pi/2 exactly when alpha0(+1) = 0
};

/// Boundary phase targets of the separated part of each condition.
TargetAngles target_angles(double lambda, const ProblemSpec& spec);

enum class OscSign { Plus, Minus };

struct OscillationClass {
    int k = 0;
    OscSign sign = OscSign::Plus;
    double boundary_margin = 0.0;  // min distance of the two phase inequalities from pi/2
};

/// Oscillation count. The pair (s^2, w) belongs to the k-th positive class when
/// the phase at x = -1 sits within pi/2 of omega_minus (circularly) and the
/// phase at x = +1 sits within pi/2 of omega_plus + k*pi. w and -w share a
/// tangent line field, so the sign is resolved with the oriented angle: Plus if
/// w itself satisfies the x = -1 window, Minus if -w does. Returns nullopt when
/// neither choice fits any k >= 0 (possible for phases that solve no boundary
/// condition, and on window boundaries).
std::optional<OscillationClass> classify_oscillation(const PhaseSolution& p, const ProblemSpec& spec);

/// Number of zeros of w (or of w' when of_derivative) in the open interval
/// (-1, 1). Endpoint hits are resolved with a 1e-12 phase tolerance.
int count_interior_zeros(const PhaseSolution& p, bool of_derivative);

/// max |w| over [-1, 1], evaluated in closed form.
double sup_norm_w(const PhaseSolution& p);

}  // namespace mpsl
