#pragma once

#include <utility>

#include "mpsl/phase.hpp"
#include "mpsl/problem.hpp"

namespace mpsl {

/// Value and first partials of a boundary residual at one evaluation point.
struct GammaGradient {
    double value;
    double d_s;
    double d_theta;
    double d_t;
};

/// Boundary residual of the trial solution w(s, theta) against one endpoint
/// condition, with the coupling rows scaled by the homotopy parameter t:
///
///   Gamma(s, theta, t) = alpha0*sin(e*s + theta) + s*beta0*cos(e*s + theta)
///                      - t * sum_i [ alpha_i*sin(s*eta_i + theta) + s*beta_i*cos(s*eta_i + theta) ]
///
/// where e = -1 or +1. Only the coupling rows are scaled; the separated part is
/// kept fixed so every intermediate problem keeps the same endpoint structure.
/// Antiperiodic in theta with period pi.
GammaGradient gamma_endpoint(Side side, double s, double theta, const ProblemSpec& spec, double t = 1.0);

/// det [ dGamma-/ds  dGamma-/dtheta ; dGamma+/ds  dGamma+/dtheta ].
double jacobian_det(double s, double theta, const ProblemSpec& spec, double t = 1.0);

/// A single condition anchored at an arbitrary base point eta0 (not necessarily
/// an endpoint, beta0 of either sign). Endpoint conditions are the special case
/// eta0 = -1 or +1.
struct SingleCondition {
    double alpha0 = 1.0;
    double beta0 = 0.0;
    double eta0 = -1.0;
    std::vector<BoundaryPoint> points{BoundaryPoint{}};
};

GammaGradient gamma_single(const SingleCondition& cond, double s, double theta, double t = 1.0);

/// The unique zero of theta -> Gamma(s, theta) in [0, pi). The residual is a
/// pure sinusoid in theta, so the zero is located by bisection after a sign
/// change is found among at most 64 uniform samples (antiperiodicity guarantees
/// one). Bisection runs to an absolute theta tolerance of 1e-13.
double single_gamma_zero(const SingleCondition& cond, double s);

/// Endpoint non-tangency values (lambda*beta0*u - alpha0*u') at x = -1 and
/// x = +1 for w scaled to sup norm one. Nonzero at eigenpairs of admissible
/// problems; a zero would make the eigenbranch tangent to its phase window.
std::pair<double, double> transversality_check(const PhaseSolution& p, const ProblemSpec& spec);

}  // namespace mpsl
