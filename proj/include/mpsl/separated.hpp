#pragma once

#include "mpsl/phase.hpp"
#include "mpsl/problem.hpp"

namespace mpsl {

struct SeparatedEigen {
    int k = 0;
    double lambda = 0.0;
    PhaseSolution phase;
    bool constant_mode = false;  // lambda = 0 with u == 1 (derivative-only coupling)
};

/// Monotone dispersion function of the separated part of the problem,
///   g_k(s) = omega_minus(s^2) + 2*s - omega_plus(s^2) - k*pi,
/// whose unique positive zero gives the k-th separated eigenvalue s_k^2.
double separated_dispersion(const ProblemSpec& spec, double s, int k);

/// k-th eigenpair of the problem with all coupling rows dropped. Pure
/// derivative conditions on both ends yield the flagged constant mode at k = 0
/// and s_k = k*pi/2 beyond. theta is chosen so that the phase at x = -1 equals
/// omega_minus exactly, i.e. the pair lies in the k-th positive oscillation
/// class with the maximal margin pi/2.
SeparatedEigen separated_eigen(const ProblemSpec& spec, int k);

}  // namespace mpsl
