#pragma once

#include <vector>

#include "mpsl/phase.hpp"
#include "mpsl/problem.hpp"

namespace mpsl {

struct HomotopyOptions {
    double initial_step = 0.05;
    double min_step = 1e-6;
    double max_step = 0.1;
    double newton_tol = 1e-12;  // convergence target for max(|Gamma-|, |Gamma+|)
    int max_newton = 25;
    double jacobian_floor = 1e-10;
    int grow_after_iters = 3;   // widen the step when Newton needed at most this many
    double grow_factor = 1.5;
};

struct TracePoint {
    double t;
    double s;
    double theta;
};

/// Progress of one homotopy run, kept mainly for diagnostics and tests.
struct HomotopyState {
    double t = 0.0;
    PhaseSolution phase;
    double step = 0.0;
    int k = 0;
    std::vector<TracePoint> trace;
};

struct Eigenpair {
    int k = 0;
    double lambda = 0.0;
    PhaseSolution phase;
    OscillationClass osc;
    double residual_left = 0.0;
    double residual_right = 0.0;
    double transversality_left = 0.0;
    double transversality_right = 0.0;
    bool constant_mode = false;  // lambda = 0 ground state of derivative-only problems;
                                 // phase and oscillation data are not meaningful for it
};

/// Damped 2x2 Newton iteration on (Gamma-, Gamma+)(s, theta) at fixed t.
/// Returns once both residuals are at most opts.newton_tol (a point already at
/// the root returns immediately). Steps are halved as needed to keep s > 0.
/// Throws SingularJacobian when |det| < opts.jacobian_floor and NoConvergence
/// after opts.max_newton iterations.
PhaseSolution newton_correct(const PhaseSolution& guess, const ProblemSpec& spec, double t,
                             const HomotopyOptions& opts = {}, int* iterations = nullptr);

/// Track the k-th eigenpair from the separated problem at t = 0 to the full
/// problem at t = 1 with an Euler predictor and Newton corrector. Every
/// accepted step must keep the oscillation class at (k, Plus); a persistent
/// change raises ClassJump, step underflow or an s-band violation raises
/// PathFailure. The returned theta representative puts the pair in the k-th
/// positive class.
Eigenpair continue_eigenpair(const ProblemSpec& spec, int k, const HomotopyOptions& opts = {},
                             HomotopyState* state_out = nullptr);

/// Eigenpairs k = 0..k_max in one sweep; lambda is strictly increasing.
std::vector<Eigenpair> solve_spectrum(const ProblemSpec& spec, int k_max,
                                      const HomotopyOptions& opts = {});

}  // namespace mpsl
