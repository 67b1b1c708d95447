#pragma once

#include <span>
#include <vector>

#include "mpsl/continuation.hpp"
#include "mpsl/phase.hpp"
#include "mpsl/problem.hpp"

namespace mpsl {

/// Continuously lifted branch theta-(s) of left-condition zeros along an
/// increasing s grid (step at most pi/64). The first value is the [0, pi)
/// zero; later values follow the branch without the mod-pi jumps a naive
/// per-point reduction would introduce. Throws ConvergenceError if the branch
/// moves more than pi/2 between neighbouring grid points.
std::vector<double> theta_branch(const ProblemSpec& spec, std::span<const double> s_grid);

struct OracleRoot {
    double lambda = 0.0;
    PhaseSolution phase;
    int k = 0;        // oscillation index of the classified pair
    double dF_ds = 0.0;  // slope of the scalar root function at the root
};

/// Ground-truth spectrum on s in (0, s_max], found without any homotopy: pin
/// theta to the left-condition branch, scan F(s) = Gamma+(s, theta-(s)) on a
/// pi/64 grid (refined 8x around interior minima of |F| so no double crossing
/// hides between nodes), and bisect every sign change to |ds| <= 1e-12. Each
/// root is polished by the 2-D Newton corrector and classified.
std::vector<OracleRoot> oracle_spectrum(const ProblemSpec& spec, double s_max);

}  // namespace mpsl
