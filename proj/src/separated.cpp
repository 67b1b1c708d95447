#include "mpsl/separated.hpp"

#include <cmath>

#include "mpsl/numerics.hpp"

namespace mpsl {

double separated_dispersion(const ProblemSpec& spec, double s, int k) {
    if (!(s > 0.0)) throw DomainError("dispersion needs s > 0");
    const TargetAngles t = target_angles(s * s, spec);
    return t.omega_minus + 2.0 * s - t.omega_plus - static_cast<double>(k) * pi;
}

SeparatedEigen separated_eigen(const ProblemSpec& spec, int k) {
    if (k < 0) throw DomainError("eigenvalue index must be nonnegative");
    const AdmissibilityReport rep = validate(spec);
    if (!rep.admissible()) throw DomainError("spec is not admissible");
    if (!spec.left.separated() || !spec.right.separated())
        throw DomainError("separated solver requires both conditions to be point-free");

    SeparatedEigen out;
    out.k = k;

    if (!rep.cond_invertible) {
        // Both conditions are pure derivative conditions. The k = 0 mode is the
        // constant function (lambda = 0), and for k >= 1 both phase targets sit
        // at a quarter turn, so 2s = k*pi exactly.
        if (k == 0) {
            out.constant_mode = true;
            out.lambda = 0.0;
            out.phase = PhaseSolution{0.0, pi / 2.0};
            return out;
        }
        const double s = static_cast<double>(k) * pi / 2.0;
        out.lambda = s * s;
        out.phase = PhaseSolution{s, wrap_two_pi(pi / 2.0 + s)};
        return out;
    }

    // g(s) = omega_minus(s^2) + 2s - omega_plus(s^2) - k*pi is strictly
    // increasing in s (the targets move the right way and 2s dominates), and
    // brackets its unique zero within [k*pi/2 - pi, k*pi/2 + 2*pi].
    const double centre = static_cast<double>(k) * pi / 2.0;
    double lo = std::max(1e-8, centre - pi);
    double hi = centre + 2.0 * pi;
    double glo = separated_dispersion(spec, lo, k);
    double ghi = separated_dispersion(spec, hi, k);
    if (glo > 0.0 || ghi < 0.0)
        throw BracketError("separated dispersion does not bracket the requested index");
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * (1.0 + hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gm = separated_dispersion(spec, mid, k);
        if (gm == 0.0) { lo = hi = mid; break; }
        if (gm < 0.0) lo = mid; else hi = mid;
    }
    const double s = 0.5 * (lo + hi);
    const double omega_minus = target_angles(s * s, spec).omega_minus;

    out.lambda = s * s;
    // Pin the left phase exactly to its target so the mode sits dead centre in
    // its oscillation class.
    out.phase = PhaseSolution{s, wrap_two_pi(omega_minus + s)};
    return out;
}

}  // namespace mpsl
