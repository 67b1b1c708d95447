#include "mpsl/continuation.hpp"

#include <cmath>
#include <limits>

#include "mpsl/gamma.hpp"
#include "mpsl/numerics.hpp"
#include "mpsl/separated.hpp"

namespace mpsl {

namespace {

ProblemSpec separated_shadow(const ProblemSpec& spec) {
    ProblemSpec shadow = spec;
    shadow.left.points = {BoundaryPoint{}};
    shadow.right.points = {BoundaryPoint{}};
    return shadow;
}

Eigenpair make_constant_mode() {
    Eigenpair e;
    e.k = 0;
    e.lambda = 0.0;
    e.phase = PhaseSolution{0.0, pi / 2.0};  // w = 1
    e.osc = OscillationClass{0, OscSign::Plus, std::numeric_limits<double>::quiet_NaN()};
    e.constant_mode = true;
    return e;
}

Eigenpair finish_pair(const ProblemSpec& spec, const PhaseSolution& phase,
                      const OscillationClass& osc) {
    Eigenpair e;
    e.k = osc.k;
    e.lambda = phase.lambda();
    e.phase = PhaseSolution{phase.s, wrap_two_pi(phase.theta)};
    e.osc = osc;
    e.residual_left = std::abs(gamma_endpoint(Side::Left, phase.s, phase.theta, spec).value);
    e.residual_right = std::abs(gamma_endpoint(Side::Right, phase.s, phase.theta, spec).value);
    const auto [tl, tr] = transversality_check(e.phase, spec);
    e.transversality_left = tl;
    e.transversality_right = tr;
    return e;
}

}  // namespace

PhaseSolution newton_correct(const PhaseSolution& guess, const ProblemSpec& spec, double t,
                             const HomotopyOptions& opts, int* iterations) {
    double s = guess.s;
    double theta = guess.theta;
    for (int iter = 0; iter <= opts.max_newton; ++iter) {
        const GammaGradient gl = gamma_endpoint(Side::Left, s, theta, spec, t);
        const GammaGradient gr = gamma_endpoint(Side::Right, s, theta, spec, t);
        if (std::max(std::abs(gl.value), std::abs(gr.value)) <= opts.newton_tol) {
            if (iterations) *iterations = iter;
            return PhaseSolution{s, theta};
        }
        if (iter == opts.max_newton) break;

        const double det = gl.d_s * gr.d_theta - gl.d_theta * gr.d_s;
        if (std::abs(det) < opts.jacobian_floor)
            throw SingularJacobian("corrector hit a singular derivative matrix");
        double ds = (-gl.value * gr.d_theta + gl.d_theta * gr.value) / det;
        double dtheta = (-gl.d_s * gr.value + gl.value * gr.d_s) / det;

        // Damp the update rather than let the frequency cross zero.
        while (s + ds <= 0.0) {
            ds *= 0.5;
            dtheta *= 0.5;
        }
        s += ds;
        theta += dtheta;
    }
    throw NoConvergence("corrector did not reach tolerance");
}

Eigenpair continue_eigenpair(const ProblemSpec& spec, int k, const HomotopyOptions& opts,
                             HomotopyState* state_out) {
    if (k < 0) throw DomainError("eigenvalue index must be nonnegative");
    const AdmissibilityReport rep = validate(spec);
    if (!rep.admissible()) throw DomainError("spec is not admissible");

    if (!rep.cond_invertible && k == 0) return make_constant_mode();

    const ProblemSpec shadow = separated_shadow(spec);
    const SeparatedEigen start = separated_eigen(shadow, k);
    PhaseSolution phase = start.phase;
    const double s_low = 1e-6;
    const double s_high = start.phase.s + (static_cast<double>(k) + 4.0) * pi;

    HomotopyState local_state;
    HomotopyState& st = state_out ? *state_out : local_state;
    st = HomotopyState{};
    st.k = k;
    st.phase = phase;
    st.step = opts.initial_step;
    st.trace.push_back({0.0, phase.s, phase.theta});

    if (spec.left.separated() && spec.right.separated()) {
        // No coupling rows: the homotopy is constant in t.
        st.t = 1.0;
        st.trace.push_back({1.0, phase.s, phase.theta});
        const auto osc = classify_oscillation(phase, spec);
        if (!osc || osc->k != k || osc->sign != OscSign::Plus)
            throw ClassJump("separated mode left its oscillation class");
        return finish_pair(spec, phase, *osc);
    }

    double t = 0.0;
    double h = opts.initial_step;
    int class_rejections = 0;
    while (t < 1.0) {
        const double step = std::min(h, 1.0 - t);
        const double t_next = t + step;

        bool accepted = false;
        bool class_reject = false;
        PhaseSolution corrected;
        int iters = 0;
        try {
            // Euler predictor along d(Gamma)/dt = 0.
            const GammaGradient gl = gamma_endpoint(Side::Left, phase.s, phase.theta, spec, t);
            const GammaGradient gr = gamma_endpoint(Side::Right, phase.s, phase.theta, spec, t);
            const double det = gl.d_s * gr.d_theta - gl.d_theta * gr.d_s;
            PhaseSolution guess = phase;
            if (std::abs(det) >= opts.jacobian_floor) {
                const double vs = (-gl.d_t * gr.d_theta + gl.d_theta * gr.d_t) / det;
                const double vtheta = (-gl.d_s * gr.d_t + gl.d_t * gr.d_s) / det;
                guess.s += step * vs;
                guess.theta += step * vtheta;
                if (guess.s <= s_low) guess.s = phase.s;  // fall back to the plain guess
            }
            corrected = newton_correct(guess, spec, t_next, opts, &iters);
            const auto osc = classify_oscillation(corrected, spec);
            if (osc && osc->k == k && osc->sign == OscSign::Plus) {
                accepted = true;
            } else {
                class_reject = true;
            }
        } catch (const SingularJacobian&) {
        } catch (const NoConvergence&) {
        }

        if (accepted) {
            if (corrected.s <= s_low || corrected.s >= s_high)
                throw PathFailure("path left the admissible frequency band");
            t = t_next;
            phase = corrected;
            st.t = t;
            st.phase = phase;
            st.trace.push_back({t, phase.s, phase.theta});
            class_rejections = 0;
            if (iters <= opts.grow_after_iters)
                h = std::min(h * opts.grow_factor, opts.max_step);
            st.step = h;
            continue;
        }

        if (class_reject) ++class_rejections;
        h *= 0.5;
        st.step = h;
        if (h < opts.min_step) {
            if (class_rejections >= 3)
                throw ClassJump("oscillation class changed along the path");
            throw PathFailure("step size underflow before reaching t = 1");
        }
    }

    const auto osc = classify_oscillation(phase, spec);
    if (!osc || osc->k != k || osc->sign != OscSign::Plus)
        throw ClassJump("final point is outside the tracked oscillation class");
    return finish_pair(spec, phase, *osc);
}

std::vector<Eigenpair> solve_spectrum(const ProblemSpec& spec, int k_max,
                                      const HomotopyOptions& opts) {
    if (k_max < 0) throw DomainError("k_max must be nonnegative");
    std::vector<Eigenpair> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) out.push_back(continue_eigenpair(spec, k, opts));
    return out;
}

}  // namespace mpsl
