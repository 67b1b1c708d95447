#include "mpsl/gamma.hpp"

#include <cmath>

#include "mpsl/numerics.hpp"
#include "mpsl/phase.hpp"

namespace mpsl {

namespace {

GammaGradient eval_condition(double alpha0, double beta0, double eta0,
                             const std::vector<BoundaryPoint>& points,
                             double s, double theta, double t) {
    const double a0 = s * eta0 + theta;
    GammaGradient g;
    g.value = alpha0 * std::sin(a0) + s * beta0 * std::cos(a0);
    g.d_theta = alpha0 * std::cos(a0) - s * beta0 * std::sin(a0);
    g.d_s = alpha0 * eta0 * std::cos(a0) + beta0 * std::cos(a0) - s * beta0 * eta0 * std::sin(a0);
    g.d_t = 0.0;
    for (const auto& p : points) {
        const double a = s * p.eta + theta;
        const double sn = std::sin(a), cs = std::cos(a);
        g.value -= t * (p.alpha * sn + s * p.beta * cs);
        g.d_theta -= t * (p.alpha * cs - s * p.beta * sn);
        g.d_s -= t * (p.alpha * p.eta * cs + p.beta * cs - s * p.beta * p.eta * sn);
        g.d_t -= p.alpha * sn + s * p.beta * cs;
    }
    return g;
}

}  // namespace

GammaGradient gamma_endpoint(Side side, double s, double theta,
                             const ProblemSpec& spec, double t) {
    const EndpointCondition& c = side == Side::Left ? spec.left : spec.right;
    return eval_condition(c.alpha0, c.beta0, endpoint_of(side), c.points, s, theta, t);
}

double jacobian_det(double s, double theta, const ProblemSpec& spec, double t) {
    const GammaGradient gl = gamma_endpoint(Side::Left, s, theta, spec, t);
    const GammaGradient gr = gamma_endpoint(Side::Right, s, theta, spec, t);
    return gl.d_s * gr.d_theta - gl.d_theta * gr.d_s;
}

GammaGradient gamma_single(const SingleCondition& c, double s, double theta, double t) {
    return eval_condition(c.alpha0, c.beta0, c.eta0, c.points, s, theta, t);
}

double single_gamma_zero(const SingleCondition& c, double s) {
    // In theta the residual is A*sin(theta) + B*cos(theta) with fixed s, so it
    // has exactly one zero per half turn. Bracket it on a fine grid of [0, pi]
    // and bisect; the pi-antiperiodicity guarantees a sign change somewhere.
    auto f = [&](double theta) { return gamma_single(c, s, theta).value; };

    const int n = 64;
    double prev_theta = 0.0;
    double prev_val = f(prev_theta);
    if (prev_val == 0.0) return 0.0;

    double lo = -1.0, hi = -1.0;
    for (int i = 1; i <= n; ++i) {
        const double theta = pi * static_cast<double>(i) / n;
        const double val = f(theta);
        if (val == 0.0) {
            if (theta < pi) return theta;
            // theta == pi maps to the zero at 0 of the antiperiodic extension.
            return 0.0;
        }
        if ((prev_val < 0.0) != (val < 0.0)) {
            lo = prev_theta;
            hi = theta;
            break;
        }
        prev_theta = theta;
        prev_val = val;
    }
    if (lo < 0.0)
        throw BracketError("no sign change found for the single-condition residual");

    double flo = f(lo);
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return wrap_pi(mid);
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return wrap_pi(0.5 * (lo + hi));
}

std::pair<double, double> transversality_check(const PhaseSolution& p,
                                               const ProblemSpec& spec) {
    const double lambda = p.lambda();
    const double norm = sup_norm_w(p);
    auto one_side = [&](const EndpointCondition& c) {
        const WValue w = eval_w(p, endpoint_of(c.side));
        return (lambda * c.beta0 * w.u - c.alpha0 * w.uprime) / norm;
    };
    return {one_side(spec.left), one_side(spec.right)};
}

}  // namespace mpsl
