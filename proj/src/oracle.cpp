#include "mpsl/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "mpsl/gamma.hpp"
#include "mpsl/numerics.hpp"

namespace mpsl {

namespace {

SingleCondition left_condition(const ProblemSpec& spec) {
    SingleCondition c;
    c.alpha0 = spec.left.alpha0;
    c.beta0 = spec.left.beta0;
    c.eta0 = -1.0;
    c.points = spec.left.points;
    return c;
}

/// Newton in theta at fixed s, started from a nearby branch value.
double refine_theta(const SingleCondition& c, double s, double guess) {
    double theta = guess;
    for (int iter = 0; iter < 60; ++iter) {
        const GammaGradient g = gamma_single(c, s, theta);
        if (std::abs(g.value) <= 1e-13) break;
        if (g.d_theta == 0.0)
            throw ConvergenceError("flat residual while following the left branch");
        theta -= g.value / g.d_theta;
        if (std::abs(theta - guess) > pi / 2.0)
            throw ConvergenceError("left branch moved more than a quarter turn in one step");
    }
    if (std::abs(gamma_single(c, s, theta).value) > 1e-12)
        throw ConvergenceError("left branch refinement stalled");
    return theta;
}

}  // namespace

std::vector<double> theta_branch(const ProblemSpec& spec, std::span<const double> s_grid) {
    if (s_grid.empty()) return {};
    const SingleCondition c = left_condition(spec);
    std::vector<double> out;
    out.reserve(s_grid.size());
    out.push_back(single_gamma_zero(c, s_grid.front()));
    for (std::size_t i = 1; i < s_grid.size(); ++i) {
        if (!(s_grid[i] > s_grid[i - 1]))
            throw DomainError("branch grid must be strictly increasing");
        out.push_back(refine_theta(c, s_grid[i], out.back()));
    }
    return out;
}

std::vector<OracleRoot> oracle_spectrum(const ProblemSpec& spec, double s_max) {
    if (!(s_max > 0.0)) throw DomainError("s_max must be positive");
    const AdmissibilityReport rep = validate(spec);
    if (!rep.admissible()) throw DomainError("spec is not admissible");

    const SingleCondition left = left_condition(spec);
    const double s_lo = 1e-4;
    const double coarse = pi / 64.0;

    // F evaluated with its own branch bookkeeping: each call refines theta from
    // the nearest previously evaluated point.
    struct Eval {
        double s;
        double theta;
        double f;
    };
    auto eval_from = [&](double s, const Eval& seed) {
        Eval e;
        e.s = s;
        e.theta = refine_theta(left, s, seed.theta);
        e.f = gamma_endpoint(Side::Right, s, e.theta, spec).value;
        return e;
    };

    std::vector<double> grid;
    for (double s = s_lo; s < s_max; s += coarse) grid.push_back(s);
    grid.push_back(s_max);

    std::vector<Eval> nodes;
    nodes.reserve(grid.size());
    {
        Eval first;
        first.s = grid.front();
        first.theta = single_gamma_zero(left, first.s);
        first.f = gamma_endpoint(Side::Right, first.s, first.theta, spec).value;
        nodes.push_back(first);
        for (std::size_t i = 1; i < grid.size(); ++i)
            nodes.push_back(eval_from(grid[i], nodes.back()));
    }

    std::vector<std::pair<Eval, Eval>> brackets;
    auto scan_pair = [&](const Eval& a, const Eval& b) {
        if ((a.f < 0.0) != (b.f < 0.0)) brackets.emplace_back(a, b);
    };
    for (std::size_t i = 1; i < nodes.size(); ++i) scan_pair(nodes[i - 1], nodes[i]);

    // A dip of |F| towards zero between nodes can hide a double crossing that
    // leaves the node signs equal; rescan such cells on an 8x finer grid.
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        const double fa = std::abs(nodes[i - 1].f);
        const double fb = std::abs(nodes[i].f);
        const double fc = std::abs(nodes[i + 1].f);
        const bool local_min = fb <= fa && fb <= fc && fb < 1.0;
        const bool already = (nodes[i - 1].f < 0.0) != (nodes[i].f < 0.0) ||
                             (nodes[i].f < 0.0) != (nodes[i + 1].f < 0.0);
        if (!local_min || already) continue;
        Eval prev = nodes[i - 1];
        for (std::size_t cell = 0; cell < 2; ++cell) {
            const Eval& lo = cell == 0 ? nodes[i - 1] : nodes[i];
            const Eval& hi = cell == 0 ? nodes[i] : nodes[i + 1];
            prev = lo;
            for (int j = 1; j <= 8; ++j) {
                Eval next = j == 8 ? hi : eval_from(lo.s + (hi.s - lo.s) * j / 8.0, prev);
                scan_pair(prev, next);
                prev = next;
            }
        }
    }

    std::vector<OracleRoot> roots;
    auto add_root = [&](const Eval& at) {
        PhaseSolution polished = newton_correct(PhaseSolution{at.s, at.theta}, spec, 1.0);
        const auto osc = classify_oscillation(polished, spec);
        if (!osc)
            throw ConvergenceError("scan root does not classify into any oscillation class");
        const GammaGradient gl = gamma_endpoint(Side::Left, polished.s, polished.theta, spec);
        const GammaGradient gr = gamma_endpoint(Side::Right, polished.s, polished.theta, spec);
        const double det = gl.d_s * gr.d_theta - gl.d_theta * gr.d_s;
        OracleRoot r;
        r.lambda = polished.lambda();
        r.phase = PhaseSolution{polished.s, wrap_two_pi(polished.theta)};
        r.k = osc->k;
        r.dF_ds = -det / gl.d_theta;
        roots.push_back(r);
    };

    for (auto& [lo, hi] : brackets) {
        Eval a = lo, b = hi;
        while (b.s - a.s > 1e-12) {
            const Eval mid = eval_from(0.5 * (a.s + b.s), a);
            if (mid.f == 0.0) {
                a = b = mid;
                break;
            }
            if ((a.f < 0.0) == (mid.f < 0.0)) a = mid; else b = mid;
        }
        add_root(a);
    }

    std::sort(roots.begin(), roots.end(),
              [](const OracleRoot& x, const OracleRoot& y) { return x.lambda < y.lambda; });
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const OracleRoot& x, const OracleRoot& y) {
                                return std::abs(x.phase.s - y.phase.s) < 1e-8;
                            }),
                roots.end());
    return roots;
}

}  // namespace mpsl
