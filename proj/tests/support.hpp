#pragma once

// Deterministic generators and small helpers shared by the test binaries.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mpsl/gamma.hpp"
#include "mpsl/numerics.hpp"
#include "mpsl/problem.hpp"

namespace mpsl::testing {

using Rng = std::mt19937_64;

struct GenOptions {
    double contraction_cap = 0.8;  // upper bound for the quadratic coupling sum
    bool alpha_nonneg = false;     // restrict coupling alphas to [0, inf)
    bool force_invertible = false; // never produce a derivative-only pair
    int max_points = 3;
};

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// One endpoint condition with alpha0 + |beta0| = 1 and a coupling budget that
// keeps the quadratic contraction sum at most `cap`.
inline EndpointCondition random_condition(Rng& rng, Side side, const GenOptions& opt,
                                          int separated_kind) {
    EndpointCondition c;
    c.side = side;
    const double orient = side_sign(side);  // admissible sign: orient*beta0 >= 0

    if (separated_kind == 0) {  // value condition
        c.alpha0 = 1.0;
        c.beta0 = 0.0;
    } else if (separated_kind == 1) {  // derivative condition
        c.alpha0 = 0.0;
        c.beta0 = orient;
    } else {  // mixed condition
        c.alpha0 = uniform(rng, 0.2, 0.8);
        c.beta0 = orient * (1.0 - c.alpha0);
    }

    c.points.clear();
    const int m = uniform_int(rng, 1, opt.max_points);
    for (int i = 0; i < m; ++i) {
        BoundaryPoint p;
        if (uniform(rng, 0.0, 1.0) < 0.1) {
            p.eta = -c.endpoint();  // the opposite endpoint is allowed
        } else {
            do {
                p.eta = uniform(rng, -1.0, 1.0);
            } while (p.eta == c.endpoint());
        }
        c.points.push_back(p);
    }

    // Split a random share of the quadratic budget between the alpha and beta
    // coupling sums, then distribute each sum over the rows.
    const double target = uniform(rng, 0.05, opt.contraction_cap);
    double frac = uniform(rng, 0.0, 1.0);
    if (c.alpha0 == 0.0) frac = 0.0;
    if (c.beta0 == 0.0) frac = 1.0;
    const double alpha_budget = c.alpha0 * std::sqrt(target * frac);
    const double beta_budget = std::abs(c.beta0) * std::sqrt(target * (1.0 - frac));

    std::vector<double> wa(static_cast<std::size_t>(m)), wb(static_cast<std::size_t>(m));
    double sa = 0.0, sb = 0.0;
    for (int i = 0; i < m; ++i) {
        wa[static_cast<std::size_t>(i)] = uniform(rng, 0.1, 1.0);
        wb[static_cast<std::size_t>(i)] = uniform(rng, 0.1, 1.0);
        sa += wa[static_cast<std::size_t>(i)];
        sb += wb[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < m; ++i) {
        double a = alpha_budget * wa[static_cast<std::size_t>(i)] / sa;
        double b = beta_budget * wb[static_cast<std::size_t>(i)] / sb;
        if (!opt.alpha_nonneg && uniform(rng, 0.0, 1.0) < 0.5) a = -a;
        if (uniform(rng, 0.0, 1.0) < 0.5) b = -b;
        c.points[static_cast<std::size_t>(i)].alpha = a;
        c.points[static_cast<std::size_t>(i)].beta = b;
    }
    return c;
}

inline ProblemSpec random_admissible_spec(Rng& rng, const GenOptions& opt = {}) {
    int kind_left = uniform_int(rng, 0, 2);
    int kind_right = uniform_int(rng, 0, 2);
    if (opt.force_invertible && kind_left == 1 && kind_right == 1)
        (uniform_int(rng, 0, 1) == 0 ? kind_left : kind_right) = uniform_int(rng, 0, 1) * 2;
    ProblemSpec spec;
    spec.left = random_condition(rng, Side::Left, opt, kind_left);
    spec.right = random_condition(rng, Side::Right, opt, kind_right);
    return spec;
}

// A single condition with a normalized base pair, arbitrary base sign, and the
// same quadratic coupling budget.
inline SingleCondition random_single_condition(Rng& rng, double cap = 0.8) {
    SingleCondition c;
    const double roll = uniform(rng, 0.0, 1.0);
    if (roll < 0.2) {
        c.alpha0 = 1.0;
        c.beta0 = 0.0;
    } else if (roll < 0.4) {
        c.alpha0 = 0.0;
        c.beta0 = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    } else {
        c.alpha0 = uniform(rng, 0.2, 0.8);
        c.beta0 = (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0) * (1.0 - c.alpha0);
    }
    const double pick = uniform(rng, 0.0, 1.0);
    if (pick < 0.1) {
        c.eta0 = -1.0;
    } else if (pick < 0.2) {
        c.eta0 = 1.0;
    } else {
        c.eta0 = uniform(rng, -1.0, 1.0);
    }

    c.points.clear();
    const int m = uniform_int(rng, 1, 3);
    const double target = uniform(rng, 0.05, cap);
    double frac = uniform(rng, 0.0, 1.0);
    if (c.alpha0 == 0.0) frac = 0.0;
    if (c.beta0 == 0.0) frac = 1.0;
    const double alpha_budget = c.alpha0 * std::sqrt(target * frac);
    const double beta_budget = std::abs(c.beta0) * std::sqrt(target * (1.0 - frac));
    double sa = 0.0, sb = 0.0;
    std::vector<double> wa(static_cast<std::size_t>(m)), wb(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        wa[static_cast<std::size_t>(i)] = uniform(rng, 0.1, 1.0);
        wb[static_cast<std::size_t>(i)] = uniform(rng, 0.1, 1.0);
        sa += wa[static_cast<std::size_t>(i)];
        sb += wb[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < m; ++i) {
        BoundaryPoint p;
        p.eta = uniform(rng, -1.0, 1.0);
        p.alpha = alpha_budget * wa[static_cast<std::size_t>(i)] / sa;
        p.beta = beta_budget * wb[static_cast<std::size_t>(i)] / sb;
        if (uniform(rng, 0.0, 1.0) < 0.5) p.alpha = -p.alpha;
        if (uniform(rng, 0.0, 1.0) < 0.5) p.beta = -p.beta;
        c.points.push_back(p);
    }
    return c;
}

// Zeros of theta -> Gamma(s, theta) on [0, pi), counted from a dense sign scan
// that uses the antiperiodic wrap as the closing sample.
inline int dense_zero_count(const SingleCondition& c, double s, int samples = 2048) {
    std::vector<double> v(static_cast<std::size_t>(samples) + 1);
    for (int j = 0; j < samples; ++j)
        v[static_cast<std::size_t>(j)] =
            gamma_single(c, s, pi * static_cast<double>(j) / samples).value;
    v[static_cast<std::size_t>(samples)] = -v[0];
    int count = 0;
    for (int j = 0; j < samples; ++j) {
        const double a = v[static_cast<std::size_t>(j)];
        const double b = v[static_cast<std::size_t>(j) + 1];
        if (a == 0.0)
            ++count;
        else if (a * b < 0.0)
            ++count;
    }
    return count;
}

// Ready-made classical specs.
inline ProblemSpec dirichlet_spec() { return ProblemSpec{}; }

inline ProblemSpec neumann_spec() {
    ProblemSpec s;
    s.left.alpha0 = 0.0;
    s.left.beta0 = -1.0;
    s.right.alpha0 = 0.0;
    s.right.beta0 = 1.0;
    return s;
}

inline ProblemSpec robin_spec() {
    ProblemSpec s;
    s.left.alpha0 = 1.0;
    s.left.beta0 = -1.0;
    s.right.alpha0 = 1.0;
    s.right.beta0 = 1.0;
    return s;
}

// Dirichlet on the left, u(1) = 0.4*u(0) on the right; the spectrum is known in
// closed form through cos(s) = 0.2.
inline ProblemSpec value_coupled_spec() {
    ProblemSpec s;
    s.right.points = {BoundaryPoint{0.0, 0.4, 0.0}};
    return s;
}

// Derivative conditions on both ends with derivative coupling across the
// middle; invertibility fails, so k = 0 is the constant mode.
inline ProblemSpec derivative_coupled_spec() {
    ProblemSpec s;
    s.left.alpha0 = 0.0;
    s.left.beta0 = -1.0;
    s.left.points = {BoundaryPoint{0.5, 0.0, 0.3}};
    s.right.alpha0 = 0.0;
    s.right.beta0 = 1.0;
    s.right.points = {BoundaryPoint{-0.5, 0.0, 0.3}};
    return s;
}

}  // namespace mpsl::testing
