#include <cmath>

#include "doctest.h"
#include "mpsl/gamma.hpp"
#include "mpsl/numerics.hpp"
#include "support.hpp"

using namespace mpsl;
namespace mt = mpsl::testing;

TEST_CASE("boundary residual matches a by-hand evaluation") {
    ProblemSpec spec;
    spec.left = EndpointCondition{Side::Left, 1.0, -1.0, {BoundaryPoint{0.5, 0.2, -0.1}}};
    const double s = 1.3, theta = 0.7, t = 0.6;
    const GammaGradient g = gamma_endpoint(Side::Left, s, theta, spec, t);
    const double expected = std::sin(theta - s) - s * std::cos(theta - s) -
                            t * (0.2 * std::sin(s * 0.5 + theta) +
                                 s * (-0.1) * std::cos(s * 0.5 + theta));
    CHECK(g.value == doctest::Approx(expected).epsilon(1e-15));
    CHECK(g.d_t == doctest::Approx((expected - (std::sin(theta - s) - s * std::cos(theta - s))) / t)
                       .epsilon(1e-12));
}

TEST_CASE("residual is antiperiodic in theta with period pi") {
    mt::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const ProblemSpec spec = mt::random_admissible_spec(rng);
        const double s = mt::uniform(rng, 0.1, 12.0);
        const double theta = mt::uniform(rng, -5.0, 5.0);
        const double t = mt::uniform(rng, 0.0, 1.0);
        for (Side side : {Side::Left, Side::Right}) {
            const double a = gamma_endpoint(side, s, theta, spec, t).value;
            const double b = gamma_endpoint(side, s, theta + pi, spec, t).value;
            CHECK(a == doctest::Approx(-b).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("analytic partials agree with central differences") {
    mt::Rng rng(123456);
    const double step = 1e-6;
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const ProblemSpec spec = mt::random_admissible_spec(rng);
        const double s = mt::uniform(rng, 0.1, 10.0);
        const double theta = mt::uniform(rng, -4.0, 4.0);
        const double t = mt::uniform(rng, 0.0, 1.0);
        const Side side = trial % 2 == 0 ? Side::Left : Side::Right;
        const GammaGradient g = gamma_endpoint(side, s, theta, spec, t);

        auto value = [&](double ss, double th, double tt) {
            return gamma_endpoint(side, ss, th, spec, tt).value;
        };
        const double fd_s = (value(s + step, theta, t) - value(s - step, theta, t)) / (2.0 * step);
        const double fd_theta =
            (value(s, theta + step, t) - value(s, theta - step, t)) / (2.0 * step);
        const double fd_t = (value(s, theta, t + step) - value(s, theta, t - step)) / (2.0 * step);

        worst = std::max(worst, std::abs(g.d_s - fd_s) / std::max(1.0, std::abs(g.d_s)));
        worst = std::max(worst, std::abs(g.d_theta - fd_theta) / std::max(1.0, std::abs(g.d_theta)));
        worst = std::max(worst, std::abs(g.d_t - fd_t) / std::max(1.0, std::abs(g.d_t)));
    }
    CHECK(worst <= 1e-7);
}

TEST_CASE("phase Jacobian at the ground pair of the value-value problem") {
    const ProblemSpec spec;
    CHECK(jacobian_det(pi / 2.0, pi / 2.0, spec) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("single-condition zero in [0, pi)") {
    SUBCASE("frozen interior-coupling case") {
        // alpha0 = 1 anchored at -1 with one value coupling 0.3 at 0, s = 2.
        SingleCondition c;
        c.points = {BoundaryPoint{0.0, 0.3, 0.0}};
        const double theta = single_gamma_zero(c, 2.0);
        CHECK(theta == doctest::Approx(2.2379196917397359).epsilon(1e-12));
        CHECK(std::abs(gamma_single(c, 2.0, theta).value) <= 1e-12);
    }
    SUBCASE("uniqueness and slope floor over random conditions") {
        mt::Rng rng(31415);
        for (int trial = 0; trial < 200; ++trial) {
            const SingleCondition c = mt::random_single_condition(rng);
            for (double s : {0.5, 1.0, 2.0, 5.0, 10.0}) {
                CAPTURE(trial);
                CAPTURE(s);
                CHECK(mt::dense_zero_count(c, s) == 1);
                const double theta = single_gamma_zero(c, s);
                CHECK(theta >= 0.0);
                CHECK(theta < pi);
                CHECK(std::abs(gamma_single(c, s, theta).value) <= 1e-11);
                CHECK(std::abs(gamma_single(c, s, theta).d_theta) >= 1e-6);
            }
        }
    }
}

TEST_CASE("slope signs at endpoint-condition zeros") {
    // Wherever an endpoint residual vanishes, the s- and theta-slopes share the
    // sign of the endpoint: opposite signs at -1, equal signs at +1.
    mt::Rng rng(8080);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const ProblemSpec spec = mt::random_admissible_spec(rng);
        for (double s : {0.7, 1.9, 4.3, 9.1}) {
            for (Side side : {Side::Left, Side::Right}) {
                const EndpointCondition& cond = side == Side::Left ? spec.left : spec.right;
                SingleCondition single;
                single.alpha0 = cond.alpha0;
                single.beta0 = cond.beta0;
                single.eta0 = cond.endpoint();
                single.points = cond.points;
                const double theta = single_gamma_zero(single, s);
                const GammaGradient g = gamma_endpoint(side, s, theta, spec);
                REQUIRE(std::abs(g.value) <= 1e-10);
                const double product = side_sign(side) * g.d_s * g.d_theta;
                CHECK(product > 0.0);
                ++checked;
            }
        }
    }
    CHECK(checked == 800);
}

TEST_CASE("endpoint non-tangency of the value-value ground pair") {
    const ProblemSpec spec;
    const auto [left, right] = transversality_check(PhaseSolution{pi / 2.0, pi / 2.0}, spec);
    CHECK(left == doctest::Approx(-pi / 2.0).epsilon(1e-14));
    CHECK(right == doctest::Approx(pi / 2.0).epsilon(1e-14));
}
