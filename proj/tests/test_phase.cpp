#include <cmath>

#include "doctest.h"
#include "mpsl/numerics.hpp"
#include "mpsl/phase.hpp"
#include "support.hpp"

using namespace mpsl;
namespace mt = mpsl::testing;

TEST_CASE("trial solution evaluation") {
    const PhaseSolution p{2.0, 0.3};
    const WValue w = eval_w(p, 0.5);
    CHECK(w.u == doctest::Approx(std::sin(1.3)).epsilon(1e-15));
    CHECK(w.uprime == doctest::Approx(2.0 * std::cos(1.3)).epsilon(1e-15));
    CHECK(p.lambda() == 4.0);
}

TEST_CASE("phase angle is affine with the left value pinned to [0, 2pi)") {
    const PhaseSolution p{1.5, 1.0};  // theta - s = -0.5 wraps to 2pi - 0.5
    const double left = prufer_angle(p, -1.0);
    CHECK(left == doctest::Approx(2.0 * pi - 0.5).epsilon(1e-15));
    CHECK(prufer_angle(p, 0.25) == doctest::Approx(left + 1.5 * 1.25).epsilon(1e-15));
    CHECK(prufer_angle(p, 1.0) - left == doctest::Approx(2.0 * 1.5).epsilon(1e-15));
}

TEST_CASE("boundary phase targets") {
    SUBCASE("value conditions") {
        const TargetAngles t = target_angles(2.0, mt::dirichlet_spec());
        CHECK(t.omega_minus == 0.0);
        CHECK(t.omega_plus == pi);
    }
    SUBCASE("derivative conditions") {
        const TargetAngles t = target_angles(2.0, mt::neumann_spec());
        CHECK(t.omega_minus == pi / 2.0);
        CHECK(t.omega_plus == pi / 2.0);
    }
    SUBCASE("mixed conditions at lambda = 1") {
        const TargetAngles t = target_angles(1.0, mt::robin_spec());
        CHECK(t.omega_minus == doctest::Approx(pi / 4.0).epsilon(1e-15));
        CHECK(t.omega_plus == doctest::Approx(3.0 * pi / 4.0).epsilon(1e-15));
    }
    SUBCASE("targets demand a positive lambda") {
        CHECK_THROWS_AS(target_angles(0.0, mt::dirichlet_spec()), DomainError);
        CHECK_THROWS_AS(target_angles(-1.0, mt::dirichlet_spec()), DomainError);
    }
}

TEST_CASE("oscillation classification on the value-value problem") {
    const ProblemSpec spec = mt::dirichlet_spec();
    SUBCASE("the ground pair") {
        const auto osc = classify_oscillation(PhaseSolution{pi / 2.0, pi / 2.0}, spec);
        REQUIRE(osc.has_value());
        CHECK(osc->k == 0);
        CHECK(osc->sign == OscSign::Plus);
        CHECK(osc->boundary_margin == doctest::Approx(pi / 2.0).epsilon(1e-12));
    }
    SUBCASE("a negatively oriented pair") {
        const auto osc = classify_oscillation(PhaseSolution{pi, 0.0}, spec);
        REQUIRE(osc.has_value());
        CHECK(osc->k == 1);
        CHECK(osc->sign == OscSign::Minus);
    }
    SUBCASE("a phase on no class boundary window") {
        CHECK_FALSE(classify_oscillation(PhaseSolution{1.0, pi / 2.0 + 1.0}, spec).has_value());
    }
}

TEST_CASE("flipping the sign of w toggles the class sign only") {
    const ProblemSpec spec = mt::robin_spec();
    mt::Rng rng(99);
    int classified = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const PhaseSolution p{mt::uniform(rng, 0.3, 12.0), mt::uniform(rng, 0.0, 2.0 * pi)};
        const auto a = classify_oscillation(p, spec);
        const auto b = classify_oscillation(PhaseSolution{p.s, p.theta + pi}, spec);
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
            ++classified;
            CHECK(a->k == b->k);
            CHECK(a->sign != b->sign);
            CHECK(a->boundary_margin == doctest::Approx(b->boundary_margin).epsilon(1e-10));
        }
    }
    CHECK(classified > 50);  // the generator must actually exercise the comparison
}

TEST_CASE("interior zero counts") {
    SUBCASE("value-value ladder") {
        // s = (k+1)*pi/2, theta = s: u = sin(s(x+1)) vanishes k times inside.
        for (int k = 0; k <= 6; ++k) {
            const double s = (k + 1) * pi / 2.0;
            const PhaseSolution p{s, s};
            CHECK(count_interior_zeros(p, false) == k);
            CHECK(count_interior_zeros(p, true) == k + 1);
        }
    }
    SUBCASE("derivative-derivative ladder") {
        for (int k = 1; k <= 6; ++k) {
            const double s = k * pi / 2.0;
            const PhaseSolution p{s, pi / 2.0 + s};
            CHECK(count_interior_zeros(p, false) == k);
            CHECK(count_interior_zeros(p, true) == k - 1);
        }
    }
    SUBCASE("grazing endpoints are excluded") {
        const PhaseSolution p{pi, pi};  // zeros at x = -1, 0, +1
        CHECK(count_interior_zeros(p, false) == 1);
    }
}

TEST_CASE("sup norm in closed form") {
    CHECK(sup_norm_w(PhaseSolution{0.3, 0.0}) == doctest::Approx(std::sin(0.3)).epsilon(1e-15));
    CHECK(sup_norm_w(PhaseSolution{2.0, 0.0}) == 1.0);
    CHECK(sup_norm_w(PhaseSolution{0.2, 2.0}) ==
          doctest::Approx(std::max(std::abs(std::sin(1.8)), std::abs(std::sin(2.2))))
              .epsilon(1e-15));
    // Dense-grid cross-check.
    mt::Rng rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const PhaseSolution p{mt::uniform(rng, 0.05, 15.0), mt::uniform(rng, -7.0, 7.0)};
        double dense = 0.0;
        for (int j = 0; j <= 4000; ++j) {
            const double x = -1.0 + 2.0 * j / 4000.0;
            dense = std::max(dense, std::abs(eval_w(p, x).u));
        }
        const double closed = sup_norm_w(p);
        CHECK(closed >= dense - 1e-12);
        // The grid undershoots a peak by up to (s*step)^2/8, about 7e-6 at s = 15.
        CHECK(closed <= dense + 1e-5);
    }
}
