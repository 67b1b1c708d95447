#include <cmath>
#include <vector>

#include "doctest.h"
#include "mpsl/gamma.hpp"
#include "mpsl/numerics.hpp"
#include "mpsl/oracle.hpp"
#include "support.hpp"

using namespace mpsl;
namespace mt = mpsl::testing;

namespace {

// Newton refinement of the left-condition zero, independent of the library's
// branch helper, for derivative cross-checks.
double refine_left_theta(const ProblemSpec& spec, double s, double guess) {
    double theta = guess;
    for (int i = 0; i < 50; ++i) {
        const GammaGradient g = gamma_endpoint(Side::Left, s, theta, spec, 1.0);
        if (std::abs(g.value) <= 1e-14) break;
        theta -= g.value / g.d_theta;
    }
    return theta;
}

}  // namespace

TEST_CASE("left-condition branch stays on the zero set and moves continuously") {
    mt::Rng rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        const ProblemSpec spec = mt::random_admissible_spec(rng);
        std::vector<double> grid;
        for (double s = 0.3; s <= 10.0; s += pi / 64.0) grid.push_back(s);
        const std::vector<double> thetas = theta_branch(spec, grid);
        REQUIRE(thetas.size() == grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(gamma_endpoint(Side::Left, grid[i], thetas[i], spec, 1.0).value) <=
                  1e-11);
            if (i > 0) CHECK(std::abs(thetas[i] - thetas[i - 1]) < pi / 2.0);
        }
    }
}

TEST_CASE("scan oracle on the value-value problem") {
    const std::vector<OracleRoot> roots = oracle_spectrum(mt::dirichlet_spec(), 8.0);
    REQUIRE(roots.size() == 5);  // s = pi/2, pi, 3pi/2, 2pi, 5pi/2
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double expected = (static_cast<double>(i) + 1.0) * pi / 2.0;
        CHECK(roots[i].phase.s == doctest::Approx(expected).epsilon(1e-11));
        CHECK(roots[i].k == static_cast<int>(i));
        CHECK(roots[i].dF_ds != 0.0);
    }
}

TEST_CASE("scan oracle matches the closed-form coupled spectrum") {
    const ProblemSpec spec = mt::value_coupled_spec();
    const std::vector<OracleRoot> roots = oracle_spectrum(spec, 7.0);
    REQUIRE(roots.size() >= 3);
    CHECK(roots[0].phase.s == doctest::Approx(std::acos(0.2)).epsilon(1e-11));
    CHECK(roots[1].phase.s == doctest::Approx(pi).epsilon(1e-11));
    CHECK(roots[2].phase.s == doctest::Approx(2.0 * pi - std::acos(0.2)).epsilon(1e-11));
    CHECK(roots[0].k == 0);
    CHECK(roots[1].k == 1);
    CHECK(roots[2].k == 2);
}

TEST_CASE("recorded root slope matches a finite difference of the scan function") {
    const ProblemSpec spec = mt::value_coupled_spec();
    const std::vector<OracleRoot> roots = oracle_spectrum(spec, 7.0);
    REQUIRE(!roots.empty());
    for (const OracleRoot& root : roots) {
        const double s0 = root.phase.s;
        const double h = 1e-6;
        auto F = [&](double s) {
            const double theta = refine_left_theta(spec, s, root.phase.theta);
            return gamma_endpoint(Side::Right, s, theta, spec, 1.0).value;
        };
        const double fd = (F(s0 + h) - F(s0 - h)) / (2.0 * h);
        CHECK(root.dF_ds == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("scan oracle and homotopy agree eigenvalue by eigenvalue") {
    mt::Rng rng(90210);
    for (int trial = 0; trial < 15; ++trial) {
        const ProblemSpec spec = mt::random_admissible_spec(rng);
        const std::vector<Eigenpair> pairs = solve_spectrum(spec, 6);
        const std::vector<OracleRoot> roots = oracle_spectrum(spec, pairs.back().phase.s + 0.5);

        std::vector<const Eigenpair*> tracked;
        for (const auto& p : pairs)
            if (!p.constant_mode) tracked.push_back(&p);
        std::vector<const OracleRoot*> kept;
        for (const auto& r : roots)
            if (r.k <= 6) kept.push_back(&r);

        REQUIRE(kept.size() == tracked.size());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            CHECK(kept[i]->k == tracked[i]->k);
            CHECK(std::abs(kept[i]->lambda - tracked[i]->lambda) /
                      std::max(1.0, tracked[i]->lambda) <=
                  1e-8);
        }
    }
}

TEST_CASE("oracle rejects bad input") {
    CHECK_THROWS_AS(oracle_spectrum(mt::dirichlet_spec(), -1.0), DomainError);
    ProblemSpec bad;
    bad.left.beta0 = 0.7;
    CHECK_THROWS_AS(oracle_spectrum(bad, 5.0), DomainError);
    std::vector<double> nonmonotone{1.0, 0.5};
    CHECK_THROWS_AS(theta_branch(mt::dirichlet_spec(), nonmonotone), DomainError);
}
