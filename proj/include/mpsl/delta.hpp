#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mpsl/continuation.hpp"
#include "mpsl/problem.hpp"

namespace mpsl {

/// A real function on [-1, 1]: either a callable (optionally with an exact
/// derivative) or uniform samples joined by a natural cubic spline. Sample
/// vectors must hold an odd number of points, at least 201.
class SampledFunction {
public:
    explicit SampledFunction(std::function<double(double)> f);
    SampledFunction(std::function<double(double)> f, std::function<double(double)> df);
    static SampledFunction from_samples(std::vector<double> values);

    double operator()(double x) const;
    bool has_derivative() const { return static_cast<bool>(df_); }
    double derivative(double x) const;  // throws DomainError when unavailable

private:
    SampledFunction() = default;
    std::function<double(double)> f_;
    std::function<double(double)> df_;
};

/// Result of inverting u'' = h subject to both boundary conditions:
/// u = v + c0 + c1*x where v(x) is the particular solution with
/// v(-1) = v'(-1) = 0, and (c0, c1) solve the 2x2 system that absorbs the
/// boundary defect of v.
struct InverseSolution {
    double c0 = 0.0;
    double c1 = 0.0;
    SampledFunction u;  // carries an exact derivative
};

/// Invert the second-derivative operator under the problem's boundary
/// conditions. The particular solution is evaluated through the Cauchy kernel,
/// v(x) = integral of (x - tau) * h(tau) over [-1, x], with adaptive Simpson
/// quadrature (tolerance 1e-11) per evaluation point. Throws NeumannCase when
/// alpha0(-1) + alpha0(+1) = 0 (the operator has the constant kernel there) and
/// SingularSystem when |det| of the correction system falls below 1e-12.
InverseSolution apply_inverse(const SampledFunction& h, const ProblemSpec& spec);

/// Values of the inverse on a uniform n-point grid (n odd, >= 201). The two
/// cumulative moment integrals are accumulated cell by cell with a 5-point
/// Gauss rule, which keeps the quadrature error a smooth function of x; second
/// differences of the returned samples therefore reproduce h to near machine
/// accuracy instead of amplifying pointwise quadrature noise.
std::vector<double> apply_inverse_grid(const SampledFunction& h, const ProblemSpec& spec, int n);

/// Boundary residual of a differentiable function against one condition.
double boundary_residual(const SampledFunction& u, const EndpointCondition& cond);

/// max over a 401-point grid of |u + lambda * inverse(u)| with u the eigenpair's
/// trial solution scaled to sup norm one. Near zero exactly when the pair solves
/// the eigenvalue problem.
double eigen_residual(const Eigenpair& pair, const ProblemSpec& spec);

}  // namespace mpsl
