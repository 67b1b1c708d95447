#include "mpsl/delta.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "mpsl/numerics.hpp"

namespace mpsl {

namespace {

constexpr int kMinSamples = 201;

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 5> kGaussNode = {
    -0.9061798459386640, -0.5384693101056831, 0.0,
    0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGaussWeight = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};

template <typename F>
double gauss_cell(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += kGaussWeight[i] * f(mid + half * kGaussNode[i]);
    return acc * half;
}

template <typename F>
double simpson_rec(const F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, int force) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // `force` keeps the first few levels subdividing unconditionally: an
    // oscillatory integrand whose zeros line up with the coarse sample points
    // would otherwise look converged at zero.
    if (depth <= 0 || (force <= 0 && std::abs(delta) <= 15.0 * tol))
        return left + right + delta / 15.0;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, force - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, force - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 30, 5);
}

struct Moments {
    double i0;  // integral of h over [-1, x]
    double i1;  // integral of tau*h(tau) over [-1, x]
};

Moments moments_at(const SampledFunction& h, double x, double tol) {
    Moments m;
    m.i0 = adaptive_simpson([&](double t) { return h(t); }, -1.0, x, tol);
    m.i1 = adaptive_simpson([&](double t) { return t * h(t); }, -1.0, x, tol);
    return m;
}

// v(x) = integral of (x - tau) h(tau) over [-1, x] = x*I0(x) - I1(x); v' = I0.
struct Correction {
    double c0;
    double c1;
};

Correction solve_correction(const SampledFunction& h, const ProblemSpec& spec) {
    const AdmissibilityReport rep = validate(spec);
    if (!rep.cond_invertible)
        throw NeumannCase("the inverse operator needs alpha0(-1) + alpha0(+1) > 0");

    const double tol = 1e-11;
    auto functional_of_v = [&](const EndpointCondition& c) {
        const double e = c.endpoint();
        const Moments me = moments_at(h, e, tol);
        double acc = c.alpha0 * (e * me.i0 - me.i1) + c.beta0 * me.i0;
        for (const auto& p : c.points) {
            const Moments mp = moments_at(h, p.eta, tol);
            acc -= p.alpha * (p.eta * mp.i0 - mp.i1) + p.beta * mp.i0;
        }
        return acc;
    };
    auto row = [](const EndpointCondition& c) {
        // The boundary functional applied to 1 and to x.
        const double a = c.alpha0 - c.sum_alpha();
        double b = c.endpoint() * c.alpha0 + c.beta0 - c.sum_beta();
        for (const auto& p : c.points) b -= p.alpha * p.eta;
        return std::pair<double, double>{a, b};
    };

    const auto [al, bl] = row(spec.left);
    const auto [ar, br] = row(spec.right);
    const double det = al * br - bl * ar;
    if (std::abs(det) < 1e-12)
        throw SingularSystem("boundary correction system is numerically singular");
    const double rl = -functional_of_v(spec.left);
    const double rr = -functional_of_v(spec.right);
    return Correction{(rl * br - bl * rr) / det, (al * rr - rl * ar) / det};
}

}  // namespace

SampledFunction::SampledFunction(std::function<double(double)> f) : f_(std::move(f)) {
    if (!f_) throw StructuralError("sampled function needs a callable");
}

SampledFunction::SampledFunction(std::function<double(double)> f, std::function<double(double)> df)
    : f_(std::move(f)), df_(std::move(df)) {
    if (!f_ || !df_) throw StructuralError("sampled function needs callables");
}

SampledFunction SampledFunction::from_samples(std::vector<double> values) {
    const std::size_t n = values.size();
    if (n < kMinSamples || n % 2 == 0)
        throw StructuralError("sample vectors must hold an odd number of points, at least 201");

    // Natural cubic spline on the uniform grid over [-1, 1]: solve the
    // tridiagonal system for the knot second derivatives, then evaluate
    // piecewise.
    const double hstep = 2.0 / static_cast<double>(n - 1);
    auto m = std::make_shared<std::vector<double>>(n, 0.0);
    {
        // Thomas sweep for the interior rows [1 4 1]; the natural end rows pin
        // the first and last knot curvature to zero.
        std::vector<double> c(n, 0.0), d(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i)
            d[i] = 6.0 * (values[i - 1] - 2.0 * values[i] + values[i + 1]) / (hstep * hstep);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double lower = i == 1 ? 0.0 : 1.0;
            const double denom = 4.0 - lower * c[i - 1];
            c[i] = (i + 2 < n ? 1.0 : 0.0) / denom;
            d[i] = (d[i] - lower * d[i - 1]) / denom;
        }
        for (std::size_t ii = n - 1; ii-- > 1;) (*m)[ii] = d[ii] - c[ii] * (*m)[ii + 1];
    }

    auto vals = std::make_shared<std::vector<double>>(std::move(values));
    auto locate = [hstep, n](double x) {
        if (!(x >= -1.0 - 1e-12 && x <= 1.0 + 1e-12))
            throw DomainError("evaluation outside [-1, 1]");
        double clamped = std::min(1.0, std::max(-1.0, x));
        auto i = static_cast<std::size_t>((clamped + 1.0) / hstep);
        if (i >= n - 1) i = n - 2;
        return std::pair<std::size_t, double>{i, clamped};
    };

    SampledFunction out;
    out.f_ = [vals, m, locate, hstep](double x) {
        const auto [i, cx] = locate(x);
        const double xl = -1.0 + hstep * static_cast<double>(i);
        const double a = (xl + hstep - cx) / hstep;
        const double b = (cx - xl) / hstep;
        return a * (*vals)[i] + b * (*vals)[i + 1] +
               ((a * a * a - a) * (*m)[i] + (b * b * b - b) * (*m)[i + 1]) * hstep * hstep / 6.0;
    };
    out.df_ = [vals, m, locate, hstep](double x) {
        const auto [i, cx] = locate(x);
        const double xl = -1.0 + hstep * static_cast<double>(i);
        const double a = (xl + hstep - cx) / hstep;
        const double b = (cx - xl) / hstep;
        return ((*vals)[i + 1] - (*vals)[i]) / hstep +
               ((3.0 * b * b - 1.0) * (*m)[i + 1] - (3.0 * a * a - 1.0) * (*m)[i]) * hstep / 6.0;
    };
    return out;
}

double SampledFunction::operator()(double x) const { return f_(x); }

double SampledFunction::derivative(double x) const {
    if (!df_) throw DomainError("this function carries no derivative");
    return df_(x);
}

InverseSolution apply_inverse(const SampledFunction& h, const ProblemSpec& spec) {
    const Correction c = solve_correction(h, spec);
    // Copy the integrand by value so the solution owns what it needs.
    auto hh = std::make_shared<SampledFunction>(h);
    return InverseSolution{
        c.c0, c.c1,
        SampledFunction(
            [hh, c](double x) {
                const Moments m = moments_at(*hh, x, 1e-11);
                return x * m.i0 - m.i1 + c.c0 + c.c1 * x;
            },
            [hh, c](double x) {
                const double i0 =
                    adaptive_simpson([&](double t) { return (*hh)(t); }, -1.0, x, 1e-11);
                return i0 + c.c1;
            })};
}

std::vector<double> apply_inverse_grid(const SampledFunction& h, const ProblemSpec& spec, int n) {
    if (n < kMinSamples || n % 2 == 0)
        throw StructuralError("grids must hold an odd number of points, at least 201");
    const Correction c = solve_correction(h, spec);

    // Cumulative moments, one Gauss cell at a time. The per-cell rule keeps the
    // quadrature error varying smoothly with the endpoint, which is what makes
    // second differences of the result clean.
    const double step = 2.0 / static_cast<double>(n - 1);
    std::vector<double> out(static_cast<std::size_t>(n));
    double i0 = 0.0, i1 = 0.0;
    out[0] = c.c0 - c.c1;  // v(-1) = 0
    for (int j = 1; j < n; ++j) {
        const double a = -1.0 + step * static_cast<double>(j - 1);
        const double b = -1.0 + step * static_cast<double>(j);
        i0 += gauss_cell([&](double t) { return h(t); }, a, b);
        i1 += gauss_cell([&](double t) { return t * h(t); }, a, b);
        out[static_cast<std::size_t>(j)] = b * i0 - i1 + c.c0 + c.c1 * b;
    }
    return out;
}

double boundary_residual(const SampledFunction& u, const EndpointCondition& cond) {
    const bool needs_derivative = cond.beta0 != 0.0 || cond.sum_abs_beta() != 0.0;
    if (needs_derivative && !u.has_derivative())
        throw DomainError("condition involves derivatives but the function has none");
    const double e = cond.endpoint();
    double acc = cond.alpha0 * u(e);
    if (cond.beta0 != 0.0) acc += cond.beta0 * u.derivative(e);
    for (const auto& p : cond.points) {
        if (p.alpha != 0.0) acc -= p.alpha * u(p.eta);
        if (p.beta != 0.0) acc -= p.beta * u.derivative(p.eta);
    }
    return acc;
}

double eigen_residual(const Eigenpair& pair, const ProblemSpec& spec) {
    if (pair.constant_mode)
        throw NeumannCase("the constant mode has no inverse-operator residual");
    const PhaseSolution p = pair.phase;
    const double norm = sup_norm_w(p);
    SampledFunction u([p, norm](double x) { return eval_w(p, x).u / norm; },
                      [p, norm](double x) { return eval_w(p, x).uprime / norm; });
    const int n = 401;
    const std::vector<double> w = apply_inverse_grid(u, spec, n);
    const double lambda = pair.lambda;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(n - 1);
        worst = std::max(worst, std::abs(u(x) + lambda * w[static_cast<std::size_t>(j)]));
    }
    return worst;
}

}  // namespace mpsl
