#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mpsl/errors.hpp"

namespace mpsl {

enum class Side { Left, Right };

constexpr double endpoint_of(Side s) { return s == Side::Left ? -1.0 : 1.0; }
constexpr double side_sign(Side s) { return s == Side::Left ? -1.0 : 1.0; }

// One interior coupling row (eta, alpha, beta) of a boundary condition.
struct BoundaryPoint {
    double eta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

/// A multi-point condition attached to one endpoint e = -1 or e = +1:
///
///   alpha0*u(e) + beta0*u'(e) = sum_i alpha_i*u(eta_i) + sum_i beta_i*u'(eta_i)
///
/// The point list always has at least one row; a single all-zero row encodes a
/// classical separated condition. eta_i may repeat and may equal the opposite
/// endpoint, but never the condition's own endpoint.
struct EndpointCondition {
    Side side = Side::Left;
    double alpha0 = 1.0;
    double beta0 = 0.0;
    std::vector<BoundaryPoint> points{BoundaryPoint{}};

    double endpoint() const { return endpoint_of(side); }
    double sum_abs_alpha() const;
    double sum_abs_beta() const;
    double sum_alpha() const;
    double sum_beta() const;
    bool separated() const;  // every point row identically zero
};

/// Full problem: -u'' = lambda*u on (-1, 1) with one condition per endpoint.
struct ProblemSpec {
    EndpointCondition left{Side::Left};
    EndpointCondition right{Side::Right};
};

enum class Classification { Separated, DirichletType, NeumannType, Mixed, General };

std::string to_string(Classification c);

struct SideReport {
    bool nondegenerate = false;  // alpha0 >= 0 and alpha0 + |beta0| > 0
    bool sign = false;           // -beta0 >= 0 on the left, +beta0 >= 0 on the right
    bool contraction = false;    // (sum|alpha_i|/alpha0)^2 + (sum|beta_i|/beta0)^2 < 1
    double margin = 0.0;         // 1 minus the contraction left-hand side; -inf when a
                                 // zero denominator meets a nonzero numerator
};

struct AdmissibilityReport {
    SideReport left;
    SideReport right;
    bool cond_nondegenerate = false;
    bool cond_sign = false;
    bool cond_contraction = false;
    bool cond_invertible = false;  // alpha0(-1) + alpha0(+1) > 0
    Classification classification = Classification::General;

    // Invertibility is deliberately excluded: a pure derivative-coupled problem
    // is a valid eigenvalue problem, it merely has a zero eigenvalue.
    bool admissible() const { return cond_nondegenerate && cond_sign && cond_contraction; }
};

/// Structural checks (throws StructuralError) plus the coefficient hypotheses.
AdmissibilityReport validate(const ProblemSpec& spec);

/// Pattern classification of the coefficient layout. Scale invariant: each
/// condition may be multiplied by a positive constant without changing the class.
Classification classify(const ProblemSpec& spec);

/// Map a problem posed on [a, b] (its eta values live in [a, b]) to the
/// reference interval [-1, 1]: eta is transported affinely, every beta picks up
/// the chain-rule factor 2/(b-a), alphas are unchanged. The identity interval
/// is passed through bit-for-bit.
ProblemSpec rescale(const ProblemSpec& spec_on_ab, double a, double b);

/// Parse the canonical problem-file layout:
///   {"interval": [a, b],             -- optional, defaults to [-1, 1]
///    "left":  {"alpha0": r, "beta0": r, "points": [{"eta": r, "alpha": r, "beta": r}, ...]},
///    "right": {...}}
/// Unknown keys are rejected. A missing or empty point list becomes one zero row.
ProblemSpec problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const ProblemSpec& spec);
ProblemSpec load_problem_file(const std::string& path);

nlohmann::json report_to_json(const AdmissibilityReport& r);

}  // namespace mpsl
