#include "mpsl/problem.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace mpsl {

namespace {

double square(double x) { return x * x; }

void check_structure(const EndpointCondition& c, const char* label) {
    if (c.points.empty())
        throw StructuralError(std::string(label) + ": a condition needs at least one point row");
    const double own = c.endpoint();
    for (const auto& p : c.points) {
        if (!(p.eta >= -1.0 && p.eta <= 1.0))
            throw StructuralError(std::string(label) + ": eta outside [-1, 1]");
        if (p.eta == own)
            throw StructuralError(std::string(label) + ": eta coincides with the condition's own endpoint");
    }
}

SideReport report_side(const EndpointCondition& c) {
    SideReport r;
    r.nondegenerate = c.alpha0 >= 0.0 && c.alpha0 + std::abs(c.beta0) > 0.0;
    r.sign = side_sign(c.side) * c.beta0 >= 0.0;

    // Contraction of the coupling rows relative to the separated part. A zero
    // denominator is fine only when the matching numerator vanishes too; then
    // that fraction is simply absent.
    const double sa = c.sum_abs_alpha();
    const double sb = c.sum_abs_beta();
    double lhs = 0.0;
    bool convention_ok = true;
    if (c.alpha0 == 0.0) {
        convention_ok = convention_ok && sa == 0.0;
    } else {
        lhs += square(sa / c.alpha0);
    }
    if (c.beta0 == 0.0) {
        convention_ok = convention_ok && sb == 0.0;
    } else {
        lhs += square(sb / c.beta0);
    }
    if (!convention_ok) {
        r.contraction = false;
        r.margin = -std::numeric_limits<double>::infinity();
    } else {
        r.contraction = lhs < 1.0;
        r.margin = 1.0 - lhs;
    }
    return r;
}

bool dirichlet_pattern(const EndpointCondition& c) {
    if (c.beta0 != 0.0) return false;
    for (const auto& p : c.points)
        if (p.beta != 0.0) return false;
    return c.sum_abs_alpha() < c.alpha0;
}

bool neumann_pattern(const EndpointCondition& c) {
    if (c.alpha0 != 0.0) return false;
    for (const auto& p : c.points)
        if (p.alpha != 0.0) return false;
    return c.sum_abs_beta() < std::abs(c.beta0);
}

}  // namespace

double EndpointCondition::sum_abs_alpha() const {
    double s = 0.0;
    for (const auto& p : points) s += std::abs(p.alpha);
    return s;
}

double EndpointCondition::sum_abs_beta() const {
    double s = 0.0;
    for (const auto& p : points) s += std::abs(p.beta);
    return s;
}

double EndpointCondition::sum_alpha() const {
    double s = 0.0;
    for (const auto& p : points) s += p.alpha;
    return s;
}

double EndpointCondition::sum_beta() const {
    double s = 0.0;
    for (const auto& p : points) s += p.beta;
    return s;
}

bool EndpointCondition::separated() const {
    for (const auto& p : points)
        if (p.alpha != 0.0 || p.beta != 0.0) return false;
    return true;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Separated: return "Separated";
        case Classification::DirichletType: return "DirichletType";
        case Classification::NeumannType: return "NeumannType";
        case Classification::Mixed: return "Mixed";
        case Classification::General: return "General";
    }
    return "General";
}

AdmissibilityReport validate(const ProblemSpec& spec) {
    if (spec.left.side != Side::Left || spec.right.side != Side::Right)
        throw StructuralError("left/right conditions attached to the wrong endpoints");
    check_structure(spec.left, "left");
    check_structure(spec.right, "right");

    AdmissibilityReport r;
    r.left = report_side(spec.left);
    r.right = report_side(spec.right);
    r.cond_nondegenerate = r.left.nondegenerate && r.right.nondegenerate;
    r.cond_sign = r.left.sign && r.right.sign;
    r.cond_contraction = r.left.contraction && r.right.contraction;
    r.cond_invertible = spec.left.alpha0 + spec.right.alpha0 > 0.0;
    r.classification = classify(spec);
    return r;
}

Classification classify(const ProblemSpec& spec) {
    if (spec.left.separated() && spec.right.separated()) return Classification::Separated;
    const bool dl = dirichlet_pattern(spec.left), dr = dirichlet_pattern(spec.right);
    const bool nl = neumann_pattern(spec.left), nr = neumann_pattern(spec.right);
    if (dl && dr) return Classification::DirichletType;
    if (nl && nr) return Classification::NeumannType;
    if ((dl && nr) || (nl && dr)) return Classification::Mixed;
    return Classification::General;
}

ProblemSpec rescale(const ProblemSpec& spec_on_ab, double a, double b) {
    if (!(a < b)) throw StructuralError("interval must satisfy a < b");
    if (a == -1.0 && b == 1.0) return spec_on_ab;  // keep the identity exact

    const double scale = 2.0 / (b - a);
    ProblemSpec out = spec_on_ab;
    for (EndpointCondition* c : {&out.left, &out.right}) {
        const double own = c->side == Side::Left ? a : b;
        c->beta0 *= scale;
        for (auto& p : c->points) {
            if (!(p.eta >= a && p.eta <= b))
                throw StructuralError("eta outside the declared interval");
            if (p.eta == own)
                throw StructuralError("eta coincides with the condition's own endpoint");
            p.eta = 2.0 * (p.eta - a) / (b - a) - 1.0;
            p.beta *= scale;
        }
    }
    return out;
}

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            throw StructuralError(std::string("unknown key \"") + it.key() + "\" in " + where);
    }
}

double number_at(const json& j, const char* key, const char* where) {
    if (!j.contains(key))
        throw StructuralError(std::string("missing key \"") + key + "\" in " + where);
    const json& v = j.at(key);
    if (!v.is_number())
        throw StructuralError(std::string("key \"") + key + "\" in " + where + " must be a number");
    return v.get<double>();
}

EndpointCondition side_from_json(const json& j, Side side, const char* where) {
    if (!j.is_object())
        throw StructuralError(std::string(where) + " must be an object");
    reject_unknown(j, {"alpha0", "beta0", "points"}, where);
    EndpointCondition c;
    c.side = side;
    c.alpha0 = number_at(j, "alpha0", where);
    c.beta0 = number_at(j, "beta0", where);
    c.points.clear();
    if (j.contains("points")) {
        const json& pts = j.at("points");
        if (!pts.is_array())
            throw StructuralError(std::string(where) + ".points must be an array");
        for (const json& p : pts) {
            if (!p.is_object())
                throw StructuralError(std::string(where) + ".points entries must be objects");
            reject_unknown(p, {"eta", "alpha", "beta"}, "point");
            BoundaryPoint bp;
            bp.eta = number_at(p, "eta", "point");
            bp.alpha = number_at(p, "alpha", "point");
            bp.beta = number_at(p, "beta", "point");
            c.points.push_back(bp);
        }
    }
    return c;
}

}  // namespace

ProblemSpec problem_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw StructuralError("problem file must hold a JSON object");
    reject_unknown(j, {"interval", "left", "right"}, "problem");
    if (!j.contains("left") || !j.contains("right"))
        throw StructuralError("problem needs both \"left\" and \"right\" conditions");

    double a = -1.0, b = 1.0;
    if (j.contains("interval")) {
        const json& iv = j.at("interval");
        if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
            throw StructuralError("\"interval\" must be [a, b]");
        a = iv[0].get<double>();
        b = iv[1].get<double>();
        if (!(a < b)) throw StructuralError("interval must satisfy a < b");
    }

    ProblemSpec raw;
    raw.left = side_from_json(j.at("left"), Side::Left, "left");
    raw.right = side_from_json(j.at("right"), Side::Right, "right");
    // An empty point list becomes one zero row; anchor it at the interval
    // midpoint so it can never collide with an endpoint.
    const double mid = 0.5 * (a + b);
    if (raw.left.points.empty()) raw.left.points.push_back(BoundaryPoint{mid, 0.0, 0.0});
    if (raw.right.points.empty()) raw.right.points.push_back(BoundaryPoint{mid, 0.0, 0.0});
    ProblemSpec spec = rescale(raw, a, b);
    validate(spec);  // surface structural problems at load time
    return spec;
}

nlohmann::json problem_to_json(const ProblemSpec& spec) {
    auto side = [](const EndpointCondition& c) {
        json pts = json::array();
        for (const auto& p : c.points)
            pts.push_back({{"eta", p.eta}, {"alpha", p.alpha}, {"beta", p.beta}});
        return json{{"alpha0", c.alpha0}, {"beta0", c.beta0}, {"points", std::move(pts)}};
    };
    return json{{"left", side(spec.left)}, {"right", side(spec.right)}};
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open problem file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw StructuralError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return problem_from_json(j);
}

nlohmann::json report_to_json(const AdmissibilityReport& r) {
    auto side = [](const SideReport& s) {
        return nlohmann::json{{"nondegenerate", s.nondegenerate},
                              {"sign", s.sign},
                              {"contraction", s.contraction},
                              {"margin", s.margin}};
    };
    return nlohmann::json{{"admissible", r.admissible()},
                          {"classification", to_string(r.classification)},
                          {"cond_nondegenerate", r.cond_nondegenerate},
                          {"cond_sign", r.cond_sign},
                          {"cond_contraction", r.cond_contraction},
                          {"cond_invertible", r.cond_invertible},
                          {"left", side(r.left)},
                          {"right", side(r.right)}};
}

}  // namespace mpsl
