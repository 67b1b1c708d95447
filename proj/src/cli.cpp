#include "mpsl/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpsl/delta.hpp"
#include "mpsl/oracle.hpp"
#include "mpsl/verify.hpp"

namespace mpsl {

namespace {

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void print_report(const Report& r, std::ostream& out) {
    for (const auto& c : r.checks)
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  value=" << fmt(c.value)
            << "  tolerance=" << fmt(c.tolerance) << "\n";
    out << (r.all_pass() ? "OK" : "FAILED") << "  " << r.name << "\n";
}

int cmd_validate(const std::string& path, const std::string& out_format, std::ostream& out) {
    const ProblemSpec spec = load_problem_file(path);
    const AdmissibilityReport rep = validate(spec);
    if (out_format == "json") {
        out << report_to_json(rep).dump(2) << "\n";
    } else {
        out << "classification," << to_string(rep.classification) << "\n"
            << "admissible," << (rep.admissible() ? "true" : "false") << "\n"
            << "cond_nondegenerate," << (rep.cond_nondegenerate ? "true" : "false") << "\n"
            << "cond_sign," << (rep.cond_sign ? "true" : "false") << "\n"
            << "cond_contraction," << (rep.cond_contraction ? "true" : "false") << "\n"
            << "cond_invertible," << (rep.cond_invertible ? "true" : "false") << "\n"
            << "margin_left," << fmt(rep.left.margin) << "\n"
            << "margin_right," << fmt(rep.right.margin) << "\n";
    }
    return rep.admissible() ? 0 : 1;
}

int cmd_spectrum(const std::string& path, int k_max, const std::string& method,
                 const std::string& out_format, std::ostream& out) {
    const ProblemSpec spec = load_problem_file(path);

    std::vector<Eigenpair> pairs;
    std::vector<OracleRoot> roots;
    if (method == "continuation" || method == "both") pairs = solve_spectrum(spec, k_max);
    if (method == "oracle" || method == "both") {
        double s_max = (static_cast<double>(k_max) / 2.0 + 2.5) * 3.2;
        if (!pairs.empty()) s_max = pairs.back().phase.s + 0.5;
        roots = oracle_spectrum(spec, s_max);
        std::erase_if(roots, [&](const OracleRoot& r) { return r.k > k_max; });
    }

    if (method == "continuation") {
        if (out_format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& p : pairs)
                arr.push_back({{"k", p.k}, {"lambda", p.lambda}, {"s", p.phase.s},
                               {"theta", p.phase.theta}, {"margin", p.osc.boundary_margin},
                               {"residual_left", p.residual_left},
                               {"residual_right", p.residual_right},
                               {"transversality_left", p.transversality_left},
                               {"transversality_right", p.transversality_right},
                               {"constant_mode", p.constant_mode}});
            out << arr.dump(2) << "\n";
        } else {
            out << "k,lambda,s,theta,margin,residual_left,residual_right,"
                   "transversality_left,transversality_right,constant_mode\n";
            for (const auto& p : pairs)
                out << p.k << ',' << fmt(p.lambda) << ',' << fmt(p.phase.s) << ','
                    << fmt(p.phase.theta) << ',' << fmt(p.osc.boundary_margin) << ','
                    << fmt(p.residual_left) << ',' << fmt(p.residual_right) << ','
                    << fmt(p.transversality_left) << ',' << fmt(p.transversality_right) << ','
                    << (p.constant_mode ? 1 : 0) << "\n";
        }
        return 0;
    }

    if (method == "oracle") {
        if (out_format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& root : roots)
                arr.push_back({{"k", root.k}, {"lambda", root.lambda}, {"s", root.phase.s},
                               {"theta", root.phase.theta}, {"dF_ds", root.dF_ds}});
            out << arr.dump(2) << "\n";
        } else {
            out << "k,lambda,s,theta,dF_ds\n";
            for (const auto& root : roots)
                out << root.k << ',' << fmt(root.lambda) << ',' << fmt(root.phase.s) << ','
                    << fmt(root.phase.theta) << ',' << fmt(root.dF_ds) << "\n";
        }
        return 0;
    }

    // Both routes: line them up and report the relative disagreement.
    std::vector<const Eigenpair*> tracked;
    for (const auto& p : pairs)
        if (!p.constant_mode) tracked.push_back(&p);
    const bool match = tracked.size() == roots.size();
    double worst = 0.0;
    bool index_ok = match;
    if (match)
        for (std::size_t i = 0; i < roots.size(); ++i) {
            index_ok = index_ok && roots[i].k == tracked[i]->k;
            worst = std::max(worst, std::abs(roots[i].lambda - tracked[i]->lambda) /
                                        std::max(1.0, std::abs(tracked[i]->lambda)));
        }
    const bool agree = index_ok && worst <= 1e-8;

    if (out_format == "json") {
        nlohmann::json cont = nlohmann::json::array();
        for (const auto& p : pairs)
            cont.push_back({{"k", p.k}, {"lambda", p.lambda}, {"constant_mode", p.constant_mode}});
        nlohmann::json orc = nlohmann::json::array();
        for (const auto& root : roots) orc.push_back({{"k", root.k}, {"lambda", root.lambda}});
        out << nlohmann::json{{"continuation", cont}, {"oracle", orc},
                              {"indices_match", index_ok}, {"max_rel_diff", worst},
                              {"agree", agree}}
                   .dump(2)
            << "\n";
    } else {
        out << "k,lambda_continuation,lambda_oracle,rel_diff\n";
        if (match) {
            std::size_t i = 0;
            for (const auto& p : pairs) {
                if (p.constant_mode) {
                    out << p.k << ',' << fmt(p.lambda) << ",,\n";
                    continue;
                }
                const double rel = std::abs(roots[i].lambda - p.lambda) /
                                   std::max(1.0, std::abs(p.lambda));
                out << p.k << ',' << fmt(p.lambda) << ',' << fmt(roots[i].lambda) << ','
                    << fmt(rel) << "\n";
                ++i;
            }
        }
        out << "agree," << (agree ? "true" : "false") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_eigenfunction(const std::string& path, int k, int samples, std::ostream& out) {
    const ProblemSpec spec = load_problem_file(path);
    const Eigenpair pair = continue_eigenpair(spec, k);
    out << "x,u,du\n";
    const double norm = pair.constant_mode ? 1.0 : sup_norm_w(pair.phase);
    for (int j = 0; j < samples; ++j) {
        const double x = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(samples - 1);
        double u = 1.0, du = 0.0;
        if (!pair.constant_mode) {
            const WValue w = eval_w(pair.phase, x);
            u = w.u / norm;
            du = w.uprime / norm;
        }
        out << fmt(x) << ',' << fmt(u) << ',' << fmt(du) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, int k_max, std::ostream& out) {
    const ProblemSpec spec = load_problem_file(path);
    const Report rep = run_property_suite(spec, k_max);
    print_report(rep, out);
    return rep.all_pass() ? 0 : 1;
}

int cmd_demo(const std::string& name, long k0, long samples, std::ostream& out) {
    Report rep;
    if (name == "negative-lambda") {
        rep = demo_counterexample(CounterexampleName::NegativeLambda);
    } else if (name == "multiplicity-two") {
        rep = demo_counterexample(CounterexampleName::MultiplicityTwo);
    } else if (name == "dirichlet-negative") {
        rep = demo_counterexample(CounterexampleName::DirichletNegative);
    } else if (name == "missing-eigenvalues") {
        rep = demo_missing_eigenvalues(k0, samples);
    } else {
        throw DomainError("unknown demo: " + name);
    }
    print_report(rep, out);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenvalue solver for -u'' = lambda*u under multi-point boundary conditions"};
    app.require_subcommand(1);

    std::string path, method = "both", out_format = "csv", demo_name;
    int k_max = 10, k = 0, samples = 401;
    long k0 = 1000, demo_samples = 100000;

    auto* v = app.add_subcommand("validate", "Check the coefficient hypotheses of a problem file");
    v->add_option("problem", path, "problem file (JSON)")->required();
    v->add_option("--out", out_format, "output format")->check(CLI::IsMember({"csv", "json"}));

    auto* sp = app.add_subcommand("spectrum", "Compute eigenvalues k = 0..kmax");
    sp->add_option("problem", path, "problem file (JSON)")->required();
    sp->add_option("--kmax", k_max, "largest class index")->check(CLI::Range(0, 1000));
    sp->add_option("--method", method, "continuation, oracle, or both")
        ->check(CLI::IsMember({"continuation", "oracle", "both"}));
    sp->add_option("--out", out_format, "output format")->check(CLI::IsMember({"csv", "json"}));

    auto* ef = app.add_subcommand("eigenfunction", "Sample one eigenfunction on a uniform grid");
    ef->add_option("problem", path, "problem file (JSON)")->required();
    ef->add_option("--k", k, "class index")->check(CLI::Range(0, 1000));
    ef->add_option("--samples", samples, "number of grid points")->check(CLI::Range(2, 10000000));

    auto* ve = app.add_subcommand("verify", "Run the property suite against a problem file");
    ve->add_option("problem", path, "problem file (JSON)")->required();
    ve->add_option("--kmax", k_max, "largest class index")->check(CLI::Range(0, 1000));

    auto* de = app.add_subcommand("demo", "Reproduce a built-in construction");
    de->add_option("name", demo_name,
                   "negative-lambda, multiplicity-two, dirichlet-negative, missing-eigenvalues")
        ->required();
    de->add_option("--k0", k0, "band index for missing-eigenvalues")->check(CLI::Range(1L, 100000000L));
    de->add_option("--samples", demo_samples, "window sample count")
        ->check(CLI::Range(2L, 1000000000L));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mpsl");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help through exit(); route its message to our streams.
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (v->parsed()) return cmd_validate(path, out_format, out);
        if (sp->parsed()) return cmd_spectrum(path, k_max, method, out_format, out);
        if (ef->parsed()) return cmd_eigenfunction(path, k, samples, out);
        if (ve->parsed()) return cmd_verify(path, k_max, out);
        if (de->parsed()) return cmd_demo(demo_name, k0, demo_samples, out);
    } catch (const SolverError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace mpsl
