#include "strongring/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongring/dynamics.hpp"
#include "strongring/generators.hpp"
#include "strongring/graph_ops.hpp"
#include "strongring/invariants.hpp"
#include "strongring/operators.hpp"
#include "strongring/parser.hpp"
#include "strongring/spectral.hpp"
#include "strongring/verify.hpp"

namespace strongring {

namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const Polynomial& p) {
    Json j = Json::array();
    for (long long c : p.c) j.push_back(c);
    return j;
}

int run_invariants(const std::string& expr, bool with_betti, int wu_order, bool with_curvature,
                   bool with_interaction, int cap, std::ostream& out) {
    RingElement e = parse_ring_expression(expr);
    Json j;
    j["chi"] = euler_characteristic(e);

    long long max_term_cells = 0;
    for (const auto& t : e.terms) max_term_cells = std::max(max_term_cells, t.term.cell_count());
    if (max_term_cells > cap)
        throw TooLarge("term with " + std::to_string(max_term_cells) + " cells exceeds cap " +
                       std::to_string(cap));

    if (is_single_positive_term(e)) j["fermi"] = fermi_characteristic(e);
    else j["fermi"] = nullptr;

    if (wu_order >= 2) {
        Json wu;
        wu[std::to_string(wu_order)] = wu_characteristic(e, wu_order);
        j["wu"] = wu;
    } else {
        j["wu"] = nullptr;
    }

    Json fv = Json::array();
    for (long long v : f_vector(e)) fv.push_back(v);
    j["f_vector"] = fv;
    j["euler_polynomial"] = poly_json(euler_polynomial(e));

    if (e.terms.size() == 1 && max_term_cells <= 512) {
        Json fm = Json::array();
        for (const auto& row : f_matrix(e.terms[0].term)) {
            Json r = Json::array();
            for (long long v : row) r.push_back(v);
            fm.push_back(r);
        }
        j["f_matrix"] = fm;
    } else {
        j["f_matrix"] = nullptr;
    }

    if (with_betti) {
        Json b = Json::array();
        std::vector<long long> betti = betti_numbers(e);
        for (long long v : betti) b.push_back(v);
        j["betti"] = b;
        j["poincare_polynomial"] = poly_json(poincare_polynomial(e));
    } else {
        j["betti"] = nullptr;
        j["poincare_polynomial"] = nullptr;
    }

    if (with_interaction && e.terms.size() == 1 && e.terms[0].term.factors.size() == 1 &&
        e.terms[0].coeff == 1) {
        Json b = Json::array();
        for (long long v : interaction_betti(e.terms[0].term.factors[0]))
            b.push_back(v);
        j["interaction_betti"] = b;
    } else {
        j["interaction_betti"] = nullptr;
    }

    bool dims_ok = !e.is_zero();
    for (const auto& t : e.terms)
        for (const auto& f : t.term.factors) dims_ok = dims_ok && f.cell_count() <= 100;
    if (dims_ok) {
        Json d = Json::array();
        for (const Rat& r : dimension(e)) d.push_back(r.get_str());
        j["dim_inductive"] = d;
    } else {
        j["dim_inductive"] = nullptr;
    }

    j["clique_number"] = clique_number(e);

    if (with_curvature) {
        Json k = Json::object();
        CurvatureMap cm = curvature(e);
        for (const auto& [name, value] : cm.values) k[name] = value.get_str();
        j["curvature"] = k;
        j["curvature_total"] = cm.total.get_str();
    }

    out << j.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& suite, const SuiteOptions& opt, bool json, std::ostream& out) {
    VerificationReport rep = run_suite(suite, opt);
    if (json) {
        Json j;
        j["suite"] = rep.suite;
        Json checks = Json::array();
        for (const auto& r : rep.results) {
            Json c;
            c["name"] = r.name;
            c["status"] = r.pass ? "pass" : "fail";
            c["witness"] = r.witness;
            c["seed"] = r.seed;
            c["ms"] = r.ms;
            checks.push_back(c);
        }
        j["checks"] = checks;
        j["all_pass"] = rep.all_pass();
        out << j.dump(2) << "\n";
        return rep.all_pass() ? 0 : 1;
    }
    int passed = 0;
    for (const auto& r : rep.results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.witness << "]  seed="
            << r.seed << "  " << r.ms << " ms\n";
        if (r.pass) ++passed;
    }
    out << passed << "/" << rep.results.size() << " checks passed\n";
    return rep.all_pass() ? 0 : 1;
}

SparseIntMatrix operator_of(const RingElement& e, const std::string& tag, int cap,
                            std::vector<std::string>& row_labels) {
    if (tag == "L") {
        ConnectionOperator op = connection_operator(e);
        if (op.size() > cap) throw TooLarge("operator exceeds cap");
        for (int s = 0; s < op.summand_count(); ++s)
            for (int i = 0; i < op.summand_basis[static_cast<std::size_t>(s)].size(); ++i)
                row_labels.push_back((op.summand_sign[static_cast<std::size_t>(s)] < 0 ? "-" : "") +
                                     op.summand_basis[static_cast<std::size_t>(s)].descriptor(i));
        return op.L;
    }
    if (tag == "kirchhoff") {
        if (e.terms.size() != 1 || e.terms[0].term.factors.size() != 1)
            throw BadParameter("kirchhoff needs a single complex");
        Graph g = one_skeleton(e.terms[0].term.factors[0]);
        for (const auto& l : g.labels()) row_labels.push_back(l);
        return kirchhoff_matrix(g);
    }
    if (tag == "H" || tag == "D") {
        if (e.terms.size() != 1) throw BadParameter("H/D need a single term");
        const ProductTerm& t = e.terms[0].term;
        if (t.cell_count() > cap) throw TooLarge("operator exceeds cap");
        OperatorBundle b = operator_bundle(t);
        for (int i = 0; i < b.basis.size(); ++i) row_labels.push_back(b.basis.descriptor(i));
        return tag == "H" ? b.H : b.D;
    }
    throw BadParameter("unknown operator tag '" + tag + "' (use L, H, D or kirchhoff)");
}

int run_export(const std::string& expr, const std::string& tag, const std::string& path, int cap,
               std::ostream& out) {
    RingElement e = parse_ring_expression(expr);
    std::vector<std::string> labels;
    SparseIntMatrix m = operator_of(e, tag, cap, labels);
    std::ofstream f(path);
    if (!f) throw BadParameter("cannot open '" + path + "' for writing");
    write_matrix_market(f, m);
    Json side;
    side["operator"] = tag;
    side["expression"] = expr;
    side["rows"] = labels;
    std::ofstream sidecar(path + ".json");
    sidecar << side.dump(2) << "\n";
    out << "wrote " << m.rows << "x" << m.cols << " matrix (" << m.nnz() << " entries) to " << path
        << "\n";
    return 0;
}

int run_spectrum(const std::string& expr, const std::string& tag, int cap, std::ostream& out) {
    RingElement e = parse_ring_expression(expr);
    std::vector<double> values;
    if (tag == "L") {
        values = connection_spectrum(e, cap).values;
    } else {
        std::vector<std::string> labels;
        SparseIntMatrix m = operator_of(e, tag, cap, labels);
        values = eigenvalues(m, 1e-9, tag).values;
    }
    out << "index,eigenvalue\n";
    out.precision(15);
    for (std::size_t i = 0; i < values.size(); ++i) out << i << "," << values[i] << "\n";
    return 0;
}

int run_limit(const std::string& expr, int levels, const std::string& tag, int cap,
              std::ostream& out) {
    RingElement e = parse_ring_expression(expr);
    if (e.terms.size() != 1 || e.terms[0].term.factors.size() != 1 || e.terms[0].coeff != 1)
        throw BadParameter("limit expects a single complex");
    LimitExperiment exp = barycentric_limit_experiment(e.terms[0].term.factors[0], levels, tag, cap);
    Json j;
    j["levels"] = levels;
    j["operator"] = tag;
    j["cells"] = exp.cell_counts;
    j["ks_consecutive"] = exp.ks_consecutive;
    if (!exp.ks_to_law.empty()) j["ks_to_limit_law"] = exp.ks_to_law;
    else j["ks_to_limit_law"] = nullptr;
    j["gaps"] = exp.gaps;
    out << j.dump(2) << "\n";
    return 0;
}

int run_flow(const std::string& expr, double beta, double t_end, double dt, int cap,
             std::ostream& out) {
    RingElement e = parse_ring_expression(expr);
    if (e.terms.size() != 1) throw BadParameter("flow expects a single term");
    if (e.terms[0].term.cell_count() > cap) throw TooLarge("term exceeds cap");
    OperatorBundle b = operator_bundle(e.terms[0].term);
    LaxTrajectory traj = lax_flow(b, beta, t_end, dt);
    out << "t,spectral_drift,d_norm,d2_residual\n";
    out.precision(12);
    for (const auto& s : traj.states)
        out << s.t << "," << s.spectral_drift << "," << s.d_norm << "," << s.d2_residual << "\n";
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"strong ring of simplicial complexes"};
    app.require_subcommand(1);

    std::string expr, tag = "L", path, suite;
    bool with_betti = false, with_curvature = false, with_interaction = false;
    int wu_order = 0;
    int cap = 4000; // max cells per term for spectra/operators; exact inverses cap at 600

    int levels = 3;
    double beta = 0.0, t_end = 5.0, dt = 1e-3;
    SuiteOptions opt;

    auto* inv = app.add_subcommand("invariants", "invariant report of an expression (JSON)");
    inv->add_option("expr", expr)->required();
    inv->add_flag("--betti", with_betti, "compute Betti numbers and Poincare polynomial");
    inv->add_option("--wu", wu_order, "compute the Wu characteristic of this order");
    inv->add_flag("--curvature", with_curvature, "include the curvature map");
    inv->add_flag("--interaction", with_interaction, "include interaction Betti numbers");
    inv->add_option("--cap", cap, "max cells per term");

    bool verify_json = false;
    auto* ver = app.add_subcommand("verify", "run a theorem verification suite");
    ver->add_option("suite", suite)->required();
    ver->add_option("--seed", opt.seed);
    ver->add_option("--count", opt.count);
    ver->add_option("--tol", opt.tol);
    ver->add_option("--n", opt.massgap_n);
    ver->add_option("--d", opt.massgap_d);
    ver->add_option("--levels", opt.limit_levels);
    ver->add_flag("--json", verify_json, "emit the report as JSON");

    auto* exp = app.add_subcommand("export", "export an operator as Matrix Market");
    exp->add_option("expr", expr)->required();
    exp->add_option("op", tag)->required();
    exp->add_option("path", path)->required();
    exp->add_option("--cap", cap);

    auto* spec = app.add_subcommand("spectrum", "eigenvalues as CSV");
    spec->add_option("expr", expr)->required();
    spec->add_option("op", tag)->required();
    spec->add_option("--cap", cap);

    auto* lim = app.add_subcommand("limit", "Barycentric refinement density-of-states experiment");
    lim->add_option("expr", expr)->required();
    lim->add_option("--levels", levels);
    lim->add_option("--op", tag);
    lim->add_option("--cap", cap);

    auto* flow = app.add_subcommand("flow", "isospectral Lax deformation diagnostics (CSV)");
    flow->add_option("expr", expr)->required();
    flow->add_option("--beta", beta);
    flow->add_option("--tend", t_end);
    flow->add_option("--dt", dt);
    flow->add_option("--cap", cap);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (inv->parsed())
            return run_invariants(expr, with_betti, wu_order, with_curvature, with_interaction, cap, out);
        if (ver->parsed()) return run_verify(suite, opt, verify_json, out);
        if (exp->parsed()) return run_export(expr, tag, path, cap, out);
        if (spec->parsed()) return run_spectrum(expr, tag, cap, out);
        if (lim->parsed()) return run_limit(expr, levels, tag, cap, out);
        if (flow->parsed()) return run_flow(expr, beta, t_end, dt, cap, out);
    } catch (const SyntaxError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownGenerator& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSuite& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const BadParameter& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const TooLarge& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const TooLargeForExact& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace strongring
