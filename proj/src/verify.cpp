#include "strongring/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "strongring/dynamics.hpp"
#include "strongring/generators.hpp"
#include "strongring/graph_ops.hpp"
#include "strongring/invariants.hpp"
#include "strongring/operators.hpp"
#include "strongring/parser.hpp"
#include "strongring/spectral.hpp"

namespace strongring {

namespace {
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// chi of a term by direct omega summation over the product cell basis — the
// independent route used against the factored formula.
long long chi_via_cells(const ProductTerm& term) {
    CellBasis basis(term);
    long long chi = 0;
    for (int i = 0; i < basis.size(); ++i) chi += basis.omega(i);
    return chi;
}

Polynomial euler_poly_via_cells(const RingElement& e) {
    Polynomial p;
    for (const auto& t : e.terms) {
        CellBasis basis(t.term);
        for (int i = 0; i < basis.size(); ++i) {
            std::size_t d = static_cast<std::size_t>(basis.dim(i));
            if (p.c.size() <= d) p.c.resize(d + 1, 0);
            p.c[d] += t.coeff;
        }
    }
    p.trim();
    return p;
}
} // namespace

SimplicialComplex random_complex(Rng& rng, int max_cells, std::string* desc) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        SimplicialComplex g;
        std::string d;
        switch (rng.uniform_int(0, 5)) {
            case 0: {
                int n = rng.uniform_int(4, 9);
                g = gen_cycle(n);
                d = "C" + std::to_string(n);
                break;
            }
            case 1: {
                int n = rng.uniform_int(2, 8);
                g = gen_path(n);
                d = "L" + std::to_string(n);
                break;
            }
            case 2: {
                int n = rng.uniform_int(1, 4);
                g = gen_complete(n);
                d = "K" + std::to_string(n);
                break;
            }
            case 3: {
                int n = rng.uniform_int(4, 8);
                double p = 0.3 + 0.4 * rng.uniform01();
                std::uint64_t s = rng.next_u64();
                g = gen_random_er(n, p, s);
                d = "ER(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(s) + ")";
                break;
            }
            case 4:
                g = gen_octahedron();
                d = "Oct";
                break;
            default: {
                int n = rng.uniform_int(4, 7);
                g = gen_suspension(gen_cycle(n));
                d = "Susp(C" + std::to_string(n) + ")";
                break;
            }
        }
        if (!g.empty() && g.cell_count() <= max_cells) {
            if (desc) *desc = d;
            return g;
        }
    }
    if (desc) *desc = "L2";
    return gen_path(2);
}

ProductTerm random_product(Rng& rng, int factors, int max_factor_cells, std::string* desc) {
    std::vector<SimplicialComplex> fs;
    std::string d;
    for (int i = 0; i < factors; ++i) {
        std::string fd;
        fs.push_back(random_complex(rng, max_factor_cells, &fd));
        if (i) d += "*";
        d += fd;
    }
    if (desc) *desc = d;
    RingElement e;
    e.terms.push_back({1, ProductTerm(std::move(fs))});
    e = normalize(std::move(e));
    return e.terms.at(0).term;
}

RingElement random_element(Rng& rng, int max_cells_per_term, int max_terms, std::string* desc) {
    RingElement e;
    std::string d;
    int terms = rng.uniform_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        long long coeff = rng.uniform_int(1, 2) * (rng.bernoulli(0.3) ? -1 : 1);
        int nf = rng.bernoulli(0.35) ? 2 : 1;
        std::vector<SimplicialComplex> fs;
        std::string td;
        for (int f = 0; f < nf; ++f) {
            std::string fd;
            fs.push_back(random_complex(rng, nf == 2 ? max_cells_per_term / 3 : max_cells_per_term, &fd));
            if (f) td += "*";
            td += fd;
        }
        if (t) d += coeff >= 0 ? " + " : " - ";
        else if (coeff < 0) d += "-";
        if (std::llabs(coeff) != 1) d += std::to_string(std::llabs(coeff)) + "*";
        d += td;
        e.terms.push_back({coeff, ProductTerm(std::move(fs))});
    }
    if (desc) *desc = d;
    return normalize(std::move(e));
}

SimplicialComplex cylinder_complex() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 6; ++i) facets.push_back({i, (i + 1) % 6, (i + 2) % 6});
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex moebius_complex() {
    return SimplicialComplex::from_facets(
        {{1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}, {0, 1, 5}, {1, 2, 5}});
}

namespace {

CheckResult check(const std::string& name, std::uint64_t seed, const std::string& witness,
                  Clock::time_point start, bool pass) {
    return {name, pass, witness, seed, ms_since(start)};
}

VerificationReport suite_unimodularity(const SuiteOptions& opt) {
    VerificationReport rep{"unimodularity", {}};
    Rng rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        auto start = Clock::now();
        std::string desc;
        SimplicialComplex g = random_complex(rng, 50, &desc);
        RingElement e = RingElement::from_complex(g);
        Int det = det_exact(connection_laplacian(e.terms[0].term).to_int_matrix());
        int phi = fermi_characteristic(e);
        bool pass = (det == 1 || det == -1) && det == phi;
        rep.results.push_back(check("det(L) == fermi #" + std::to_string(i), opt.seed,
                                    desc, start, pass));
    }
    for (int i = 0; i < std::max(1, opt.count / 4); ++i) {
        auto start = Clock::now();
        std::string desc;
        ProductTerm t = random_product(rng, 2, 12, &desc);
        Int det = det_exact(connection_laplacian(t).to_int_matrix());
        RingElement e;
        e.terms.push_back({1, t});
        int phi = fermi_characteristic(e);
        bool pass = (det == 1 || det == -1) && det == phi;
        rep.results.push_back(check("det(L) == fermi, product #" + std::to_string(i), opt.seed,
                                    desc, start, pass));
    }
    return rep;
}

VerificationReport suite_energy(const SuiteOptions& opt) {
    VerificationReport rep{"energy", {}};
    Rng rng(opt.seed);
    {
        auto start = Clock::now();
        RingElement e = parse_ring_expression("C4 - 2*K3 + L2*L3");
        GreenReport g = green_functions(e);
        rep.results.push_back(check("sum g == -1 for C4 - 2*K3 + L2*L3", opt.seed,
                                    "total = " + g.total.get_str(), start, g.total == -1));
    }
    for (int i = 0; i < opt.count; ++i) {
        auto start = Clock::now();
        std::string desc;
        RingElement e = random_element(rng, 40, 2, &desc);
        GreenReport g = green_functions(e);
        long long chi = euler_characteristic(e);
        rep.results.push_back(check("sum g == chi #" + std::to_string(i), opt.seed,
                                    desc + ", chi = " + std::to_string(chi), start,
                                    g.total == static_cast<long>(chi)));
    }
    return rep;
}

VerificationReport suite_kuenneth(const SuiteOptions& opt) {
    VerificationReport rep{"kuenneth", {}};
    Rng rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        auto start = Clock::now();
        std::string da, db;
        RingElement a = random_element(rng, 12, 2, &da);
        RingElement b = random_element(rng, 12, 2, &db);
        RingElement ab = ring_mul(a, b);

        bool chi_ok = euler_characteristic(ab) == euler_characteristic(a) * euler_characteristic(b);
        // chi via direct cell enumeration on every product term
        for (const auto& t : ab.terms)
            chi_ok = chi_ok && chi_via_cells(t.term) == t.term.euler_characteristic();

        bool e_ok = euler_poly_via_cells(ab) == poly_mul(euler_poly_via_cells(a), euler_poly_via_cells(b));
        bool wu_ok = wu_characteristic(ab) == wu_characteristic(a) * wu_characteristic(b);
        bool p_ok = poincare_polynomial(ab, BettiMethod::ExactRank) ==
                    poly_mul(poincare_polynomial(a, BettiMethod::ExactRank),
                             poincare_polynomial(b, BettiMethod::ExactRank));
        rep.results.push_back(check("ring homomorphisms #" + std::to_string(i), opt.seed,
                                    "(" + da + ") * (" + db + ")", start,
                                    chi_ok && e_ok && wu_ok && p_ok));
    }
    return rep;
}

VerificationReport suite_spectral(const SuiteOptions& opt) {
    VerificationReport rep{"spectral", {}};
    Rng rng(opt.seed);
    for (int i = 0; i < std::min(opt.count, 10); ++i) {
        auto start = Clock::now();
        RingElement a = RingElement::from_complex(random_complex(rng, 20));
        RingElement b = RingElement::from_complex(random_complex(rng, 20));
        MultisetCheck mult = check_spectral_multiplicativity(a, b, opt.tol);
        PythagorasCheck pyth = check_spectral_pythagoras(a, b, opt.tol);
        std::ostringstream w;
        w << "mult dev " << mult.max_deviation << ", dirac dev " << pyth.dirac_deviation
          << ", hodge dev " << pyth.hodge_deviation;
        rep.results.push_back(check("spectral arithmetic #" + std::to_string(i), opt.seed, w.str(),
                                    start, mult.pass && pyth.pass));
    }
    return rep;
}

VerificationReport suite_gaussbonnet(const SuiteOptions& opt) {
    VerificationReport rep{"gaussbonnet", {}};
    Rng rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        auto start = Clock::now();
        std::string desc;
        RingElement e = random_element(rng, 30, 2, &desc);
        CurvatureMap k = curvature(e);
        bool pass = k.total == Rat(static_cast<long>(euler_characteristic(e)));
        rep.results.push_back(check("sum K == chi #" + std::to_string(i), opt.seed, desc,
                                    start, pass));
    }
    return rep;
}

VerificationReport suite_poincarehopf(const SuiteOptions& opt) {
    VerificationReport rep{"poincarehopf", {}};
    Rng rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        auto start = Clock::now();
        std::string desc;
        RingElement e = random_element(rng, 25, 2, &desc);
        bool pass = true;
        for (int rep_f = 0; rep_f < 10; ++rep_f) {
            IndexMap idx = poincare_hopf_random(e, rng.next_u64());
            pass = pass && idx.total == euler_characteristic(e);
        }
        rep.results.push_back(check("sum i_f == chi #" + std::to_string(i), opt.seed, desc,
                                    start, pass));
    }
    return rep;
}

VerificationReport suite_lefschetz(const SuiteOptions& opt) {
    VerificationReport rep{"lefschetz", {}};
    Rng rng(opt.seed);
    for (int i = 0; i < std::min(opt.count, 8); ++i) {
        auto start = Clock::now();
        ProductTerm t(random_complex(rng, 25));
        LefschetzReport lr = lefschetz(t, identity_automorphism(t));
        long long chi = t.euler_characteristic();
        bool pass = lr.chi_T == chi && lr.fixed_sum == chi;
        rep.results.push_back(check("identity Lefschetz #" + std::to_string(i), opt.seed,
                                    std::to_string(t.cell_count()) + " cells", start, pass));
    }
    for (int n : {4, 5, 6}) {
        auto start = Clock::now();
        ProductTerm t(gen_cycle(n));
        PerFactorAutomorphism rot;
        rot.maps.push_back({});
        for (Vertex v = 0; v < n; ++v) rot.maps[0].push_back((v + 1) % n);
        LefschetzReport lr = lefschetz(t, rot);
        bool pass = lr.chi_T == lr.fixed_sum && lr.chi_T == 0;
        rep.results.push_back(
            check("C" + std::to_string(n) + " rotation", opt.seed, "chi_T = " + std::to_string(lr.chi_T), start, pass));
    }
    {
        auto start = Clock::now();
        RingElement e = parse_ring_expression("K2*K2");
        LefschetzReport lr = lefschetz(e.terms[0].term, FactorSwapAutomorphism{0, 1});
        int fixed_two_cells = 0;
        for (const auto& [desc, idx] : lr.fixed_indices)
            if (desc.find("{0,1}x{0,1}") != std::string::npos) ++fixed_two_cells;
        bool pass = lr.chi_T == 1 && lr.fixed_sum == 1 && fixed_two_cells == 1;
        rep.results.push_back(check("K2xK2 factor swap", opt.seed,
                                    "chi_T = " + std::to_string(lr.chi_T) + ", fixed cells = " +
                                        std::to_string(lr.fixed_indices.size()),
                                    start, pass));
    }
    return rep;
}

VerificationReport suite_wu(const SuiteOptions& opt) {
    VerificationReport rep{"wu", {}};
    Rng rng(opt.seed);
    for (int n = 1; n <= 6; ++n) {
        auto start = Clock::now();
        long long w = wu_characteristic(RingElement::from_complex(gen_complete(n)));
        long long expected = (n - 1) % 2 == 0 ? 1 : -1;
        rep.results.push_back(check("wu(K" + std::to_string(n) + ") == (-1)^(n-1)", opt.seed,
                                    "wu = " + std::to_string(w), start, w == expected));
    }
    for (int n = 4; n <= 8; ++n) {
        auto start = Clock::now();
        // closed 1-manifold: wu = chi - chi(boundary) = 0
        long long w = wu_characteristic(RingElement::from_complex(gen_cycle(n)));
        rep.results.push_back(check("wu(C" + std::to_string(n) + ") == 0", opt.seed,
                                    "wu = " + std::to_string(w), start, w == 0));
    }
    for (int i = 0; i < std::min(opt.count, 10); ++i) {
        auto start = Clock::now();
        SimplicialComplex g = random_complex(rng, 25);
        std::vector<long long> ib = interaction_betti(g);
        long long alt = 0;
        for (std::size_t k = 0; k < ib.size(); ++k) alt += (k % 2 == 0 ? ib[k] : -ib[k]);
        long long w = wu_characteristic(RingElement::from_complex(g));
        rep.results.push_back(check("interaction Euler-Poincare #" + std::to_string(i), opt.seed,
                                    std::to_string(g.cell_count()) + " cells", start, alt == w));
    }
    {
        auto start = Clock::now();
        std::vector<long long> bc = interaction_betti(cylinder_complex());
        std::vector<long long> bm = interaction_betti(moebius_complex());
        rep.results.push_back(check("moebius vs cylinder interaction Betti", opt.seed,
                                    "distinct vectors", start, bc != bm));
    }
    return rep;
}

VerificationReport suite_mckeansinger(const SuiteOptions& opt) {
    VerificationReport rep{"mckeansinger", {}};
    Rng rng(opt.seed);
    for (int i = 0; i < std::min(opt.count, 10); ++i) {
        auto start = Clock::now();
        std::string desc;
        RingElement e = random_element(rng, 25, 2, &desc);
        McKeanSingerReport r = mckean_singer(e);
        bool pass = r.str_g == Int(static_cast<long>(r.chi)) && r.max_deviation < opt.tol &&
                    r.supersymmetry_deviation < opt.tol;
        rep.results.push_back(check("McKean-Singer #" + std::to_string(i), opt.seed, desc,
                                    start, pass));
    }
    return rep;
}

VerificationReport suite_massgap(const SuiteOptions& opt) {
    VerificationReport rep{"massgap", {}};
    const double bound = std::pow(0.2, opt.massgap_d);
    auto start = Clock::now();
    RingElement e = RingElement::from_complex(gen_cycle(opt.massgap_n));
    RingElement prod = e;
    for (int d = 1; d < opt.massgap_d; ++d) prod = ring_mul(prod, e);
    double gap = mass_gap(prod);
    std::ostringstream w;
    w << "gap = " << gap << " >= " << bound << " (n = " << opt.massgap_n << ", d = " << opt.massgap_d << ")";
    rep.results.push_back(check("mass gap", opt.seed, w.str(), start, gap >= bound));
    return rep;
}

VerificationReport suite_limit(const SuiteOptions& opt) {
    VerificationReport rep{"limit", {}};
    auto start = Clock::now();
    LimitExperiment exp = barycentric_limit_experiment(gen_cycle(4), opt.limit_levels, "kirchhoff");
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < exp.ks_consecutive.size(); ++i)
        decreasing = decreasing && exp.ks_consecutive[i + 1] < exp.ks_consecutive[i];
    double last = exp.ks_to_law.empty() ? 1.0 : exp.ks_to_law.back();
    std::ostringstream w;
    w << "KS to limit law at last level = " << last;
    rep.results.push_back(check("C4 Kirchhoff limit", opt.seed, w.str(), start,
                                decreasing && last < 0.05));
    return rep;
}

VerificationReport suite_lax(const SuiteOptions& opt) {
    VerificationReport rep{"lax", {}};
    Rng rng(opt.seed);
    auto run_one = [&](const std::string& name, const SimplicialComplex& g) {
        auto start = Clock::now();
        OperatorBundle b = operator_bundle(ProductTerm(g));
        bool pass = true;
        std::string note;
        try {
            LaxTrajectory traj = lax_flow(b, 0.0, 5.0, 1e-3);
            double drift = 0, prev_norm = 1e300;
            bool monotone = true;
            for (const auto& s : traj.states) {
                drift = std::max(drift, s.spectral_drift);
                if (s.d_norm > prev_norm + 1e-9) monotone = false;
                prev_norm = s.d_norm;
            }
            pass = drift < 1e-6 && monotone;
            note = "max drift = " + std::to_string(drift);
        } catch (const StepTooLarge& ex) {
            pass = false;
            note = ex.what();
        }
        rep.results.push_back(check(name, opt.seed, note, start, pass));
    };
    run_one("lax flow C4", gen_cycle(4));
    run_one("lax flow random", random_complex(rng, 20));
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"unimodularity", "energy",       "kuenneth", "spectral", "gaussbonnet",
            "poincarehopf",  "lefschetz",    "wu",       "mckeansinger", "massgap",
            "limit",         "lax",          "all"};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "unimodularity") return suite_unimodularity(opt);
    if (name == "energy") return suite_energy(opt);
    if (name == "kuenneth") return suite_kuenneth(opt);
    if (name == "spectral") return suite_spectral(opt);
    if (name == "gaussbonnet") return suite_gaussbonnet(opt);
    if (name == "poincarehopf") return suite_poincarehopf(opt);
    if (name == "lefschetz") return suite_lefschetz(opt);
    if (name == "wu") return suite_wu(opt);
    if (name == "mckeansinger") return suite_mckeansinger(opt);
    if (name == "massgap") return suite_massgap(opt);
    if (name == "limit") return suite_limit(opt);
    if (name == "lax") return suite_lax(opt);
    if (name == "all") {
        VerificationReport all{"all", {}};
        for (const auto& s : suite_names()) {
            if (s == "all") continue;
            VerificationReport r = run_suite(s, opt);
            all.results.insert(all.results.end(), r.results.begin(), r.results.end());
        }
        return all;
    }
    throw UnknownSuite("unknown suite '" + name + "'");
}

} // namespace strongring
