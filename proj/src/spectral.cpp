#include "strongring/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "strongring/cell_basis.hpp"
#include "strongring/graph_ops.hpp"
#include "strongring/operators.hpp"

namespace strongring {

namespace {
Eigen::MatrixXd to_eigen(const std::vector<double>& a, int n, double tol) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    double dev = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (dev > tol) throw NotSymmetric("matrix deviates from symmetry by " + std::to_string(dev));
    return m;
}
} // namespace

std::vector<double> sym_eigenvalues(const std::vector<double>& a, int n, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a, n, tol),
                                                          Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(vals.begin(), vals.end());
    return vals;
}

EigenDecomposition sym_eigen_decomposition(const std::vector<double>& a, int n, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a, n, tol));
    EigenDecomposition d;
    d.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    d.vectors.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            d.vectors[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = solver.eigenvectors()(i, k);
    return d;
}

Spectrum eigenvalues(const SparseIntMatrix& m, double tol, const std::string& tag) {
    if (m.rows != m.cols) throw NotSquare("eigenvalues requires a square matrix");
    Spectrum s;
    s.operator_tag = tag;
    s.values = sym_eigenvalues(m.to_dense_double(), m.rows, tol);
    return s;
}

SparseIntMatrix kirchhoff_matrix(const Graph& g) {
    SparseIntMatrix m(g.vertex_count(), g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        m.add(v, v, g.degree(v));
        for (int u : g.neighbors(v)) m.add(v, u, -1);
    }
    m.finalize();
    return m;
}

namespace {
std::vector<double> term_connection_spectrum(const ProductTerm& term, int dense_cap) {
    if (term.cell_count() <= dense_cap)
        return eigenvalues(connection_laplacian(term), 1e-9, "L").values;
    // Tensor structure: the spectrum of a product is the product multiset of
    // the factor spectra.
    if (term.cell_count() > (1LL << 24))
        throw TooLarge("product spectrum with " + std::to_string(term.cell_count()) + " values");
    std::vector<double> acc{1.0};
    for (const auto& f : term.factors) {
        std::vector<double> fs = eigenvalues(connection_laplacian(ProductTerm(f)), 1e-9, "L").values;
        std::vector<double> next;
        next.reserve(acc.size() * fs.size());
        for (double a : acc)
            for (double b : fs) next.push_back(a * b);
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}
} // namespace

Spectrum connection_spectrum(const RingElement& e, int dense_cap) {
    Spectrum s;
    s.operator_tag = "L";
    for (const auto& t : e.terms) {
        std::vector<double> vals = term_connection_spectrum(t.term, dense_cap);
        long long copies = t.coeff > 0 ? t.coeff : -t.coeff;
        for (long long c = 0; c < copies; ++c)
            for (double v : vals) s.values.push_back(t.coeff > 0 ? v : -v);
    }
    std::sort(s.values.begin(), s.values.end());
    return s;
}

double mass_gap(const RingElement& e) {
    Spectrum s = connection_spectrum(e);
    double gap = std::numeric_limits<double>::infinity();
    for (double v : s.values) gap = std::min(gap, std::fabs(v));
    return gap;
}

namespace {
double max_multiset_deviation(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double dev = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::fabs(a[i] - b[i]));
    return dev;
}

const ProductTerm& single_term(const RingElement& e, const char* what) {
    if (!is_single_positive_term(e)) throw NotASingleTerm(what);
    return e.terms[0].term;
}
} // namespace

MultisetCheck check_spectral_multiplicativity(const RingElement& a, const RingElement& b, double tol) {
    const ProductTerm& ta = single_term(a, "spectral multiplicativity needs single positive terms");
    const ProductTerm& tb = single_term(b, "spectral multiplicativity needs single positive terms");
    std::vector<double> sa = eigenvalues(connection_laplacian(ta), 1e-9, "L").values;
    std::vector<double> sb = eigenvalues(connection_laplacian(tb), 1e-9, "L").values;
    std::vector<double> products;
    for (double x : sa)
        for (double y : sb) products.push_back(x * y);

    std::vector<double> direct =
        eigenvalues(connection_laplacian(ProductTerm(ring_mul(a, b).terms[0].term)), 1e-9, "L").values;

    MultisetCheck r;
    r.tol = tol;
    r.max_deviation = max_multiset_deviation(std::move(products), std::move(direct));
    r.pass = r.max_deviation < tol;
    return r;
}

PythagorasCheck check_spectral_pythagoras(const RingElement& a, const RingElement& b, double tol) {
    const ProductTerm& ta = single_term(a, "spectral Pythagoras needs single positive terms");
    const ProductTerm& tb = single_term(b, "spectral Pythagoras needs single positive terms");
    OperatorBundle ba = operator_bundle(ta);
    OperatorBundle bb = operator_bundle(tb);
    OperatorBundle bab = operator_bundle(ring_mul(a, b).terms[0].term);

    std::vector<double> da = eigenvalues(ba.D, 1e-9, "D").values;
    std::vector<double> db = eigenvalues(bb.D, 1e-9, "D").values;
    std::vector<double> dirac_expected;
    for (double x : da)
        for (double y : db) dirac_expected.push_back(std::sqrt(x * x + y * y));
    std::vector<double> dirac_direct = eigenvalues(bab.D, 1e-9, "D").values;
    for (double& v : dirac_direct) v = std::fabs(v);

    std::vector<double> ha = eigenvalues(ba.H, 1e-9, "H").values;
    std::vector<double> hb = eigenvalues(bb.H, 1e-9, "H").values;
    std::vector<double> hodge_expected;
    for (double x : ha)
        for (double y : hb) hodge_expected.push_back(x + y);
    std::vector<double> hodge_direct = eigenvalues(bab.H, 1e-9, "H").values;

    PythagorasCheck r;
    r.tol = tol;
    r.dirac_deviation = max_multiset_deviation(std::move(dirac_expected), std::move(dirac_direct));
    r.hodge_deviation = max_multiset_deviation(std::move(hodge_expected), std::move(hodge_direct));
    r.pass = r.dirac_deviation < tol && r.hodge_deviation < tol;
    return r;
}

double SpectralMeasure::cdf(double x) const {
    auto it = std::upper_bound(samples.begin(), samples.end(), x);
    return samples.empty() ? 0.0
                           : static_cast<double>(it - samples.begin()) / static_cast<double>(samples.size());
}

double ks_distance(const SpectralMeasure& a, const SpectralMeasure& b) {
    double d = 0;
    for (double x : a.samples) {
        d = std::max(d, std::fabs(a.cdf(x) - b.cdf(x)));
        d = std::max(d, std::fabs(a.cdf(std::nexttoward(x, -HUGE_VAL)) - b.cdf(std::nexttoward(x, -HUGE_VAL))));
    }
    for (double x : b.samples) {
        d = std::max(d, std::fabs(a.cdf(x) - b.cdf(x)));
        d = std::max(d, std::fabs(a.cdf(std::nexttoward(x, -HUGE_VAL)) - b.cdf(std::nexttoward(x, -HUGE_VAL))));
    }
    return d;
}

namespace {
// CDF of the law of F(x) = 4 sin^2(pi x / 2) with x uniform on [0,1].
double limit_law_cdf(double t) {
    if (t <= 0) return 0;
    if (t >= 4) return 1;
    return 2.0 / M_PI * std::asin(std::sqrt(t / 4.0));
}
} // namespace

double ks_distance_to_limit_law(const SpectralMeasure& a) {
    // The law is continuous, so the supremum is attained at sample points.
    double d = 0;
    const double n = static_cast<double>(a.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        double F = limit_law_cdf(a.samples[i]);
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - F));
        d = std::max(d, std::fabs(static_cast<double>(i) / n - F));
    }
    return d;
}

LimitExperiment barycentric_limit_experiment(const SimplicialComplex& g, int levels,
                                             const std::string& operator_tag, int max_cells) {
    if (g.empty()) throw EmptyTerm("limit experiment needs a non-empty complex");
    LimitExperiment exp;
    SimplicialComplex level = g;
    for (int l = 0; l <= levels; ++l) {
        if (level.cell_count() > max_cells)
            throw TooLarge("refinement level " + std::to_string(l) + " exceeds " +
                           std::to_string(max_cells) + " cells");
        exp.cell_counts.push_back(level.cell_count());
        SpectralMeasure m;
        if (operator_tag == "kirchhoff") {
            m.samples = eigenvalues(kirchhoff_matrix(one_skeleton(level)), 1e-9, "Kirchhoff").values;
        } else if (operator_tag == "L") {
            m.samples = eigenvalues(connection_laplacian(ProductTerm(level)), 1e-9, "L").values;
        } else if (operator_tag == "H" || operator_tag == "D") {
            OperatorBundle b = operator_bundle(ProductTerm(level));
            m.samples = eigenvalues(operator_tag == "H" ? b.H : b.D, 1e-9, operator_tag).values;
        } else {
            throw BadParameter("unknown operator tag '" + operator_tag + "'");
        }
        double gap = std::numeric_limits<double>::infinity();
        for (double v : m.samples) gap = std::min(gap, std::fabs(v));
        exp.gaps.push_back(gap);
        exp.measures.push_back(std::move(m));
        if (l < levels) level = barycentric_refinement(level).refinement;
    }
    for (std::size_t i = 0; i + 1 < exp.measures.size(); ++i)
        exp.ks_consecutive.push_back(ks_distance(exp.measures[i], exp.measures[i + 1]));
    if (operator_tag == "kirchhoff" && g.dim() <= 1)
        for (const auto& m : exp.measures) exp.ks_to_law.push_back(ks_distance_to_limit_law(m));
    return exp;
}

Spectrum lorentz_hodge_spectrum(int n, int nu, const std::vector<int>& signature) {
    if (static_cast<int>(signature.size()) != nu)
        throw BadSignature("signature length must equal nu");
    for (int s : signature)
        if (s != 1 && s != -1) throw BadSignature("signature entries must be +1 or -1");
    if (n < 3 || nu < 1) throw BadParameter("lorentz_hodge_spectrum requires n >= 3, nu >= 1");

    std::vector<double> lambda(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double s = std::sin(M_PI * static_cast<double>(k) / static_cast<double>(n));
        lambda[static_cast<std::size_t>(k)] = 4.0 * s * s;
    }
    Spectrum out;
    out.operator_tag = "H";
    std::vector<double> acc{0.0};
    for (int i = 0; i < nu; ++i) {
        std::vector<double> next;
        next.reserve(acc.size() * lambda.size());
        for (double a : acc)
            for (double l : lambda) next.push_back(a + signature[static_cast<std::size_t>(i)] * l);
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    out.values = std::move(acc);
    return out;
}

} // namespace strongring
