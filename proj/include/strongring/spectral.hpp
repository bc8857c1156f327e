#pragma once

#include <string>
#include <vector>

#include "strongring/exact_linalg.hpp"
#include "strongring/graph.hpp"
#include "strongring/ring.hpp"

namespace strongring {

struct Spectrum {
    std::vector<double> values; // sorted ascending
    std::string operator_tag;   // L, H, H_k, D, Kirchhoff
    std::string source;
};

// Dense symmetric eigensolver (values only / full decomposition). Input is
// row major n x n; symmetry is checked to tol.
std::vector<double> sym_eigenvalues(const std::vector<double>& a, int n, double tol = 1e-9);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // column k is the k-th eigenvector, row major n x n
};
EigenDecomposition sym_eigen_decomposition(const std::vector<double>& a, int n, double tol = 1e-9);

Spectrum eigenvalues(const SparseIntMatrix& m, double tol = 1e-9, const std::string& tag = "");

// Kirchhoff matrix (degree - adjacency) of a graph.
SparseIntMatrix kirchhoff_matrix(const Graph& g);

// Spectrum of the connection operator of an element. Terms whose cell count
// exceeds dense_cap are assembled as the product multiset of factor spectra
// (the Kronecker structure); negative summands contribute -lambda.
Spectrum connection_spectrum(const RingElement& e, int dense_cap = 4096);

double mass_gap(const RingElement& e);

struct MultisetCheck {
    double max_deviation = 0.0;
    bool pass = false;
    double tol = 0.0;
};

// sigma(L(A x B)) == sigma(L(A)) * sigma(L(B)) as sorted multisets.
MultisetCheck check_spectral_multiplicativity(const RingElement& a, const RingElement& b, double tol);

struct PythagorasCheck {
    double dirac_deviation = 0.0; // {sqrt(l^2+m^2)} vs |sigma(D(AxB))|
    double hodge_deviation = 0.0; // {l+m} vs sigma(H(AxB))
    bool pass = false;
    double tol = 0.0;
};

PythagorasCheck check_spectral_pythagoras(const RingElement& a, const RingElement& b, double tol);

struct SpectralMeasure {
    std::vector<double> samples; // sorted
    double cdf(double x) const;
};

// Kolmogorov-Smirnov distances between empirical measures.
double ks_distance(const SpectralMeasure& a, const SpectralMeasure& b);
// against the 1-d Kirchhoff limit law F(x) = 4 sin^2(pi x / 2), x ~ U[0,1]
double ks_distance_to_limit_law(const SpectralMeasure& a);

struct LimitExperiment {
    std::vector<long long> cell_counts;        // per level
    std::vector<SpectralMeasure> measures;     // per level
    std::vector<double> ks_consecutive;        // KS(level i, level i+1)
    std::vector<double> ks_to_law;             // Kirchhoff tag only (1-d)
    std::vector<double> gaps;                  // min |lambda| per level
};

// Density of states across Barycentric refinement levels of a complex.
// operator_tag in {kirchhoff, L, H, D}. Level 0 is the input complex.
LimitExperiment barycentric_limit_experiment(const SimplicialComplex& g, int levels,
                                             const std::string& operator_tag,
                                             int max_cells = 4096);

// Eigenvalues sum_i s_i lambda_{k_i} of the signature Hodge operator on the
// nu-torus C_n^nu, lambda = Kirchhoff spectrum of C_n.
Spectrum lorentz_hodge_spectrum(int n, int nu, const std::vector<int>& signature);

} // namespace strongring
