#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strongring/graph.hpp"
#include "strongring/operators.hpp"
#include "strongring/ring.hpp"

namespace strongring {

// Integer-coefficient polynomial in one variable, index = degree.
struct Polynomial {
    std::vector<long long> c;

    long long eval(long long x) const;
    void trim();
    std::string to_string(const std::string& var = "t") const;
    bool operator==(const Polynomial& o) const { return c == o.c; }
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(long long s, const Polynomial& a);

long long euler_characteristic(const RingElement& e);

// Product of omega over all product cells of the single positive term.
int fermi_characteristic(const RingElement& e);

enum class WuSemantics { Pairwise, CommonIntersection };

// omega_k: sum over ordered k-tuples of cells intersecting per the chosen
// semantics (tuples may repeat cells; k = 1 is the Euler characteristic).
// Extended linearly over terms with omega_k(-G) = -omega_k(G).
long long wu_characteristic(const RingElement& e, int k = 2,
                            WuSemantics sem = WuSemantics::Pairwise);

// The k = 2 pair enumeration kernels (OpenMP and serial reference).
long long wu_pair_sum(const CellBasis& basis);
long long wu_pair_sum_serial(const CellBasis& basis);

// Signed f-vector and generating polynomials.
std::vector<long long> f_vector(const RingElement& e);
Polynomial euler_polynomial(const RingElement& e);

// V_ij = number of ordered intersecting pairs of an i-cell and a j-cell.
// Doubles as the coefficient table of the bivariate f-polynomial V(t, s).
std::vector<std::vector<long long>> f_matrix(const ProductTerm& term);
std::vector<std::vector<long long>> f_matrix(const SimplicialComplex& g);

enum class BettiMethod { Auto, ExactRank, Kuenneth };

// b_k per positive term via exact ranks of the graded derivative blocks
// (b_k = v_k - rank d_k - rank d_{k-1}); Kuenneth assembles the term's
// Poincare polynomial as the product of the factor polynomials. Linear
// extension with b_k(-G) = -b_k(G).
std::vector<long long> betti_numbers(const RingElement& e, BettiMethod method = BettiMethod::Auto);
Polynomial poincare_polynomial(const RingElement& e, BettiMethod method = BettiMethod::Auto);

// Kernel dimensions of the graded interaction Hodge blocks; the alternating
// sum is the Wu characteristic.
std::vector<long long> interaction_betti(const SimplicialComplex& g, int max_cells = 48);

struct CurvatureMap {
    std::vector<std::pair<std::string, Rat>> values; // per zero-cell, coefficient included
    Rat total;
};

// K(v) = sum_d (-1)^d N_d(v)/(d+1) per factor vertex, product rule across
// factors, linear over terms. Total is the Euler characteristic.
CurvatureMap curvature(const RingElement& e);

struct IndexMap {
    std::vector<std::pair<std::string, long long>> indices;
    long long total = 0;
};

// Poincare-Hopf with one injective rational function per factor of each term
// (outer index: term, inner: factor; f maps factor vertices). The index of a
// product zero-cell is the product of the per-factor indices
// i_f(v) = 1 - chi(S_f^-(v)); the total is chi(e).
using FactorFunctions = std::vector<std::vector<std::map<Vertex, Rat>>>;
IndexMap poincare_hopf(const RingElement& e, const FactorFunctions& f);

// Same with seeded random injective functions.
IndexMap poincare_hopf_random(const RingElement& e, std::uint64_t seed);

// Refinement-graph variant: f assigns a value to every product cell (vertex
// of the refinement graph); f must separate adjacent cells. Indices live on
// all cells; i(x) = 1 - chi(Whitney(S_f^-(x))).
IndexMap poincare_hopf_refinement(const ProductTerm& term, const std::vector<Rat>& f);

struct Sampler {
    enum Kind { Exact, MonteCarlo } kind = Exact;
    std::uint64_t seed = 0;
    long long samples = 0;

    static Sampler exact() { return {Exact, 0, 0}; }
    static Sampler monte_carlo(std::uint64_t seed, long long samples) {
        return {MonteCarlo, seed, samples};
    }
};

// Expectation of the Poincare-Hopf index over orderings of the zero-cells:
// exact mode enumerates all orderings (<= 8 zero-cells per term) and equals
// curvature as rationals; Monte Carlo draws seeded random orderings,
// deterministic in (seed, samples) regardless of chunking.
CurvatureMap index_expectation(const RingElement& e, const Sampler& sampler);

struct GreenReport {
    ConnectionOperator op;
    IntMatrix g;                  // exact inverse of op.L
    std::vector<Int> potentials;  // row sums V(x)
    Int total;                    // = chi(e), the energy theorem
};

// max_summand_cells caps the exact inversion (TooLarge beyond).
GreenReport green_functions(const RingElement& e, int max_summand_cells = 600);

struct LefschetzReport {
    long long chi_T = 0;       // super trace on cohomology, exact
    long long fixed_sum = 0;   // sum of i_T(x) over fixed cells
    std::vector<std::pair<std::string, long long>> fixed_indices;
    std::vector<long long> cohomology_traces; // tr(T | H^k)
};

LefschetzReport lefschetz(const ProductTerm& term, const Automorphism& T);

struct McKeanSingerReport {
    Int str_g;                      // super trace of L^{-1}, exact
    long long chi = 0;
    std::vector<double> t_values;
    std::vector<double> str_exp;    // str(exp(-t H)) per t
    double max_deviation = 0.0;     // max |str_exp - chi|
    double supersymmetry_deviation = 0.0;
    bool supersymmetry_checked = false;
};

McKeanSingerReport mckean_singer(const RingElement& e);

// Inductive dimension of a graph: -1 for the empty graph, else
// 1 + average over vertices of the dimension of their unit spheres.
Rat inductive_dimension_graph(const Graph& g);

// Per-term inductive dimension (sum across factors of the dimension of the
// factor's refinement graph); the zero element is excluded.
std::vector<Rat> dimension(const RingElement& e);

// c(complex) = largest cell cardinality; multiplicative over factors,
// max over summands, c(-G) = -c(G); c(0) = 0.
long long clique_number(const RingElement& e);

} // namespace strongring
