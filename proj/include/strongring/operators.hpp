#pragma once

#include <variant>

#include "strongring/cell_basis.hpp"
#include "strongring/exact_linalg.hpp"

namespace strongring {

// Full exterior derivative of a term (degree-raising convention: d maps
// k-cells to (k+1)-cells), Dirac D = d + d^T, Hodge H = D^2 with its graded
// blocks, all on one CellBasis. d.d = 0, symmetry of D and H, and
// block-diagonality of H are asserted at construction.
struct OperatorBundle {
    CellBasis basis;
    SparseIntMatrix d;
    SparseIntMatrix D;
    SparseIntMatrix H;
    std::vector<SparseIntMatrix> blocks; // H_k per dimension
};

// Orientation is ascending vertex order per factor simplex; multi-factor
// terms fold the two-factor Koszul rule left to right.
SparseIntMatrix full_exterior_derivative(const CellBasis& basis);

OperatorBundle operator_bundle(const ProductTerm& term);

// Graded pieces d_k: rows are the (k+1)-cells, columns the k-cells.
std::vector<SparseIntMatrix> boundary_operators(const ProductTerm& term);

// Connection Laplacian of a ring element: per term the intersection operator
// on the term's CellBasis (equal to the Kronecker product of the factor
// Laplacians under the basis index map); coefficient a contributes |a|
// summands of sign(a) * L; direct sum over all.
struct ConnectionOperator {
    SparseIntMatrix L;
    std::vector<CellBasis> summand_basis;
    std::vector<int> summand_sign;   // +-1 per summand
    std::vector<int> summand_offset; // start row of each summand, plus total size

    int size() const { return L.rows; }
    int summand_count() const { return static_cast<int>(summand_sign.size()); }
    // omega of a global row index (sign of the summand not included)
    int omega(int i) const;
    int sign_of_row(int i) const;
};

ConnectionOperator connection_operator(const RingElement& e);
SparseIntMatrix connection_laplacian(const ProductTerm& term); // single +L

// Quadratic interaction (Wu) derivative of a single complex: basis = ordered
// pairs of intersecting cells graded by dim(x)+dim(y).
struct InteractionOperator {
    std::vector<std::pair<int, int>> pairs; // indices into g.cells()
    std::vector<int> dims;
    std::vector<int> grading_offsets;
    SparseIntMatrix d;

    int size() const { return static_cast<int>(pairs.size()); }
    int max_dim() const { return static_cast<int>(grading_offsets.size()) - 2; }
};

InteractionOperator interaction_derivative(const SimplicialComplex& g);

// Automorphisms of a term: per-factor vertex permutations, or the swap of two
// structurally equal factors.
struct PerFactorAutomorphism {
    // maps[f][v] = image of vertex v in factor f (indexed by vertex value)
    std::vector<std::vector<Vertex>> maps;
};
struct FactorSwapAutomorphism {
    int i = 0, j = 1;
};
using Automorphism = std::variant<PerFactorAutomorphism, FactorSwapAutomorphism>;

PerFactorAutomorphism identity_automorphism(const ProductTerm& term);

// Signed permutation matrix of the Koopman operator U_T on the CellBasis.
// For per-factor maps the sign on a cell is the product of the per-factor
// permutation signs; the factor swap carries the graded sign
// (-1)^{dim(x) dim(y)} (the chain map commuting with d).
SparseIntMatrix koopman_matrix(const ProductTerm& term, const Automorphism& T);

} // namespace strongring
