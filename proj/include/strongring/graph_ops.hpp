#pragma once

#include <map>

#include <gmpxx.h>

#include "strongring/cell_basis.hpp"
#include "strongring/graph.hpp"

namespace strongring {

// Graph on the product cells of a term; two distinct cells are adjacent iff
// they intersect in every coordinate. Vertex i is basis cell i; labels carry
// cell descriptors. The CellBasis is returned alongside for cross-indexing.
struct LabeledGraph {
    Graph graph;
    CellBasis basis;
};

LabeledGraph connection_graph(const ProductTerm& term);
LabeledGraph connection_graph(const SimplicialComplex& g);

// Serial reference for the adjacency construction, kept for testing the
// OpenMP kernel.
LabeledGraph connection_graph_serial(const ProductTerm& term);

// Vertices = product cells; edges = strict coordinatewise containment.
// refinement is the Whitney complex of that graph (vertex i of the refinement
// complex is basis cell i).
struct BarycentricRefinement {
    Graph graph;
    CellBasis basis;
    SimplicialComplex refinement;
};

BarycentricRefinement barycentric_refinement(const ProductTerm& term);
BarycentricRefinement barycentric_refinement(const SimplicialComplex& g);

// Subcomplex of the Barycentric refinement generated by the cells of G on
// which f - c changes sign. f assigns a rational to every vertex of G; c must
// avoid the range of f.
SimplicialComplex level_set(const SimplicialComplex& g,
                            const std::map<Vertex, mpq_class>& f, const mpq_class& c);

// The induced refinement-graph on the sign-changing cells (the natural graph
// whose Whitney complex level_set returns).
Graph level_set_graph(const SimplicialComplex& g,
                      const std::map<Vertex, mpq_class>& f, const mpq_class& c);

} // namespace strongring
