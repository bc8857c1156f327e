#include "strongring/graph_ops.hpp"

#include <algorithm>

#include "strongring/runtime.hpp"

namespace strongring {

namespace {
std::vector<std::string> basis_labels(const CellBasis& basis) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(basis.size()));
    for (int i = 0; i < basis.size(); ++i) labels.push_back(basis.descriptor(i));
    return labels;
}
} // namespace

LabeledGraph connection_graph(const ProductTerm& term) {
    CellBasis basis(term);
    const int n = basis.size();
    Graph g(n);

    // Upper-triangle adjacency rows are independent work items.
    std::vector<std::vector<int>> hits(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16) num_threads(max_threads())
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (basis.cells_intersect(i, j)) hits[static_cast<std::size_t>(i)].push_back(j);

    for (int i = 0; i < n; ++i)
        for (int j : hits[static_cast<std::size_t>(i)]) g.add_edge(i, j);
    g.set_labels(basis_labels(basis));
    return {std::move(g), std::move(basis)};
}

LabeledGraph connection_graph_serial(const ProductTerm& term) {
    CellBasis basis(term);
    const int n = basis.size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (basis.cells_intersect(i, j)) g.add_edge(i, j);
    g.set_labels(basis_labels(basis));
    return {std::move(g), std::move(basis)};
}

LabeledGraph connection_graph(const SimplicialComplex& g) {
    if (g.empty()) throw EmptyTerm("connection graph of the empty complex");
    return connection_graph(ProductTerm(g));
}

BarycentricRefinement barycentric_refinement(const ProductTerm& term) {
    CellBasis basis(term);
    const int n = basis.size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (basis.cell_contained(i, j) || basis.cell_contained(j, i)) g.add_edge(i, j);
    g.set_labels(basis_labels(basis));
    SimplicialComplex refinement = whitney_complex(g);
    return {std::move(g), std::move(basis), std::move(refinement)};
}

BarycentricRefinement barycentric_refinement(const SimplicialComplex& g) {
    if (g.empty()) throw EmptyTerm("refinement of the empty complex");
    return barycentric_refinement(ProductTerm(g));
}

namespace {
std::vector<int> sign_changing_cells(const SimplicialComplex& g,
                                     const std::map<Vertex, mpq_class>& f, const mpq_class& c) {
    std::vector<int> chosen;
    for (int i = 0; i < g.cell_count(); ++i) {
        const Simplex& x = g.cell(i);
        bool below = false, above = false;
        for (Vertex v : x) {
            auto it = f.find(v);
            if (it == f.end()) throw BadParameter("level_set: f undefined on vertex " + std::to_string(v));
            if (it->second == c) throw ValueInRange("level value c lies in the range of f");
            (it->second < c ? below : above) = true;
        }
        if (below && above) chosen.push_back(i);
    }
    return chosen;
}
} // namespace

Graph level_set_graph(const SimplicialComplex& g,
                      const std::map<Vertex, mpq_class>& f, const mpq_class& c) {
    auto refinement = barycentric_refinement(g);
    return refinement.graph.induced(sign_changing_cells(g, f, c));
}

SimplicialComplex level_set(const SimplicialComplex& g,
                            const std::map<Vertex, mpq_class>& f, const mpq_class& c) {
    return whitney_complex(level_set_graph(g, f, c));
}

} // namespace strongring
