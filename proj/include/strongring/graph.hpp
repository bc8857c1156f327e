#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "strongring/simplicial_complex.hpp"

namespace strongring {

// Finite simple graph with bitset adjacency. Derived graphs (connection
// graphs, refinements) carry textual labels identifying the cell each vertex
// stands for, so operator matrices can be cross-indexed.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), row(n)) {}

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const {
        return u != v && (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1;
    }
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Induced subgraph on the given vertices (in the given order); labels
    // follow along when present.
    Graph induced(const std::vector<int>& verts) const;
    Graph complement() const;

    bool same_edges(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

private:
    static std::vector<std::uint64_t> row(int n) {
        return std::vector<std::uint64_t>(static_cast<std::size_t>((n + 63) / 64), 0);
    }
    int n_ = 0;
    std::vector<std::vector<std::uint64_t>> adj_;
    std::vector<std::string> labels_;
};

// Plain constructions.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph octahedron_graph(); // K_{2,2,2}

Graph disjoint_union(const Graph& a, const Graph& b);
Graph strong_product(const Graph& a, const Graph& b);
Graph zykov_join(const Graph& a, const Graph& b);
Graph zykov_product(const Graph& a, const Graph& b);

// All cliques of the graph as a simplicial complex (vertex i of the graph is
// vertex i of the complex).
SimplicialComplex whitney_complex(const Graph& g);
int clique_number_graph(const Graph& g);

// 1-skeleton of a complex; vertex i of the graph is the i-th 0-cell.
Graph one_skeleton(const SimplicialComplex& g);

Graph unit_sphere(const Graph& g, int v);
Graph sublevel_sphere(const Graph& g, const std::vector<mpq_class>& f, int v);

bool is_contractible(const Graph& g);
bool is_evako_sphere(const Graph& g, int d);

// Export formats: one "u v" line per edge, and the facet JSON
// {"facets": [[...], ...]} that the expression parser reads back via @path.
void write_edge_list(std::ostream& os, const Graph& g);
void write_facets_json(std::ostream& os, const SimplicialComplex& g);

} // namespace strongring
