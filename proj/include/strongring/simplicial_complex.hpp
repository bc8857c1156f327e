#pragma once

#include <string>
#include <vector>

#include "strongring/errors.hpp"

namespace strongring {

using Vertex = int;
// A simplex is a non-empty set of vertices, stored sorted ascending.
using Simplex = std::vector<Vertex>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

bool simplices_intersect(const Simplex& a, const Simplex& b);
bool simplex_subset(const Simplex& a, const Simplex& b); // a ⊆ b

// Canonical cell order: by dimension, then lexicographically on the sorted
// vertex list.
bool cell_less(const Simplex& a, const Simplex& b);

std::string simplex_to_string(const Simplex& s);

// A finite abstract simplicial complex: a finite set of non-empty vertex sets
// closed under taking non-empty subsets. The empty complex (no sets at all)
// is allowed; it is the zero of the strong ring.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Validates downward closure; throws ClosureViolation / EmptySetMember.
    static SimplicialComplex from_cells(std::vector<Simplex> cells);

    // Generates the downward closure of the given facets.
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    const std::vector<Simplex>& cells() const { return cells_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    const Simplex& cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }

    int cell_count() const { return static_cast<int>(cells_.size()); }
    int vertex_count() const { return vertex_count_; }
    bool empty() const { return cells_.empty(); }

    // Maximal simplex dimension; -1 for the empty complex.
    int dim() const;
    // True iff every cell is a single vertex (and the complex is non-empty).
    bool zero_dimensional() const { return !empty() && dim() == 0; }

    int omega(int cell_index) const { return simplex_dim(cells_[static_cast<std::size_t>(cell_index)]) % 2 == 0 ? 1 : -1; }

    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;

    // Index in canonical order, or -1.
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    // Sorted list of distinct vertices.
    std::vector<Vertex> vertices() const;

    bool operator==(const SimplicialComplex& o) const { return cells_ == o.cells_; }

    // Total order used to sort factors inside a product term.
    static int compare(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    void finish(); // sorts cells, computes facets and vertex_count

    std::vector<Simplex> cells_;
    std::vector<Simplex> facets_;
    int vertex_count_ = 0;
};

} // namespace strongring
