#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strongring/ring.hpp"

namespace strongring {

// A product cell: one cell index per factor of the owning term.
using ProductCell = std::vector<int>;

// Ordered basis of the product cells of one term. All operator matrices of
// the term are indexed by this basis. Cells are sorted by total dimension,
// then lexicographically by the tuple of factor cell indices;
// grading_offsets[k] is the start of the dimension-k block.
class CellBasis {
public:
    CellBasis() = default;
    explicit CellBasis(const ProductTerm& term);

    int size() const { return static_cast<int>(cells_.size()); }
    int factor_count() const { return static_cast<int>(factor_cells_.size()); }
    const ProductCell& cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
    int dim(int i) const { return dims_[static_cast<std::size_t>(i)]; }
    int omega(int i) const { return dims_[static_cast<std::size_t>(i)] % 2 == 0 ? 1 : -1; }
    int max_dim() const { return static_cast<int>(grading_offsets_.size()) - 2; }

    // grading_offsets()[k] .. grading_offsets()[k+1] is the k-block; the
    // vector has max_dim()+2 entries, the last one equal to size().
    const std::vector<int>& grading_offsets() const { return grading_offsets_; }
    int block_size(int k) const {
        return grading_offsets_[static_cast<std::size_t>(k + 1)] - grading_offsets_[static_cast<std::size_t>(k)];
    }

    const std::vector<Simplex>& factor_cells(int f) const { return factor_cells_[static_cast<std::size_t>(f)]; }
    const Simplex& factor_cell(int f, int i) const { return factor_cells_[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)]; }

    // Index of a product cell given by factor cell indices; -1 if absent.
    int index_of(const ProductCell& c) const;

    // Row-major index in the tuple (Kronecker) enumeration of factor cells.
    long long kron_index(const ProductCell& c) const;
    // Basis index for a given Kronecker/tuple index.
    int from_kron_index(long long k) const { return kron_to_basis_[static_cast<std::size_t>(k)]; }

    bool cells_intersect(int i, int j) const;  // every coordinate pair intersects
    bool cell_contained(int i, int j) const;   // coordinatewise x_f ⊆ y_f

    std::string descriptor(int i) const; // e.g. "{0,1}x{2}"

private:
    std::vector<std::vector<Simplex>> factor_cells_;
    std::vector<ProductCell> cells_;
    std::vector<int> dims_;
    std::vector<int> grading_offsets_;
    std::vector<int> kron_to_basis_;
    // per-factor intersection / containment tables, bit packed
    std::vector<std::vector<std::uint64_t>> meet_, sub_;
    std::vector<int> factor_sizes_;
    bool table(const std::vector<std::uint64_t>& t, int f, int i, int j) const;
};

} // namespace strongring
