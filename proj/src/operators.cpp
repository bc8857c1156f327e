#include "strongring/operators.hpp"

#include <algorithm>
#include <map>

#include "strongring/runtime.hpp"

namespace strongring {

namespace {
// Incidence sign of removing the vertex at position p of a sorted simplex.
inline int incidence_sign(std::size_t p) { return p % 2 == 0 ? 1 : -1; }
} // namespace

SparseIntMatrix full_exterior_derivative(const CellBasis& basis) {
    const int n = basis.size();
    const int m = basis.factor_count();
    SparseIntMatrix d(n, n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(max_threads())
    for (int target = 0; target < n; ++target) {
        const ProductCell& y = basis.cell(target);
        auto& out = d.row[static_cast<std::size_t>(target)];
        int koszul = 1;
        for (int f = 0; f < m; ++f) {
            const Simplex& yf = basis.factor_cell(f, y[static_cast<std::size_t>(f)]);
            if (yf.size() > 1) {
                ProductCell x = y;
                for (std::size_t p = 0; p < yf.size(); ++p) {
                    Simplex face;
                    face.reserve(yf.size() - 1);
                    for (std::size_t q = 0; q < yf.size(); ++q)
                        if (q != p) face.push_back(yf[q]);
                    // factor cells are the complex cells, downward closed
                    int fi = static_cast<int>(std::lower_bound(basis.factor_cells(f).begin(),
                                                               basis.factor_cells(f).end(), face,
                                                               cell_less) -
                                              basis.factor_cells(f).begin());
                    x[static_cast<std::size_t>(f)] = fi;
                    int src = basis.index_of(x);
                    out.emplace_back(src, koszul * incidence_sign(p));
                }
            }
            koszul *= simplex_dim(yf) % 2 == 0 ? 1 : -1;
        }
        std::sort(out.begin(), out.end());
    }
    return d;
}

OperatorBundle operator_bundle(const ProductTerm& term) {
    OperatorBundle b;
    b.basis = CellBasis(term);
    b.d = full_exterior_derivative(b.basis);
    if (!sparse_mul(b.d, b.d).is_zero()) throw Error("d*d != 0 (internal)");
    b.D = sparse_add(b.d, b.d.transpose());
    b.H = sparse_mul(b.D, b.D);
    if (!b.D.is_symmetric() || !b.H.is_symmetric()) throw Error("Dirac/Hodge not symmetric (internal)");

    const auto& off = b.basis.grading_offsets();
    for (int k = 0; k <= b.basis.max_dim(); ++k)
        b.blocks.push_back(b.H.block(off[static_cast<std::size_t>(k)], off[static_cast<std::size_t>(k + 1)],
                                     off[static_cast<std::size_t>(k)], off[static_cast<std::size_t>(k + 1)]));
    // H must vanish outside the graded diagonal blocks.
    long long block_nnz = 0;
    for (const auto& blk : b.blocks) block_nnz += blk.nnz();
    if (block_nnz != b.H.nnz()) throw Error("Hodge operator not block diagonal (internal)");
    return b;
}

std::vector<SparseIntMatrix> boundary_operators(const ProductTerm& term) {
    CellBasis basis(term);
    SparseIntMatrix d = full_exterior_derivative(basis);
    const auto& off = basis.grading_offsets();
    std::vector<SparseIntMatrix> dk;
    for (int k = 0; k < basis.max_dim(); ++k)
        dk.push_back(d.block(off[static_cast<std::size_t>(k + 1)], off[static_cast<std::size_t>(k + 2)],
                             off[static_cast<std::size_t>(k)], off[static_cast<std::size_t>(k + 1)]));
    return dk;
}

SparseIntMatrix connection_laplacian(const ProductTerm& term) {
    CellBasis basis(term);
    const int n = basis.size();
    SparseIntMatrix L(n, n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(max_threads())
    for (int i = 0; i < n; ++i) {
        auto& out = L.row[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            if (i == j || basis.cells_intersect(i, j)) out.emplace_back(j, 1);
    }
    return L;
}

int ConnectionOperator::omega(int i) const {
    for (int s = 0; s < summand_count(); ++s)
        if (i < summand_offset[static_cast<std::size_t>(s + 1)])
            return summand_basis[static_cast<std::size_t>(s)].omega(i - summand_offset[static_cast<std::size_t>(s)]);
    throw VertexOutOfRange("row index out of range");
}

int ConnectionOperator::sign_of_row(int i) const {
    for (int s = 0; s < summand_count(); ++s)
        if (i < summand_offset[static_cast<std::size_t>(s + 1)]) return summand_sign[static_cast<std::size_t>(s)];
    throw VertexOutOfRange("row index out of range");
}

ConnectionOperator connection_operator(const RingElement& e) {
    ConnectionOperator op;
    op.summand_offset.push_back(0);
    op.L = SparseIntMatrix(0, 0);
    for (auto [sign, term] : summands(e)) {
        SparseIntMatrix L = connection_laplacian(*term);
        if (sign < 0)
            for (auto& r : L.row)
                for (auto& [j, v] : r) v = -v;
        op.L = direct_sum(op.L, L);
        op.summand_basis.emplace_back(*term);
        op.summand_sign.push_back(sign);
        op.summand_offset.push_back(op.summand_offset.back() + L.rows);
    }
    return op;
}

InteractionOperator interaction_derivative(const SimplicialComplex& g) {
    InteractionOperator op;
    const int n = g.cell_count();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (simplices_intersect(g.cell(i), g.cell(j))) pairs.emplace_back(i, j);
    auto pair_dim = [&](const std::pair<int, int>& p) {
        return simplex_dim(g.cell(p.first)) + simplex_dim(g.cell(p.second));
    };
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        int da = pair_dim(a), db = pair_dim(b);
        if (da != db) return da < db;
        return a < b;
    });
    op.pairs = pairs;
    for (const auto& p : pairs) op.dims.push_back(pair_dim(p));
    int maxd = op.dims.empty() ? -1 : op.dims.back();
    op.grading_offsets.assign(static_cast<std::size_t>(maxd + 2), 0);
    for (int d : op.dims) op.grading_offsets[static_cast<std::size_t>(d + 1)]++;
    for (std::size_t k = 1; k < op.grading_offsets.size(); ++k)
        op.grading_offsets[k] += op.grading_offsets[k - 1];

    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);

    // dF(x,y) = F(delta x, y) + (-1)^{dim x} F(x, delta y), restricted to
    // intersecting pairs. In the degree-raising matrix picture the entry
    // sits at (target = coface pair, source = pair).
    op.d = SparseIntMatrix(op.size(), op.size());
    for (int t = 0; t < op.size(); ++t) {
        auto [xi, yi] = op.pairs[static_cast<std::size_t>(t)];
        const Simplex& x = g.cell(xi);
        const Simplex& y = g.cell(yi);
        auto& out = op.d.row[static_cast<std::size_t>(t)];
        for (std::size_t p = 0; p < x.size() && x.size() > 1; ++p) {
            Simplex face;
            for (std::size_t q = 0; q < x.size(); ++q)
                if (q != p) face.push_back(x[q]);
            auto it = index.find({g.index_of(face), yi});
            if (it != index.end()) out.emplace_back(it->second, incidence_sign(p));
        }
        int koszul = simplex_dim(x) % 2 == 0 ? 1 : -1;
        for (std::size_t p = 0; p < y.size() && y.size() > 1; ++p) {
            Simplex face;
            for (std::size_t q = 0; q < y.size(); ++q)
                if (q != p) face.push_back(y[q]);
            auto it = index.find({xi, g.index_of(face)});
            if (it != index.end()) out.emplace_back(it->second, koszul * incidence_sign(p));
        }
        std::sort(out.begin(), out.end());
    }
    op.d.finalize();
    if (!sparse_mul(op.d, op.d).is_zero()) throw Error("interaction d*d != 0 (internal)");
    return op;
}

PerFactorAutomorphism identity_automorphism(const ProductTerm& term) {
    PerFactorAutomorphism T;
    for (const auto& f : term.factors) {
        Vertex maxv = 0;
        for (const auto& c : f.cells())
            for (Vertex v : c) maxv = std::max(maxv, v);
        std::vector<Vertex> id(static_cast<std::size_t>(maxv + 1));
        for (Vertex v = 0; v <= maxv; ++v) id[static_cast<std::size_t>(v)] = v;
        T.maps.push_back(std::move(id));
    }
    return T;
}

namespace {

// Parity of the permutation sorting the image sequence.
int permutation_sign(const std::vector<Vertex>& image) {
    int inversions = 0;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
            if (image[i] > image[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

SparseIntMatrix koopman_per_factor(const CellBasis& basis, const PerFactorAutomorphism& T) {
    const int m = basis.factor_count();
    if (static_cast<int>(T.maps.size()) != m)
        throw NotAnAutomorphism("wrong number of factor maps");
    // image index and sign per factor cell
    std::vector<std::vector<std::pair<int, int>>> image(static_cast<std::size_t>(m));
    for (int f = 0; f < m; ++f) {
        const auto& cells = basis.factor_cells(f);
        const auto& map = T.maps[static_cast<std::size_t>(f)];
        for (const auto& c : cells) {
            std::vector<Vertex> img;
            for (Vertex v : c) {
                if (v < 0 || v >= static_cast<Vertex>(map.size()))
                    throw NotAnAutomorphism("vertex map does not cover vertex " + std::to_string(v));
                img.push_back(map[static_cast<std::size_t>(v)]);
            }
            int sign = permutation_sign(img);
            Simplex sorted_img(img.begin(), img.end());
            std::sort(sorted_img.begin(), sorted_img.end());
            sorted_img.erase(std::unique(sorted_img.begin(), sorted_img.end()), sorted_img.end());
            if (sorted_img.size() != c.size())
                throw NotAnAutomorphism("map is not injective on " + simplex_to_string(c));
            auto it = std::lower_bound(cells.begin(), cells.end(), sorted_img, cell_less);
            if (it == cells.end() || *it != sorted_img)
                throw NotAnAutomorphism("image of " + simplex_to_string(c) + " is not a cell");
            image[static_cast<std::size_t>(f)].emplace_back(static_cast<int>(it - cells.begin()), sign);
        }
    }
    SparseIntMatrix U(basis.size(), basis.size());
    for (int src = 0; src < basis.size(); ++src) {
        const ProductCell& c = basis.cell(src);
        ProductCell img(c.size());
        int sign = 1;
        for (int f = 0; f < m; ++f) {
            auto [idx, s] = image[static_cast<std::size_t>(f)][static_cast<std::size_t>(c[static_cast<std::size_t>(f)])];
            img[static_cast<std::size_t>(f)] = idx;
            sign *= s;
        }
        U.add(basis.index_of(img), src, sign);
    }
    U.finalize();
    return U;
}

SparseIntMatrix koopman_factor_swap(const CellBasis& basis, const ProductTerm& term,
                                    const FactorSwapAutomorphism& T) {
    const int m = basis.factor_count();
    if (T.i < 0 || T.j < 0 || T.i >= m || T.j >= m || T.i == T.j)
        throw NotAnAutomorphism("factor swap indices out of range");
    if (SimplicialComplex::compare(term.factors[static_cast<std::size_t>(T.i)],
                                   term.factors[static_cast<std::size_t>(T.j)]) != 0)
        throw NotAnAutomorphism("factor swap requires structurally equal factors");
    SparseIntMatrix U(basis.size(), basis.size());
    for (int src = 0; src < basis.size(); ++src) {
        ProductCell c = basis.cell(src);
        int di = simplex_dim(basis.factor_cell(T.i, c[static_cast<std::size_t>(T.i)]));
        int dj = simplex_dim(basis.factor_cell(T.j, c[static_cast<std::size_t>(T.j)]));
        std::swap(c[static_cast<std::size_t>(T.i)], c[static_cast<std::size_t>(T.j)]);
        int sign = (di * dj) % 2 == 0 ? 1 : -1; // graded symmetry
        U.add(basis.index_of(c), src, sign);
    }
    U.finalize();
    return U;
}

} // namespace

SparseIntMatrix koopman_matrix(const ProductTerm& term, const Automorphism& T) {
    CellBasis basis(term);
    if (std::holds_alternative<PerFactorAutomorphism>(T))
        return koopman_per_factor(basis, std::get<PerFactorAutomorphism>(T));
    return koopman_factor_swap(basis, term, std::get<FactorSwapAutomorphism>(T));
}

} // namespace strongring
