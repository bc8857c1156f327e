#include "strongring/cell_basis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace strongring {

CellBasis::CellBasis(const ProductTerm& term) {
    if (term.factors.empty()) throw EmptyTerm("term has no factors");
    for (const auto& f : term.factors) {
        if (f.empty()) throw EmptyTerm("term contains the empty complex");
        factor_cells_.push_back(f.cells());
        factor_sizes_.push_back(f.cell_count());
    }
    const int m = factor_count();

    long long total = 1;
    for (int s : factor_sizes_) total *= s;

    cells_.reserve(static_cast<std::size_t>(total));
    ProductCell cur(static_cast<std::size_t>(m), 0);
    for (long long k = 0; k < total; ++k) {
        long long rest = k;
        for (int f = m - 1; f >= 0; --f) {
            cur[static_cast<std::size_t>(f)] = static_cast<int>(rest % factor_sizes_[static_cast<std::size_t>(f)]);
            rest /= factor_sizes_[static_cast<std::size_t>(f)];
        }
        cells_.push_back(cur);
    }
    auto cell_dim = [&](const ProductCell& c) {
        int d = 0;
        for (int f = 0; f < m; ++f) d += simplex_dim(factor_cells_[static_cast<std::size_t>(f)][static_cast<std::size_t>(c[static_cast<std::size_t>(f)])]);
        return d;
    };
    std::stable_sort(cells_.begin(), cells_.end(), [&](const ProductCell& a, const ProductCell& b) {
        int da = cell_dim(a), db = cell_dim(b);
        if (da != db) return da < db;
        return a < b;
    });

    dims_.reserve(cells_.size());
    for (const auto& c : cells_) dims_.push_back(cell_dim(c));

    int maxd = dims_.empty() ? -1 : dims_.back();
    grading_offsets_.assign(static_cast<std::size_t>(maxd + 2), 0);
    for (int d : dims_) grading_offsets_[static_cast<std::size_t>(d + 1)]++;
    std::partial_sum(grading_offsets_.begin(), grading_offsets_.end(), grading_offsets_.begin());

    kron_to_basis_.assign(cells_.size(), -1);
    for (int i = 0; i < size(); ++i)
        kron_to_basis_[static_cast<std::size_t>(kron_index(cells_[static_cast<std::size_t>(i)]))] = i;

    // Per-factor pairwise tables.
    for (int f = 0; f < m; ++f) {
        const auto& fc = factor_cells_[static_cast<std::size_t>(f)];
        const int n = static_cast<int>(fc.size());
        const int words = (n + 63) / 64;
        std::vector<std::uint64_t> meet(static_cast<std::size_t>(n) * static_cast<std::size_t>(words), 0);
        std::vector<std::uint64_t> sub(static_cast<std::size_t>(n) * static_cast<std::size_t>(words), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (simplices_intersect(fc[static_cast<std::size_t>(i)], fc[static_cast<std::size_t>(j)]))
                    meet[static_cast<std::size_t>(i) * static_cast<std::size_t>(words) + static_cast<std::size_t>(j / 64)] |= 1ULL << (j % 64);
                if (simplex_subset(fc[static_cast<std::size_t>(i)], fc[static_cast<std::size_t>(j)]))
                    sub[static_cast<std::size_t>(i) * static_cast<std::size_t>(words) + static_cast<std::size_t>(j / 64)] |= 1ULL << (j % 64);
            }
        meet_.push_back(std::move(meet));
        sub_.push_back(std::move(sub));
    }
}

int CellBasis::index_of(const ProductCell& c) const {
    long long k = kron_index(c);
    if (k < 0 || k >= static_cast<long long>(kron_to_basis_.size())) return -1;
    return kron_to_basis_[static_cast<std::size_t>(k)];
}

long long CellBasis::kron_index(const ProductCell& c) const {
    long long k = 0;
    for (int f = 0; f < factor_count(); ++f)
        k = k * factor_sizes_[static_cast<std::size_t>(f)] + c[static_cast<std::size_t>(f)];
    return k;
}

bool CellBasis::table(const std::vector<std::uint64_t>& t, int f, int i, int j) const {
    const int n = factor_sizes_[static_cast<std::size_t>(f)];
    const int words = (n + 63) / 64;
    return (t[static_cast<std::size_t>(i) * static_cast<std::size_t>(words) + static_cast<std::size_t>(j / 64)] >> (j % 64)) & 1;
}

bool CellBasis::cells_intersect(int i, int j) const {
    const auto& a = cells_[static_cast<std::size_t>(i)];
    const auto& b = cells_[static_cast<std::size_t>(j)];
    for (int f = 0; f < factor_count(); ++f)
        if (!table(meet_[static_cast<std::size_t>(f)], f, a[static_cast<std::size_t>(f)], b[static_cast<std::size_t>(f)])) return false;
    return true;
}

bool CellBasis::cell_contained(int i, int j) const {
    const auto& a = cells_[static_cast<std::size_t>(i)];
    const auto& b = cells_[static_cast<std::size_t>(j)];
    for (int f = 0; f < factor_count(); ++f)
        if (!table(sub_[static_cast<std::size_t>(f)], f, a[static_cast<std::size_t>(f)], b[static_cast<std::size_t>(f)])) return false;
    return true;
}

std::string CellBasis::descriptor(int i) const {
    std::ostringstream os;
    const auto& c = cells_[static_cast<std::size_t>(i)];
    for (int f = 0; f < factor_count(); ++f) {
        if (f) os << 'x';
        os << simplex_to_string(factor_cell(f, c[static_cast<std::size_t>(f)]));
    }
    return os.str();
}

} // namespace strongring
