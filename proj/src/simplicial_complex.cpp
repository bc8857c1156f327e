#include "strongring/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace strongring {

bool simplices_intersect(const Simplex& a, const Simplex& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

bool simplex_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool cell_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::string simplex_to_string(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << '}';
    return os.str();
}

SimplicialComplex SimplicialComplex::from_cells(std::vector<Simplex> cells) {
    for (auto& c : cells) {
        if (c.empty()) throw EmptySetMember("the empty set is never a member of a complex");
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (Vertex v : c)
            if (v < 0) throw BadParameter("vertices must be non-negative integers");
    }
    std::sort(cells.begin(), cells.end(), cell_less);
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    // Downward closure: checking all codimension-1 subsets suffices.
    std::set<Simplex> present(cells.begin(), cells.end());
    for (const auto& c : cells) {
        if (c.size() == 1) continue;
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            Simplex sub;
            sub.reserve(c.size() - 1);
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) sub.push_back(c[i]);
            if (!present.count(sub))
                throw ClosureViolation("missing subset " + simplex_to_string(sub) +
                                       " of " + simplex_to_string(c));
        }
    }

    SimplicialComplex g;
    g.cells_ = std::move(cells);
    g.finish();
    return g;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
    std::set<Simplex> closure;
    for (auto f : facets) {
        if (f.empty()) throw EmptySetMember("facet list contains the empty set");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (Vertex v : f)
            if (v < 0) throw BadParameter("vertices must be non-negative integers");
        // all non-empty subsets of f
        std::size_t n = f.size();
        if (n > 24) throw TooLarge("facet with more than 24 vertices");
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) s.push_back(f[i]);
            closure.insert(std::move(s));
        }
    }
    SimplicialComplex g;
    g.cells_.assign(closure.begin(), closure.end());
    std::sort(g.cells_.begin(), g.cells_.end(), cell_less);
    g.finish();
    return g;
}

void SimplicialComplex::finish() {
    facets_.clear();
    for (const auto& c : cells_) {
        bool maximal = true;
        for (const auto& d : cells_) {
            if (d.size() > c.size() && simplex_subset(c, d)) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets_.push_back(c);
    }
    std::set<Vertex> vs;
    for (const auto& c : cells_) vs.insert(c.begin(), c.end());
    vertex_count_ = static_cast<int>(vs.size());
}

int SimplicialComplex::dim() const {
    return cells_.empty() ? -1 : simplex_dim(cells_.back());
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& c : cells_) f[static_cast<std::size_t>(simplex_dim(c))]++;
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (const auto& c : cells_) chi += simplex_dim(c) % 2 == 0 ? 1 : -1;
    return chi;
}

int SimplicialComplex::index_of(const Simplex& s) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), s, cell_less);
    if (it != cells_.end() && *it == s) return static_cast<int>(it - cells_.begin());
    return -1;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> vs;
    for (const auto& c : cells_)
        if (c.size() == 1) vs.push_back(c[0]);
    return vs;
}

int SimplicialComplex::compare(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.cell_count() != b.cell_count()) return a.cell_count() < b.cell_count() ? -1 : 1;
    for (int i = 0; i < a.cell_count(); ++i) {
        const auto& x = a.cells_[static_cast<std::size_t>(i)];
        const auto& y = b.cells_[static_cast<std::size_t>(i)];
        if (x != y) return cell_less(x, y) ? -1 : 1;
    }
    return 0;
}

} // namespace strongring
