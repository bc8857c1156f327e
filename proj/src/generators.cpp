#include "strongring/generators.hpp"

#include <algorithm>

#include "strongring/graph.hpp"
#include "strongring/rng.hpp"

namespace strongring {

SimplicialComplex gen_complete(int n) {
    if (n < 1 || n > 20) throw BadParameter("K n requires 1 <= n <= 20");
    Simplex all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    return SimplicialComplex::from_facets({all});
}

SimplicialComplex gen_cycle(int n) {
    if (n < 3) throw BadParameter("C n requires n >= 3");
    if (n == 3) return gen_complete(3); // Whitney complex of the triangle
    std::vector<Simplex> facets;
    for (int v = 0; v < n; ++v) facets.push_back({v, (v + 1) % n});
    for (auto& f : facets) std::sort(f.begin(), f.end());
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_path(int n) {
    if (n < 1) throw BadParameter("L n requires n >= 1");
    std::vector<Simplex> facets;
    if (n == 1) facets.push_back({0});
    for (int v = 0; v + 1 < n; ++v) facets.push_back({v, v + 1});
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_points(int n) {
    if (n < 0) throw BadParameter("P n requires n >= 0");
    std::vector<Simplex> facets;
    for (int v = 0; v < n; ++v) facets.push_back({v});
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_octahedron() { return whitney_complex(octahedron_graph()); }

SimplicialComplex zykov_join_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    Vertex offset = 0;
    for (const auto& c : a.cells())
        for (Vertex v : c) offset = std::max(offset, v + 1);
    std::vector<Simplex> cells = a.cells();
    std::vector<Simplex> b_shifted;
    for (auto c : b.cells()) {
        for (auto& v : c) v += offset;
        b_shifted.push_back(c);
        cells.push_back(std::move(c));
    }
    for (const auto& x : a.cells())
        for (const auto& y : b_shifted) {
            Simplex u = x;
            u.insert(u.end(), y.begin(), y.end());
            std::sort(u.begin(), u.end());
            cells.push_back(std::move(u));
        }
    return SimplicialComplex::from_cells(std::move(cells));
}

SimplicialComplex gen_suspension(const SimplicialComplex& g) {
    return zykov_join_complex(g, gen_points(2));
}

SimplicialComplex gen_random_er(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw BadParameter("RandomER requires n >= 0 and p in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return whitney_complex(g);
}

SimplicialComplex gen_primes(int n) {
    if (n < 2) throw BadParameter("Primes n requires n >= 2");
    std::vector<Simplex> cells;
    for (int m = 2; m <= n; ++m) {
        int x = m;
        Simplex factors;
        bool square_free = true;
        for (int p = 2; p * p <= x && square_free; ++p) {
            if (x % p == 0) {
                x /= p;
                if (x % p == 0) square_free = false;
                factors.push_back(p);
            }
        }
        if (!square_free) continue;
        if (x > 1) factors.push_back(x);
        cells.push_back(std::move(factors));
    }
    return SimplicialComplex::from_cells(std::move(cells));
}

} // namespace strongring
