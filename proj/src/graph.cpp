#include "strongring/graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace strongring {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw VertexOutOfRange("edge endpoint out of range");
    if (u == v) return; // no loops
    adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
    adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u >> 6)] |= 1ULL << (u & 63);
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

int Graph::degree(int v) const {
    int d = 0;
    for (std::uint64_t w : adj_[static_cast<std::size_t>(v)]) d += __builtin_popcountll(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> ns;
    for (int u = 0; u < n_; ++u)
        if (has_edge(v, u)) ns.push_back(u);
    return ns;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (!labels_.empty()) {
        std::vector<std::string> l;
        for (int v : verts) l.push_back(labels_[static_cast<std::size_t>(v)]);
        h.set_labels(std::move(l));
    }
    return h;
}

Graph Graph::complement() const {
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) h.add_edge(u, v);
    h.labels_ = labels_;
    return h;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph octahedron_graph() {
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v); // antipodal pairs (0,1),(2,3),(4,5)
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
    return g;
}

Graph strong_product(const Graph& a, const Graph& b) {
    const int m = b.vertex_count();
    Graph g(a.vertex_count() * m);
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < m; ++v)
            for (int u2 = u; u2 < a.vertex_count(); ++u2)
                for (int v2 = 0; v2 < m; ++v2) {
                    if (u2 == u && v2 <= v) continue;
                    bool ok1 = (u == u2) || a.has_edge(u, u2);
                    bool ok2 = (v == v2) || b.has_edge(v, v2);
                    if (ok1 && ok2) g.add_edge(u * m + v, u2 * m + v2);
                }
    return g;
}

Graph zykov_join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < b.vertex_count(); ++v)
            g.add_edge(u, a.vertex_count() + v);
    return g;
}

Graph zykov_product(const Graph& a, const Graph& b) {
    return strong_product(a.complement(), b.complement()).complement();
}

namespace {
void extend_cliques(const Graph& g, std::vector<int>& current, int start,
                    std::vector<Simplex>& out) {
    for (int v = start; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : current)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(v);
        out.emplace_back(current.begin(), current.end());
        extend_cliques(g, current, v + 1, out);
        current.pop_back();
    }
}
} // namespace

SimplicialComplex whitney_complex(const Graph& g) {
    std::vector<Simplex> cells;
    std::vector<int> cur;
    extend_cliques(g, cur, 0, cells);
    return SimplicialComplex::from_cells(std::move(cells));
}

namespace {
int max_clique_from(const Graph& g, std::vector<int>& cand, int size_so_far, int best) {
    if (cand.empty()) return std::max(best, size_so_far);
    if (size_so_far + static_cast<int>(cand.size()) <= best) return best;
    std::vector<int> local = cand;
    for (std::size_t i = 0; i < local.size(); ++i) {
        int v = local[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < local.size(); ++j)
            if (g.has_edge(v, local[j])) next.push_back(local[j]);
        best = max_clique_from(g, next, size_so_far + 1, best);
    }
    return best;
}
} // namespace

int clique_number_graph(const Graph& g) {
    std::vector<int> all;
    for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    return max_clique_from(g, all, 0, 0);
}

Graph one_skeleton(const SimplicialComplex& g) {
    std::vector<Vertex> vs = g.vertices();
    std::map<Vertex, int> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(vs.size()));
    std::vector<std::string> labels;
    for (Vertex v : vs) labels.push_back(std::to_string(v));
    h.set_labels(std::move(labels));
    for (const auto& c : g.cells())
        if (c.size() == 2) h.add_edge(idx[c[0]], idx[c[1]]);
    return h;
}

Graph unit_sphere(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw VertexOutOfRange("unit_sphere: vertex out of range");
    return g.induced(g.neighbors(v));
}

Graph sublevel_sphere(const Graph& g, const std::vector<mpq_class>& f, int v) {
    if (v < 0 || v >= g.vertex_count()) throw VertexOutOfRange("sublevel_sphere: vertex out of range");
    std::vector<mpq_class> closed{f[static_cast<std::size_t>(v)]};
    for (int u : g.neighbors(v)) closed.push_back(f[static_cast<std::size_t>(u)]);
    std::sort(closed.begin(), closed.end());
    if (std::adjacent_find(closed.begin(), closed.end()) != closed.end())
        throw NotLocallyInjective("f not injective on the closed neighborhood of " + std::to_string(v));
    std::vector<int> below;
    for (int u : g.neighbors(v))
        if (f[static_cast<std::size_t>(u)] < f[static_cast<std::size_t>(v)]) below.push_back(u);
    return g.induced(below);
}

namespace {
// Canonical key for memoization inside one recursion tree: the adjacency
// rows of the graph itself (vertex order is inherited from the parent).
std::vector<std::uint64_t> graph_key(const Graph& g) {
    std::vector<std::uint64_t> key;
    key.push_back(static_cast<std::uint64_t>(g.vertex_count()));
    for (auto [u, v] : g.edges())
        key.push_back((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
    return key;
}

bool contractible_impl(const Graph& g, std::map<std::vector<std::uint64_t>, bool>& memo);

bool sphere_impl(const Graph& g, int d, std::map<std::vector<std::uint64_t>, bool>& cmemo) {
    if (d < -1) return false;
    if (d == -1) return g.vertex_count() == 0;
    if (g.vertex_count() == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!sphere_impl(unit_sphere(g, v), d - 1, cmemo)) return false;
    // Puncturing anywhere must leave a contractible graph.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> rest;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v) rest.push_back(u);
        if (!contractible_impl(g.induced(rest), cmemo)) return false;
    }
    return true;
}

bool contractible_impl(const Graph& g, std::map<std::vector<std::uint64_t>, bool>& memo) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;
    auto key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = false; // guard against re-entry
    bool ok = false;
    for (int v = 0; v < n && !ok; ++v) {
        if (!contractible_impl(unit_sphere(g, v), memo)) continue;
        std::vector<int> rest;
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        if (contractible_impl(g.induced(rest), memo)) ok = true;
    }
    memo[key] = ok;
    return ok;
}
} // namespace

bool is_contractible(const Graph& g) {
    std::map<std::vector<std::uint64_t>, bool> memo;
    return contractible_impl(g, memo);
}

bool is_evako_sphere(const Graph& g, int d) {
    if (d < -1) return false;
    std::map<std::vector<std::uint64_t>, bool> cmemo;
    return sphere_impl(g, d, cmemo);
}

void write_edge_list(std::ostream& os, const Graph& g) {
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
}

void write_facets_json(std::ostream& os, const SimplicialComplex& g) {
    os << "{\"facets\": [";
    const auto& facets = g.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < facets[i].size(); ++j) {
            if (j) os << ",";
            os << facets[i][j];
        }
        os << "]";
    }
    os << "]}\n";
}

} // namespace strongring
