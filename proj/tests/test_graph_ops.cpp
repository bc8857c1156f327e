#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strongring/generators.hpp"
#include "strongring/graph_ops.hpp"
#include "strongring/parser.hpp"
#include "strongring/verify.hpp"

#include "oracles.hpp"

using namespace strongring;

namespace {
// Connection lemma as labeled-graph equality: edges of (A x B)' match those
// of A' (strong) B' under the basis <-> pair-index bijection.
bool connection_lemma_holds(const SimplicialComplex& a, const SimplicialComplex& b) {
    LabeledGraph ga = connection_graph(a);
    LabeledGraph gb = connection_graph(b);
    Graph sp = strong_product(ga.graph, gb.graph);

    RingElement prod = ring_mul(RingElement::from_complex(a), RingElement::from_complex(b));
    if (prod.terms.size() != 1) return false;
    LabeledGraph gab = connection_graph(prod.terms[0].term);
    if (gab.graph.vertex_count() != sp.vertex_count()) return false;

    // the normalized product may have reordered the factors
    bool swapped = !(prod.terms[0].term.factors[0] == a);
    const int nb = gb.graph.vertex_count();
    const int na = ga.graph.vertex_count();
    for (int i = 0; i < gab.graph.vertex_count(); ++i)
        for (int j = 0; j < gab.graph.vertex_count(); ++j) {
            long long ki = gab.basis.kron_index(gab.basis.cell(i));
            long long kj = gab.basis.kron_index(gab.basis.cell(j));
            if (swapped) { // basis tuple is (b-cell, a-cell)
                ki = (ki % na) * nb + ki / na;
                kj = (kj % na) * nb + kj / na;
            }
            if (gab.graph.has_edge(i, j) != sp.has_edge(static_cast<int>(ki), static_cast<int>(kj)))
                return false;
        }
    return true;
}
} // namespace

TEST_CASE("whitney complexes count cliques") {
    CHECK(whitney_complex(cycle_graph(4)).cell_count() == 8);
    CHECK(whitney_complex(complete_graph(3)).cell_count() == 7);
    CHECK(whitney_complex(octahedron_graph()).cell_count() == 26);
}

TEST_CASE("connection graph of K2 is the path on 3 vertices") {
    LabeledGraph g = connection_graph(gen_complete(2));
    CHECK(g.graph.vertex_count() == 3);
    CHECK(g.graph.edge_count() == 2);
    // {1} and {2} do not intersect
    CHECK_FALSE(g.graph.has_edge(0, 1));
}

TEST_CASE("octahedron complex has a 26-vertex connection graph") {
    CHECK(connection_graph(gen_octahedron()).graph.vertex_count() == 26);
}

TEST_CASE("connection lemma (G x H)' = G' strong H'") {
    CHECK(connection_lemma_holds(gen_complete(2), gen_complete(2)));
    CHECK(connection_lemma_holds(gen_cycle(4), gen_complete(3)));
    Rng rng(17);
    // zero-dimensional factors normalize into the coefficient, so they never
    // appear as product factors; draw at least one-dimensional complexes
    auto draw = [&] {
        SimplicialComplex g;
        do {
            g = random_complex(rng, 12);
        } while (g.zero_dimensional());
        return g;
    };
    for (int i = 0; i < 20; ++i) CHECK(connection_lemma_holds(draw(), draw()));
}

TEST_CASE("parallel connection graph equals serial") {
    Rng rng(23);
    for (int i = 0; i < 5; ++i) {
        ProductTerm t = random_product(rng, 2, 12);
        CHECK(connection_graph(t).graph.same_edges(connection_graph_serial(t).graph));
    }
}

TEST_CASE("strong product properties") {
    Graph k1(1);
    Graph c4 = cycle_graph(4);
    CHECK(strong_product(k1, c4).same_edges(c4));
    CHECK(strong_product(c4, complete_graph(3)).vertex_count() == 12);

    // commutative and associative up to the pair reindexing
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        Graph a = one_skeleton(random_complex(rng, 12));
        Graph b = one_skeleton(random_complex(rng, 12));
        Graph ab = strong_product(a, b);
        Graph ba = strong_product(b, a);
        const int nb = b.vertex_count();
        const int na = a.vertex_count();
        bool same = ab.vertex_count() == ba.vertex_count();
        for (int u = 0; same && u < ab.vertex_count(); ++u)
            for (int v = 0; same && v < ab.vertex_count(); ++v) {
                int u2 = (u % nb) * na + u / nb;
                int v2 = (v % nb) * na + v / nb;
                same = ab.has_edge(u, v) == ba.has_edge(u2, v2);
            }
        CHECK(same);
        // clique number is multiplicative under the strong product
        CHECK(clique_number_graph(ab) == clique_number_graph(a) * clique_number_graph(b));
    }

    // associativity: the row-major pair indices compose identically
    for (int i = 0; i < 5; ++i) {
        Graph a = one_skeleton(random_complex(rng, 8));
        Graph b = one_skeleton(random_complex(rng, 8));
        Graph c = one_skeleton(random_complex(rng, 8));
        CHECK(strong_product(strong_product(a, b), c)
                  .same_edges(strong_product(a, strong_product(b, c))));
    }
}

TEST_CASE("zykov operations") {
    // join(P2, C4 graph) is the octahedron graph
    Graph join = zykov_join(empty_graph(2), cycle_graph(4));
    CHECK(join.vertex_count() == 6);
    CHECK(join.edge_count() == 12);
    CHECK(whitney_complex(join).f_vector() == std::vector<long long>{6, 12, 8});

    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        Graph a = one_skeleton(random_complex(rng, 10));
        Graph b = one_skeleton(random_complex(rng, 10));
        CHECK(a.complement().complement().same_edges(a));
        // join is complement-of-disjoint-union-of-complements
        Graph lhs = zykov_join(a, b);
        Graph rhs = disjoint_union(a.complement(), b.complement()).complement();
        CHECK(lhs.same_edges(rhs));
        // the dual product
        CHECK(zykov_product(a, b).same_edges(
            strong_product(a.complement(), b.complement()).complement()));
    }
}

TEST_CASE("barycentric refinement") {
    BarycentricRefinement k2 = barycentric_refinement(ProductTerm(gen_complete(2)));
    CHECK(k2.graph.vertex_count() == 3);
    CHECK(k2.graph.edge_count() == 2);
    CHECK(k2.refinement.f_vector() == std::vector<long long>{3, 2});

    // (L2 x L3)_1 triangulates the two square cells of the product
    RingElement l2l3 = parse_ring_expression("L2*L3");
    BarycentricRefinement r = barycentric_refinement(l2l3.terms[0].term);
    CHECK(r.refinement.f_vector() == std::vector<long long>{15, 30, 16});
    CHECK(r.refinement.euler_characteristic() == 1);

    // chi(G_1) = chi(G), and refinement counts match direct chain counts
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        SimplicialComplex g = random_complex(rng, 20);
        BarycentricRefinement br = barycentric_refinement(g);
        CHECK(br.refinement.euler_characteristic() == g.euler_characteristic());
        CHECK(br.refinement.f_vector() == oracle::chain_counts(g));
        // the connection graph contains the refinement graph on the same vertices
        LabeledGraph cg = connection_graph(g);
        bool contained = true;
        for (auto [u, v] : br.graph.edges()) contained = contained && cg.graph.has_edge(u, v);
        CHECK(contained);
    }
}

TEST_CASE("unit spheres") {
    Graph oct = octahedron_graph();
    for (int v = 0; v < 6; ++v) {
        Graph s = unit_sphere(oct, v);
        CHECK(s.vertex_count() == 4);
        CHECK(s.edge_count() == 4);
        CHECK(is_evako_sphere(s, 1));
    }
    Graph c4 = cycle_graph(4);
    CHECK(unit_sphere(c4, 0).edge_count() == 0);
    CHECK(unit_sphere(c4, 0).vertex_count() == 2);
    CHECK_THROWS_AS(unit_sphere(c4, 9), VertexOutOfRange);

    // sublevel sphere at the global minimum of a distance-like function
    std::vector<mpq_class> f{0, 1, 2, Rat(3, 2)};
    CHECK(sublevel_sphere(c4, f, 0).vertex_count() == 0);
    std::vector<mpq_class> tie{0, 1, 2, 1};
    CHECK_THROWS_AS(sublevel_sphere(c4, tie, 2), NotLocallyInjective);
}

TEST_CASE("is_evako_sphere") {
    CHECK(is_evako_sphere(Graph(0), -1));
    CHECK(is_evako_sphere(cycle_graph(4), 1));
    CHECK(is_evako_sphere(cycle_graph(7), 1));
    CHECK(is_evako_sphere(octahedron_graph(), 2));
    CHECK_FALSE(is_evako_sphere(complete_graph(3), 1));
    CHECK_FALSE(is_evako_sphere(path_graph(4), 1));
    CHECK_FALSE(is_evako_sphere(cycle_graph(5), 2));
    CHECK(is_contractible(complete_graph(3)));
    CHECK(is_contractible(path_graph(5)));
    CHECK_FALSE(is_contractible(cycle_graph(5)));
}

TEST_CASE("level sets") {
    // octahedron with +-1 vertex signs: the zero level is a circle
    SimplicialComplex oct = gen_octahedron();
    std::map<Vertex, mpq_class> f;
    for (Vertex v = 0; v < 6; ++v) f[v] = (v % 2 == 0) ? 1 : -1;
    Graph level = level_set_graph(oct, f, 0);
    CHECK(is_evako_sphere(level, 1));
    CHECK(level_set(oct, f, 0).euler_characteristic() == 0);

    // below the range: empty
    CHECK(level_set(oct, f, -5).empty());

    // circle with a generic linear function: two points
    SimplicialComplex c4 = gen_cycle(4);
    std::map<Vertex, mpq_class> lin{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    SimplicialComplex two = level_set(c4, lin, Rat(3, 2));
    CHECK(two.cell_count() == 2);
    CHECK(two.dim() == 0);
    CHECK(is_evako_sphere(level_set_graph(c4, lin, Rat(3, 2)), 0));

    CHECK_THROWS_AS(level_set(c4, lin, 2), ValueInRange);
}
