#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strongring/generators.hpp"
#include "strongring/invariants.hpp"
#include "strongring/operators.hpp"
#include "strongring/parser.hpp"
#include "strongring/spectral.hpp"
#include "strongring/verify.hpp"

using namespace strongring;

TEST_CASE("boundary operators of K2 and the product rule") {
    auto dk = boundary_operators(ProductTerm(gen_complete(2)));
    REQUIRE(dk.size() == 1);
    CHECK(dk[0].rows == 1);
    CHECK(dk[0].cols == 2);
    // signed incidence of the edge {1,2}: -f(1) + f(2) picture fixed by sorted order
    CHECK(dk[0].get(0, 0) * dk[0].get(0, 1) == -1);

    // L2 x L3 has 15 cells and d^2 = 0
    RingElement e = parse_ring_expression("L2*L3");
    OperatorBundle b = operator_bundle(e.terms[0].term);
    CHECK(b.basis.size() == 15);
    CHECK(sparse_mul(b.d, b.d).is_zero());
    CHECK(b.D.is_symmetric());
    CHECK(b.H.is_symmetric());
}

TEST_CASE("d^2 = 0 and blocks on random products") {
    Rng rng(19);
    for (int i = 0; i < 10; ++i) {
        ProductTerm t = random_product(rng, rng.uniform_int(1, 2), 12);
        OperatorBundle b = operator_bundle(t);
        CHECK(sparse_mul(b.d, b.d).is_zero());
        long long block_total = 0;
        for (const auto& blk : b.blocks) block_total += blk.nnz();
        CHECK(block_total == b.H.nnz());
    }
}

TEST_CASE("multi-factor derivative folds associatively") {
    // d on [A,B,C] built by the left-to-right fold must agree with the
    // two-factor rule applied to the grouping (A x B) x C.
    Rng rng(29);
    auto draw = [&] {
        SimplicialComplex g;
        do {
            g = random_complex(rng, 6);
        } while (g.zero_dimensional());
        return g;
    };
    for (int i = 0; i < 6; ++i) {
        SimplicialComplex a = draw(), b = draw(), c = draw();
        ProductTerm abc(std::vector<SimplicialComplex>{a, b, c});
        CellBasis basis3(abc);
        SparseIntMatrix d3 = full_exterior_derivative(basis3);

        ProductTerm ab(std::vector<SimplicialComplex>{a, b});
        CellBasis basis_ab(ab);
        SparseIntMatrix d_ab = full_exterior_derivative(basis_ab);
        CellBasis basis_c{ProductTerm(c)};
        SparseIntMatrix d_c = full_exterior_derivative(basis_c);

        const int n_ab = basis_ab.size();
        const int n_c = basis_c.size();
        auto to3 = [&](int p, int w) {
            const ProductCell& left = basis_ab.cell(p);
            ProductCell cell{left[0], left[1], basis_c.cell(w)[0]};
            return basis3.index_of(cell);
        };
        bool equal = true;
        for (int p = 0; p < n_ab && equal; ++p)
            for (int w = 0; w < n_c && equal; ++w) {
                int row3 = to3(p, w);
                // left part: d_ab acts, C coordinate fixed
                for (const auto& [q, v] : d_ab.row[static_cast<std::size_t>(p)])
                    if (d3.get(row3, to3(q, w)) != v) equal = false;
                // right part: Koszul sign of the whole left group
                int koszul = basis_ab.dim(p) % 2 == 0 ? 1 : -1;
                for (const auto& [x, v] : d_c.row[static_cast<std::size_t>(w)])
                    if (d3.get(row3, to3(p, x)) != koszul * v) equal = false;
                // and nothing else in that row
                long long nnz_expected =
                    static_cast<long long>(d_ab.row[static_cast<std::size_t>(p)].size() +
                                           d_c.row[static_cast<std::size_t>(w)].size());
                if (static_cast<long long>(d3.row[static_cast<std::size_t>(row3)].size()) != nnz_expected)
                    equal = false;
            }
        CHECK(equal);
        CHECK(sparse_mul(d3, d3).is_zero());
    }
}

TEST_CASE("C4 Hodge block H0 is the Kirchhoff Laplacian of the cycle") {
    OperatorBundle b = operator_bundle(ProductTerm(gen_cycle(4)));
    REQUIRE(b.blocks.size() == 2);
    CHECK(b.blocks[0].to_int_matrix() == kirchhoff_matrix(cycle_graph(4)).to_int_matrix());
    Spectrum s = eigenvalues(b.blocks[0], 1e-9, "H_k");
    REQUIRE(s.values.size() == 4);
    CHECK(s.values[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(s.values[1] == doctest::Approx(2.0));
    CHECK(s.values[2] == doctest::Approx(2.0));
    CHECK(s.values[3] == doctest::Approx(4.0));
}

TEST_CASE("S2 x S3 bundle: 2080 cells, six graded blocks") {
    RingElement e = parse_ring_expression("Oct * Susp(Oct)");
    OperatorBundle b = operator_bundle(e.terms[0].term);
    CHECK(b.H.rows == 2080);
    CHECK(b.H.cols == 2080);
    CHECK(b.blocks.size() == 6);
    std::vector<int> sizes;
    for (const auto& blk : b.blocks) sizes.push_back(blk.rows);
    CHECK(sizes == std::vector<int>{48, 240, 544, 672, 448, 128});
}

TEST_CASE("single vertex bundle is zero") {
    OperatorBundle b = operator_bundle(ProductTerm(gen_complete(1)));
    CHECK(b.D.is_zero());
    CHECK(b.H.is_zero());
}

TEST_CASE("connection operator of the paper element") {
    RingElement e = parse_ring_expression("C4 - 2*K3 + L2*L3");
    ConnectionOperator op = connection_operator(e);
    CHECK(op.size() == 8 + 7 + 7 + 15);
    REQUIRE(op.summand_count() == 4);
    CHECK(op.summand_sign == std::vector<int>{1, -1, -1, 1});
    CHECK(op.summand_offset == std::vector<int>{0, 8, 15, 22, 37});
    // diagonal +1 on positive summands, -1 on negated ones
    for (int i = 0; i < op.size(); ++i) CHECK(op.L.get(i, i) == op.sign_of_row(i));

    // the product summand equals kron(L(L2), L(L3)) under the basis index map
    SparseIntMatrix l2 = connection_laplacian(ProductTerm(gen_path(2)));
    SparseIntMatrix l3 = connection_laplacian(ProductTerm(gen_path(3)));
    SparseIntMatrix kron_direct = kronecker(l2, l3);
    const CellBasis& basis = op.summand_basis[3];
    SparseIntMatrix block = op.L.block(22, 37, 22, 37);
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j)
            CHECK(block.get(i, j) ==
                  kron_direct.get(static_cast<int>(basis.kron_index(basis.cell(i))),
                                  static_cast<int>(basis.kron_index(basis.cell(j)))));
}

TEST_CASE("trace of L is the cell count; L(-G) = -L(G)") {
    Rng rng(41);
    for (int i = 0; i < 8; ++i) {
        RingElement e = RingElement::from_complex(random_complex(rng, 20));
        ConnectionOperator op = connection_operator(e);
        CHECK(op.L.trace() == e.terms[0].term.cell_count());
        ConnectionOperator neg = connection_operator(ring_neg(e));
        CHECK(sparse_add(op.L, neg.L).is_zero());
    }
}

TEST_CASE("Kronecker identity for connection operators of products") {
    Rng rng(43);
    auto draw = [&] {
        SimplicialComplex g;
        do {
            g = random_complex(rng, 10);
        } while (g.zero_dimensional());
        return g;
    };
    for (int i = 0; i < 8; ++i) {
        SimplicialComplex a = draw();
        SimplicialComplex b = draw();
        RingElement prod = ring_mul(RingElement::from_complex(a), RingElement::from_complex(b));
        REQUIRE(prod.terms.size() == 1);
        const ProductTerm& t = prod.terms[0].term;
        REQUIRE(t.factors.size() == 2);
        CellBasis basis(t);
        SparseIntMatrix direct = connection_laplacian(t);
        SparseIntMatrix kron = kronecker(connection_laplacian(ProductTerm(t.factors[0])),
                                         connection_laplacian(ProductTerm(t.factors[1])));
        bool equal = true;
        for (int r = 0; r < basis.size() && equal; ++r)
            for (int c = 0; c < basis.size(); ++c)
                if (direct.get(r, c) != kron.get(static_cast<int>(basis.kron_index(basis.cell(r))),
                                                 static_cast<int>(basis.kron_index(basis.cell(c))))) {
                    equal = false;
                    break;
                }
        CHECK(equal);
    }
}

TEST_CASE("interaction derivative") {
    InteractionOperator k2 = interaction_derivative(gen_complete(2));
    CHECK(k2.size() == 7); // (v,v) x2, (v,e),(e,v) x4, (e,e)
    CHECK(sparse_mul(k2.d, k2.d).is_zero());

    // basis size equals the f-matrix total
    Rng rng(47);
    for (int i = 0; i < 8; ++i) {
        SimplicialComplex g = random_complex(rng, 20);
        InteractionOperator op = interaction_derivative(g);
        long long total = 0;
        for (const auto& row : f_matrix(g))
            for (long long v : row) total += v;
        CHECK(op.size() == total);
        CHECK(sparse_mul(op.d, op.d).is_zero());
    }
}

TEST_CASE("koopman matrices") {
    // identity
    ProductTerm c4(gen_cycle(4));
    SparseIntMatrix id = koopman_matrix(c4, identity_automorphism(c4));
    CHECK(id.to_int_matrix() == IntMatrix::identity(8));

    // rotation of C4: no fixed cells
    PerFactorAutomorphism rot;
    rot.maps.push_back({1, 2, 3, 0});
    SparseIntMatrix u = koopman_matrix(c4, rot);
    for (int i = 0; i < 8; ++i) CHECK(u.get(i, i) == 0);

    // factor swap on K2 x K2: exactly one fixed 2-cell (the pair of edges)
    RingElement k2k2 = parse_ring_expression("K2*K2");
    const ProductTerm& t = k2k2.terms[0].term;
    SparseIntMatrix swap = koopman_matrix(t, FactorSwapAutomorphism{0, 1});
    CellBasis basis(t);
    int fixed_two_cells = 0, fixed_cells = 0;
    for (int i = 0; i < basis.size(); ++i)
        if (swap.get(i, i) != 0) {
            ++fixed_cells;
            if (basis.dim(i) == 2) {
                ++fixed_two_cells;
                CHECK(swap.get(i, i) == -1); // graded sign on the square
            }
        }
    CHECK(fixed_two_cells == 1);
    CHECK(fixed_cells == 3);

    // U_T commutes with the Dirac operator
    OperatorBundle b = operator_bundle(t);
    CHECK(sparse_mul(swap, b.D).row == sparse_mul(b.D, swap).row);
    OperatorBundle bc4 = operator_bundle(c4);
    CHECK(sparse_mul(u, bc4.D).row == sparse_mul(bc4.D, u).row);

    // a non-automorphism is rejected
    PerFactorAutomorphism bad;
    bad.maps.push_back({0, 0, 1, 2});
    CHECK_THROWS_AS(koopman_matrix(c4, bad), NotAnAutomorphism);

    // factor swap needs structurally equal factors
    RingElement mixed = parse_ring_expression("K2*K3");
    CHECK_THROWS_AS(koopman_matrix(mixed.terms[0].term, FactorSwapAutomorphism{0, 1}),
                    NotAnAutomorphism);
}
