#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "strongring/generators.hpp"
#include "strongring/parser.hpp"
#include "strongring/rng.hpp"
#include "strongring/stanley_reisner.hpp"
#include "strongring/verify.hpp"

#include "oracles.hpp"

using namespace strongring;

TEST_CASE("validate_complex accepts K2 and rejects closure violations") {
    SimplicialComplex k2 = SimplicialComplex::from_cells({{1}, {2}, {1, 2}});
    CHECK(k2.cell_count() == 3);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.facets().size() == 1);

    CHECK_THROWS_AS(SimplicialComplex::from_cells({{1, 2}}), ClosureViolation);
    CHECK_THROWS_AS(SimplicialComplex::from_cells({{}}), EmptySetMember);

    SimplicialComplex zero = SimplicialComplex::from_cells({});
    CHECK(zero.empty());
    CHECK(RingElement::from_complex(zero).is_zero());
}

TEST_CASE("cells are stored in canonical order") {
    SimplicialComplex g = SimplicialComplex::from_facets({{2, 0}, {0, 1}});
    std::vector<Simplex> expected{{0}, {1}, {2}, {0, 1}, {0, 2}};
    CHECK(g.cells() == expected);
}

TEST_CASE("generators") {
    CHECK(gen_octahedron().f_vector() == std::vector<long long>{6, 12, 8});
    CHECK(gen_suspension(gen_octahedron()).f_vector() == std::vector<long long>{8, 24, 32, 16});
    CHECK(gen_cycle(3).cell_count() == 7); // C3 = K3 Whitney complex
    CHECK(gen_cycle(4).f_vector() == std::vector<long long>{4, 4});
    CHECK(gen_path(2).cell_count() == 3);
    CHECK(gen_path(3).cell_count() == 5);
    CHECK(gen_points(3).dim() == 0);
    CHECK_THROWS_AS(gen_cycle(2), BadParameter);

    // chi(Primes(n)) = 1 - M(n), Mertens by direct Moebius sum
    for (int n : {10, 20, 50})
        CHECK(gen_primes(n).euler_characteristic() == 1 - oracle::mertens(n));
}

TEST_CASE("random ER generator is deterministic in the seed") {
    SimplicialComplex a = gen_random_er(7, 0.5, 42);
    SimplicialComplex b = gen_random_er(7, 0.5, 42);
    CHECK(a == b);
    for (const auto& c : a.cells()) // re-validate closure
        CHECK(a.contains(c));
    CHECK_NOTHROW(SimplicialComplex::from_cells(a.cells()));
}

TEST_CASE("ring arithmetic and normalization") {
    RingElement k2 = RingElement::from_complex(gen_complete(2));

    CHECK(ring_sub(k2, k2).is_zero());
    CHECK(ring_mul(RingElement::zero(), k2).is_zero());

    // P2 x K2 normalizes to 2 K2
    RingElement p2k2 = ring_mul(RingElement::from_complex(gen_points(2)), k2);
    REQUIRE(p2k2.terms.size() == 1);
    CHECK(p2k2.terms[0].coeff == 2);
    CHECK(p2k2.terms[0].term.factors.size() == 1);
    CHECK(p2k2.terms[0].term.factors[0] == gen_complete(2));

    // K1 is the multiplicative identity
    RingElement one = RingElement::one();
    CHECK(ring_equal(ring_mul(one, k2), k2));

    // normalization is idempotent
    Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        RingElement e = random_element(rng, 12, 3);
        CHECK(ring_equal(normalize(e), e));
    }
}

TEST_CASE("ring_mul is associative and commutative up to normalization") {
    Rng rng(123);
    for (int i = 0; i < 15; ++i) {
        RingElement a = RingElement::from_complex(random_complex(rng, 10));
        RingElement b = RingElement::from_complex(random_complex(rng, 10));
        RingElement c = RingElement::from_complex(random_complex(rng, 10));
        CHECK(ring_equal(ring_mul(a, b), ring_mul(b, a)));
        CHECK(ring_equal(ring_mul(ring_mul(a, b), c), ring_mul(a, ring_mul(b, c))));
        CHECK(ring_equal(ring_mul(a, ring_add(b, c)), ring_add(ring_mul(a, b), ring_mul(a, c))));
    }
}

TEST_CASE("expression parser") {
    RingElement e = parse_ring_expression("C4 - 2*K3 + L2*L3");
    REQUIRE(e.terms.size() == 3);
    CHECK(e.terms[0].coeff == 1);
    CHECK(e.terms[1].coeff == -2);
    CHECK(e.terms[2].coeff == 1);
    CHECK(e.terms[2].term.factors.size() == 2);

    RingElement one = parse_ring_expression("1");
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms[0].coeff == 1);
    CHECK(one.terms[0].term.factors[0].cell_count() == 1);

    CHECK(ring_equal(parse_ring_expression("Susp(C4)"), RingElement::from_complex(gen_octahedron())) ==
          false); // labels differ, structure agrees:
    CHECK(parse_ring_expression("Susp(C4)").terms[0].term.factors[0].f_vector() ==
          gen_octahedron().f_vector());

    try {
        parse_ring_expression("C4 * (");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& ex) {
        CHECK(ex.offset == 5);
    }
    CHECK_THROWS_AS(parse_ring_expression("Foo3"), UnknownGenerator);
    CHECK_THROWS_AS(parse_ring_expression(""), SyntaxError);
    CHECK_THROWS_AS(parse_ring_expression("K2 +"), SyntaxError);
    CHECK_THROWS_AS(parse_ring_expression("(K2"), SyntaxError);
}

TEST_CASE("parser loads facet files") {
    {
        std::ofstream f("test_c4.json");
        f << R"({"facets": [[0,1],[1,2],[2,3],[3,0]]})";
    }
    RingElement e = parse_ring_expression("@test_c4.json");
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].term.factors[0].f_vector() == std::vector<long long>{4, 4});
    std::remove("test_c4.json");
}

TEST_CASE("stanley_reisner") {
    StanleyReisnerPoly k2 = stanley_reisner(RingElement::from_complex(gen_complete(2)));
    CHECK(k2.monomial_count() == 3); // x + y + xy
    CHECK(-k2.evaluate_all_minus_one() == 1);

    RingElement k2k2 = parse_ring_expression("K2*K2");
    CHECK(stanley_reisner(k2k2).monomial_count() == 9);

    // the evaluation hook computes chi; on the paper's element it is -1
    RingElement paper = parse_ring_expression("C4 - 2*K3 + L2*L3");
    CHECK(chi_via_stanley_reisner(paper) == -1);

    // -f(-1,...,-1) = chi on single complexes
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        SimplicialComplex g = random_complex(rng, 15);
        RingElement e = RingElement::from_complex(g);
        CHECK(-stanley_reisner(e).evaluate_all_minus_one() == g.euler_characteristic());
    }

    // evaluation hook agrees with the combinatorial chi on arbitrary elements
    for (int i = 0; i < 10; ++i) {
        RingElement e = random_element(rng, 12, 3);
        long long chi = 0;
        for (const auto& t : e.terms) chi += t.coeff * t.term.euler_characteristic();
        CHECK(chi_via_stanley_reisner(e) == chi);
    }

    // additivity with disjoint variables; multiplicativity when no factor
    // gets absorbed into the coefficient
    for (int i = 0; i < 10; ++i) {
        RingElement a = RingElement::from_complex(random_complex(rng, 10));
        RingElement b = RingElement::from_complex(random_complex(rng, 10));
        auto pa = stanley_reisner(a), pb = stanley_reisner(b);
        auto psum = stanley_reisner(ring_add(a, b));
        if (!ring_equal(a, b))
            CHECK(psum.monomial_count() == pa.monomial_count() + pb.monomial_count());
        CHECK(psum.evaluate_all_minus_one() ==
              pa.evaluate_all_minus_one() + pb.evaluate_all_minus_one());
        if (!a.terms[0].term.factors[0].zero_dimensional() &&
            !b.terms[0].term.factors[0].zero_dimensional()) {
            auto pmul = stanley_reisner(ring_mul(a, b));
            CHECK(pmul.monomial_count() == pa.monomial_count() * pb.monomial_count());
            CHECK(pmul.evaluate_all_minus_one() ==
                  pa.evaluate_all_minus_one() * pb.evaluate_all_minus_one());
        }
        CHECK(chi_via_stanley_reisner(ring_mul(a, b)) ==
              chi_via_stanley_reisner(a) * chi_via_stanley_reisner(b));
    }
}

TEST_CASE("multiplicative primality") {
    CHECK(is_multiplicative_prime(RingElement::from_complex(gen_complete(4))).is_prime);
    PrimalityCertificate unit = is_multiplicative_prime(RingElement::one());
    CHECK_FALSE(unit.is_prime);
    CHECK(unit.is_unit);

    PrimalityCertificate prod = is_multiplicative_prime(parse_ring_expression("K2*K2"));
    CHECK_FALSE(prod.is_prime);
    CHECK(prod.factor_count == 2);
    CHECK_FALSE(prod.expansion_has_linear_part);

    CHECK_THROWS_AS(is_multiplicative_prime(parse_ring_expression("K2 + K3")), NotASingleTerm);
}

TEST_CASE("non-unique factorization demo") {
    NonUniqueFactorization demo = nonunique_factorization_demo();
    CHECK(demo.equal);
    CHECK(demo.lhs_summands_before_merge == 6); // product of summand counts, 3 * 2
    CHECK(demo.rhs_summands_before_merge == 6);

    // identical f-vector sums on both sides
    long long lhs_cells = 0, rhs_cells = 0;
    for (const auto& t : demo.lhs.terms) lhs_cells += t.coeff * t.term.cell_count();
    for (const auto& t : demo.rhs.terms) rhs_cells += t.coeff * t.term.cell_count();
    CHECK(lhs_cells == rhs_cells);
}
