#pragma once

#include <string>
#include <vector>

#include "strongring/simplicial_complex.hpp"

namespace strongring {

// One multiplicative term of the strong ring: an ordered list of simplicial
// complex factors, standing for their Cartesian product. The factor list is
// canonically sorted by normalize(); no factor is the empty complex.
struct ProductTerm {
    std::vector<SimplicialComplex> factors;

    ProductTerm() = default;
    explicit ProductTerm(SimplicialComplex g) { factors.push_back(std::move(g)); }
    explicit ProductTerm(std::vector<SimplicialComplex> fs) : factors(std::move(fs)) {}

    long long cell_count() const;
    long long euler_characteristic() const; // product over factors
    int dim() const;                        // sum of factor dims

    static int compare(const ProductTerm& a, const ProductTerm& b);
    bool operator==(const ProductTerm& o) const { return compare(*this, o) == 0; }

    std::string to_string() const;
};

// An element of the strong ring: an integer linear combination of product
// terms. An empty term list is the ring's 0. Kept in the normal form produced
// by normalize(): zero-dimensional factors expanded into the coefficient,
// factor lists sorted, structurally identical terms merged, zero coefficients
// dropped. Term order is the stable order of first appearance.
struct RingElement {
    struct Entry {
        long long coeff;
        ProductTerm term;
    };
    std::vector<Entry> terms;

    static RingElement zero() { return {}; }
    static RingElement one();
    static RingElement from_complex(const SimplicialComplex& g);

    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;
};

RingElement normalize(RingElement e);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_scale(long long c, const RingElement& a);

// Structural equality on labeled complexes, insensitive to term order.
bool ring_equal(const RingElement& a, const RingElement& b);

// true iff the element is a single term with coefficient +1.
bool is_single_positive_term(const RingElement& e);

// Expand the element into one (sign, term) summand per |coefficient| unit,
// in stable term order. This is the direct-sum layout of the connection
// operator.
std::vector<std::pair<int, const ProductTerm*>> summands(const RingElement& e);

} // namespace strongring
