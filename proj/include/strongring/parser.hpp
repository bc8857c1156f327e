#pragma once

#include <string>

#include "strongring/ring.hpp"

namespace strongring {

// Recursive-descent parser for the ring expression grammar
//
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := INT | NAME | "@"PATH | "(" expr ")"
//   NAME   := ("K"|"C"|"L"|"P") INT | "Oct" | "Susp(" NAME ")"
//
// INT as a factor is the zero-dimensional complex P_n. "@path" loads a JSON
// facet list {"facets": [[...],...]} and takes its downward closure.
// Throws SyntaxError (with offset) or UnknownGenerator; the result is
// normalized.
RingElement parse_ring_expression(const std::string& text);

// Primality in the strong ring: a single-coefficient-one term is prime iff it
// is one simplicial complex (and not the unit K1). The certificate reports
// the degree-1 monomial evidence per factor: a simplicial complex always has
// linear parts, a product of non-units never does.
struct PrimalityCertificate {
    bool is_prime = false;
    bool is_unit = false;
    int factor_count = 0;
    std::vector<long long> factor_linear_parts; // vertex counts per factor
    bool expansion_has_linear_part = false;     // degree-1 monomials of the product
    std::string message;
};

PrimalityCertificate is_multiplicative_prime(const RingElement& e);

// Builds (K1+K2+K2^2)x(K1+K2^3) and (K1+K2^2+K2^4)x(K1+K2) and reports
// whether the normalized expansions agree.
struct NonUniqueFactorization {
    RingElement lhs, rhs;
    std::size_t lhs_summands_before_merge = 0, rhs_summands_before_merge = 0;
    bool equal = false;
};

NonUniqueFactorization nonunique_factorization_demo();

} // namespace strongring
