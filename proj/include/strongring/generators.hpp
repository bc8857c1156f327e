#pragma once

#include <cstdint>

#include "strongring/simplicial_complex.hpp"

namespace strongring {

// Named generators reachable from the expression grammar and the CLI.
SimplicialComplex gen_complete(int n);   // K n, n >= 1: all non-empty subsets
SimplicialComplex gen_cycle(int n);      // C n, n >= 3; C3 = K3 as Whitney complex
SimplicialComplex gen_path(int n);       // L n: path with n vertices
SimplicialComplex gen_points(int n);     // P n: n isolated points, P0 = 0
SimplicialComplex gen_octahedron();      // Whitney complex of K_{2,2,2}

// Zykov join of complexes: G ∪ H ∪ { x ∪ y }; H is relabeled disjointly.
SimplicialComplex zykov_join_complex(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex gen_suspension(const SimplicialComplex& g); // join with P2

// Whitney complex of an Erdős–Rényi graph G(n, p) from a named seeded
// generator.
SimplicialComplex gen_random_er(int n, double p, std::uint64_t seed);

// Square-free integers in {2..n} as simplices of their prime factors; the
// vertex labels are the primes themselves.
SimplicialComplex gen_primes(int n);

} // namespace strongring
