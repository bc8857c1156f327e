#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strongring/ring.hpp"
#include "strongring/rng.hpp"

namespace strongring {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // reproducer: expression/desc + seed
    std::uint64_t seed = 0;
    double ms = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

// Random corpus helpers (seed-deterministic). When desc is given it receives
// a generator recipe ("Susp(C5)", "ER(6,0.43,seed)", ...) so failures can
// name their input.
SimplicialComplex random_complex(Rng& rng, int max_cells, std::string* desc = nullptr);
RingElement random_element(Rng& rng, int max_cells_per_term, int max_terms,
                           std::string* desc = nullptr);
ProductTerm random_product(Rng& rng, int factors, int max_factor_cells,
                           std::string* desc = nullptr);

// Band triangulations used by the interaction-cohomology checks: both have
// f-vector (6,12,6) and chi = 0; one is orientable with two boundary circles,
// the other is not.
SimplicialComplex cylinder_complex();
SimplicialComplex moebius_complex();

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 25;
    double tol = 1e-8;
    int massgap_n = 400;
    int massgap_d = 2;
    int limit_levels = 3;
};

// Suite names: unimodularity, energy, kuenneth, spectral, gaussbonnet,
// poincarehopf, lefschetz, wu, mckeansinger, massgap, limit, lax, all.
// Throws UnknownSuite for anything else.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<std::string> suite_names();

} // namespace strongring
