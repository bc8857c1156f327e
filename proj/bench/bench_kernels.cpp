// Timing comparison of the OpenMP kernels against their serial references.
// Build: cmake --build build --target bench_kernels
// Run:   ./build/bench/bench_kernels [n]

#include <chrono>
#include <iomanip>
#include <iostream>

#include "strongring/generators.hpp"
#include "strongring/graph_ops.hpp"
#include "strongring/invariants.hpp"
#include "strongring/operators.hpp"
#include "strongring/ring.hpp"
#include "strongring/rng.hpp"
#include "strongring/runtime.hpp"

using namespace strongring;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto start = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
              << parallel_ms << " ms   x" << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << (equal ? "" : "   RESULTS DIFFER") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 160;
    std::cout << "threads: " << max_threads() << "\n\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(13) << "serial"
              << std::setw(13) << "parallel\n";

    // Bareiss determinant on a random-ish integer matrix
    {
        Rng rng(7);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rng.uniform_int(-3, 3);
        Int ds, dp;
        double ts = time_ms([&] { ds = det_exact_serial(m); });
        double tp = time_ms([&] { dp = det_exact(m); });
        report("bareiss determinant " + std::to_string(n), ts, tp, ds == dp);
    }

    // Hodge assembly: sparse D * D on a product complex
    {
        RingElement e = ring_mul(RingElement::from_complex(gen_cycle(24)),
                                 RingElement::from_complex(gen_cycle(24)));
        CellBasis basis(e.terms[0].term);
        SparseIntMatrix d = full_exterior_derivative(basis);
        SparseIntMatrix D = sparse_add(d, d.transpose());
        SparseIntMatrix hs, hp;
        double ts = time_ms([&] { hs = sparse_mul_serial(D, D); });
        double tp = time_ms([&] { hp = sparse_mul(D, D); });
        bool equal = hs.rows == hp.rows && hs.row == hp.row;
        report("hodge D*D (" + std::to_string(D.rows) + " cells)", ts, tp, equal);
    }

    // Wu pair enumeration
    {
        RingElement e = ring_mul(RingElement::from_complex(gen_cycle(16)),
                                 RingElement::from_complex(gen_path(8)));
        CellBasis basis(e.terms[0].term);
        long long ws = 0, wp = 0;
        double ts = time_ms([&] { ws = wu_pair_sum_serial(basis); });
        double tp = time_ms([&] { wp = wu_pair_sum(basis); });
        report("wu pair sum (" + std::to_string(basis.size()) + " cells)", ts, tp, ws == wp);
    }

    // Connection graph adjacency
    {
        RingElement e = ring_mul(RingElement::from_complex(gen_cycle(20)),
                                 RingElement::from_complex(gen_path(10)));
        const ProductTerm& t = e.terms[0].term;
        LabeledGraph gs, gp;
        double ts = time_ms([&] { gs = connection_graph_serial(t); });
        double tp = time_ms([&] { gp = connection_graph(t); });
        report("connection graph (" + std::to_string(t.cell_count()) + " cells)", ts, tp,
               gs.graph.same_edges(gp.graph));
    }
    return 0;
}
