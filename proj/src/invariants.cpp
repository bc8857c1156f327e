#include "strongring/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "strongring/graph_ops.hpp"
#include "strongring/rng.hpp"
#include "strongring/runtime.hpp"
#include "strongring/spectral.hpp"

namespace strongring {

long long Polynomial::eval(long long x) const {
    long long v = 0;
    for (std::size_t i = c.size(); i > 0; --i) v = v * x + c[i - 1];
    return v;
}

void Polynomial::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string Polynomial::to_string(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        long long a = std::llabs(c[i]);
        if (a != 1 || i == 0) os << a;
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

Polynomial poly_scale(long long s, const Polynomial& a) {
    Polynomial r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

long long euler_characteristic(const RingElement& e) {
    long long chi = 0;
    for (const auto& t : e.terms) chi += t.coeff * t.term.euler_characteristic();
    return chi;
}

int fermi_characteristic(const RingElement& e) {
    if (!is_single_positive_term(e))
        throw NotASingleTerm("Fermi characteristic is defined for single positive terms");
    // phi = prod over product cells of omega; only the parity of the number
    // of odd-dimensional cells matters.
    CellBasis basis(e.terms[0].term);
    long long odd = 0;
    for (int i = 0; i < basis.size(); ++i)
        if (basis.dim(i) % 2 != 0) ++odd;
    return odd % 2 == 0 ? 1 : -1;
}

long long wu_pair_sum(const CellBasis& basis) {
    const int n = basis.size();
    long long total = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : total) num_threads(max_threads())
    for (int i = 0; i < n; ++i) {
        long long row = 0;
        for (int j = 0; j < n; ++j)
            if (i == j || basis.cells_intersect(i, j)) row += basis.omega(j);
        total += static_cast<long long>(basis.omega(i)) * row;
    }
    return total;
}

long long wu_pair_sum_serial(const CellBasis& basis) {
    const int n = basis.size();
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        long long row = 0;
        for (int j = 0; j < n; ++j)
            if (i == j || basis.cells_intersect(i, j)) row += basis.omega(j);
        total += static_cast<long long>(basis.omega(i)) * row;
    }
    return total;
}

namespace {

// Ordered k-tuples with the chosen intersection semantics, omega-weighted.
long long wu_tuples(const CellBasis& basis, int k, WuSemantics sem) {
    const int n = basis.size();
    const int m = basis.factor_count();
    long long total = 0;

    // state for the common-intersection variant: running intersection per factor
    std::vector<std::vector<Vertex>> common(static_cast<std::size_t>(m));

    std::vector<int> tuple;
    auto intersect_vec = [](const std::vector<Vertex>& a, const Simplex& b) {
        std::vector<Vertex> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };

    std::function<void(int, int, std::vector<std::vector<Vertex>>&)> rec =
        [&](int depth, int sign, std::vector<std::vector<Vertex>>& running) {
            if (depth == k) {
                total += sign;
                return;
            }
            for (int i = 0; i < n; ++i) {
                if (sem == WuSemantics::Pairwise) {
                    bool ok = true;
                    for (int prev : tuple)
                        if (prev != i && !basis.cells_intersect(prev, i)) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    tuple.push_back(i);
                    rec(depth + 1, sign * basis.omega(i), running);
                    tuple.pop_back();
                } else {
                    std::vector<std::vector<Vertex>> next(static_cast<std::size_t>(m));
                    bool ok = true;
                    for (int f = 0; f < m && ok; ++f) {
                        const Simplex& cf = basis.factor_cell(f, basis.cell(i)[static_cast<std::size_t>(f)]);
                        next[static_cast<std::size_t>(f)] =
                            depth == 0 ? std::vector<Vertex>(cf.begin(), cf.end())
                                       : intersect_vec(running[static_cast<std::size_t>(f)], cf);
                        if (next[static_cast<std::size_t>(f)].empty()) ok = false;
                    }
                    if (!ok) continue;
                    rec(depth + 1, sign * basis.omega(i), next);
                }
            }
        };
    rec(0, 1, common);
    return total;
}

} // namespace

long long wu_characteristic(const RingElement& e, int k, WuSemantics sem) {
    if (k < 1) throw BadOrder("Wu characteristic order must be >= 1");
    long long total = 0;
    for (const auto& t : e.terms) {
        CellBasis basis(t.term);
        long long w;
        if (k == 1) w = t.term.euler_characteristic();
        else if (k == 2) w = wu_pair_sum(basis);
        else w = wu_tuples(basis, k, sem);
        total += t.coeff * w;
    }
    return total;
}

std::vector<long long> f_vector(const RingElement& e) {
    std::vector<long long> f;
    for (const auto& t : e.terms) {
        // convolution of factor f-vectors
        std::vector<long long> tf{1};
        for (const auto& fac : t.term.factors) {
            std::vector<long long> ff = fac.f_vector();
            std::vector<long long> next(tf.size() + ff.size() - 1, 0);
            for (std::size_t i = 0; i < tf.size(); ++i)
                for (std::size_t j = 0; j < ff.size(); ++j) next[i + j] += tf[i] * ff[j];
            tf = std::move(next);
        }
        if (tf.size() > f.size()) f.resize(tf.size(), 0);
        for (std::size_t i = 0; i < tf.size(); ++i) f[i] += t.coeff * tf[i];
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Polynomial euler_polynomial(const RingElement& e) {
    Polynomial p;
    p.c = f_vector(e);
    return p;
}

std::vector<std::vector<long long>> f_matrix(const ProductTerm& term) {
    CellBasis basis(term);
    const int n = basis.size();
    const int maxd = std::max(basis.max_dim(), 0);
    std::vector<std::vector<long long>> V(static_cast<std::size_t>(maxd + 1),
                                          std::vector<long long>(static_cast<std::size_t>(maxd + 1), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i == j || basis.cells_intersect(i, j))
                V[static_cast<std::size_t>(basis.dim(i))][static_cast<std::size_t>(basis.dim(j))]++;
    return V;
}

std::vector<std::vector<long long>> f_matrix(const SimplicialComplex& g) {
    return f_matrix(ProductTerm(g));
}

namespace {

std::vector<long long> betti_exact_rank(const ProductTerm& term) {
    CellBasis basis(term);
    SparseIntMatrix d = full_exterior_derivative(basis);
    const auto& off = basis.grading_offsets();
    const int maxd = basis.max_dim();
    std::vector<int> ranks(static_cast<std::size_t>(maxd + 1), 0); // rank of d_k
    for (int k = 0; k < maxd; ++k) {
        SparseIntMatrix dk = d.block(off[static_cast<std::size_t>(k + 1)], off[static_cast<std::size_t>(k + 2)],
                                     off[static_cast<std::size_t>(k)], off[static_cast<std::size_t>(k + 1)]);
        ranks[static_cast<std::size_t>(k)] = rank_rational(dk);
    }
    std::vector<long long> b(static_cast<std::size_t>(maxd + 1), 0);
    for (int k = 0; k <= maxd; ++k) {
        long long vk = basis.block_size(k);
        long long rk = ranks[static_cast<std::size_t>(k)];
        long long rk1 = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
        b[static_cast<std::size_t>(k)] = vk - rk - rk1;
    }
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

std::vector<long long> betti_term(const ProductTerm& term, BettiMethod method) {
    bool kuenneth = method == BettiMethod::Kuenneth ||
                    (method == BettiMethod::Auto && term.cell_count() > 320 && term.factors.size() > 1);
    if (!kuenneth) return betti_exact_rank(term);
    Polynomial p{{1}};
    for (const auto& f : term.factors) {
        Polynomial pf;
        pf.c = betti_exact_rank(ProductTerm(f));
        p = poly_mul(p, pf);
    }
    return p.c;
}

} // namespace

std::vector<long long> betti_numbers(const RingElement& e, BettiMethod method) {
    std::vector<long long> b;
    for (const auto& t : e.terms) {
        std::vector<long long> tb = betti_term(t.term, method);
        if (tb.size() > b.size()) b.resize(tb.size(), 0);
        for (std::size_t i = 0; i < tb.size(); ++i) b[i] += t.coeff * tb[i];
    }
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

Polynomial poincare_polynomial(const RingElement& e, BettiMethod method) {
    Polynomial p;
    p.c = betti_numbers(e, method);
    return p;
}

std::vector<long long> interaction_betti(const SimplicialComplex& g, int max_cells) {
    if (g.cell_count() > max_cells)
        throw TooLarge("interaction Betti capped at " + std::to_string(max_cells) + " cells");
    InteractionOperator op = interaction_derivative(g);
    const auto& off = op.grading_offsets;
    const int maxd = op.max_dim();
    std::vector<int> ranks(static_cast<std::size_t>(std::max(maxd + 1, 1)), 0);
    for (int k = 0; k < maxd; ++k) {
        SparseIntMatrix dk = op.d.block(off[static_cast<std::size_t>(k + 1)], off[static_cast<std::size_t>(k + 2)],
                                        off[static_cast<std::size_t>(k)], off[static_cast<std::size_t>(k + 1)]);
        ranks[static_cast<std::size_t>(k)] = rank_rational(dk);
    }
    std::vector<long long> b;
    for (int k = 0; k <= maxd; ++k) {
        long long vk = off[static_cast<std::size_t>(k + 1)] - off[static_cast<std::size_t>(k)];
        long long rk = k < maxd ? ranks[static_cast<std::size_t>(k)] : 0;
        long long rk1 = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
        b.push_back(vk - rk - rk1);
    }
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

namespace {

// K(v) per vertex of one complex.
std::map<Vertex, Rat> factor_curvature(const SimplicialComplex& g) {
    std::map<Vertex, Rat> K;
    for (const auto& c : g.cells()) {
        int d = simplex_dim(c);
        Rat w(d % 2 == 0 ? 1 : -1, d + 1);
        for (Vertex v : c) K[v] += w;
    }
    return K;
}

} // namespace

CurvatureMap curvature(const RingElement& e) {
    CurvatureMap out;
    out.total = 0;
    for (const auto& t : e.terms) {
        std::vector<std::map<Vertex, Rat>> fk;
        for (const auto& f : t.term.factors) fk.push_back(factor_curvature(f));
        // product over tuples of factor vertices
        std::vector<std::map<Vertex, Rat>::const_iterator> its;
        for (const auto& m : fk) its.push_back(m.begin());
        while (true) {
            Rat k(static_cast<long>(t.coeff));
            std::ostringstream name;
            for (std::size_t f = 0; f < fk.size(); ++f) {
                if (f) name << 'x';
                name << '{' << its[f]->first << '}';
                k *= its[f]->second;
            }
            out.values.emplace_back(name.str(), k);
            out.total += k;
            std::size_t f = fk.size();
            while (f > 0) {
                ++its[f - 1];
                if (its[f - 1] != fk[f - 1].end()) break;
                its[f - 1] = fk[f - 1].begin();
                --f;
            }
            if (f == 0) break;
        }
    }
    return out;
}

namespace {

// Vertex-based Poincare-Hopf index of one complex: i_f(v) = sum of omega(x)
// over cells x whose f-maximum sits at v; equals 1 - chi(S_f^-(v)).
std::map<Vertex, long long> factor_indices(const SimplicialComplex& g,
                                           const std::map<Vertex, Rat>& f) {
    std::map<Vertex, long long> idx;
    for (Vertex v : g.vertices()) {
        if (!f.count(v)) throw BadParameter("f undefined on vertex " + std::to_string(v));
        idx[v] = 0;
    }
    for (const auto& c : g.cells()) {
        Vertex best = c[0];
        std::vector<Rat> values;
        for (Vertex v : c) {
            values.push_back(f.at(v));
            if (f.at(v) > f.at(best)) best = v;
        }
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end())
            throw NotLocallyInjective("f not injective on " + simplex_to_string(c));
        idx[best] += simplex_dim(c) % 2 == 0 ? 1 : -1;
    }
    return idx;
}

} // namespace

IndexMap poincare_hopf(const RingElement& e, const FactorFunctions& f) {
    if (f.size() != e.terms.size()) throw BadParameter("one function list per term required");
    IndexMap out;
    for (std::size_t t = 0; t < e.terms.size(); ++t) {
        const auto& term = e.terms[t].term;
        if (f[t].size() != term.factors.size())
            throw BadParameter("one function per factor required");
        std::vector<std::map<Vertex, long long>> fi;
        for (std::size_t k = 0; k < term.factors.size(); ++k)
            fi.push_back(factor_indices(term.factors[k], f[t][k]));
        std::vector<std::map<Vertex, long long>::const_iterator> its;
        for (const auto& m : fi) its.push_back(m.begin());
        while (true) {
            long long v = e.terms[t].coeff;
            std::ostringstream name;
            for (std::size_t k = 0; k < fi.size(); ++k) {
                if (k) name << 'x';
                name << '{' << its[k]->first << '}';
                v *= its[k]->second;
            }
            out.indices.emplace_back(name.str(), v);
            out.total += v;
            std::size_t k = fi.size();
            while (k > 0) {
                ++its[k - 1];
                if (its[k - 1] != fi[k - 1].end()) break;
                its[k - 1] = fi[k - 1].begin();
                --k;
            }
            if (k == 0) break;
        }
    }
    return out;
}

IndexMap poincare_hopf_random(const RingElement& e, std::uint64_t seed) {
    Rng rng(seed);
    FactorFunctions f;
    for (const auto& t : e.terms) {
        std::vector<std::map<Vertex, Rat>> per_factor;
        for (const auto& fac : t.term.factors) {
            std::vector<Vertex> vs = fac.vertices();
            std::vector<int> ranks(vs.size());
            std::iota(ranks.begin(), ranks.end(), 0);
            rng.shuffle(ranks);
            std::map<Vertex, Rat> fv;
            for (std::size_t i = 0; i < vs.size(); ++i) fv[vs[i]] = ranks[i];
            per_factor.push_back(std::move(fv));
        }
        f.push_back(std::move(per_factor));
    }
    return poincare_hopf(e, f);
}

IndexMap poincare_hopf_refinement(const ProductTerm& term, const std::vector<Rat>& f) {
    BarycentricRefinement r = barycentric_refinement(term);
    const Graph& g = r.graph;
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw BadParameter("f must assign a value to every cell");
    for (auto [u, v] : g.edges())
        if (f[static_cast<std::size_t>(u)] == f[static_cast<std::size_t>(v)])
            throw NotLocallyInjective("f does not separate adjacent cells");
    IndexMap out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        std::vector<int> below;
        for (int y : g.neighbors(x))
            if (f[static_cast<std::size_t>(y)] < f[static_cast<std::size_t>(x)]) below.push_back(y);
        long long chi_below = whitney_complex(g.induced(below)).euler_characteristic();
        long long idx = 1 - chi_below;
        out.indices.emplace_back(r.basis.descriptor(x), idx);
        out.total += idx;
    }
    return out;
}

namespace {

// One ordering of the zero-cells of a term -> integer index per zero-cell,
// donating each cell's omega to its f-maximal zero-subcell tuple.
void donate_indices(const CellBasis& basis, const std::vector<int>& rank_of_zero_cell,
                    std::vector<long long>& idx) {
    const int m = basis.factor_count();
    // zero-cells are the first block of the basis
    for (int c = 0; c < basis.size(); ++c) {
        const ProductCell& cell = basis.cell(c);
        // enumerate zero-subcell tuples = product of the vertices of each coordinate
        std::vector<std::vector<int>> vertex_cells(static_cast<std::size_t>(m));
        for (int fct = 0; fct < m; ++fct) {
            const Simplex& s = basis.factor_cell(fct, cell[static_cast<std::size_t>(fct)]);
            for (Vertex v : s) {
                int zi = static_cast<int>(std::lower_bound(basis.factor_cells(fct).begin(),
                                                           basis.factor_cells(fct).end(), Simplex{v},
                                                           cell_less) -
                                          basis.factor_cells(fct).begin());
                vertex_cells[static_cast<std::size_t>(fct)].push_back(zi);
            }
        }
        int best = -1;
        ProductCell tuple(static_cast<std::size_t>(m));
        std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
        while (true) {
            for (int fct = 0; fct < m; ++fct)
                tuple[static_cast<std::size_t>(fct)] = vertex_cells[static_cast<std::size_t>(fct)][pos[static_cast<std::size_t>(fct)]];
            int zc = basis.index_of(tuple);
            if (best < 0 || rank_of_zero_cell[static_cast<std::size_t>(zc)] > rank_of_zero_cell[static_cast<std::size_t>(best)])
                best = zc;
            std::size_t fct = static_cast<std::size_t>(m);
            while (fct > 0) {
                if (++pos[fct - 1] < vertex_cells[fct - 1].size()) break;
                pos[fct - 1] = 0;
                --fct;
            }
            if (fct == 0) break;
        }
        idx[static_cast<std::size_t>(best)] += basis.omega(c);
    }
}

} // namespace

CurvatureMap index_expectation(const RingElement& e, const Sampler& sampler) {
    CurvatureMap out;
    out.total = 0;
    for (const auto& t : e.terms) {
        CellBasis basis(t.term);
        const int z = basis.block_size(0); // zero-cells sit first
        std::vector<long long> sums(static_cast<std::size_t>(z), 0);
        long long runs = 0;
        std::vector<int> rank(static_cast<std::size_t>(basis.size()), -1);
        if (sampler.kind == Sampler::Exact) {
            if (z > 8)
                throw TooLargeForExact("exact index expectation limited to 8 zero-cells, got " +
                                       std::to_string(z));
            std::vector<int> perm(static_cast<std::size_t>(z));
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<long long> idx(static_cast<std::size_t>(z));
            do {
                for (int i = 0; i < z; ++i) rank[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)];
                std::fill(idx.begin(), idx.end(), 0);
                donate_indices(basis, rank, idx);
                for (int i = 0; i < z; ++i) sums[static_cast<std::size_t>(i)] += idx[static_cast<std::size_t>(i)];
                ++runs;
            } while (std::next_permutation(perm.begin(), perm.end()));
        } else {
            // Each sample derives its own stream from (seed, index), so the
            // chunking across threads cannot change the totals.
            const long long total_samples = sampler.samples;
#pragma omp parallel num_threads(max_threads())
            {
                std::vector<long long> local(static_cast<std::size_t>(z), 0);
                std::vector<int> perm(static_cast<std::size_t>(z));
                std::vector<long long> idx(static_cast<std::size_t>(z));
                std::vector<int> local_rank(static_cast<std::size_t>(basis.size()), -1);
#pragma omp for schedule(static)
                for (long long s = 0; s < total_samples; ++s) {
                    Rng rng(Rng::derive(sampler.seed, static_cast<std::uint64_t>(s)));
                    std::iota(perm.begin(), perm.end(), 0);
                    rng.shuffle(perm);
                    for (int i = 0; i < z; ++i) local_rank[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)];
                    std::fill(idx.begin(), idx.end(), 0);
                    donate_indices(basis, local_rank, idx);
                    for (int i = 0; i < z; ++i) local[static_cast<std::size_t>(i)] += idx[static_cast<std::size_t>(i)];
                }
#pragma omp critical
                for (int i = 0; i < z; ++i) sums[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
            }
            runs = total_samples;
        }
        for (int i = 0; i < z; ++i) {
            Rat k = Rat(Int(static_cast<long>(sums[static_cast<std::size_t>(i)]))) /
                    Rat(Int(static_cast<long>(runs)));
            k *= static_cast<long>(t.coeff);
            out.values.emplace_back(basis.descriptor(i), k);
            out.total += k;
        }
    }
    return out;
}

GreenReport green_functions(const RingElement& e, int max_summand_cells) {
    for (const auto& t : e.terms)
        if (t.term.cell_count() > max_summand_cells)
            throw TooLarge("exact inverse capped at " + std::to_string(max_summand_cells) +
                           " cells per summand");
    GreenReport r;
    r.op = connection_operator(e);
    r.g = IntMatrix(0, 0);
    for (int s = 0; s < r.op.summand_count(); ++s) {
        int lo = r.op.summand_offset[static_cast<std::size_t>(s)];
        int hi = r.op.summand_offset[static_cast<std::size_t>(s + 1)];
        IntMatrix Ls = r.op.L.block(lo, hi, lo, hi).to_int_matrix();
        r.g = direct_sum(r.g, inverse_unimodular(Ls));
    }
    r.potentials = r.g.row_sums();
    r.total = r.g.entry_sum();
    // The proof-paragraph identity V(x) = omega(x) g(x,x) is a contract.
    for (int i = 0; i < r.g.rows(); ++i)
        if (r.potentials[static_cast<std::size_t>(i)] != r.op.omega(i) * r.g.at(i, i))
            throw Error("potential identity V(x) = omega(x) g(x,x) violated (internal)");
    return r;
}

namespace {

// Exact trace of the action of U on the rational kernel basis of a block.
Rat kernel_trace(const SparseIntMatrix& block, const SparseIntMatrix& u_block) {
    std::vector<std::vector<Rat>> kernel = kernel_basis(block);
    const int b = static_cast<int>(kernel.size());
    if (b == 0) return Rat(0);
    const int n = block.rows;
    // Solve K M = U K column by column via one RREF of [K | U K].
    RatMatrix aug(n, b + b);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < n; ++i) aug.at(i, j) = kernel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (int j = 0; j < b; ++j) {
        // column j of U K
        for (int i = 0; i < n; ++i) {
            Rat acc = 0;
            for (const auto& [k, v] : u_block.row[static_cast<std::size_t>(i)])
                acc += Rat(static_cast<long>(v)) * kernel[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            aug.at(i, b + j) = acc;
        }
    }
    // Gaussian elimination restricted to the first b columns.
    int row = 0;
    std::vector<int> pivot_of_col(static_cast<std::size_t>(b), -1);
    for (int c = 0; c < b && row < n; ++c) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (aug.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < 2 * b; ++j) swap(aug.at(row, j), aug.at(piv, j));
        Rat inv = 1 / aug.at(row, c);
        for (int j = 0; j < 2 * b; ++j) aug.at(row, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || aug.at(i, c) == 0) continue;
            Rat f = aug.at(i, c);
            for (int j = 0; j < 2 * b; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivot_of_col[static_cast<std::size_t>(c)] = row;
        ++row;
    }
    Rat trace = 0;
    for (int c = 0; c < b; ++c) {
        int pr = pivot_of_col[static_cast<std::size_t>(c)];
        if (pr < 0) throw Error("kernel basis not independent (internal)");
        trace += aug.at(pr, b + c); // M[c][c]
    }
    return trace;
}

} // namespace

LefschetzReport lefschetz(const ProductTerm& term, const Automorphism& T) {
    OperatorBundle bundle = operator_bundle(term);
    SparseIntMatrix U = koopman_matrix(term, T);
    LefschetzReport r;

    const auto& off = bundle.basis.grading_offsets();
    Rat chi_T = 0;
    for (int k = 0; k <= bundle.basis.max_dim(); ++k) {
        SparseIntMatrix u_block = U.block(off[static_cast<std::size_t>(k)], off[static_cast<std::size_t>(k + 1)],
                                          off[static_cast<std::size_t>(k)], off[static_cast<std::size_t>(k + 1)]);
        Rat tr = kernel_trace(bundle.blocks[static_cast<std::size_t>(k)], u_block);
        if (tr.get_den() != 1) throw Error("non-integer cohomology trace (internal)");
        r.cohomology_traces.push_back(tr.get_num().get_si());
        chi_T += (k % 2 == 0 ? tr : -tr);
    }
    r.chi_T = chi_T.get_num().get_si();

    for (int i = 0; i < bundle.basis.size(); ++i) {
        long long diag = U.get(i, i);
        if (diag != 0) {
            long long idx = bundle.basis.omega(i) * diag;
            r.fixed_indices.emplace_back(bundle.basis.descriptor(i), idx);
            r.fixed_sum += idx;
        }
    }
    return r;
}

McKeanSingerReport mckean_singer(const RingElement& e) {
    McKeanSingerReport r;
    r.chi = euler_characteristic(e);
    GreenReport green = green_functions(e);
    Int str_g = 0;
    for (int i = 0; i < green.g.rows(); ++i)
        str_g += Int(green.op.omega(i)) * green.g.at(i, i);
    r.str_g = str_g;

    r.t_values = {0.0, 0.5, 1.0, 2.0};
    r.str_exp.assign(r.t_values.size(), 0.0);
    double supersym = 0.0;
    for (const auto& t : e.terms) {
        OperatorBundle b = operator_bundle(t.term);
        const int n = b.basis.size();
        EigenDecomposition dec = sym_eigen_decomposition(b.H.to_dense_double(), n);
        for (std::size_t ti = 0; ti < r.t_values.size(); ++ti) {
            double acc = 0;
            for (int x = 0; x < n; ++x) {
                double diag = 0;
                for (int k = 0; k < n; ++k) {
                    double q = dec.vectors[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)];
                    diag += std::exp(-r.t_values[ti] * dec.values[static_cast<std::size_t>(k)]) * q * q;
                }
                acc += b.basis.omega(x) * diag;
            }
            r.str_exp[ti] += static_cast<double>(t.coeff) * acc;
        }
        // Supersymmetry of the non-zero spectra of the even and odd blocks.
        std::vector<double> even, odd;
        for (int k = 0; k <= b.basis.max_dim(); ++k) {
            const auto& blk = b.blocks[static_cast<std::size_t>(k)];
            std::vector<double> vals = sym_eigenvalues(blk.to_dense_double(), blk.rows);
            for (double v : vals)
                if (std::fabs(v) > 1e-8) (k % 2 == 0 ? even : odd).push_back(v);
        }
        std::sort(even.begin(), even.end());
        std::sort(odd.begin(), odd.end());
        if (even.size() != odd.size()) {
            supersym = std::numeric_limits<double>::infinity();
        } else {
            for (std::size_t i = 0; i < even.size(); ++i)
                supersym = std::max(supersym, std::fabs(even[i] - odd[i]));
        }
    }
    for (double v : r.str_exp)
        r.max_deviation = std::max(r.max_deviation, std::fabs(v - static_cast<double>(r.chi)));
    r.supersymmetry_deviation = supersym;
    r.supersymmetry_checked = !e.terms.empty();
    return r;
}

namespace {

Rat dim_of_subset(const Graph& g, std::vector<int> verts,
                  std::map<std::vector<int>, Rat>& memo) {
    if (verts.empty()) return Rat(-1);
    auto it = memo.find(verts);
    if (it != memo.end()) return it->second;
    Rat acc = 0;
    for (int v : verts) {
        std::vector<int> sphere;
        for (int u : verts)
            if (u != v && g.has_edge(u, v)) sphere.push_back(u);
        acc += 1 + dim_of_subset(g, std::move(sphere), memo);
    }
    acc /= static_cast<int>(verts.size());
    memo[verts] = acc;
    return acc;
}

} // namespace

Rat inductive_dimension_graph(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    std::map<std::vector<int>, Rat> memo;
    return dim_of_subset(g, std::move(all), memo);
}

std::vector<Rat> dimension(const RingElement& e) {
    if (e.is_zero()) throw EmptyTerm("dimension of the zero element is excluded");
    std::vector<Rat> out;
    for (const auto& t : e.terms) {
        Rat d = 0;
        for (const auto& f : t.term.factors)
            d += inductive_dimension_graph(barycentric_refinement(f).graph);
        out.push_back(d);
    }
    return out;
}

long long clique_number(const RingElement& e) {
    long long best = 0;
    bool any = false;
    for (const auto& t : e.terms) {
        long long c = 1;
        for (const auto& f : t.term.factors) c *= f.dim() + 1;
        if (t.coeff < 0) c = -c;
        best = any ? std::max(best, c) : c;
        any = true;
    }
    return any ? best : 0;
}

} // namespace strongring
