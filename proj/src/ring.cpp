#include "strongring/ring.hpp"

#include <algorithm>
#include <sstream>

namespace strongring {

long long ProductTerm::cell_count() const {
    long long n = 1;
    for (const auto& f : factors) n *= f.cell_count();
    return n;
}

long long ProductTerm::euler_characteristic() const {
    long long chi = 1;
    for (const auto& f : factors) chi *= f.euler_characteristic();
    return chi;
}

int ProductTerm::dim() const {
    int d = 0;
    for (const auto& f : factors) d += f.dim();
    return d;
}

int ProductTerm::compare(const ProductTerm& a, const ProductTerm& b) {
    if (a.factors.size() != b.factors.size())
        return a.factors.size() < b.factors.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        int c = SimplicialComplex::compare(a.factors[i], b.factors[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string ProductTerm::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " x ";
        os << "[" << factors[i].cell_count() << " cells]";
    }
    return os.str();
}

RingElement RingElement::one() {
    return from_complex(SimplicialComplex::from_cells({{0}}));
}

RingElement RingElement::from_complex(const SimplicialComplex& g) {
    RingElement e;
    if (!g.empty()) e.terms.push_back({1, ProductTerm(g)});
    return normalize(std::move(e));
}

std::string RingElement::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << terms[i].coeff << "*(" << terms[i].term.to_string() << ")";
    }
    return os.str();
}

RingElement normalize(RingElement e) {
    std::vector<RingElement::Entry> out;
    for (auto& t : e.terms) {
        if (t.coeff == 0) continue;
        long long coeff = t.coeff;
        std::vector<SimplicialComplex> kept;
        bool annihilated = false;
        for (auto& f : t.term.factors) {
            if (f.empty()) { // a zero factor kills the term
                annihilated = true;
                break;
            }
            if (f.zero_dimensional()) {
                // P_n inside a product is n disjoint copies of the rest.
                coeff *= f.vertex_count();
            } else {
                kept.push_back(std::move(f));
            }
        }
        if (annihilated || coeff == 0) continue;
        if (kept.empty()) kept.push_back(SimplicialComplex::from_cells({{0}})); // K1
        std::sort(kept.begin(), kept.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return SimplicialComplex::compare(a, b) < 0;
        });
        ProductTerm term(std::move(kept));

        bool merged = false;
        for (auto& o : out) {
            if (o.term == term) {
                o.coeff += coeff;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({coeff, std::move(term)});
    }
    std::erase_if(out, [](const RingElement::Entry& x) { return x.coeff == 0; });
    e.terms = std::move(out);
    return e;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    RingElement e = a;
    e.terms.insert(e.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(std::move(e));
}

RingElement ring_neg(const RingElement& a) {
    RingElement e = a;
    for (auto& t : e.terms) t.coeff = -t.coeff;
    return e;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    return ring_add(a, ring_neg(b));
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    RingElement e;
    for (const auto& x : a.terms) {
        for (const auto& y : b.terms) {
            RingElement::Entry t;
            t.coeff = x.coeff * y.coeff;
            t.term.factors = x.term.factors;
            t.term.factors.insert(t.term.factors.end(), y.term.factors.begin(),
                                  y.term.factors.end());
            e.terms.push_back(std::move(t));
        }
    }
    return normalize(std::move(e));
}

RingElement ring_scale(long long c, const RingElement& a) {
    RingElement e = a;
    for (auto& t : e.terms) t.coeff *= c;
    return normalize(std::move(e));
}

bool ring_equal(const RingElement& a, const RingElement& b) {
    if (a.terms.size() != b.terms.size()) return false;
    auto key = [](const RingElement& e) {
        std::vector<const RingElement::Entry*> v;
        for (const auto& t : e.terms) v.push_back(&t);
        std::sort(v.begin(), v.end(), [](const RingElement::Entry* x, const RingElement::Entry* y) {
            int c = ProductTerm::compare(x->term, y->term);
            if (c != 0) return c < 0;
            return x->coeff < y->coeff;
        });
        return v;
    };
    auto va = key(a), vb = key(b);
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i]->coeff != vb[i]->coeff) return false;
        if (!(va[i]->term == vb[i]->term)) return false;
    }
    return true;
}

bool is_single_positive_term(const RingElement& e) {
    return e.terms.size() == 1 && e.terms[0].coeff == 1;
}

std::vector<std::pair<int, const ProductTerm*>> summands(const RingElement& e) {
    std::vector<std::pair<int, const ProductTerm*>> out;
    for (const auto& t : e.terms) {
        int sign = t.coeff > 0 ? 1 : -1;
        long long n = t.coeff > 0 ? t.coeff : -t.coeff;
        for (long long i = 0; i < n; ++i) out.emplace_back(sign, &t.term);
    }
    return out;
}

} // namespace strongring
