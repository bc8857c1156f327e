#include "strongring/stanley_reisner.hpp"

#include <algorithm>
#include <sstream>

#include "strongring/cell_basis.hpp"

namespace strongring {

long long StanleyReisnerPoly::evaluate_all_minus_one() const {
    long long total = 0;
    for (const auto& [mono, coeff] : monomials_)
        total += (mono.size() % 2 == 0 ? coeff : -coeff);
    return total;
}

void StanleyReisnerPoly::add_monomial(Monomial m, long long coeff) {
    std::sort(m.begin(), m.end());
    auto [it, inserted] = monomials_.try_emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) monomials_.erase(it);
    }
}

int StanleyReisnerPoly::intern_variable(const std::string& name) {
    auto it = var_ids_.find(name);
    if (it != var_ids_.end()) return it->second;
    int id = static_cast<int>(var_names_.size());
    var_names_.push_back(name);
    var_ids_[name] = id;
    return id;
}

std::string StanleyReisnerPoly::to_string() const {
    if (monomials_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : monomials_) {
        if (!first) os << (coeff >= 0 ? " + " : " - ");
        else if (coeff < 0) os << "-";
        long long a = coeff >= 0 ? coeff : -coeff;
        if (a != 1) os << a << "*";
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i) os << "*";
            os << var_names_[static_cast<std::size_t>(mono[i])];
        }
        first = false;
    }
    return os.str();
}

long long chi_via_stanley_reisner(const RingElement& e) {
    long long total = 0;
    for (const auto& entry : e.terms) {
        long long prod = 1;
        for (const auto& factor : entry.term.factors) {
            RingElement single;
            single.terms.push_back({1, ProductTerm(factor)});
            prod *= -stanley_reisner(single).evaluate_all_minus_one();
        }
        total += entry.coeff * prod;
    }
    return total;
}

StanleyReisnerPoly stanley_reisner(const RingElement& e) {
    StanleyReisnerPoly poly;
    for (std::size_t t = 0; t < e.terms.size(); ++t) {
        const auto& entry = e.terms[t];
        CellBasis basis(entry.term);
        // fresh variables per term and factor
        std::vector<std::map<Vertex, int>> vars(static_cast<std::size_t>(basis.factor_count()));
        for (int f = 0; f < basis.factor_count(); ++f)
            for (const auto& cell : basis.factor_cells(f))
                for (Vertex v : cell) {
                    auto& m = vars[static_cast<std::size_t>(f)];
                    if (!m.count(v)) {
                        std::ostringstream name;
                        name << "x" << t;
                        if (basis.factor_count() > 1) name << "_" << f;
                        name << "_" << v;
                        m[v] = poly.intern_variable(name.str());
                    }
                }
        for (int i = 0; i < basis.size(); ++i) {
            StanleyReisnerPoly::Monomial mono;
            const ProductCell& c = basis.cell(i);
            for (int f = 0; f < basis.factor_count(); ++f)
                for (Vertex v : basis.factor_cell(f, c[static_cast<std::size_t>(f)]))
                    mono.push_back(vars[static_cast<std::size_t>(f)].at(v));
            poly.add_monomial(std::move(mono), entry.coeff);
        }
    }
    return poly;
}

} // namespace strongring
