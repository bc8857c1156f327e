#pragma once

#include <map>
#include <string>
#include <vector>

#include "strongring/ring.hpp"

namespace strongring {

// Square-free polynomial representation of a ring element: every cell of a
// term becomes the monomial of its variables, with a fresh variable pool per
// (term, factor). Evaluation at (-1,...,-1) is the hook used by the Euler
// characteristic cross-check: chi(e) = -f(-1,...,-1).
class StanleyReisnerPoly {
public:
    // monomial = sorted list of variable ids
    using Monomial = std::vector<int>;

    const std::map<Monomial, long long>& monomials() const { return monomials_; }
    std::size_t monomial_count() const { return monomials_.size(); }
    int variable_count() const { return static_cast<int>(var_names_.size()); }
    const std::string& variable_name(int id) const { return var_names_[static_cast<std::size_t>(id)]; }

    long long evaluate_all_minus_one() const;
    std::string to_string() const;

    void add_monomial(Monomial m, long long coeff);
    int intern_variable(const std::string& name);

private:
    std::map<Monomial, long long> monomials_;
    std::vector<std::string> var_names_;
    std::map<std::string, int> var_ids_;
};

StanleyReisnerPoly stanley_reisner(const RingElement& e);

// Euler characteristic through the Stanley-Reisner picture: each factor
// polynomial is evaluated at (-1,...,-1) and negated, then the term values
// multiply and the coefficients sum. On a single complex this is the plain
// -f(-1,...,-1); on products the negation must stay with the factors, since
// monomial degree counts vertices per factor rather than dim + 1.
long long chi_via_stanley_reisner(const RingElement& e);

} // namespace strongring
