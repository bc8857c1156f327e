#include "strongring/parser.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

#include "strongring/generators.hpp"

namespace strongring {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t last_token_start = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    // Unexpected end of input points at the token that demanded more.
    [[noreturn]] void fail_eof(const std::string& what) {
        throw SyntaxError("unexpected end of input, expected " + what, last_token_start);
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected integer", start);
        return std::stoll(text.substr(start, pos - start));
    }

    SimplicialComplex parse_name() {
        skip_ws();
        if (pos >= text.size()) fail_eof("generator name");
        std::size_t start = pos;
        last_token_start = start;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string word = text.substr(start, pos - start);
        if (word == "Oct") return gen_octahedron();
        if (word == "Susp") {
            if (peek() != '(') throw SyntaxError("expected '(' after Susp", pos);
            last_token_start = pos;
            ++pos;
            SimplicialComplex inner = parse_name();
            if (peek() != ')') {
                if (at_end()) fail_eof("')'");
                throw SyntaxError("expected ')'", pos);
            }
            ++pos;
            return gen_suspension(inner);
        }
        if (word.size() == 1 && (word[0] == 'K' || word[0] == 'C' || word[0] == 'L' || word[0] == 'P')) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw SyntaxError("expected integer after generator letter", pos);
            long long n = parse_int();
            switch (word[0]) {
                case 'K': return gen_complete(static_cast<int>(n));
                case 'C': return gen_cycle(static_cast<int>(n));
                case 'L': return gen_path(static_cast<int>(n));
                default: return gen_points(static_cast<int>(n));
            }
        }
        throw UnknownGenerator(word, start);
    }

    SimplicialComplex load_file(const std::string& path, std::size_t at) {
        std::ifstream in(path);
        if (!in) throw SyntaxError("cannot open file '" + path + "'", at);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& ex) {
            throw SyntaxError(std::string("invalid JSON in '") + path + "': " + ex.what(), at);
        }
        if (!j.contains("facets") || !j["facets"].is_array())
            throw SyntaxError("file '" + path + "' has no \"facets\" array", at);
        std::vector<Simplex> facets;
        for (const auto& f : j["facets"]) {
            Simplex s;
            for (const auto& v : f) s.push_back(v.get<int>());
            facets.push_back(std::move(s));
        }
        return SimplicialComplex::from_facets(facets);
    }

    RingElement parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail_eof("a factor");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            last_token_start = pos;
            long long n = parse_int();
            return RingElement::from_complex(gen_points(static_cast<int>(n)));
        }
        if (c == '@') {
            last_token_start = pos;
            std::size_t at = pos;
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
                   std::string("+-*()").find(text[pos]) == std::string::npos)
                ++pos;
            if (pos == start) throw SyntaxError("expected path after '@'", at);
            return RingElement::from_complex(load_file(text.substr(start, pos - start), at));
        }
        if (c == '(') {
            last_token_start = pos;
            std::size_t open = pos;
            ++pos;
            RingElement inner = parse_expr();
            if (peek() != ')') {
                if (at_end()) throw SyntaxError("missing ')' for '('", open);
                throw SyntaxError("expected ')'", pos);
            }
            ++pos;
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return RingElement::from_complex(parse_name());
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }

    RingElement parse_term() {
        RingElement e = parse_factor();
        while (peek() == '*') {
            last_token_start = pos;
            ++pos;
            e = ring_mul(e, parse_factor());
        }
        return e;
    }

    RingElement parse_expr() {
        RingElement e = parse_term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            last_token_start = pos;
            ++pos;
            RingElement rhs = parse_term();
            e = (c == '+') ? ring_add(e, rhs) : ring_sub(e, rhs);
        }
        return e;
    }
};

} // namespace

RingElement parse_ring_expression(const std::string& text) {
    Parser p(text);
    if (p.at_end()) throw SyntaxError("empty expression", 0);
    RingElement e = p.parse_expr();
    if (!p.at_end())
        throw SyntaxError(std::string("unexpected character '") + p.text[p.pos] + "'", p.pos);
    return normalize(std::move(e));
}

PrimalityCertificate is_multiplicative_prime(const RingElement& e) {
    if (!is_single_positive_term(e))
        throw NotASingleTerm("primality is defined for single terms with coefficient 1");
    const ProductTerm& t = e.terms[0].term;
    PrimalityCertificate cert;
    cert.factor_count = static_cast<int>(t.factors.size());
    long long linear_total = 0;
    for (const auto& f : t.factors) {
        // degree-1 monomials of f_G are exactly the vertices
        cert.factor_linear_parts.push_back(f.vertex_count());
        linear_total += f.vertex_count();
    }
    // The expansion of a product of >= 2 non-unit factors has minimal
    // monomial degree >= 2, so no linear part.
    cert.expansion_has_linear_part = (cert.factor_count == 1) && linear_total > 0;
    if (cert.factor_count == 1) {
        const auto& g = t.factors[0];
        if (g.cell_count() == 1 && g.dim() == 0) {
            cert.is_unit = true;
            cert.message = "K1 is the ring unit, neither prime nor composite";
        } else {
            cert.is_prime = true;
            cert.message = "single simplicial complex; its polynomial has linear parts";
        }
    } else {
        cert.message = "product of " + std::to_string(cert.factor_count) +
                       " non-unit factors; the expansion has no linear monomials";
    }
    return cert;
}

NonUniqueFactorization nonunique_factorization_demo() {
    RingElement one = RingElement::one();
    RingElement x = RingElement::from_complex(gen_complete(2));
    auto power = [&](int k) {
        RingElement p = one;
        for (int i = 0; i < k; ++i) p = ring_mul(p, x);
        return p;
    };
    RingElement a1 = ring_add(ring_add(one, x), power(2));   // 1 + x + x^2
    RingElement a2 = ring_add(one, power(3));                // 1 + x^3
    RingElement b1 = ring_add(ring_add(one, power(2)), power(4));
    RingElement b2 = ring_add(one, x);

    NonUniqueFactorization r;
    r.lhs_summands_before_merge = a1.terms.size() * a2.terms.size();
    r.rhs_summands_before_merge = b1.terms.size() * b2.terms.size();
    r.lhs = ring_mul(a1, a2);
    r.rhs = ring_mul(b1, b2);
    r.equal = ring_equal(r.lhs, r.rhs);
    return r;
}

} // namespace strongring
