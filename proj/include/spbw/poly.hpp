// Polynomials in PBW normal form: term lists kept strictly descending in the
// ring's monomial order.  Addition and scaling need only the order; products
// need the ring's rewriting table and live in ring.hpp.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "order.hpp"
#include "rational.hpp"

namespace spbw {

struct Term {
    Rational coeff;
    Monomial mono;

    bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

struct Poly {
    std::vector<Term> terms;  // strictly descending, no zero coefficients

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
    const Monomial& lm() const { return terms.front().mono; }
    const Rational& lc() const { return terms.front().coeff; }

    bool operator==(const Poly& o) const { return terms == o.terms; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

inline Poly poly_zero() { return Poly{}; }

inline Poly poly_term(Rational c, Monomial m) {
    if (c == 0) return Poly{};
    return Poly{{Term{std::move(c), std::move(m)}}};
}

inline Poly poly_const(Rational c, std::size_t arity) {
    return poly_term(std::move(c), unit_monomial(arity));
}

inline Poly poly_one(std::size_t arity) { return poly_const(1, arity); }

inline Poly poly_gen(std::size_t k, std::size_t arity) {
    Monomial m = unit_monomial(arity);
    m[k] = 1;
    return poly_term(1, std::move(m));
}

inline bool poly_is_one(const Poly& p) {
    return p.terms.size() == 1 && p.lc() == 1 && mono_is_unit(p.lm());
}

// Sort, merge equal monomials, drop zeros.
inline Poly poly_normalize(std::vector<Term> ts, const MonomialOrder& ord) {
    std::sort(ts.begin(), ts.end(), [&ord](const Term& x, const Term& y) {
        return ord.compare(x.mono, y.mono) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(ts.size());
    for (auto& t : ts) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    Poly p;
    p.terms.reserve(merged.size());
    for (auto& t : merged)
        if (t.coeff != 0) p.terms.push_back(std::move(t));
    return p;
}

inline Poly poly_add(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = ord.compare(a.terms[i].mono, b.terms[j].mono);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Rational s = a.terms[i].coeff + b.terms[j].coeff;
            if (s != 0) r.terms.push_back(Term{std::move(s), a.terms[i].mono});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

inline Poly poly_neg(Poly p) {
    for (auto& t : p.terms) t.coeff = -t.coeff;
    return p;
}

inline Poly poly_sub(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    return poly_add(a, poly_neg(b), ord);
}

inline Poly poly_scale(const Rational& c, Poly p) {
    if (c == 0) return Poly{};
    for (auto& t : p.terms) t.coeff *= c;
    return p;
}

inline std::uint64_t poly_degree(const Poly& p) {
    std::uint64_t d = 0;
    for (const auto& t : p.terms) d = std::max(d, total_degree(t.mono));
    return d;
}

}  // namespace spbw
