// Admissible monomial orders: deglex and lex over a generator precedence.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace spbw {

enum class OrderKind { Deglex, Lex };

// precedence lists generator indices from largest to smallest; comparisons
// walk that list, so any permutation of the generators is admissible.
struct MonomialOrder {
    OrderKind kind = OrderKind::Deglex;
    std::vector<std::size_t> precedence;

    static MonomialOrder deglex(std::size_t arity) {
        MonomialOrder o;
        o.kind = OrderKind::Deglex;
        o.precedence.resize(arity);
        for (std::size_t i = 0; i < arity; ++i) o.precedence[i] = i;
        return o;
    }

    static MonomialOrder lex(std::size_t arity) {
        MonomialOrder o = deglex(arity);
        o.kind = OrderKind::Lex;
        return o;
    }

    std::size_t arity() const { return precedence.size(); }

    void validate() const {
        std::vector<bool> seen(precedence.size(), false);
        for (std::size_t p : precedence) {
            if (p >= precedence.size() || seen[p])
                throw ValidationFailure("order precedence is not a permutation of the generators");
            seen[p] = true;
        }
    }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind == OrderKind::Deglex) {
            std::uint64_t da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
        }
        for (std::size_t p : precedence) {
            if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // Same order seen from the opposite ring: generator k becomes n-1-k.
    MonomialOrder reversed() const {
        MonomialOrder o;
        o.kind = kind;
        o.precedence.reserve(precedence.size());
        for (std::size_t p : precedence) o.precedence.push_back(precedence.size() - 1 - p);
        return o;
    }
};

}  // namespace spbw
