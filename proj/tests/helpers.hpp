// Shared fixtures: the example rings, conversions to the oracle
// representation, deterministic random polynomials, and module equality by
// mutual reduction.
#pragma once

#include <random>
#include <string>
#include <vector>

#include <spbw/spbw.hpp>

#include "oracle_commutative.hpp"

namespace testing {

using namespace spbw;

// QQ[x,y] with y*x = c*x*y + p (p given as expression over the plain words)
inline Ring make_xy_ring(const Rational& c, const Poly& p) {
    std::vector<Relation> rels(1);
    rels[0].c = c;
    rels[0].p = p;
    return Ring({"x", "y"}, MonomialOrder::deglex(2), rels);
}

// y*x = -x*y + 1, deglex x > y
inline Ring ring_xy_m1() { return make_xy_ring(-1, poly_one(2)); }

// y*x = -x*y, deglex x > y
inline Ring ring_xy_skew() { return make_xy_ring(-1, poly_zero()); }

// y*x = x*y + x (Jordan plane shape), deglex x > y
inline Ring ring_jordan() {
    Poly x = poly_gen(0, 2);
    return make_xy_ring(1, x);
}

// commutative QQ[x_1..x_n], deglex first-variable-largest
inline Ring ring_commutative(std::size_t n, std::vector<std::string> names = {}) {
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<Relation> rels(n * (n - 1) / 2);
    for (auto& r : rels) {
        r.c = 1;
        r.p = poly_zero();
    }
    return Ring(std::move(names), MonomialOrder::deglex(n), rels);
}

// additive analogue of the second Weyl algebra A_2(1/2, 1/3):
// variables x1, x2, y1, y2 with y_i x_i = q_i x_i y_i + 1, everything else
// commuting; q_1 = 1/2, q_2 = 1/3
inline Ring ring_aw2() {
    const std::size_t n = 4;
    std::vector<Relation> rels(n * (n - 1) / 2);
    for (auto& r : rels) {
        r.c = 1;
        r.p = poly_zero();
    }
    auto idx = [](std::size_t lo, std::size_t hi) { return hi * (hi - 1) / 2 + lo; };
    rels[idx(0, 2)].c = Rational(1) / 2;  // y1 x1 = (1/2) x1 y1 + 1
    rels[idx(0, 2)].p = poly_one(n);
    rels[idx(1, 3)].c = Rational(1) / 3;  // y2 x2 = (1/3) x2 y2 + 1
    rels[idx(1, 3)].p = poly_one(n);
    return Ring({"x1", "x2", "y1", "y2"}, MonomialOrder::deglex(n), rels);
}

// quantum Weyl algebra A_2(J_{0,-1}): variables x1, x2, d1, d2 with
//   d1 x1 = x1 d1 + 1              d1 x2 = x2 d1 - x2 d2
//   d2 x1 = x1 d2                  d2 x2 = x2 d2 + x1 d2 + 1
//   d2 d1 = d1 d2 - d2^2           x2 x1 = x1 x2
// deglex with precedence x2 > x1 > d1 > d2 so every tail stays below its cross term
inline Ring ring_qweyl2() {
    const std::size_t n = 4;
    std::vector<Relation> rels(n * (n - 1) / 2);
    for (auto& r : rels) {
        r.c = 1;
        r.p = poly_zero();
    }
    auto idx = [](std::size_t lo, std::size_t hi) { return hi * (hi - 1) / 2 + lo; };
    MonomialOrder ord = MonomialOrder::deglex(n);
    ord.precedence = {1, 0, 2, 3};
    auto mono = [&](std::uint32_t e0, std::uint32_t e1, std::uint32_t e2, std::uint32_t e3) {
        return Monomial{e0, e1, e2, e3};
    };
    rels[idx(0, 2)].p = poly_one(n);
    rels[idx(1, 2)].p = poly_normalize({Term{-1, mono(0, 1, 0, 1)}}, ord);
    rels[idx(1, 3)].p = poly_normalize({Term{1, mono(1, 0, 0, 1)}, Term{1, mono(0, 0, 0, 0)}}, ord);
    rels[idx(2, 3)].p = poly_normalize({Term{-1, mono(0, 0, 0, 2)}}, ord);
    return Ring({"x1", "x2", "d1", "d2"}, std::move(ord), rels);
}

// second Weyl algebra A_2: variables x1, x2, d1, d2 with d_i x_i = x_i d_i + 1
inline Ring ring_weyl2() {
    const std::size_t n = 4;
    std::vector<Relation> rels(n * (n - 1) / 2);
    for (auto& r : rels) {
        r.c = 1;
        r.p = poly_zero();
    }
    auto idx = [](std::size_t lo, std::size_t hi) { return hi * (hi - 1) / 2 + lo; };
    rels[idx(0, 2)].p = poly_one(n);  // d1 x1 = x1 d1 + 1
    rels[idx(1, 3)].p = poly_one(n);  // d2 x2 = x2 d2 + 1
    return Ring({"x1", "x2", "d1", "d2"}, MonomialOrder::deglex(n), rels);
}

inline oracle::CPoly to_oracle(const Poly& p) {
    oracle::CPoly out;
    for (const Term& t : p.terms) out.emplace(t.mono, t.coeff);
    return out;
}

inline oracle::CVec to_oracle(const ModuleVec& v) {
    oracle::CVec out;
    for (const Poly& p : v) out.push_back(to_oracle(p));
    return out;
}

inline Poly from_oracle(const oracle::CPoly& p, const MonomialOrder& ord) {
    std::vector<Term> ts;
    for (const auto& [e, c] : p) ts.push_back(Term{c, e});
    return poly_normalize(std::move(ts), ord);
}

inline oracle::OrderSpec to_oracle(const ModuleOrder& o) {
    oracle::OrderSpec os;
    os.deglex = o.base.kind == OrderKind::Deglex;
    os.prec = o.base.precedence;
    os.top = o.scheme == Scheme::TOP;
    os.pos_prec = o.position_precedence;
    return os;
}

struct Rng {
    std::mt19937 g;
    explicit Rng(std::uint32_t seed) : g(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(g);
    }

    Poly poly(const Ring& ring, int max_terms, int max_deg, int max_coeff) {
        std::vector<Term> ts;
        int nt = uniform(0, max_terms);
        for (int t = 0; t < nt; ++t) {
            Monomial m = unit_monomial(ring.arity());
            int deg = uniform(0, max_deg);
            for (int d = 0; d < deg; ++d)
                ++m[static_cast<std::size_t>(uniform(0, static_cast<int>(ring.arity()) - 1))];
            int c = uniform(-max_coeff, max_coeff);
            if (c == 0) c = 1;
            ts.push_back(Term{Rational(c), std::move(m)});
        }
        return poly_normalize(std::move(ts), ring.order());
    }

    ModuleVec vec(const Ring& ring, std::size_t rank, int max_terms, int max_deg,
                  int max_coeff) {
        ModuleVec v(rank);
        for (auto& p : v) p = poly(ring, max_terms, max_deg, max_coeff);
        return v;
    }
};

// both generating sets span the same submodule: each vector of one reduces
// to zero against a basis of the other
inline bool same_module(const Ring& ring, const std::vector<ModuleVec>& a,
                        const std::vector<ModuleVec>& b, const ModuleOrder& ord,
                        Side side = Side::Left) {
    GroebnerBasis ga = buchberger(ring, a, ord, side);
    GroebnerBasis gb = buchberger(ring, b, ord, side);
    for (const ModuleVec& v : b)
        if (!member(ring, ga, v)) return false;
    for (const ModuleVec& v : a)
        if (!member(ring, gb, v)) return false;
    return true;
}

}  // namespace testing
