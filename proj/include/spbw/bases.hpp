// Free bases for stably free modules of sufficient rank.
//
// Pipeline: a split presentation 0 -> A^s -> A^r -> M -> 0 hands us G1^T with
// F1^T G1^T = I_s.  Column by column we shorten the trailing part of V*G1^T
// (stabilization), reduce the shortened unimodular column to e_1 by the four
// elementary factors E1..E4, and finally clear the strictly upper entries of
// the top s x s block.  The resulting U satisfies U*G1^T = [I_s; 0] and the
// last r-s rows of U descend to a basis of M.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "inverses.hpp"
#include "module.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace spbw {

struct UnimodularWitness {
    ModuleVec column;  // v
    ModuleVec row;     // u with sum_i u_i * v_i = 1
};

// Cofactors of 1 over the left ideal generated by the entries of v.
inline std::optional<UnimodularWitness> unimodular_witness(
    const Ring& ring, const ModuleVec& v,
    std::optional<ModuleOrder> order = std::nullopt) {
    if (vec_is_zero(v)) return std::nullopt;
    ModuleOrder ord = order ? order->with_rank(1) : ModuleOrder::standard(ring.order(), 1);
    std::vector<ModuleVec> inputs;
    inputs.reserve(v.size());
    for (const Poly& p : v) inputs.push_back(ModuleVec{p});
    GroebnerBasis gb = buchberger_left(ring, inputs, ord);
    auto u = member_via_inputs(ring, gb, ModuleVec{poly_one(ring.arity())});
    if (!u) return std::nullopt;
    Poly acc = poly_zero();
    for (std::size_t i = 0; i < v.size(); ++i)
        acc = poly_add(acc, ring.mul((*u)[i], v[i]), ring.order());
    if (!poly_is_one(acc)) throw Error("internal: unimodular witness failed re-verification");
    UnimodularWitness w;
    w.column = v;
    w.row = std::move(*u);
    return w;
}

struct StabilizationData {
    std::vector<Poly> a;          // v'_i = v_i + a_i * v_r
    UnimodularWitness shortened;  // column v' with its witness row
};

namespace detail {

// Monomials of total degree <= bound, degree-major, exponents enumerated
// with the earlier variable taking the larger share first.
inline void monomials_of_degree(std::size_t arity, std::uint32_t deg, std::size_t var,
                                Monomial& cur, std::vector<Monomial>& out) {
    if (var + 1 == arity) {
        cur[var] = deg;
        out.push_back(cur);
        cur[var] = 0;
        return;
    }
    for (std::uint32_t e = deg; e + 1 != 0; --e) {
        cur[var] = e;
        monomials_of_degree(arity, deg - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

inline std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t bound) {
    std::vector<Monomial> out;
    Monomial cur = unit_monomial(arity);
    for (std::uint32_t d = 0; d <= bound; ++d) monomials_of_degree(arity, d, 0, cur, out);
    return out;
}

inline std::optional<StabilizationData> try_stabilization(
    const Ring& ring, const ModuleVec& v, const std::vector<Poly>& a,
    const std::optional<ModuleOrder>& order) {
    const std::size_t r = v.size();
    ModuleVec shortened(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i)
        shortened[i] = poly_add(v[i], ring.mul(a[i], v[r - 1]), ring.order());
    std::optional<UnimodularWitness> w;
    try {
        w = unimodular_witness(ring, shortened, order);
    } catch (const DegreeLimitExceeded&) {
        return std::nullopt;  // candidate not certifiable within the cap
    }
    if (!w) return std::nullopt;
    StabilizationData data;
    data.a = a;
    data.shortened = std::move(*w);
    return data;
}

}  // namespace detail

// Searches coefficients a_1..a_{r-1} so that the shortened column
// v'_i = v_i + a_i * v_r stays unimodular.  Hints are tried first, then the
// zero vector, then single and double support over +-monomials of total
// degree <= degree_bound, in a fixed enumeration.  Every hit is certified.
inline std::optional<StabilizationData> stabilize(
    const Ring& ring, const ModuleVec& v,
    const std::vector<std::vector<Poly>>& hints, std::uint32_t degree_bound,
    std::optional<ModuleOrder> order = std::nullopt) {
    const std::size_t r = v.size();
    if (r < 2) throw DimensionMismatch("stabilization needs a column of length at least 2");
    const std::size_t n = ring.arity();

    for (const auto& hint : hints) {
        if (hint.size() != r - 1)
            throw DimensionMismatch("stabilization hint has wrong length");
        if (auto d = detail::try_stabilization(ring, v, hint, order)) return d;
    }

    std::vector<Poly> a(r - 1, poly_zero());
    if (auto d = detail::try_stabilization(ring, v, a, order)) return d;

    const std::vector<Monomial> monos = detail::monomials_up_to(n, degree_bound);
    auto candidate = [&](const Monomial& m, int sign) {
        return poly_term(sign < 0 ? Rational(-1) : Rational(1), m);
    };

    for (const Monomial& m : monos)
        for (int sign : {+1, -1})
            for (std::size_t p = 0; p + 1 < r; ++p) {
                a.assign(r - 1, poly_zero());
                a[p] = candidate(m, sign);
                if (auto d = detail::try_stabilization(ring, v, a, order)) return d;
            }

    for (std::size_t p = 0; p + 1 < r; ++p)
        for (std::size_t q = p + 1; q + 1 < r; ++q)
            for (std::size_t km = 0; km < monos.size(); ++km)
                for (std::size_t kq = 0; kq < monos.size(); ++kq)
                    for (int sp : {+1, -1})
                        for (int sq : {+1, -1}) {
                            a.assign(r - 1, poly_zero());
                            a[p] = candidate(monos[km], sp);
                            a[q] = candidate(monos[kq], sq);
                            if (auto d = detail::try_stabilization(ring, v, a, order)) return d;
                        }

    return std::nullopt;
}

struct ElementaryFactorization {
    std::vector<Matrix> factors;  // E1, E2, E3, E4 in application order
    Matrix u;                     // E4*E3*E2*E1 with u * v = e_1
};

// Inverse of the factorization product: each factor is I plus a nilpotent
// one-row or one-column pattern, so its inverse negates the off-diagonal part.
inline Matrix elementary_inverse(const Ring& ring, const ElementaryFactorization& fact) {
    const std::size_t r = fact.u.rows;
    Matrix inv = mat_identity(r, ring.arity());
    for (const Matrix& e : fact.factors) {
        Matrix ei = e;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (i != j) ei.at(i, j) = poly_neg(ei.at(i, j));
        inv = mat_mul(ring, inv, ei);
    }
    return inv;
}

// Reduces a unimodular column to e_1 by four elementary factors:
//   E1 adds a_i * v_r to the leading entries,
//   E2 rewrites the last entry to v'_1 - 1 through v''_i = (v'_1 - 1 - v_r) * b_i,
//   E3 turns the first entry into 1,
//   E4 clears everything below it.
inline ElementaryFactorization elementary_reduce(const Ring& ring, const ModuleVec& v,
                                                 const StabilizationData& stab) {
    const std::size_t r = v.size();
    const std::size_t n = ring.arity();
    if (r < 2) throw DimensionMismatch("elementary reduction needs a column of length at least 2");
    if (stab.a.size() != r - 1 || stab.shortened.column.size() != r - 1 ||
        stab.shortened.row.size() != r - 1)
        throw DimensionMismatch("stabilization data does not match the column");

    const ModuleVec& vp = stab.shortened.column;
    const ModuleVec& b = stab.shortened.row;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        Poly expect = poly_add(v[i], ring.mul(stab.a[i], v[r - 1]), ring.order());
        if (!(expect == vp[i]))
            throw InvalidStabilization("shortened column does not match the coefficients");
    }
    Poly pair = poly_zero();
    for (std::size_t i = 0; i + 1 < r; ++i)
        pair = poly_add(pair, ring.mul(b[i], vp[i]), ring.order());
    if (!poly_is_one(pair))
        throw InvalidStabilization("witness row does not pair to 1 with the shortened column");

    ElementaryFactorization fact;
    Matrix e1 = mat_identity(r, n);
    for (std::size_t i = 0; i + 1 < r; ++i) e1.at(i, r - 1) = stab.a[i];

    // v'_1 - 1 - v_r, multiplied on the left of each witness entry
    Poly lead = poly_sub(poly_sub(vp[0], poly_one(n), ring.order()), v[r - 1], ring.order());
    Matrix e2 = mat_identity(r, n);
    for (std::size_t i = 0; i + 1 < r; ++i) e2.at(r - 1, i) = ring.mul(lead, b[i]);

    Matrix e3 = mat_identity(r, n);
    e3.at(0, r - 1) = poly_const(-1, n);

    Matrix e4 = mat_identity(r, n);
    for (std::size_t i = 1; i + 1 < r; ++i) e4.at(i, 0) = poly_neg(vp[i]);
    e4.at(r - 1, 0) = poly_neg(poly_sub(vp[0], poly_one(n), ring.order()));

    fact.factors = {e1, e2, e3, e4};
    fact.u = mat_mul(ring, e4, mat_mul(ring, e3, mat_mul(ring, e2, e1)));

    ModuleVec image = matrix_apply_right(ring, fact.u, v);
    if (!(image == vec_unit(0, r, n)))
        throw Error("internal: elementary reduction did not reach e_1");
    return fact;
}

struct BasisCertificate {
    Matrix u;                     // r x r with u * G1^T = [I_s; 0]
    bool check = false;           // final product re-verified
    std::vector<ModuleVec> basis; // last r-s rows of u, representatives in A^r
};

// Full basis computation for M = A^r / im(F1), presented by a split
// injective F1 (r x s).  g1t is the right inverse of F1^T; when absent it is
// computed, and its absence as a mathematical fact means M is not stably
// free.  stable_rank_bound is the caller's declared bound with r - s >= it.
inline BasisCertificate compute_free_basis(
    const Ring& ring, const Matrix& f1, std::optional<Matrix> g1t,
    std::size_t stable_rank_bound, std::uint32_t degree_bound,
    const std::vector<std::vector<Poly>>& hints = {},
    std::optional<ModuleOrder> order = std::nullopt) {
    const std::size_t r = f1.rows, s = f1.cols;
    const std::size_t n = ring.arity();
    if (r < s) throw DimensionMismatch("relation matrix has more columns than rows");
    if (r - s < stable_rank_bound)
        throw DimensionMismatch("module rank is below the declared stable rank bound");

    if (!g1t) {
        auto ri = right_inverse(
            ring, mat_transpose(f1),
            order ? std::optional<ModuleOrder>(order->with_rank(s)) : std::nullopt);
        if (!ri) throw NotStablyFree("F1^T has no right inverse; module is not stably free");
        g1t = std::move(ri->inverse);
    }
    if (g1t->rows != r || g1t->cols != s)
        throw DimensionMismatch("right inverse data has wrong shape");
    if (!mat_is_identity(mat_mul(ring, mat_transpose(f1), *g1t), n))
        throw NotStablyFree("supplied right inverse failed re-verification");

    Matrix v = mat_identity(r, n);
    for (std::size_t i = 0; i < s; ++i) {
        Matrix w = mat_mul(ring, v, *g1t);
        ModuleVec tail(r - i);
        for (std::size_t k = i; k < r; ++k) tail[k - i] = w.at(k, i);

        std::vector<std::vector<Poly>> step_hints;
        if (i < hints.size()) step_hints.push_back(hints[i]);
        auto stab = stabilize(ring, tail, step_hints, degree_bound, order);
        if (!stab) throw StabilizationFailed(static_cast<int>(i + 1));
        ElementaryFactorization fact = elementary_reduce(ring, tail, *stab);

        Matrix ui = mat_identity(r, n);
        for (std::size_t a = 0; a < r - i; ++a)
            for (std::size_t c = 0; c < r - i; ++c) ui.at(i + a, i + c) = fact.u.at(a, c);
        v = mat_mul(ring, ui, v);
    }

    // corrector: clear the strictly upper entries of the top s x s block of
    // v * G1^T, left to right, using the unit diagonal
    Matrix w = mat_mul(ring, v, *g1t);
    Matrix p = mat_identity(r, n);
    for (std::size_t j = 1; j < s; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Poly c = w.at(i, j);
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < s; ++k)
                w.at(i, k) = poly_sub(w.at(i, k), ring.mul(c, w.at(j, k)), ring.order());
            for (std::size_t k = 0; k < r; ++k)
                p.at(i, k) = poly_sub(p.at(i, k), ring.mul(c, p.at(j, k)), ring.order());
        }

    BasisCertificate cert;
    cert.u = mat_mul(ring, p, v);
    Matrix product = mat_mul(ring, cert.u, *g1t);
    Matrix expected(r, s);
    for (std::size_t i = 0; i < s; ++i) expected.at(i, i) = poly_one(n);
    if (!(product == expected)) throw Error("internal: U * G1^T is not [I_s; 0]");
    cert.check = true;
    for (std::size_t i = s; i < r; ++i) cert.basis.push_back(mat_row(cert.u, i));
    return cert;
}

}  // namespace spbw
