// Buchberger completion for submodules of A^s with transition tracking.
//
// Everything is computed for left modules; the right-side entry points map
// through the opposite ring (exponent reversal), run the left engine, and
// map back, which turns right combinations into left ones and conversely.
//
// Every basis element carries its cofactor row: g_k = sum_j cof[k][j] * f_j
// (left) or g_k = sum_j f_j * cof[k][j] (right).  Cofactors are updated
// through every reduction, never recomputed after the fact.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "module.hpp"
#include "ring.hpp"

namespace spbw {

enum class Side { Left, Right };

struct DivisionResult {
    std::vector<Poly> quotients;  // one per divisor
    ModuleVec remainder;
};

namespace detail {

// One reduction step candidate: first divisor (in list order) whose leading
// term divides the given term at the same position.
inline std::optional<std::size_t> find_reducer(const std::vector<ModuleVec>& divisors,
                                               const std::vector<VecLead>& leads,
                                               const VecLead& t) {
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (leads[i].pos == t.pos && exp_divides(leads[i].term.mono, t.term.mono))
            return i;
    }
    return std::nullopt;
}

inline std::vector<VecLead> collect_leads(const std::vector<ModuleVec>& divisors,
                                          const ModuleOrder& ord) {
    std::vector<VecLead> leads;
    leads.reserve(divisors.size());
    for (const auto& d : divisors) {
        auto l = vec_lead(d, ord);
        if (!l) throw DimensionMismatch("zero divisor in division");
        leads.push_back(*l);
    }
    return leads;
}

}  // namespace detail

// Division with remainder: v = sum_i quotients[i] * divisors[i] + remainder,
// and no term of the remainder is divisible by any divisor's leading term.
// The leading reducible term is always rewritten first; irreducible leading
// terms migrate to the remainder.
inline DivisionResult divide(const Ring& ring, const ModuleVec& v,
                             const std::vector<ModuleVec>& divisors,
                             const ModuleOrder& ord) {
    const std::size_t rank = v.size();
    for (const auto& d : divisors)
        if (d.size() != rank) throw DimensionMismatch("divisor rank mismatch");
    DivisionResult res;
    res.quotients.assign(divisors.size(), Poly{});
    res.remainder = vec_zero(rank);
    std::vector<VecLead> leads = detail::collect_leads(divisors, ord);

    ModuleVec work = v;
    while (true) {
        auto t = vec_lead(work, ord);
        if (!t) break;
        auto red = detail::find_reducer(divisors, leads, *t);
        if (!red) {
            // move the leading term to the remainder
            res.remainder[t->pos] =
                poly_add(res.remainder[t->pos], poly_term(t->term.coeff, t->term.mono),
                         ring.order());
            work[t->pos] = poly_sub(work[t->pos], poly_term(t->term.coeff, t->term.mono),
                                    ring.order());
            continue;
        }
        const std::size_t i = *red;
        Monomial u = exp_sub(t->term.mono, leads[i].term.mono);
        Poly mu = poly_term(1, u);
        ModuleVec ud = vec_mul_left(ring, mu, divisors[i]);
        auto udl = vec_lead(ud, ord);
        // leading term of u*d sits at (u + lm(d), pos) with a unit coefficient
        Rational lambda = udl->term.coeff;
        Rational q = t->term.coeff / lambda;
        work = vec_sub(work, vec_scale(q, std::move(ud)), ring.order());
        res.quotients[i] = poly_add(res.quotients[i], poly_term(q, u), ring.order());
    }
    return res;
}

struct GroebnerBasis {
    Side side = Side::Left;
    std::size_t rank = 0;
    std::size_t input_count = 0;
    ModuleOrder order;
    std::vector<ModuleVec> gens;            // reduced, monic, sorted by leading term
    std::vector<std::vector<Poly>> cof;     // gens.size() x input_count
};

namespace detail {

struct GBItem {
    ModuleVec g;
    std::vector<Poly> cof;
    VecLead lead;
};

struct PairEntry {
    Monomial overlap;
    std::size_t pos;
    std::size_t a, b;
};

// S-pair queue ordered by ascending overlap term, ties by indices.
struct PairCompare {
    const ModuleOrder* ord;
    bool operator()(const PairEntry& x, const PairEntry& y) const {
        int c = ord->compare(x.overlap, x.pos, y.overlap, y.pos);
        if (c != 0) return c < 0;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline void cof_sub_scaled(const Ring& ring, std::vector<Poly>& target, const Poly& q,
                           const std::vector<Poly>& src) {
    for (std::size_t j = 0; j < target.size(); ++j)
        target[j] = poly_sub(target[j], ring.mul(q, src[j]), ring.order());
}

// Divide v by the current items, tracking cofactors of the remainder
// relative to the original inputs.
inline std::pair<ModuleVec, std::vector<Poly>> reduce_tracked(
    const Ring& ring, const ModuleOrder& ord, const std::vector<GBItem>& items,
    ModuleVec v, std::vector<Poly> vc, const std::vector<std::size_t>& skip = {}) {
    std::vector<const GBItem*> use;
    use.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (std::find(skip.begin(), skip.end(), i) == skip.end()) use.push_back(&items[i]);
    }
    ModuleVec rem = vec_zero(v.size());
    while (true) {
        auto t = vec_lead(v, ord);
        if (!t) break;
        const GBItem* red = nullptr;
        for (const GBItem* it : use) {
            if (it->lead.pos == t->pos && exp_divides(it->lead.term.mono, t->term.mono)) {
                red = it;
                break;
            }
        }
        if (!red) {
            rem[t->pos] = poly_add(rem[t->pos], poly_term(t->term.coeff, t->term.mono),
                                   ring.order());
            v[t->pos] = poly_sub(v[t->pos], poly_term(t->term.coeff, t->term.mono),
                                 ring.order());
            continue;
        }
        Monomial u = exp_sub(t->term.mono, red->lead.term.mono);
        ModuleVec ud = vec_mul_left(ring, poly_term(1, u), red->g);
        auto udl = vec_lead(ud, ord);
        Rational q = t->term.coeff / udl->term.coeff;
        v = vec_sub(v, vec_scale(q, std::move(ud)), ring.order());
        cof_sub_scaled(ring, vc, poly_term(q, u), red->cof);
    }
    return {std::move(rem), std::move(vc)};
}

inline void make_monic(std::vector<Poly>& cof, ModuleVec& g, const ModuleOrder& ord) {
    auto l = vec_lead(g, ord);
    Rational inv = Rational(1) / l->term.coeff;
    g = vec_scale(inv, std::move(g));
    for (auto& c : cof) c = poly_scale(inv, std::move(c));
}

}  // namespace detail

// Left Buchberger with transition tracking; produces the reduced monic basis.
inline GroebnerBasis buchberger_left(const Ring& ring, const std::vector<ModuleVec>& input,
                                     const ModuleOrder& ord) {
    using namespace detail;
    ord.validate();
    const std::size_t r = input.size();
    std::size_t rank = ord.rank();
    for (const auto& f : input) {
        if (f.size() != rank) throw DimensionMismatch("generator rank mismatch");
    }

    std::vector<GBItem> items;
    auto unit_cof = [&](std::size_t j) {
        std::vector<Poly> c(r);
        c[j] = poly_one(ring.arity());
        return c;
    };
    for (std::size_t j = 0; j < r; ++j) {
        if (vec_is_zero(input[j])) continue;
        GBItem it{input[j], unit_cof(j), *vec_lead(input[j], ord)};
        make_monic(it.cof, it.g, ord);
        it.lead = *vec_lead(it.g, ord);
        items.push_back(std::move(it));
    }

    std::set<PairEntry, PairCompare> queue{PairCompare{&ord}};
    auto enqueue = [&](std::size_t a, std::size_t b) {
        if (items[a].lead.pos != items[b].lead.pos) return;
        PairEntry pe;
        pe.overlap = exp_lcm(items[a].lead.term.mono, items[b].lead.term.mono);
        pe.pos = items[a].lead.pos;
        pe.a = a;
        pe.b = b;
        queue.insert(std::move(pe));
    };
    for (std::size_t a = 0; a < items.size(); ++a)
        for (std::size_t b = a + 1; b < items.size(); ++b) enqueue(a, b);

    while (!queue.empty()) {
        PairEntry pe = *queue.begin();
        queue.erase(queue.begin());
        const GBItem& ga = items[pe.a];
        const GBItem& gb = items[pe.b];
        Monomial ua = exp_sub(pe.overlap, ga.lead.term.mono);
        Monomial ub = exp_sub(pe.overlap, gb.lead.term.mono);
        ModuleVec sa = vec_mul_left(ring, poly_term(1, ua), ga.g);
        ModuleVec sb = vec_mul_left(ring, poly_term(1, ub), gb.g);
        Rational la = vec_lead(sa, ord)->term.coeff;
        Rational lb = vec_lead(sb, ord)->term.coeff;
        ModuleVec s = vec_sub(vec_scale(Rational(1) / la, std::move(sa)),
                              vec_scale(Rational(1) / lb, std::move(sb)), ring.order());
        std::vector<Poly> sc(r);
        cof_sub_scaled(ring, sc, poly_term(Rational(-1) / la, ua), ga.cof);
        cof_sub_scaled(ring, sc, poly_term(Rational(1) / lb, ub), gb.cof);
        auto [rem, rc] = reduce_tracked(ring, ord, items, std::move(s), std::move(sc));
        if (vec_is_zero(rem)) continue;
        GBItem ni{std::move(rem), std::move(rc), {}};
        make_monic(ni.cof, ni.g, ord);
        ni.lead = *vec_lead(ni.g, ord);
        items.push_back(std::move(ni));
        for (std::size_t a = 0; a + 1 < items.size(); ++a) enqueue(a, items.size() - 1);
    }

    // Inter-reduce to the unique reduced basis, cofactors riding along.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < items.size(); ++i) {
            auto [rem, rc] = reduce_tracked(ring, ord, items, items[i].g, items[i].cof, {i});
            if (vec_is_zero(rem)) {
                items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                --i;
                continue;
            }
            GBItem ni{std::move(rem), std::move(rc), {}};
            make_monic(ni.cof, ni.g, ord);
            ni.lead = *vec_lead(ni.g, ord);
            if (ni.g != items[i].g || ni.cof != items[i].cof) changed = true;
            items[i] = std::move(ni);
        }
    }

    std::sort(items.begin(), items.end(), [&](const GBItem& x, const GBItem& y) {
        return ord.compare(x.lead.term.mono, x.lead.pos, y.lead.term.mono, y.lead.pos) < 0;
    });

    GroebnerBasis out;
    out.side = Side::Left;
    out.rank = rank;
    out.input_count = r;
    out.order = ord;
    for (auto& it : items) {
        out.gens.push_back(std::move(it.g));
        out.cof.push_back(std::move(it.cof));
    }
    return out;
}

namespace detail {

inline ModuleVec op_vec(const Ring& ring, const ModuleVec& v) {
    ModuleVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = ring.op_map(v[i]);
    return r;
}

}  // namespace detail

inline GroebnerBasis buchberger(const Ring& ring, const std::vector<ModuleVec>& input,
                                const ModuleOrder& ord, Side side = Side::Left) {
    if (side == Side::Left) return buchberger_left(ring, input, ord);
    Ring op = ring.opposite();
    ModuleOrder oord = ord;
    oord.base = op.order();
    std::vector<ModuleVec> oin;
    oin.reserve(input.size());
    for (const auto& v : input) oin.push_back(detail::op_vec(ring, v));
    GroebnerBasis og = buchberger_left(op, oin, oord);
    GroebnerBasis out;
    out.side = Side::Right;
    out.rank = og.rank;
    out.input_count = og.input_count;
    out.order = ord;
    for (std::size_t k = 0; k < og.gens.size(); ++k) {
        out.gens.push_back(detail::op_vec(op, og.gens[k]));
        std::vector<Poly> c;
        c.reserve(og.cof[k].size());
        for (const auto& p : og.cof[k]) c.push_back(op.op_map(p));
        out.cof.push_back(std::move(c));
    }
    return out;
}

inline DivisionResult divide(const Ring& ring, const ModuleVec& v,
                             const std::vector<ModuleVec>& divisors, const ModuleOrder& ord,
                             Side side) {
    if (side == Side::Left) return divide(ring, v, divisors, ord);
    Ring op = ring.opposite();
    ModuleOrder oord = ord;
    oord.base = op.order();
    std::vector<ModuleVec> od;
    od.reserve(divisors.size());
    for (const auto& d : divisors) od.push_back(detail::op_vec(ring, d));
    DivisionResult r = divide(op, detail::op_vec(ring, v), od, oord);
    DivisionResult out;
    out.remainder = detail::op_vec(op, r.remainder);
    out.quotients.reserve(r.quotients.size());
    for (const auto& q : r.quotients) out.quotients.push_back(op.op_map(q));
    return out;
}

// Cofactors of v over the basis, or nullopt when v is outside the module.
inline std::optional<std::vector<Poly>> member(const Ring& ring, const GroebnerBasis& gb,
                                               const ModuleVec& v) {
    DivisionResult d = divide(ring, v, gb.gens, gb.order, gb.side);
    if (!vec_is_zero(d.remainder)) return std::nullopt;
    return d.quotients;
}

// Does the basis generate all of A^rank?
inline bool is_full_module(const Ring& ring, const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.rank; ++i) {
        if (!member(ring, gb, vec_unit(i, gb.rank, ring.arity()))) return false;
    }
    return true;
}

// Express v through the original inputs:  v = sum_j out[j] * f_j  (left) or
// v = sum_j f_j * out[j]  (right).
inline std::optional<std::vector<Poly>> member_via_inputs(const Ring& ring,
                                                          const GroebnerBasis& gb,
                                                          const ModuleVec& v) {
    auto q = member(ring, gb, v);
    if (!q) return std::nullopt;
    std::vector<Poly> out(gb.input_count);
    for (std::size_t k = 0; k < gb.gens.size(); ++k) {
        if ((*q)[k].is_zero()) continue;
        for (std::size_t j = 0; j < gb.input_count; ++j) {
            if (gb.cof[k][j].is_zero()) continue;
            Poly prod = (gb.side == Side::Left) ? ring.mul((*q)[k], gb.cof[k][j])
                                                : ring.mul(gb.cof[k][j], (*q)[k]);
            out[j] = poly_add(out[j], prod, ring.order());
        }
    }
    return out;
}

}  // namespace spbw
