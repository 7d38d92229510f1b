// Syzygies by basis lifting, presentations, and free resolutions.
//
// For inputs f_1..f_r with basis g (transition T) the syzygy module of f is
// generated by the rows of I - Q*T (where Q expresses each f through g) plus
// the lifted S-pair relations of g mapped back through T.  The returned rows
// are the reduced basis of that module, so output is canonical.
#pragma once

#include <utility>
#include <vector>

#include "groebner.hpp"
#include "module.hpp"
#include "ring.hpp"

namespace spbw {

struct SyzygyBasis {
    Side side = Side::Left;
    std::size_t input_count = 0;
    std::vector<ModuleVec> rows;  // each row z satisfies sum_i z_i * f_i = 0 (left)
};

namespace detail {

inline SyzygyBasis syzygies_left(const Ring& ring, const std::vector<ModuleVec>& input,
                                 const ModuleOrder& ord) {
    const std::size_t r = input.size();
    GroebnerBasis gb = buchberger_left(ring, input, ord);
    const std::size_t t = gb.gens.size();

    std::vector<ModuleVec> raw;

    // rows of I - Q*T
    for (std::size_t j = 0; j < r; ++j) {
        ModuleVec delta = vec_unit(j, r, ring.arity());
        if (!vec_is_zero(input[j])) {
            DivisionResult d = divide(ring, input[j], gb.gens, ord);
            if (!vec_is_zero(d.remainder))
                throw Error("internal: generator failed to reduce over its own basis");
            for (std::size_t k = 0; k < t; ++k) {
                if (d.quotients[k].is_zero()) continue;
                for (std::size_t c = 0; c < r; ++c)
                    delta[c] = poly_sub(delta[c], ring.mul(d.quotients[k], gb.cof[k][c]),
                                        ring.order());
            }
        }
        if (!vec_is_zero(delta)) raw.push_back(std::move(delta));
    }

    // lifted S-pair relations of the basis
    std::vector<VecLead> leads;
    leads.reserve(t);
    for (const auto& g : gb.gens) leads.push_back(*vec_lead(g, ord));
    for (std::size_t a = 0; a < t; ++a) {
        for (std::size_t b = a + 1; b < t; ++b) {
            if (leads[a].pos != leads[b].pos) continue;
            Monomial overlap = exp_lcm(leads[a].term.mono, leads[b].term.mono);
            Monomial ua = exp_sub(overlap, leads[a].term.mono);
            Monomial ub = exp_sub(overlap, leads[b].term.mono);
            ModuleVec sa = vec_mul_left(ring, poly_term(1, ua), gb.gens[a]);
            ModuleVec sb = vec_mul_left(ring, poly_term(1, ub), gb.gens[b]);
            Rational la = vec_lead(sa, ord)->term.coeff;
            Rational lb = vec_lead(sb, ord)->term.coeff;
            ModuleVec s = vec_sub(vec_scale(Rational(1) / la, std::move(sa)),
                                  vec_scale(Rational(1) / lb, std::move(sb)), ring.order());
            // sigma over the basis: (1/la) ua e_a - (1/lb) ub e_b - quotients
            std::vector<Poly> sigma(t);
            sigma[a] = poly_term(Rational(1) / la, ua);
            sigma[b] = poly_sub(sigma[b], poly_term(Rational(1) / lb, ub), ring.order());
            if (!vec_is_zero(s)) {
                DivisionResult d = divide(ring, s, gb.gens, ord);
                if (!vec_is_zero(d.remainder))
                    throw Error("internal: S-pair of a basis did not reduce to zero");
                for (std::size_t k = 0; k < t; ++k)
                    sigma[k] = poly_sub(sigma[k], d.quotients[k], ring.order());
            }
            // map back through the transition: z_j = sum_k sigma_k * T_{kj}
            ModuleVec z(r);
            for (std::size_t k = 0; k < t; ++k) {
                if (sigma[k].is_zero()) continue;
                for (std::size_t c = 0; c < r; ++c)
                    z[c] = poly_add(z[c], ring.mul(sigma[k], gb.cof[k][c]), ring.order());
            }
            if (!vec_is_zero(z)) raw.push_back(std::move(z));
        }
    }

    SyzygyBasis out;
    out.side = Side::Left;
    out.input_count = r;
    if (!raw.empty()) {
        GroebnerBasis reduced =
            buchberger_left(ring, raw, ModuleOrder::standard(ord.base, r, ord.scheme));
        out.rows = std::move(reduced.gens);
    }
    return out;
}

}  // namespace detail

inline SyzygyBasis syzygies(const Ring& ring, const std::vector<ModuleVec>& input,
                            const ModuleOrder& ord, Side side = Side::Left) {
    if (side == Side::Left) return detail::syzygies_left(ring, input, ord);
    Ring op = ring.opposite();
    ModuleOrder oord = ord;
    oord.base = op.order();
    std::vector<ModuleVec> oin;
    oin.reserve(input.size());
    for (const auto& v : input) oin.push_back(detail::op_vec(ring, v));
    SyzygyBasis os = detail::syzygies_left(op, oin, oord);
    SyzygyBasis out;
    out.side = Side::Right;
    out.input_count = os.input_count;
    for (const auto& z : os.rows) out.rows.push_back(detail::op_vec(op, z));
    return out;
}

// Presentation of the module generated by the given columns:  F0 holds the
// generators, F1's columns generate their syzygies, and f0 o f1 = 0.
struct Presentation {
    Matrix F0;
    Matrix F1;
};

inline Presentation presentation(const Ring& ring, const std::vector<ModuleVec>& generators,
                                 const ModuleOrder& ord) {
    if (generators.empty()) throw DimensionMismatch("presentation needs generators");
    const std::size_t ambient = generators.front().size();
    Presentation p;
    p.F0 = mat_from_cols(generators, ambient);
    SyzygyBasis s = syzygies(ring, generators, ord);
    p.F1 = mat_from_cols(s.rows, generators.size());
    return p;
}

struct FreeResolution {
    std::vector<Matrix> maps;  // maps[0] = F0 (generators by columns), then F1, F2, ...
    bool finite = false;

    std::size_t length() const { return maps.size() - 1; }
};

struct BoundExceeded : Error {
    BoundExceeded(std::string what, FreeResolution partial_resolution)
        : Error(std::move(what)), partial(std::move(partial_resolution)) {}
    FreeResolution partial;
};

// Iterated syzygies until they vanish; throws BoundExceeded with the
// truncated resolution when max_length steps were not enough.
inline FreeResolution free_resolution(const Ring& ring,
                                      const std::vector<ModuleVec>& generators,
                                      const ModuleOrder& ord, std::size_t max_length) {
    if (generators.empty()) throw DimensionMismatch("free resolution needs generators");
    FreeResolution res;
    res.maps.push_back(mat_from_cols(generators, generators.front().size()));
    std::vector<ModuleVec> cur = generators;
    for (std::size_t step = 1; step <= max_length; ++step) {
        // the order's rank must track the ambient the generators live in
        ModuleOrder cur_ord =
            (step == 1) ? ord : ord.with_rank(cur.front().size());
        SyzygyBasis s = syzygies(ring, cur, cur_ord);
        if (s.rows.empty()) {
            res.finite = true;
            return res;
        }
        res.maps.push_back(mat_from_cols(s.rows, cur.size()));
        cur = s.rows;
    }
    {
        SyzygyBasis s = syzygies(ring, cur, ord.with_rank(cur.front().size()));
        if (s.rows.empty()) {
            res.finite = true;
            return res;
        }
    }
    throw BoundExceeded("no finite free resolution within " + std::to_string(max_length) +
                            " steps; raise the bound",
                        std::move(res));
}

}  // namespace spbw
