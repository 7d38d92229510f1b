// Involutions: QQ-linear anti-automorphisms with theta^2 = id, given by
// generator images.  theta(x^a) multiplies the images in reversed order.
#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace spbw {

struct Involution {
    std::vector<Poly> images;  // one per generator
    bool verified = false;
};

// theta(f), requiring a verified table.
inline Poly apply_involution(const Ring& ring, const Involution& th, const Poly& f);

namespace detail {

inline Poly involution_monomial(const Ring& ring, const Involution& th, const Monomial& m) {
    Poly acc = poly_one(ring.arity());
    for (std::size_t k = ring.arity(); k-- > 0;) {
        for (std::uint32_t e = 0; e < m[k]; ++e) acc = ring.mul(acc, th.images[k]);
    }
    return acc;
}

inline Poly involution_apply_unchecked(const Ring& ring, const Involution& th, const Poly& f) {
    Poly acc;
    for (const auto& t : f.terms) {
        Poly im = involution_monomial(ring, th, t.mono);
        acc = poly_add(acc, poly_scale(t.coeff, std::move(im)), ring.order());
    }
    return acc;
}

}  // namespace detail

// Checks theta(theta(x_k)) = x_k and anti-compatibility with every rewrite:
// theta(x_j*x_i) must equal theta applied to c_ij*x_i*x_j + p_ij.
inline bool verify_involution(const Ring& ring, Involution& th, std::string* why = nullptr) {
    const std::size_t n = ring.arity();
    if (th.images.size() != n) {
        if (why) *why = "image table size does not match the generator count";
        return false;
    }
    th.verified = false;
    for (std::size_t k = 0; k < n; ++k) {
        Poly twice = detail::involution_apply_unchecked(ring, th, th.images[k]);
        if (twice != poly_gen(k, n)) {
            if (why) *why = "theta is not an involution on generator " + ring.name(k);
            return false;
        }
    }
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Relation& r = ring.relation(i, j);
            // theta(x_j*x_i) = theta(x_i)*theta(x_j)
            Poly lhs = ring.mul(th.images[i], th.images[j]);
            Poly rhs = poly_scale(r.c, ring.mul(th.images[j], th.images[i]));
            rhs = poly_add(rhs, detail::involution_apply_unchecked(ring, th, r.p), ring.order());
            if (lhs != rhs) {
                if (why)
                    *why = "theta does not respect the rewrite of (" + ring.name(i) + "," +
                           ring.name(j) + ")";
                return false;
            }
        }
    }
    th.verified = true;
    return true;
}

inline Poly apply_involution(const Ring& ring, const Involution& th, const Poly& f) {
    if (!th.verified)
        throw UnverifiedInvolution("involution must be verified before use");
    return detail::involution_apply_unchecked(ring, th, f);
}

}  // namespace spbw
