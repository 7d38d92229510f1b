// One- and two-sided matrix inverses through module bases.
//
// Left inverse of F (r x s): complete the rows of F to a basis, express each
// canonical vector through the inputs; stacking those cofactor rows gives L
// with L*F = I_s.  Right inverses run either the same construction through a
// verified involution or a right-side basis of the columns.  Every returned
// certificate is re-verified by a plain product before it leaves.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "involution.hpp"
#include "module.hpp"
#include "ring.hpp"
#include "syzygy.hpp"

namespace spbw {

enum class InverseSide { Left, Right, TwoSided };

struct InverseCertificate {
    InverseSide side = InverseSide::Left;
    Matrix inverse;
    bool verified = false;
};

namespace detail {

inline ModuleOrder default_order(const Ring& ring, std::size_t rank) {
    return ModuleOrder::standard(ring.order(), rank);
}

}  // namespace detail

// L with L*F = I_s, if the rows of F generate A^s.
inline std::optional<InverseCertificate> left_inverse(
    const Ring& ring, const Matrix& f,
    std::optional<ModuleOrder> order = std::nullopt) {
    const std::size_t r = f.rows, s = f.cols;
    if (r < s) return std::nullopt;
    ModuleOrder ord = order ? *order : detail::default_order(ring, s);
    GroebnerBasis gb = buchberger_left(ring, mat_rows(f), ord);
    Matrix l(s, r);
    for (std::size_t i = 0; i < s; ++i) {
        auto row = member_via_inputs(ring, gb, vec_unit(i, s, ring.arity()));
        if (!row) return std::nullopt;
        for (std::size_t j = 0; j < r; ++j) l.at(i, j) = (*row)[j];
    }
    InverseCertificate cert;
    cert.side = InverseSide::Left;
    cert.inverse = std::move(l);
    cert.verified = mat_is_identity(mat_mul(ring, cert.inverse, f), ring.arity());
    if (!cert.verified) throw Error("internal: left inverse failed re-verification");
    return cert;
}

// Two-sided inverse of a square matrix.  A left inverse plus vanishing row
// syzygies forces invertibility; with skip_syzygy_check the syzygy pass is
// omitted and the two-sided property is still certified by both products.
inline std::optional<InverseCertificate> square_inverse(
    const Ring& ring, const Matrix& f, bool skip_syzygy_check = false,
    std::optional<ModuleOrder> order = std::nullopt) {
    if (f.rows != f.cols) throw DimensionMismatch("square matrix expected");
    auto li = left_inverse(ring, f, order);
    if (!li) return std::nullopt;
    if (!skip_syzygy_check) {
        ModuleOrder ord = order ? *order : detail::default_order(ring, f.cols);
        SyzygyBasis syz = syzygies(ring, mat_rows(f), ord);
        if (!syz.rows.empty()) return std::nullopt;
    }
    if (!mat_is_identity(mat_mul(ring, f, li->inverse), ring.arity())) {
        if (skip_syzygy_check) return std::nullopt;
        throw Error("internal: two-sided inverse failed re-verification");
    }
    li->side = InverseSide::TwoSided;
    return li;
}

// H with F*H = I_r, via a left-side computation on theta(F)'s columns:
// J collects the transition rows, K the cofactors of the canonical vectors,
// and H = theta(J) * theta(K).
inline std::optional<InverseCertificate> right_inverse_involution(
    const Ring& ring, const Matrix& f, const Involution& theta,
    std::optional<ModuleOrder> order = std::nullopt) {
    if (!theta.verified) throw UnverifiedInvolution("involution must be verified");
    const std::size_t r = f.rows, s = f.cols;
    if (s < r) return std::nullopt;
    Matrix tf(r, s);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) tf.at(i, j) = apply_involution(ring, theta, f.at(i, j));
    ModuleOrder ord = order ? *order : detail::default_order(ring, r);
    GroebnerBasis gb = buchberger_left(ring, mat_cols(tf), ord);
    const std::size_t t = gb.gens.size();
    // J: s x t with column k the cofactors of basis element k
    Matrix jm(s, t);
    for (std::size_t k = 0; k < t; ++k)
        for (std::size_t c = 0; c < s; ++c) jm.at(c, k) = gb.cof[k][c];
    // K: t x r with column j the basis cofactors of e_j
    Matrix km(t, r);
    for (std::size_t j = 0; j < r; ++j) {
        auto q = member(ring, gb, vec_unit(j, r, ring.arity()));
        if (!q) return std::nullopt;
        for (std::size_t k = 0; k < t; ++k) km.at(k, j) = (*q)[k];
    }
    auto theta_mat = [&](const Matrix& m) {
        Matrix out(m.rows, m.cols);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            out.e[i] = apply_involution(ring, theta, m.e[i]);
        return out;
    };
    InverseCertificate cert;
    cert.side = InverseSide::Right;
    cert.inverse = mat_mul(ring, theta_mat(jm), theta_mat(km));
    cert.verified = mat_is_identity(mat_mul(ring, f, cert.inverse), ring.arity());
    if (!cert.verified) throw Error("internal: right inverse failed re-verification");
    return cert;
}

// H with F*H = I_r, via a right-side basis of the columns of F.
inline std::optional<InverseCertificate> right_inverse(
    const Ring& ring, const Matrix& f,
    std::optional<ModuleOrder> order = std::nullopt) {
    const std::size_t r = f.rows, s = f.cols;
    if (s < r) return std::nullopt;
    ModuleOrder ord = order ? *order : detail::default_order(ring, r);
    GroebnerBasis gb = buchberger(ring, mat_cols(f), ord, Side::Right);
    Matrix h(s, r);
    for (std::size_t j = 0; j < r; ++j) {
        auto col = member_via_inputs(ring, gb, vec_unit(j, r, ring.arity()));
        if (!col) return std::nullopt;
        for (std::size_t c = 0; c < s; ++c) h.at(c, j) = (*col)[c];
    }
    InverseCertificate cert;
    cert.side = InverseSide::Right;
    cert.inverse = std::move(h);
    cert.verified = mat_is_identity(mat_mul(ring, f, cert.inverse), ring.arity());
    if (!cert.verified) throw Error("internal: right inverse failed re-verification");
    return cert;
}

}  // namespace spbw
