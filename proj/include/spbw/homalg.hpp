// Projective dimension, stably-freeness, and minimal presentations, all
// driven by one folding step on finite free resolutions.
//
// Folding at position m: when g_m f_m = id (certified by F_m^T G_m^T = I),
// the tail 0 -> A^{s_m} -> A^{s_{m-1}} -> A^{s_{m-2}} shortens to
// 0 -> A^{s_{m-1}} -> A^{s_{m-2}+s_m} with H_{m-1} = [F_{m-1}; G_m] and
// H_{m-2} = [F_{m-2} | 0].  The dimension cascade walks m downward testing
// right inverses of F_m^T; the first failure is pd(M), reaching m=1 with a
// split gives a projective module.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "inverses.hpp"
#include "module.hpp"
#include "ring.hpp"
#include "syzygy.hpp"

namespace spbw {

inline FreeResolution fold_resolution_step(const Ring& ring, const FreeResolution& res,
                                           std::size_t m, const Matrix& gm) {
    if (m < 2 || m > res.length())
        throw DimensionMismatch("fold index must satisfy 2 <= m <= resolution length");
    const Matrix& fm = res.maps[m];
    if (gm.rows != fm.cols || gm.cols != fm.rows)
        throw DimensionMismatch("splitting matrix has wrong shape");
    if (!mat_is_identity(mat_mul(ring, mat_transpose(fm), mat_transpose(gm)), ring.arity()))
        throw InvalidSplitting("F_m^T * G_m^T is not the identity");

    FreeResolution out;
    out.finite = res.finite;
    out.maps.reserve(res.maps.size() - 1);
    for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) out.maps.push_back(res.maps[k]);
    out.maps[m - 1] = mat_vstack(out.maps[m - 1], gm);
    out.maps[m - 2] = mat_hstack(out.maps[m - 2], Matrix(out.maps[m - 2].rows, fm.cols));
    // maps[0] is the generator list, not a differential, so the junction at
    // index 0 is exempt from the zero-composition invariant.
    if (m >= 3 && !mat_is_zero(matrix_compose(ring, out.maps[m - 2], out.maps[m - 1])))
        throw Error("internal: folded resolution lost zero composition");
    return out;
}

struct PdReport {
    std::size_t pd = 0;
    FreeResolution resolution_used;
    std::vector<std::pair<std::size_t, bool>> fold_trace;  // (step, right inverse found)
};

inline PdReport projective_dimension_ffr(const Ring& ring, const FreeResolution& res,
                                         std::optional<ModuleOrder> order = std::nullopt) {
    if (!res.finite) throw NotFinite("resolution is truncated");
    PdReport report;
    report.resolution_used = res;
    FreeResolution cur = res;
    for (std::size_t j = cur.length(); j >= 1; --j) {
        auto ri = right_inverse(
            ring, mat_transpose(cur.maps[j]),
            order ? std::optional<ModuleOrder>(order->with_rank(cur.maps[j].cols))
                  : std::nullopt);
        report.fold_trace.emplace_back(j, ri.has_value());
        if (!ri) {
            report.pd = j;
            return report;
        }
        if (j == 1) break;
        cur = fold_resolution_step(ring, cur, j, mat_transpose(ri->inverse));
    }
    report.pd = 0;
    return report;
}

inline PdReport projective_dimension(const Ring& ring, const std::vector<ModuleVec>& generators,
                                     const ModuleOrder& ord, std::size_t gld_bound) {
    if (gld_bound < 1) throw DimensionMismatch("global dimension bound must be at least 1");
    FreeResolution res = free_resolution(ring, generators, ord, gld_bound);
    return projective_dimension_ffr(ring, res, ord);
}

struct StablyFreeReport {
    bool stably_free = false;
    std::size_t rank = 0;  // r - s when stably free
    std::optional<InverseCertificate> splitting;
};

// Decides stably-freeness of M = A^r / im(F1) from the exact sequence
// 0 -> A^s -> A^r -> M -> 0.  The injectivity certificate must be the
// (empty) syzygy basis of the columns of F1.
inline StablyFreeReport is_stably_free(const Ring& ring, const Matrix& f1,
                                       const SyzygyBasis& injectivity,
                                       std::optional<ModuleOrder> order = std::nullopt) {
    if (injectivity.input_count != f1.cols)
        throw NotExact("injectivity certificate does not match the relation matrix");
    if (!injectivity.rows.empty())
        throw NotExact("relation matrix has nonzero syzygies; presentation is not exact");
    StablyFreeReport report;
    if (f1.cols == 0) {
        report.stably_free = true;
        report.rank = f1.rows;
        InverseCertificate cert;
        cert.side = InverseSide::Right;
        cert.inverse = Matrix(f1.rows, 0);
        cert.verified = true;
        report.splitting = std::move(cert);
        return report;
    }
    auto ri = right_inverse(
        ring, mat_transpose(f1),
        order ? std::optional<ModuleOrder>(order->with_rank(f1.cols)) : std::nullopt);
    if (ri) {
        report.stably_free = true;
        report.rank = f1.rows - f1.cols;
        report.splitting = std::move(ri);
    }
    return report;
}

struct MinimalPresentation {
    Matrix h1;  // injective relation map, columns are relations
    Matrix h0;  // generator map onto M
    SyzygyBasis injectivity;          // empty syzygy basis of the columns of h1
    InverseCertificate splitting;     // right inverse of h1^T
};

// Folds a finite free resolution down to 0 -> A^s -> A^r -> M -> 0 and
// certifies the result.  Every fold needs a split; a missing right inverse
// at step j raises FoldFailed(j), with j = 1 denoting the final splitting
// test of the two-term presentation.
inline MinimalPresentation minimal_presentation(const Ring& ring, const FreeResolution& res,
                                                std::optional<ModuleOrder> order = std::nullopt) {
    if (!res.finite) throw NotFinite("resolution is truncated");
    FreeResolution cur = res;
    for (std::size_t j = cur.length(); j >= 2; --j) {
        auto ri = right_inverse(
            ring, mat_transpose(cur.maps[j]),
            order ? std::optional<ModuleOrder>(order->with_rank(cur.maps[j].cols))
                  : std::nullopt);
        if (!ri) throw FoldFailed(static_cast<int>(j));
        cur = fold_resolution_step(ring, cur, j, mat_transpose(ri->inverse));
    }

    MinimalPresentation out;
    out.h0 = cur.maps[0];
    if (cur.length() == 0) {
        out.h1 = Matrix(cur.maps[0].cols, 0);
        out.injectivity.side = Side::Left;
        out.injectivity.input_count = 0;
        InverseCertificate cert;
        cert.side = InverseSide::Right;
        cert.inverse = Matrix(out.h1.rows, 0);
        cert.verified = true;
        out.splitting = std::move(cert);
        return out;
    }
    out.h1 = cur.maps[1];

    ModuleOrder syzord = order ? order->with_rank(out.h1.rows)
                               : ModuleOrder::standard(ring.order(), out.h1.rows);
    out.injectivity = syzygies(ring, mat_cols(out.h1), syzord);
    if (!out.injectivity.rows.empty())
        throw Error("internal: folded relation map is not injective");

    auto ri = right_inverse(
        ring, mat_transpose(out.h1),
        order ? std::optional<ModuleOrder>(order->with_rank(out.h1.cols)) : std::nullopt);
    if (!ri) throw FoldFailed(1);
    out.splitting = std::move(*ri);
    return out;
}

}  // namespace spbw
