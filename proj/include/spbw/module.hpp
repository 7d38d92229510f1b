// Free-module terms, vectors and polynomial matrices.
//
// Left-module convention: a map f: A^s -> A^r has an r x s matrix F and acts
// by f(a) = (a^T F^T)^T, i.e. component j of f(a) is sum_i a_i * F_{ji} with
// coefficients multiplying from the left.  Composition therefore reads
// m(g o f) = (F^T G^T)^T.  Right modules use plain products F*a and G*F.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "order.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace spbw {

enum class Scheme { TOP, TOPREV };

// Position ties are broken through position_precedence (largest first):
// TOP hands the tie to the precedence-larger position, TOPREV to the
// precedence-smaller one.  Monomials are always compared first.
struct ModuleOrder {
    MonomialOrder base;
    Scheme scheme = Scheme::TOPREV;
    std::vector<std::size_t> position_precedence;  // 0-based positions, largest first

    static ModuleOrder standard(const MonomialOrder& base, std::size_t rank,
                                Scheme scheme = Scheme::TOPREV) {
        ModuleOrder o;
        o.base = base;
        o.scheme = scheme;
        o.position_precedence.resize(rank);
        for (std::size_t i = 0; i < rank; ++i) o.position_precedence[i] = i;
        return o;
    }

    std::size_t rank() const { return position_precedence.size(); }

    ModuleOrder with_rank(std::size_t rank) const {
        ModuleOrder o = *this;
        o.position_precedence.resize(rank);
        for (std::size_t i = 0; i < rank; ++i) o.position_precedence[i] = i;
        return o;
    }

    void validate() const {
        std::vector<bool> seen(position_precedence.size(), false);
        for (std::size_t p : position_precedence) {
            if (p >= position_precedence.size() || seen[p])
                throw ValidationFailure("position precedence is not a permutation");
            seen[p] = true;
        }
    }

    std::size_t rank_of(std::size_t pos) const {
        for (std::size_t i = 0; i < position_precedence.size(); ++i)
            if (position_precedence[i] == pos) return i;
        throw DimensionMismatch("position outside the module rank");
    }

    int compare(const Monomial& m1, std::size_t p1, const Monomial& m2,
                std::size_t p2) const {
        int c = base.compare(m1, m2);
        if (c != 0) return c;
        if (p1 == p2) return 0;
        std::size_t r1 = rank_of(p1), r2 = rank_of(p2);
        bool first_wins = (scheme == Scheme::TOP) ? (r1 < r2) : (r1 > r2);
        return first_wins ? 1 : -1;
    }
};

inline int compare_module_terms(const ModuleOrder& o, const Monomial& m1, std::size_t p1,
                                const Monomial& m2, std::size_t p2) {
    return o.compare(m1, p1, m2, p2);
}

// ---- module vectors -------------------------------------------------------

using ModuleVec = std::vector<Poly>;

inline ModuleVec vec_zero(std::size_t rank) { return ModuleVec(rank); }

inline ModuleVec vec_unit(std::size_t pos, std::size_t rank, std::size_t arity) {
    ModuleVec v(rank);
    v[pos] = poly_one(arity);
    return v;
}

inline bool vec_is_zero(const ModuleVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

inline ModuleVec vec_add(const ModuleVec& a, const ModuleVec& b, const MonomialOrder& ord) {
    if (a.size() != b.size()) throw DimensionMismatch("vector ranks differ");
    ModuleVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_add(a[i], b[i], ord);
    return r;
}

inline ModuleVec vec_sub(const ModuleVec& a, const ModuleVec& b, const MonomialOrder& ord) {
    if (a.size() != b.size()) throw DimensionMismatch("vector ranks differ");
    ModuleVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_sub(a[i], b[i], ord);
    return r;
}

inline ModuleVec vec_scale(const Rational& c, ModuleVec v) {
    for (auto& p : v) p = poly_scale(c, std::move(p));
    return v;
}

// q * v componentwise (left coefficients).
inline ModuleVec vec_mul_left(const Ring& ring, const Poly& q, const ModuleVec& v) {
    ModuleVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = ring.mul(q, v[i]);
    return r;
}

// v * q componentwise (right coefficients).
inline ModuleVec vec_mul_right(const Ring& ring, const ModuleVec& v, const Poly& q) {
    ModuleVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = ring.mul(v[i], q);
    return r;
}

struct VecLead {
    std::size_t pos;
    Term term;
};

inline std::optional<VecLead> vec_lead(const ModuleVec& v, const ModuleOrder& o) {
    std::optional<VecLead> best;
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        if (v[pos].is_zero()) continue;
        const Term& t = v[pos].lt();
        if (!best || o.compare(t.mono, pos, best->term.mono, best->pos) > 0)
            best = VecLead{pos, t};
    }
    return best;
}

// ---- matrices --------------------------------------------------------------

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Poly> e;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

    Poly& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

inline Matrix mat_identity(std::size_t n, std::size_t arity) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = poly_one(arity);
    return m;
}

inline Matrix mat_zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

inline bool mat_is_zero(const Matrix& m) {
    for (const auto& p : m.e)
        if (!p.is_zero()) return false;
    return true;
}

inline bool mat_is_identity(const Matrix& m, std::size_t arity) {
    if (m.rows != m.cols) return false;
    return m == mat_identity(m.rows, arity);
}

// Formal transpose: entries move, no factor reordering.
inline Matrix mat_transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

// Plain product: (AB)_{ij} = sum_k A_{ik} * B_{kj}, A-entries on the left.
inline Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            Poly acc;
            for (std::size_t k = 0; k < a.cols; ++k)
                acc = poly_add(acc, ring.mul(a.at(i, k), b.at(k, j)), ring.order());
            r.at(i, j) = std::move(acc);
        }
    return r;
}

inline Matrix mat_add(const Matrix& a, const Matrix& b, const MonomialOrder& ord) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = poly_add(a.e[i], b.e[i], ord);
    return r;
}

inline Matrix mat_vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols != bottom.cols) throw DimensionMismatch("vstack column mismatch");
    Matrix r(top.rows + bottom.rows, top.cols);
    for (std::size_t i = 0; i < top.rows; ++i)
        for (std::size_t j = 0; j < top.cols; ++j) r.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows; ++i)
        for (std::size_t j = 0; j < bottom.cols; ++j) r.at(top.rows + i, j) = bottom.at(i, j);
    return r;
}

inline Matrix mat_hstack(const Matrix& left, const Matrix& right) {
    if (left.rows != right.rows) throw DimensionMismatch("hstack row mismatch");
    Matrix r(left.rows, left.cols + right.cols);
    for (std::size_t i = 0; i < left.rows; ++i) {
        for (std::size_t j = 0; j < left.cols; ++j) r.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols; ++j) r.at(i, left.cols + j) = right.at(i, j);
    }
    return r;
}

inline ModuleVec mat_col(const Matrix& m, std::size_t j) {
    ModuleVec v(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    return v;
}

inline ModuleVec mat_row(const Matrix& m, std::size_t i) {
    ModuleVec v(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) v[j] = m.at(i, j);
    return v;
}

inline std::vector<ModuleVec> mat_cols(const Matrix& m) {
    std::vector<ModuleVec> v;
    v.reserve(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) v.push_back(mat_col(m, j));
    return v;
}

inline std::vector<ModuleVec> mat_rows(const Matrix& m) {
    std::vector<ModuleVec> v;
    v.reserve(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) v.push_back(mat_row(m, i));
    return v;
}

inline Matrix mat_from_cols(const std::vector<ModuleVec>& cols, std::size_t rank) {
    Matrix m(rank, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rank) throw DimensionMismatch("column rank mismatch");
        for (std::size_t i = 0; i < rank; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

inline Matrix mat_from_rows(const std::vector<ModuleVec>& rows, std::size_t width) {
    Matrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) throw DimensionMismatch("row width mismatch");
        for (std::size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

// ---- module maps -----------------------------------------------------------

// Left action: component j of the image is sum_i a_i * F_{ji}.
inline ModuleVec matrix_apply(const Ring& ring, const Matrix& f, const ModuleVec& a) {
    if (a.size() != f.cols) throw DimensionMismatch("argument rank mismatch");
    ModuleVec out(f.rows);
    for (std::size_t j = 0; j < f.rows; ++j) {
        Poly acc;
        for (std::size_t i = 0; i < f.cols; ++i)
            acc = poly_add(acc, ring.mul(a[i], f.at(j, i)), ring.order());
        out[j] = std::move(acc);
    }
    return out;
}

// m(g o f) = (F^T G^T)^T, so entry (i,j) is sum_k F_{kj} * G_{ik}.
inline Matrix matrix_compose(const Ring& ring, const Matrix& g, const Matrix& f) {
    if (g.cols != f.rows) throw DimensionMismatch("composition shape mismatch");
    Matrix r(g.rows, f.cols);
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j) {
            Poly acc;
            for (std::size_t k = 0; k < g.cols; ++k)
                acc = poly_add(acc, ring.mul(f.at(k, j), g.at(i, k)), ring.order());
            r.at(i, j) = std::move(acc);
        }
    return r;
}

// Right action F*a and right composition G*F are plain products.
inline ModuleVec matrix_apply_right(const Ring& ring, const Matrix& f, const ModuleVec& a) {
    if (a.size() != f.cols) throw DimensionMismatch("argument rank mismatch");
    ModuleVec out(f.rows);
    for (std::size_t i = 0; i < f.rows; ++i) {
        Poly acc;
        for (std::size_t j = 0; j < f.cols; ++j)
            acc = poly_add(acc, ring.mul(f.at(i, j), a[j]), ring.order());
        out[i] = std::move(acc);
    }
    return out;
}

inline Matrix matrix_compose_right(const Ring& ring, const Matrix& g, const Matrix& f) {
    return mat_mul(ring, g, f);
}

}  // namespace spbw
