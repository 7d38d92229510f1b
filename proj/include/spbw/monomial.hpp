// Commutative exponent words x_1^{a_1}...x_n^{a_n}.  These index the rings's
// PBW basis; all noncommutativity lives in the multiplication table.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace spbw {

using Monomial = std::vector<std::uint32_t>;

inline Monomial unit_monomial(std::size_t arity) { return Monomial(arity, 0); }

inline bool mono_is_unit(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

inline std::uint64_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

inline Monomial exp_add(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Componentwise a <= b.
inline bool exp_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// b - a, valid only when exp_divides(a, b).
inline Monomial exp_sub(const Monomial& b, const Monomial& a) {
    Monomial r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial exp_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// Smallest generator index with a nonzero exponent, or npos when unit.
inline std::size_t min_support(const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) return i;
    return static_cast<std::size_t>(-1);
}

inline std::size_t max_support(const Monomial& m) {
    for (std::size_t i = m.size(); i-- > 0;)
        if (m[i] != 0) return i;
    return static_cast<std::size_t>(-1);
}

// Exponent vector read backwards; monomial bijection onto the opposite ring.
inline Monomial exp_reverse(const Monomial& m) {
    return Monomial(m.rbegin(), m.rend());
}

}  // namespace spbw
