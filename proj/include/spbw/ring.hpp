// Solvable presentations over QQ and their normal-form multiplication.
//
// A ring is given by generators x_1..x_n, an admissible monomial order, and
// for every pair i < j a rewrite  x_j*x_i = c_ij*x_i*x_j + p_ij  where
// c_ij != 0 and every monomial of p_ij lies strictly below x_i*x_j.  Products
// are computed by rewriting the leftmost inverted adjacent pair; the
// recursion below is that strategy with memoization on (generator, monomial)
// and (monomial, monomial) subproducts.
#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace spbw {

// Global cap on the total degree of any requested product.
inline std::atomic<std::uint64_t>& max_degree_limit() {
    static std::atomic<std::uint64_t> limit{64};
    return limit;
}

struct Relation {
    Rational c;  // x_j*x_i = c*x_i*x_j + p
    Poly p;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

class Ring {
public:
    Ring(std::vector<std::string> names, MonomialOrder order,
         std::vector<Relation> relations, bool validate = true)
        : names_(std::move(names)), order_(std::move(order)), rel_(std::move(relations)) {
        const std::size_t n = names_.size();
        if (n == 0) throw ValidationFailure("a ring needs at least one generator");
        for (std::size_t a = 0; a < n; ++a) {
            if (names_[a].empty())
                throw ValidationFailure("empty generator name");
            for (std::size_t b = a + 1; b < n; ++b)
                if (names_[a] == names_[b])
                    throw ValidationFailure("duplicate generator name '" + names_[a] + "'");
        }
        if (order_.arity() != n)
            throw ValidationFailure("order arity does not match the generator count");
        order_.validate();
        if (rel_.size() != n * (n - 1) / 2)
            throw ValidationFailure("relations table must cover every generator pair");
        if (validate) {
            ValidationReport rep = check();
            if (!rep.ok) {
                std::string msg = "invalid presentation:";
                for (const auto& v : rep.violations) msg += "\n  " + v;
                throw ValidationFailure(msg);
            }
        }
    }

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t k) const { return names_[k]; }
    const MonomialOrder& order() const { return order_; }

    // Relation for the pair i < j.
    const Relation& relation(std::size_t i, std::size_t j) const {
        return rel_[pair_index(i, j)];
    }

    ValidationReport check() const {
        ValidationReport rep;
        const std::size_t n = arity();
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const Relation& r = relation(i, j);
                Monomial xixj = unit_monomial(n);
                xixj[i] += 1;
                xixj[j] += 1;
                if (r.c == 0) {
                    rep.ok = false;
                    rep.violations.push_back("pair (" + names_[i] + "," + names_[j] +
                                             "): leading coefficient is zero");
                }
                for (const auto& t : r.p.terms) {
                    if (t.mono.size() != n) {
                        rep.ok = false;
                        rep.violations.push_back("pair (" + names_[i] + "," + names_[j] +
                                                 "): tail monomial has wrong arity");
                        continue;
                    }
                    if (order_.compare(t.mono, xixj) >= 0) {
                        rep.ok = false;
                        rep.violations.push_back("pair (" + names_[i] + "," + names_[j] +
                                                 "): tail monomial is not strictly below " +
                                                 names_[i] + "*" + names_[j]);
                    }
                }
            }
        }
        return rep;
    }

    // Normal form of x^a * x^b.
    Poly mono_mul(const Monomial& a, const Monomial& b) const {
        guard_degree(total_degree(a) + total_degree(b));
        return mono_mul_nf(a, b);
    }

    Poly mul(const Poly& f, const Poly& g) const {
        Poly acc;
        for (const auto& tf : f.terms) {
            for (const auto& tg : g.terms) {
                Poly prod = mono_mul(tf.mono, tg.mono);
                acc = poly_add(acc, poly_scale(tf.coeff * tg.coeff, std::move(prod)), order_);
            }
        }
        return acc;
    }

    Poly power(const Poly& f, std::uint64_t k) const {
        Poly r = poly_one(arity());
        for (std::uint64_t i = 0; i < k; ++i) r = mul(r, f);
        return r;
    }

    // Scalar picked up when swapping x^a past x^b: the coefficient of
    // x^{a+b} in mono_mul(a, b).  Nonzero because the c_ij are units.
    Rational product_unit(const Monomial& a, const Monomial& b) const {
        Poly p = mono_mul(a, b);
        return p.lc();
    }

    // The opposite ring reads generators (and exponent words) backwards; it
    // is again a solvable presentation under the reversed precedence.
    Ring opposite() const {
        const std::size_t n = arity();
        std::vector<std::string> onames(names_.rbegin(), names_.rend());
        std::vector<Relation> orel(n * (n - 1) / 2);
        for (std::size_t v = 1; v < n; ++v) {
            for (std::size_t u = 0; u < v; ++u) {
                // op pair (u, v) mirrors the source pair (n-1-v, n-1-u).
                const Relation& r = relation(n - 1 - v, n - 1 - u);
                Relation ro;
                ro.c = r.c;
                ro.p = op_map(r.p);
                orel[pair_index(u, v)] = std::move(ro);
            }
        }
        return Ring(std::move(onames), order_.reversed(), std::move(orel));
    }

    // Exponent-reversal bijection with the opposite ring; an anti-isomorphism
    // on elements in the sense op(f*g) = op_mul(op(g), op(f)).
    Poly op_map(const Poly& f) const {
        Poly r;
        std::vector<Term> ts;
        ts.reserve(f.terms.size());
        for (const auto& t : f.terms) ts.push_back(Term{t.coeff, exp_reverse(t.mono)});
        return poly_normalize(std::move(ts), order_.reversed());
    }

    std::size_t generator_index(const std::string& nm) const {
        for (std::size_t k = 0; k < names_.size(); ++k)
            if (names_[k] == nm) return k;
        throw UnknownVariable("unknown variable '" + nm + "'");
    }

private:
    static std::size_t pair_index(std::size_t i, std::size_t j) {
        return j * (j - 1) / 2 + i;  // i < j
    }

    static void guard_degree(std::uint64_t d) {
        if (d > max_degree_limit().load())
            throw DegreeLimitExceeded("intermediate degree " + std::to_string(d) +
                                      " exceeds the configured limit " +
                                      std::to_string(max_degree_limit().load()));
    }

    Poly mono_mul_nf(const Monomial& a, const Monomial& b) const {
        if (mono_is_unit(a)) return poly_term(1, b);
        if (mono_is_unit(b)) return poly_term(1, a);
        if (max_support(a) <= min_support(b)) return poly_term(1, exp_add(a, b));
        {
            std::lock_guard<std::mutex> lk(memo_->mutex);
            auto it = memo_->mono.find({a, b});
            if (it != memo_->mono.end()) return it->second;
        }
        // Peel the last generator of a:  x^a = x^{a'} * x_j.
        std::size_t j = max_support(a);
        Monomial a1 = a;
        a1[j] -= 1;
        Poly t = gen_mul_nf(j, b);
        Poly res = left_mono_poly(a1, t);
        {
            std::lock_guard<std::mutex> lk(memo_->mutex);
            memo_->mono.emplace(std::make_pair(a, b), res);
        }
        return res;
    }

    // Normal form of x_j * x^b.
    Poly gen_mul_nf(std::size_t j, const Monomial& b) const {
        if (mono_is_unit(b)) {
            Monomial m = unit_monomial(arity());
            m[j] = 1;
            return poly_term(1, std::move(m));
        }
        std::size_t i = min_support(b);
        if (j <= i) {
            Monomial m = b;
            m[j] += 1;
            return poly_term(1, std::move(m));
        }
        {
            std::lock_guard<std::mutex> lk(memo_->mutex);
            auto it = memo_->gen.find({j, b});
            if (it != memo_->gen.end()) return it->second;
        }
        // x_j * (x_i * x^{b'}) with i < j:  apply x_j*x_i = c*x_i*x_j + p.
        Monomial b1 = b;
        b1[i] -= 1;
        const Relation& r = relation(i, j);
        Poly tail = gen_mul_nf(j, b1);           // x_j * x^{b'}
        Poly acc;
        for (const auto& t : tail.terms) {       // x_i * (x_j * x^{b'})
            Poly s = gen_mul_nf(i, t.mono);
            acc = poly_add(acc, poly_scale(t.coeff, std::move(s)), order_);
        }
        acc = poly_scale(r.c, std::move(acc));
        for (const auto& t : r.p.terms) {        // p * x^{b'}
            Poly s = mono_mul_nf(t.mono, b1);
            acc = poly_add(acc, poly_scale(t.coeff, std::move(s)), order_);
        }
        {
            std::lock_guard<std::mutex> lk(memo_->mutex);
            memo_->gen.emplace(std::make_pair(j, b), acc);
        }
        return acc;
    }

    // x^a * f for f already in normal form.
    Poly left_mono_poly(const Monomial& a, const Poly& f) const {
        if (mono_is_unit(a)) return f;
        Poly acc;
        for (const auto& t : f.terms) {
            Poly s = mono_mul_nf(a, t.mono);
            acc = poly_add(acc, poly_scale(t.coeff, std::move(s)), order_);
        }
        return acc;
    }

    std::vector<std::string> names_;
    MonomialOrder order_;
    std::vector<Relation> rel_;

    // Product cache; guarded so const rings can be shared across threads.
    struct Memo {
        std::mutex mutex;
        std::map<std::pair<std::size_t, Monomial>, Poly> gen;
        std::map<std::pair<Monomial, Monomial>, Poly> mono;
    };
    mutable std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();
};

// Builds the report without constructing a validated ring.
inline ValidationReport check_presentation(const std::vector<std::string>& names,
                                           const MonomialOrder& order,
                                           const std::vector<Relation>& relations) {
    try {
        Ring r(names, order, relations, false);
        return r.check();
    } catch (const ValidationFailure& e) {
        ValidationReport rep;
        rep.ok = false;
        rep.violations.push_back(e.what());
        return rep;
    }
}

}  // namespace spbw
