// Polynomial expression parsing and round-trip printing.
//
// Grammar (whitespace free between tokens, juxtaposition multiplies):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*      -- adjacency = '*'
//   factor := atom ['^' natural]
//   atom   := natural | variable | '(' expr ')'
// Products are evaluated left to right through the ring, so input need not
// be in normal form.  Division is only defined by nonzero constants.
#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace spbw {

namespace detail {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string natural() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw SyntaxError("expected a number", i);
        return s.substr(start, i - start);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            ++i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                                    s[i] == '_'))
                ++i;
        }
        if (start == i) throw SyntaxError("expected an identifier", i);
        return s.substr(start, i - start);
    }
};

class PolyParser {
public:
    PolyParser(const Ring& ring, const std::string& text) : ring_(ring), lx_{text} {}

    Poly run() {
        Poly p = expr();
        if (!lx_.done()) throw SyntaxError("unexpected trailing input", lx_.i);
        return p;
    }

private:
    Poly expr() {
        bool neg = false;
        while (true) {
            if (lx_.eat('+')) continue;
            if (lx_.eat('-')) {
                neg = !neg;
                continue;
            }
            break;
        }
        Poly p = term();
        if (neg) p = poly_neg(std::move(p));
        while (true) {
            if (lx_.eat('+')) {
                p = poly_add(p, term(), ring_.order());
            } else if (lx_.eat('-')) {
                p = poly_sub(p, term(), ring_.order());
            } else {
                break;
            }
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (true) {
            char c = lx_.peek();
            if (c == '*') {
                lx_.eat('*');
                p = ring_.mul(p, factor());
            } else if (c == '/') {
                lx_.eat('/');
                std::size_t at = lx_.i;
                Poly d = factor();
                if (!d.is_zero() && d.terms.size() == 1 && mono_is_unit(d.lm()))
                    p = poly_scale(Rational(1) / d.lc(), std::move(p));
                else
                    throw SyntaxError("division is only defined by nonzero constants", at);
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                       c == '(') {
                p = ring_.mul(p, factor());  // juxtaposition
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        Poly a = atom();
        if (lx_.eat('^')) {
            std::string n = lx_.natural();
            std::uint64_t k = std::stoull(n);
            a = ring_.power(a, k);
        }
        return a;
    }

    Poly atom() {
        char c = lx_.peek();
        if (c == '(') {
            lx_.eat('(');
            Poly p = expr();
            if (!lx_.eat(')')) throw SyntaxError("expected ')'", lx_.i);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string n = lx_.natural();
            return poly_const(Rational(Int(n)), ring_.arity());
        }
        if (c == '-' || c == '+') {
            // unary sign inside a product, e.g. "2*-x"
            bool neg = false;
            while (true) {
                if (lx_.eat('+')) continue;
                if (lx_.eat('-')) {
                    neg = !neg;
                    continue;
                }
                break;
            }
            Poly p = factor();
            return neg ? poly_neg(std::move(p)) : p;
        }
        std::size_t at = lx_.i;
        std::string id = lx_.ident();
        try {
            return poly_gen(ring_.generator_index(id), ring_.arity());
        } catch (const UnknownVariable&) {
            throw SyntaxError("unknown variable '" + id + "'", at);
        }
    }

    const Ring& ring_;
    Lexer lx_;
};

}  // namespace detail

inline Poly parse_poly(const Ring& ring, const std::string& text) {
    return detail::PolyParser(ring, text).run();
}

inline std::string monomial_str(const Ring& ring, const Monomial& m) {
    if (mono_is_unit(m)) return "1";
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(k);
        if (m[k] > 1) out += "^" + std::to_string(m[k]);
    }
    return out;
}

// Terms in descending order; stable under re-parsing.
inline std::string poly_str(const Ring& ring, const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mono_is_unit(t.mono)) {
            out += rational_str(c);
        } else {
            if (c != 1) out += rational_str(c) + "*";
            out += monomial_str(ring, t.mono);
        }
    }
    return out;
}

// ---- formal words, used to read relation files before a ring exists ----

struct FormalTerm {
    Rational coeff;
    std::vector<std::size_t> word;  // generator indices, left to right
};

namespace detail {

class WordParser {
public:
    WordParser(const std::vector<std::string>& names, const std::string& text)
        : names_(names), lx_{text} {}

    std::vector<FormalTerm> run() {
        std::vector<FormalTerm> out = expr();
        if (!lx_.done()) throw SyntaxError("unexpected trailing input", lx_.i);
        return out;
    }

private:
    static std::vector<FormalTerm> negate(std::vector<FormalTerm> v) {
        for (auto& t : v) t.coeff = -t.coeff;
        return v;
    }

    std::vector<FormalTerm> expr() {
        bool neg = false;
        while (true) {
            if (lx_.eat('+')) continue;
            if (lx_.eat('-')) {
                neg = !neg;
                continue;
            }
            break;
        }
        std::vector<FormalTerm> p = term();
        if (neg) p = negate(std::move(p));
        while (true) {
            if (lx_.eat('+')) {
                auto q = term();
                p.insert(p.end(), q.begin(), q.end());
            } else if (lx_.eat('-')) {
                auto q = negate(term());
                p.insert(p.end(), q.begin(), q.end());
            } else {
                break;
            }
        }
        return p;
    }

    // A formal term is linear enough for relation files: factors are
    // constants, variables, or variable powers; no parentheses.
    std::vector<FormalTerm> term() {
        FormalTerm t{Rational(1), {}};
        bool saw_factor = false;
        while (true) {
            char c = lx_.peek();
            if (c == '*') {
                lx_.eat('*');
                continue;
            }
            if (c == '/') {
                lx_.eat('/');
                std::string n = lx_.natural();
                Rational d{Int(n)};
                if (d == 0) throw SyntaxError("division by zero", lx_.i);
                t.coeff /= d;
                saw_factor = true;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff *= Rational(Int(lx_.natural()));
                saw_factor = true;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t at = lx_.i;
                std::string id = lx_.ident();
                std::size_t k = index_of(id, at);
                std::uint64_t e = 1;
                if (lx_.eat('^')) e = std::stoull(lx_.natural());
                for (std::uint64_t r = 0; r < e; ++r) t.word.push_back(k);
                saw_factor = true;
                continue;
            }
            break;
        }
        if (!saw_factor) throw SyntaxError("expected a term", lx_.i);
        return {std::move(t)};
    }

    std::size_t index_of(const std::string& id, std::size_t at) {
        for (std::size_t k = 0; k < names_.size(); ++k)
            if (names_[k] == id) return k;
        throw SyntaxError("unknown variable '" + id + "'", at);
    }

    const std::vector<std::string>& names_;
    Lexer lx_;
};

}  // namespace detail

inline std::vector<FormalTerm> parse_words(const std::vector<std::string>& names,
                                           const std::string& text) {
    return detail::WordParser(names, text).run();
}

}  // namespace spbw
