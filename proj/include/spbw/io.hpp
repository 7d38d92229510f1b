// File formats: rings, matrices, involutions, and stabilization hints.
//
// A ring file declares variables in PBW order and one rewrite per unordered
// generator pair; left sides are literal products "y*x" (higher PBW index
// first), right sides arbitrary PBW-form expressions.  Matrices are dense
// row-major arrays of expression strings and are always read relative to an
// already-loaded ring.
#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "involution.hpp"
#include "module.hpp"
#include "order.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace spbw {

using Json = nlohmann::json;

namespace detail {

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw Error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

// Formal word terms to a normalized polynomial; every word must already be
// non-descending in PBW index order, because no ring exists yet to rewrite it.
inline Poly words_to_poly(const std::vector<FormalTerm>& terms, std::size_t arity,
                          const MonomialOrder& ord, const std::string& where) {
    std::vector<Term> out;
    for (const FormalTerm& t : terms) {
        Monomial m = unit_monomial(arity);
        std::size_t prev = 0;
        bool first = true;
        for (std::size_t g : t.word) {
            if (!first && g < prev)
                throw ValidationFailure(where + ": expression is not in PBW form");
            prev = g;
            first = false;
            ++m[g];
        }
        out.push_back(Term{t.coeff, std::move(m)});
    }
    return poly_normalize(std::move(out), ord);
}

}  // namespace detail

inline Ring load_ring(const std::string& path) {
    Json j = detail::read_json_file(path);
    if (!j.contains("field") || !j["field"].is_string() || j["field"] != "QQ")
        throw ValidationFailure(path + ": field must be \"QQ\"");
    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        throw ValidationFailure(path + ": variables must be a nonempty list");
    std::vector<std::string> names = j["variables"].get<std::vector<std::string>>();
    const std::size_t n = names.size();

    MonomialOrder ord = MonomialOrder::deglex(n);
    if (j.contains("order")) {
        const Json& jo = j["order"];
        std::string type = jo.value("type", "deglex");
        if (type == "deglex")
            ord.kind = OrderKind::Deglex;
        else if (type == "lex")
            ord.kind = OrderKind::Lex;
        else
            throw ValidationFailure(path + ": order type must be deglex or lex");
        if (jo.contains("precedence")) {
            std::vector<std::string> prec = jo["precedence"].get<std::vector<std::string>>();
            if (prec.size() != n)
                throw ValidationFailure(path + ": precedence must list every variable");
            ord.precedence.clear();
            for (const std::string& name : prec) {
                auto it = std::find(names.begin(), names.end(), name);
                if (it == names.end())
                    throw UnknownVariable(path + ": unknown variable '" + name +
                                          "' in precedence");
                ord.precedence.push_back(static_cast<std::size_t>(it - names.begin()));
            }
        }
    }

    if (!j.contains("relations") || !j["relations"].is_array())
        throw ValidationFailure(path + ": relations must be a list");
    std::vector<Relation> table(n * (n - 1) / 2);
    std::vector<bool> seen(table.size(), false);
    for (const Json& jr : j["relations"]) {
        if (!jr.contains("left") || !jr.contains("right"))
            throw ValidationFailure(path + ": each relation needs left and right");
        std::string left = jr["left"].get<std::string>();
        std::vector<FormalTerm> lw = parse_words(names, left);
        if (lw.size() != 1 || lw[0].coeff != 1 || lw[0].word.size() != 2 ||
            lw[0].word[0] <= lw[0].word[1])
            throw ValidationFailure(path + ": relation left side '" + left +
                                    "' must be a product v*u with v after u in PBW order");
        const std::size_t hi = lw[0].word[0], lo = lw[0].word[1];

        Poly rhs = detail::words_to_poly(parse_words(names, jr["right"].get<std::string>()), n,
                                         ord, path + ": relation '" + left + "'");
        Monomial cross = unit_monomial(n);
        ++cross[lo];
        ++cross[hi];
        Relation rel;
        rel.c = 0;
        std::vector<Term> tail;
        for (const Term& t : rhs.terms) {
            if (t.mono == cross)
                rel.c = t.coeff;
            else
                tail.push_back(t);
        }
        rel.p = poly_normalize(std::move(tail), ord);

        const std::size_t idx = hi * (hi - 1) / 2 + lo;
        if (seen[idx])
            throw ValidationFailure(path + ": duplicate relation for '" + left + "'");
        seen[idx] = true;
        table[idx] = std::move(rel);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw ValidationFailure(path + ": relations table is incomplete");

    return Ring(std::move(names), std::move(ord), std::move(table));
}

inline Matrix load_matrix(const Ring& ring, const std::string& path) {
    Json j = detail::read_json_file(path);
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ValidationFailure(path + ": matrix needs rows, cols, entries");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const Json& je = j["entries"];
    if (!je.is_array() || je.size() != rows * cols)
        throw DimensionMismatch(path + ": entries must hold rows*cols expressions");
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k)
        m.e[k] = parse_poly(ring, je[k].get<std::string>());
    return m;
}

inline Involution load_involution(const Ring& ring, const std::string& path) {
    Json j = detail::read_json_file(path);
    if (!j.contains("images") || !j["images"].is_array() ||
        j["images"].size() != ring.arity())
        throw ValidationFailure(path + ": images must list one expression per variable");
    Involution th;
    for (const Json& s : j["images"]) th.images.push_back(parse_poly(ring, s.get<std::string>()));
    return th;
}

// Hints file: {"steps": [["a_1", ...], ...]}, one coefficient vector per
// stabilization step.
inline std::vector<std::vector<Poly>> load_hints(const Ring& ring, const std::string& path) {
    Json j = detail::read_json_file(path);
    if (!j.contains("steps") || !j["steps"].is_array())
        throw ValidationFailure(path + ": hints need a steps list");
    std::vector<std::vector<Poly>> out;
    for (const Json& step : j["steps"]) {
        std::vector<Poly> a;
        for (const Json& s : step) a.push_back(parse_poly(ring, s.get<std::string>()));
        out.push_back(std::move(a));
    }
    return out;
}

inline Json matrix_to_json(const Ring& ring, const Matrix& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json entries = Json::array();
    for (const Poly& p : m.e) entries.push_back(poly_str(ring, p));
    j["entries"] = std::move(entries);
    return j;
}

inline Json vector_to_json(const Ring& ring, const ModuleVec& v) {
    Json j = Json::array();
    for (const Poly& p : v) j.push_back(poly_str(ring, p));
    return j;
}

}  // namespace spbw
