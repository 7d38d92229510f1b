// spbw: command line front end for the library.
//
// One invocation loads a ring presentation, runs a single command and
// prints either a text report or a JSON document (--json).  Exit codes:
//   0  positive verdict, or a plain computation that finished
//   1  certified negative verdict (no inverse, not stably free, ...)
//   2  error, invalid input, or inconclusive (bound exhausted)
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <spbw/bases.hpp>
#include <spbw/homalg.hpp>
#include <spbw/io.hpp>

namespace {

using namespace spbw;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Options {
    std::string ring_path;
    bool json = false;
    std::string out_path;
    std::string morder = "toprev";
    std::string positions;
    std::string side = "left";

    std::vector<std::string> args;  // positional file or expression arguments
    std::string method = "gb";
    std::string involution_path;
    std::string gens_path;
    std::vector<std::string> resolution_paths;
    std::string rel_path;
    std::string g1t_path;
    std::string hints_path;
    std::size_t gld_bound = 0;  // 0 means: use the ring arity
    std::size_t max_length = 0;
    std::size_t stable_rank_bound = 0;
    std::uint32_t degree_bound = 2;
    bool fast = false;
};

Side side_of(const Options& o) { return o.side == "right" ? Side::Right : Side::Left; }

std::vector<std::size_t> parse_positions(const std::string& text, std::size_t rank) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw ValidationFailure("empty entry in --positions");
        unsigned long v = 0;
        try {
            v = std::stoul(tok.substr(b, e - b + 1));
        } catch (const std::exception&) {
            throw ValidationFailure("--positions entries must be integers");
        }
        if (v == 0 || v > rank)
            throw ValidationFailure("--positions entries must lie in 1.." + std::to_string(rank));
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    if (out.size() != rank)
        throw DimensionMismatch("--positions must list all " + std::to_string(rank) +
                                " components");
    return out;
}

ModuleOrder make_order(const Ring& ring, std::size_t rank, const Options& o) {
    Scheme s = (o.morder == "top") ? Scheme::TOP : Scheme::TOPREV;
    ModuleOrder ord = ModuleOrder::standard(ring.order(), rank, s);
    if (!o.positions.empty()) {
        ord.position_precedence = parse_positions(o.positions, rank);
        ord.validate();
    }
    return ord;
}

// Some commands manage component ranks internally and only honor --morder.
std::optional<ModuleOrder> scheme_order(const Ring& ring, const Options& o) {
    if (o.morder == "toprev") return std::nullopt;
    return ModuleOrder::standard(ring.order(), 1, Scheme::TOP);
}

std::string matrix_text(const Ring& ring, const Matrix& m) {
    std::ostringstream os;
    if (m.rows == 0 || m.cols == 0) {
        os << "  (empty " << m.rows << " x " << m.cols << ")\n";
        return os.str();
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << "  [ ";
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) os << ", ";
            os << poly_str(ring, m.at(i, j));
        }
        os << " ]\n";
    }
    return os.str();
}

std::string vec_text(const Ring& ring, const ModuleVec& v) {
    std::ostringstream os;
    os << "( ";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << poly_str(ring, v[i]);
    }
    os << " )";
    return os.str();
}

void write_matrix_file(const Ring& ring, const Matrix& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << matrix_to_json(ring, m).dump(2) << "\n";
}

void deliver(const Options& o, const Json& rep, const std::string& text) {
    if (o.json)
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << text;
}

Matrix load_column_vector(const Ring& ring, const std::string& path) {
    Matrix m = load_matrix(ring, path);
    if (m.cols != 1)
        throw DimensionMismatch(path + ": expected a column vector (r x 1 matrix)");
    return m;
}

// Recompute every transition row against the original input before printing.
void verify_transitions(const Ring& ring, const GroebnerBasis& gb,
                        const std::vector<ModuleVec>& input) {
    for (std::size_t k = 0; k < gb.gens.size(); ++k) {
        ModuleVec acc = vec_zero(gb.rank);
        for (std::size_t j = 0; j < input.size(); ++j) {
            ModuleVec t = (gb.side == Side::Left)
                              ? vec_mul_left(ring, gb.cof[k][j], input[j])
                              : vec_mul_right(ring, input[j], gb.cof[k][j]);
            acc = vec_add(acc, t, ring.order());
        }
        if (!(acc == gb.gens[k]))
            throw Error("internal: transition re-verification failed");
    }
}

int cmd_check_ring(const Options& o) {
    Json rep;
    rep["command"] = "check-ring";
    rep["ring"] = o.ring_path;
    try {
        Ring ring = load_ring(o.ring_path);
        rep["verdict"] = "valid";
        rep["arity"] = ring.arity();
        rep["variables"] = ring.names();
        std::ostringstream hum;
        hum << "ring is valid: " << ring.arity() << " generators ( ";
        for (std::size_t i = 0; i < ring.arity(); ++i) {
            if (i) hum << ", ";
            hum << ring.name(i);
        }
        hum << " )\n";
        deliver(o, rep, hum.str());
        return kYes;
    } catch (const ValidationFailure& e) {
        rep["verdict"] = "invalid";
        rep["reason"] = e.what();
        deliver(o, rep, std::string("ring is invalid:\n") + e.what() + "\n");
        return kNo;
    } catch (const SyntaxError& e) {
        rep["verdict"] = "invalid";
        rep["reason"] = e.what();
        deliver(o, rep, std::string("ring is invalid: ") + e.what() + "\n");
        return kNo;
    } catch (const UnknownVariable& e) {
        rep["verdict"] = "invalid";
        rep["reason"] = e.what();
        deliver(o, rep, std::string("ring is invalid: ") + e.what() + "\n");
        return kNo;
    }
}

int cmd_mul(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    if (o.args.size() < 2) throw ValidationFailure("mul needs at least two expressions");
    Poly acc = parse_poly(ring, o.args[0]);
    for (std::size_t i = 1; i < o.args.size(); ++i)
        acc = ring.mul(acc, parse_poly(ring, o.args[i]));
    Json rep;
    rep["command"] = "mul";
    rep["ring"] = o.ring_path;
    rep["verdict"] = "ok";
    rep["result"] = poly_str(ring, acc);
    deliver(o, rep, poly_str(ring, acc) + "\n");
    return kYes;
}

int cmd_gb(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix m = load_matrix(ring, o.args.at(0));
    ModuleOrder ord = make_order(ring, m.rows, o);
    std::vector<ModuleVec> input = mat_cols(m);
    GroebnerBasis gb = buchberger(ring, input, ord, side_of(o));
    verify_transitions(ring, gb, input);
    Matrix basis = mat_from_cols(gb.gens, m.rows);
    bool full = is_full_module(ring, gb);

    Json rep;
    rep["command"] = "gb";
    rep["ring"] = o.ring_path;
    rep["verdict"] = "ok";
    rep["side"] = o.side;
    rep["basis"] = matrix_to_json(ring, basis);
    rep["full_module"] = full;
    Json cof = Json::array();
    for (const auto& row : gb.cof) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(poly_str(ring, q));
        cof.push_back(std::move(r));
    }
    rep["cofactors"] = std::move(cof);

    std::ostringstream hum;
    hum << "reduced " << o.side << " basis: " << gb.gens.size()
        << " element(s), columns of\n"
        << matrix_text(ring, basis) << "full module: " << (full ? "yes" : "no") << "\n";
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, basis, o.out_path);
    return kYes;
}

int cmd_reduce(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix vm = load_column_vector(ring, o.args.at(0));
    Matrix dm = load_matrix(ring, o.args.at(1));
    if (dm.rows != vm.rows)
        throw DimensionMismatch("vector and divisor matrix have different ambient ranks");
    ModuleOrder ord = make_order(ring, vm.rows, o);
    ModuleVec v = mat_col(vm, 0);
    std::vector<ModuleVec> divisors = mat_cols(dm);
    DivisionResult d = divide(ring, v, divisors, ord, side_of(o));

    ModuleVec acc = d.remainder;
    for (std::size_t j = 0; j < divisors.size(); ++j) {
        ModuleVec t = (side_of(o) == Side::Left)
                          ? vec_mul_left(ring, d.quotients[j], divisors[j])
                          : vec_mul_right(ring, divisors[j], d.quotients[j]);
        acc = vec_add(acc, t, ring.order());
    }
    if (!(acc == v)) throw Error("internal: division reconstruction failed");

    bool zero = vec_is_zero(d.remainder);
    Json rep;
    rep["command"] = "reduce";
    rep["ring"] = o.ring_path;
    rep["verdict"] = "ok";
    rep["side"] = o.side;
    rep["remainder"] = vector_to_json(ring, d.remainder);
    rep["remainder_zero"] = zero;
    Json q = Json::array();
    for (const auto& p : d.quotients) q.push_back(poly_str(ring, p));
    rep["quotients"] = std::move(q);

    std::ostringstream hum;
    hum << "remainder: " << vec_text(ring, d.remainder) << "\n";
    for (std::size_t j = 0; j < d.quotients.size(); ++j)
        hum << "quotient " << j + 1 << ": " << poly_str(ring, d.quotients[j]) << "\n";
    hum << "remainder is " << (zero ? "zero" : "nonzero") << "\n";
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) {
        Matrix rm = mat_from_cols({d.remainder}, vm.rows);
        write_matrix_file(ring, rm, o.out_path);
    }
    return kYes;
}

int cmd_syz(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix m = load_matrix(ring, o.args.at(0));
    ModuleOrder ord = make_order(ring, m.rows, o);
    std::vector<ModuleVec> input = mat_cols(m);
    SyzygyBasis s = syzygies(ring, input, ord, side_of(o));
    for (const auto& z : s.rows) {
        ModuleVec acc = vec_zero(m.rows);
        for (std::size_t j = 0; j < input.size(); ++j) {
            ModuleVec t = (s.side == Side::Left) ? vec_mul_left(ring, z[j], input[j])
                                                 : vec_mul_right(ring, input[j], z[j]);
            acc = vec_add(acc, t, ring.order());
        }
        if (!vec_is_zero(acc)) throw Error("internal: syzygy re-verification failed");
    }
    Matrix out = mat_from_cols(s.rows, m.cols);

    Json rep;
    rep["command"] = "syz";
    rep["ring"] = o.ring_path;
    rep["verdict"] = "ok";
    rep["side"] = o.side;
    rep["count"] = s.rows.size();
    rep["syzygies"] = matrix_to_json(ring, out);

    std::ostringstream hum;
    hum << s.rows.size() << " syzygy generator(s), columns of\n" << matrix_text(ring, out);
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, out, o.out_path);
    return kYes;
}

int cmd_resolve(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix m = load_matrix(ring, o.args.at(0));
    if (m.cols == 0) throw DimensionMismatch("resolve needs at least one generator column");
    ModuleOrder ord = make_order(ring, m.rows, o);
    std::size_t bound = o.max_length ? o.max_length : ring.arity() + 1;
    FreeResolution res;
    try {
        res = free_resolution(ring, mat_cols(m), ord, bound);
    } catch (const BoundExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << " (computed "
                  << e.partial.length() << " step(s); raise --max-length)\n";
        return kError;
    }

    Json rep;
    rep["command"] = "resolve";
    rep["ring"] = o.ring_path;
    rep["verdict"] = "ok";
    rep["length"] = res.length();
    Json maps = Json::array();
    for (const auto& mp : res.maps) maps.push_back(matrix_to_json(ring, mp));
    rep["maps"] = std::move(maps);

    std::ostringstream hum;
    hum << "finite free resolution of length " << res.length() << "\n";
    for (std::size_t k = 0; k < res.maps.size(); ++k) {
        hum << "F" << k << " (" << res.maps[k].rows << " x " << res.maps[k].cols << "):\n"
            << matrix_text(ring, res.maps[k]);
    }
    deliver(o, rep, hum.str());
    return kYes;
}

int cmd_leftinv(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix f = load_matrix(ring, o.args.at(0));
    std::optional<ModuleOrder> ord;
    if (o.morder != "toprev" || !o.positions.empty()) ord = make_order(ring, f.cols, o);
    auto cert = left_inverse(ring, f, ord);

    Json rep;
    rep["command"] = "leftinv";
    rep["ring"] = o.ring_path;
    if (!cert) {
        rep["verdict"] = "none";
        deliver(o, rep, "no left inverse: the rows do not generate the full module\n");
        return kNo;
    }
    if (!mat_is_identity(mat_mul(ring, cert->inverse, f), ring.arity()))
        throw Error("internal: left inverse failed re-verification");
    rep["verdict"] = "inverse";
    rep["verified"] = true;
    rep["inverse"] = matrix_to_json(ring, cert->inverse);
    std::ostringstream hum;
    hum << "left inverse found (" << cert->inverse.rows << " x " << cert->inverse.cols
        << "), verified L * F = I\n"
        << matrix_text(ring, cert->inverse);
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, cert->inverse, o.out_path);
    return kYes;
}

int cmd_rightinv(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix f = load_matrix(ring, o.args.at(0));
    std::optional<ModuleOrder> ord;
    if (o.morder != "toprev" || !o.positions.empty()) ord = make_order(ring, f.rows, o);

    std::optional<InverseCertificate> cert;
    if (o.method == "involution") {
        if (o.involution_path.empty())
            throw ValidationFailure("--method involution requires --involution FILE");
        Involution th = load_involution(ring, o.involution_path);
        std::string why;
        if (!verify_involution(ring, th, &why))
            throw ValidationFailure("involution failed verification: " + why);
        cert = right_inverse_involution(ring, f, th, ord);
    } else {
        cert = right_inverse(ring, f, ord);
    }

    Json rep;
    rep["command"] = "rightinv";
    rep["ring"] = o.ring_path;
    rep["method"] = o.method;
    if (!cert) {
        rep["verdict"] = "none";
        deliver(o, rep, "no right inverse\n");
        return kNo;
    }
    if (!mat_is_identity(mat_mul(ring, f, cert->inverse), ring.arity()))
        throw Error("internal: right inverse failed re-verification");
    rep["verdict"] = "inverse";
    rep["verified"] = true;
    rep["inverse"] = matrix_to_json(ring, cert->inverse);
    std::ostringstream hum;
    hum << "right inverse found (" << cert->inverse.rows << " x " << cert->inverse.cols
        << "), verified F * H = I\n"
        << matrix_text(ring, cert->inverse);
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, cert->inverse, o.out_path);
    return kYes;
}

int cmd_inv(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix f = load_matrix(ring, o.args.at(0));
    std::optional<ModuleOrder> ord;
    if (o.morder != "toprev" || !o.positions.empty()) ord = make_order(ring, f.rows, o);
    auto cert = square_inverse(ring, f, o.fast, ord);

    Json rep;
    rep["command"] = "inv";
    rep["ring"] = o.ring_path;
    if (!cert) {
        rep["verdict"] = "not invertible";
        deliver(o, rep, "not invertible\n");
        return kNo;
    }
    Matrix lhs = mat_mul(ring, f, cert->inverse);
    Matrix rhs = mat_mul(ring, cert->inverse, f);
    if (!mat_is_identity(lhs, ring.arity()) || !mat_is_identity(rhs, ring.arity()))
        throw Error("internal: two sided inverse failed re-verification");
    rep["verdict"] = "invertible";
    rep["verified"] = true;
    rep["inverse"] = matrix_to_json(ring, cert->inverse);
    std::ostringstream hum;
    hum << "invertible, verified F * G = G * F = I\n" << matrix_text(ring, cert->inverse);
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, cert->inverse, o.out_path);
    return kYes;
}

int cmd_pd(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    PdReport report;
    if (!o.gens_path.empty()) {
        Matrix gm = load_matrix(ring, o.gens_path);
        if (gm.cols == 0) throw DimensionMismatch("pd needs at least one generator column");
        Scheme s = (o.morder == "top") ? Scheme::TOP : Scheme::TOPREV;
        ModuleOrder ord = ModuleOrder::standard(ring.order(), gm.rows, s);
        std::size_t bound = o.gld_bound ? o.gld_bound : ring.arity() + 1;
        try {
            report = projective_dimension(ring, mat_cols(gm), ord, bound);
        } catch (const BoundExceeded& e) {
            std::cerr << "inconclusive: " << e.what() << " (raise --gld-bound)\n";
            return kError;
        }
    } else if (!o.resolution_paths.empty()) {
        FreeResolution res;
        for (const auto& p : o.resolution_paths) res.maps.push_back(load_matrix(ring, p));
        for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) {
            if (res.maps[k].cols != res.maps[k + 1].rows)
                throw DimensionMismatch("resolution maps do not chain: F" + std::to_string(k) +
                                        " has " + std::to_string(res.maps[k].cols) +
                                        " columns, F" + std::to_string(k + 1) + " has " +
                                        std::to_string(res.maps[k + 1].rows) + " rows");
            if (k >= 1 && !mat_is_zero(matrix_compose(ring, res.maps[k], res.maps[k + 1])))
                throw ValidationFailure("maps F" + std::to_string(k) + " and F" +
                                        std::to_string(k + 1) + " do not compose to zero");
        }
        const Matrix& last = res.maps.back();
        if (last.cols > 0) {
            ModuleOrder tail_ord = ModuleOrder::standard(ring.order(), last.rows);
            SyzygyBasis tail = syzygies(ring, mat_cols(last), tail_ord);
            if (!tail.rows.empty()) {
                std::cerr << "inconclusive: the last supplied map is not injective, so the "
                             "resolution is not finite as given\n";
                return kError;
            }
        }
        res.finite = true;
        report = projective_dimension_ffr(ring, res, scheme_order(ring, o));
    } else {
        throw ValidationFailure("pd needs --gens M.mat or --resolution F0.mat F1.mat ...");
    }

    Json rep;
    rep["command"] = "pd";
    rep["ring"] = o.ring_path;
    rep["verdict"] = "ok";
    rep["pd"] = report.pd;
    Json trace = Json::array();
    for (const auto& [step, found] : report.fold_trace)
        trace.push_back(Json{{"step", step}, {"split", found}});
    rep["fold_trace"] = std::move(trace);

    std::ostringstream hum;
    hum << "pd = " << report.pd << "\n";
    for (const auto& [step, found] : report.fold_trace)
        hum << "  step " << step << ": right inverse " << (found ? "found" : "missing") << "\n";
    deliver(o, rep, hum.str());
    return kYes;
}

// Resolve A^r / im(F1), then fold from the top.  Every fold step demands a
// right inverse of the transposed differential; the first miss at step j pins
// the projective dimension at j >= 1, so the module cannot be stably free.
// If every step folds, the final splitting exhibits M (+) A^s = A^r directly.
int cmd_stablyfree(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix f1 = load_matrix(ring, o.rel_path);
    std::size_t bound = o.gld_bound ? o.gld_bound : ring.arity() + 1;
    Scheme sch = o.morder == "top" ? Scheme::TOP : Scheme::TOPREV;

    FreeResolution res;
    res.maps.push_back(mat_identity(f1.rows, ring.arity()));
    res.maps.push_back(f1);
    std::vector<ModuleVec> cur = mat_cols(f1);
    bool finite = cur.empty();
    for (std::size_t step = 0; step < bound && !finite; ++step) {
        ModuleOrder ord = ModuleOrder::standard(ring.order(), cur.front().size(), sch);
        SyzygyBasis s = syzygies(ring, cur, ord);
        if (s.rows.empty()) {
            finite = true;
            break;
        }
        res.maps.push_back(mat_from_cols(s.rows, cur.size()));
        cur = s.rows;
    }
    if (!finite) {
        std::cerr << "inconclusive: syzygies did not vanish within " << bound
                  << " step(s); raise --gld-bound\n";
        return kError;
    }
    res.finite = true;

    Json rep;
    rep["command"] = "stablyfree";
    rep["ring"] = o.ring_path;
    MinimalPresentation mp;
    try {
        mp = minimal_presentation(ring, res, scheme_order(ring, o));
    } catch (const FoldFailed& e) {
        rep["verdict"] = "not stably free";
        rep["fold_failed_at"] = e.step;
        std::ostringstream hum;
        hum << "verdict: not stably free (no right inverse at resolution step " << e.step
            << ")\n";
        deliver(o, rep, hum.str());
        return kNo;
    }

    std::size_t rank = mp.h1.rows - mp.h1.cols;
    rep["verdict"] = "stably free";
    rep["rank"] = rank;
    rep["h1"] = matrix_to_json(ring, mp.h1);
    rep["splitting"] = matrix_to_json(ring, mp.splitting.inverse);
    std::ostringstream hum;
    hum << "verdict: stably free, rank " << rank << "\n"
        << "minimal presentation 0 -> A^" << mp.h1.cols << " -> A^" << mp.h1.rows
        << " -> M -> 0\n"
        << "splitting G with H1^T * G = I:\n"
        << matrix_text(ring, mp.splitting.inverse);
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, mp.splitting.inverse, o.out_path);
    return kYes;
}

// Resolve A^r / im(F1) far enough to see the syzygies vanish, then fold.
int cmd_minpres(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix f1 = load_matrix(ring, o.rel_path);
    std::size_t bound = o.gld_bound ? o.gld_bound : ring.arity() + 1;
    Scheme sch = o.morder == "top" ? Scheme::TOP : Scheme::TOPREV;

    FreeResolution res;
    res.maps.push_back(mat_identity(f1.rows, ring.arity()));
    res.maps.push_back(f1);
    std::vector<ModuleVec> cur = mat_cols(f1);
    bool finite = cur.empty();
    for (std::size_t step = 0; step < bound && !finite; ++step) {
        ModuleOrder ord = ModuleOrder::standard(ring.order(), cur.front().size(), sch);
        SyzygyBasis s = syzygies(ring, cur, ord);
        if (s.rows.empty()) {
            finite = true;
            break;
        }
        res.maps.push_back(mat_from_cols(s.rows, cur.size()));
        cur = s.rows;
    }
    if (!finite) {
        std::cerr << "inconclusive: syzygies did not vanish within " << bound
                  << " step(s); raise --gld-bound\n";
        return kError;
    }
    res.finite = true;

    Json rep;
    rep["command"] = "minpres";
    rep["ring"] = o.ring_path;
    MinimalPresentation mp;
    try {
        mp = minimal_presentation(ring, res, scheme_order(ring, o));
    } catch (const FoldFailed& e) {
        rep["verdict"] = "not stably free";
        rep["fold_failed_at"] = e.step;
        std::ostringstream hum;
        hum << "verdict: no split presentation; fold failed at step " << e.step << "\n";
        deliver(o, rep, hum.str());
        return kNo;
    }

    rep["verdict"] = "ok";
    rep["h0"] = matrix_to_json(ring, mp.h0);
    rep["h1"] = matrix_to_json(ring, mp.h1);
    rep["splitting"] = matrix_to_json(ring, mp.splitting.inverse);
    std::ostringstream hum;
    hum << "minimal presentation 0 -> A^" << mp.h1.cols << " -> A^" << mp.h1.rows
        << " -> M -> 0\n"
        << "H1 (" << mp.h1.rows << " x " << mp.h1.cols << ", injective):\n"
        << matrix_text(ring, mp.h1) << "H0 (" << mp.h0.rows << " x " << mp.h0.cols << "):\n"
        << matrix_text(ring, mp.h0) << "splitting verified: H1^T * G = I\n";
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, mp.h1, o.out_path);
    return kYes;
}

int cmd_freebasis(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix f1 = load_matrix(ring, o.rel_path);
    std::optional<Matrix> g1t;
    if (!o.g1t_path.empty()) g1t = load_matrix(ring, o.g1t_path);
    std::vector<std::vector<Poly>> hints;
    if (!o.hints_path.empty()) hints = load_hints(ring, o.hints_path);

    Json rep;
    rep["command"] = "freebasis";
    rep["ring"] = o.ring_path;
    BasisCertificate cert;
    try {
        cert = compute_free_basis(ring, f1, std::move(g1t), o.stable_rank_bound,
                                  o.degree_bound, hints, scheme_order(ring, o));
    } catch (const NotStablyFree& e) {
        rep["verdict"] = "not stably free";
        rep["reason"] = e.what();
        deliver(o, rep, std::string("verdict: not stably free (") + e.what() + ")\n");
        return kNo;
    }
    if (!cert.check) throw Error("internal: basis certificate failed re-verification");

    rep["verdict"] = "ok";
    rep["u"] = matrix_to_json(ring, cert.u);
    Json basis = Json::array();
    for (const auto& b : cert.basis) basis.push_back(vector_to_json(ring, b));
    rep["basis"] = std::move(basis);
    std::ostringstream hum;
    hum << "free basis of rank " << cert.basis.size() << ", certified U * G1^T = [I_s; 0]\n";
    for (std::size_t i = 0; i < cert.basis.size(); ++i)
        hum << "  b" << i + 1 << " = " << vec_text(ring, cert.basis[i]) << "\n";
    hum << "U (" << cert.u.rows << " x " << cert.u.cols << "):\n" << matrix_text(ring, cert.u);
    deliver(o, rep, hum.str());
    if (!o.out_path.empty()) write_matrix_file(ring, cert.u, o.out_path);
    return kYes;
}

int cmd_unimodular(const Options& o) {
    Ring ring = load_ring(o.ring_path);
    Matrix vm = load_column_vector(ring, o.args.at(0));
    ModuleVec v = mat_col(vm, 0);
    auto w = unimodular_witness(ring, v);

    Json rep;
    rep["command"] = "unimodular";
    rep["ring"] = o.ring_path;
    if (!w) {
        rep["verdict"] = "not unimodular";
        deliver(o, rep, "verdict: not unimodular (entries generate a proper left ideal)\n");
        return kNo;
    }
    Poly acc;
    for (std::size_t i = 0; i < v.size(); ++i)
        acc = poly_add(acc, ring.mul(w->row[i], v[i]), ring.order());
    if (!poly_is_one(acc)) throw Error("internal: witness failed re-verification");
    rep["verdict"] = "unimodular";
    rep["witness"] = vector_to_json(ring, w->row);
    std::ostringstream hum;
    hum << "verdict: unimodular, witness u with u . v = 1\n  u = " << vec_text(ring, w->row)
        << "\n";
    deliver(o, rep, hum.str());
    return kYes;
}

void add_common(CLI::App* cmd, Options& o, bool with_order = true, bool with_out = true) {
    cmd->add_option("--ring", o.ring_path, "ring presentation file")->required();
    cmd->add_flag("--json", o.json, "emit a JSON report");
    if (with_order) {
        cmd->add_option("--morder", o.morder, "position tie break: top or toprev")
            ->check(CLI::IsMember({"top", "toprev"}));
    }
    if (with_out) cmd->add_option("--out", o.out_path, "write the main output matrix here");
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("SPBW_MAX_DEGREE")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) {
            std::cerr << "error: SPBW_MAX_DEGREE must be a positive integer\n";
            return kError;
        }
        spbw::max_degree_limit().store(v);
    }

    Options o;
    CLI::App app{"exact homological computations over solvable polynomial rings"};
    app.require_subcommand(1);

    CLI::App* c_check = app.add_subcommand("check-ring", "validate a ring presentation");
    add_common(c_check, o, false, false);

    CLI::App* c_mul = app.add_subcommand("mul", "multiply ring expressions left to right");
    add_common(c_mul, o, false, false);
    c_mul->add_option("exprs", o.args, "expressions")->expected(-2);

    CLI::App* c_gb = app.add_subcommand("gb", "reduced basis of the columns of a matrix");
    add_common(c_gb, o);
    c_gb->add_option("matrix", o.args, "input matrix file")->expected(1)->required();
    c_gb->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    c_gb->add_option("--positions", o.positions, "position precedence, 1-based, largest first");

    CLI::App* c_red = app.add_subcommand("reduce", "divide a column vector by matrix columns");
    add_common(c_red, o);
    c_red->add_option("files", o.args, "vector file then divisor matrix file")
        ->expected(2)
        ->required();
    c_red->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    c_red->add_option("--positions", o.positions, "position precedence, 1-based, largest first");

    CLI::App* c_syz = app.add_subcommand("syz", "syzygies of the columns of a matrix");
    add_common(c_syz, o);
    c_syz->add_option("matrix", o.args, "input matrix file")->expected(1)->required();
    c_syz->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    c_syz->add_option("--positions", o.positions, "position precedence, 1-based, largest first");

    CLI::App* c_res = app.add_subcommand("resolve", "iterate syzygies to a finite resolution");
    add_common(c_res, o, true, false);
    c_res->add_option("matrix", o.args, "generator matrix file")->expected(1)->required();
    c_res->add_option("--max-length", o.max_length, "resolution length bound");

    CLI::App* c_li = app.add_subcommand("leftinv", "left inverse of a matrix");
    add_common(c_li, o);
    c_li->add_option("matrix", o.args, "input matrix file")->expected(1)->required();
    c_li->add_option("--positions", o.positions, "position precedence, 1-based, largest first");

    CLI::App* c_ri = app.add_subcommand("rightinv", "right inverse of a matrix");
    add_common(c_ri, o);
    c_ri->add_option("matrix", o.args, "input matrix file")->expected(1)->required();
    c_ri->add_option("--method", o.method, "gb or involution")
        ->check(CLI::IsMember({"gb", "involution"}));
    c_ri->add_option("--involution", o.involution_path, "involution file for --method involution");
    c_ri->add_option("--positions", o.positions, "position precedence, 1-based, largest first");

    CLI::App* c_inv = app.add_subcommand("inv", "two sided inverse of a square matrix");
    add_common(c_inv, o);
    c_inv->add_option("matrix", o.args, "input matrix file")->expected(1)->required();
    c_inv->add_flag("--fast", o.fast, "skip the syzygy paranoia check");
    c_inv->add_option("--positions", o.positions, "position precedence, 1-based, largest first");

    CLI::App* c_pd = app.add_subcommand("pd", "projective dimension of a module");
    add_common(c_pd, o, true, false);
    c_pd->add_option("--gens", o.gens_path, "generator matrix, module = column span");
    c_pd->add_option("--gld-bound", o.gld_bound, "global dimension bound (default: arity + 1)");
    c_pd->add_option("--resolution", o.resolution_paths,
                     "finite free resolution F0 F1 ... (F0 = generators)");

    CLI::App* c_sf = app.add_subcommand("stablyfree", "stably-freeness of A^r / im(F1)");
    add_common(c_sf, o);
    c_sf->add_option("--rel", o.rel_path, "relation matrix F1")->required();
    c_sf->add_option("--gld-bound", o.gld_bound, "resolution length bound (default: arity + 1)");

    CLI::App* c_mp = app.add_subcommand("minpres", "fold to a minimal split presentation");
    add_common(c_mp, o);
    c_mp->add_option("--rel", o.rel_path, "relation matrix F1")->required();
    c_mp->add_option("--gld-bound", o.gld_bound, "resolution length bound (default: arity + 1)");

    CLI::App* c_fb = app.add_subcommand("freebasis", "free basis of a stably free module");
    add_common(c_fb, o);
    c_fb->add_option("--rel", o.rel_path, "injective split relation matrix F1")->required();
    c_fb->add_option("--g1t", o.g1t_path, "right inverse of F1^T, computed when absent");
    c_fb->add_option("--stable-rank-bound", o.stable_rank_bound,
                     "declared stable rank bound, needs r - s >= bound")
        ->required();
    c_fb->add_option("--degree-bound", o.degree_bound,
                     "stabilization search degree bound (default 2)");
    c_fb->add_option("--hints", o.hints_path, "stabilization hint file");

    CLI::App* c_um = app.add_subcommand("unimodular", "unimodularity of a column vector");
    add_common(c_um, o, false, false);
    c_um->add_option("vector", o.args, "column vector file (r x 1)")->expected(1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (app.got_subcommand(c_check)) return cmd_check_ring(o);
        if (app.got_subcommand(c_mul)) return cmd_mul(o);
        if (app.got_subcommand(c_gb)) return cmd_gb(o);
        if (app.got_subcommand(c_red)) return cmd_reduce(o);
        if (app.got_subcommand(c_syz)) return cmd_syz(o);
        if (app.got_subcommand(c_res)) return cmd_resolve(o);
        if (app.got_subcommand(c_li)) return cmd_leftinv(o);
        if (app.got_subcommand(c_ri)) return cmd_rightinv(o);
        if (app.got_subcommand(c_inv)) return cmd_inv(o);
        if (app.got_subcommand(c_pd)) return cmd_pd(o);
        if (app.got_subcommand(c_sf)) return cmd_stablyfree(o);
        if (app.got_subcommand(c_mp)) return cmd_minpres(o);
        if (app.got_subcommand(c_fb)) return cmd_freebasis(o);
        if (app.got_subcommand(c_um)) return cmd_unimodular(o);
    } catch (const StabilizationFailed& e) {
        std::cerr << "inconclusive: " << e.what() << " (raise --degree-bound or supply --hints)\n";
        return kError;
    } catch (const DegreeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise SPBW_MAX_DEGREE)\n";
        return kError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
