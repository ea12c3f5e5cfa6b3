#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of the library's value types (nlohmann::json).
 *
 * Integers outside the 53-bit range are written as decimal strings. Laurent polynomials are
 * arrays of [exponent, coefficient] pairs in increasing exponent order.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "cellkit/asymptotic.hpp"
#include "cellkit/uqa.hpp"

namespace cellkit::json_io {

using json = nlohmann::json;

inline json big(const BigInt& x) {
    static const BigInt limit = BigInt(1) << 53;
    if (x < limit && x > -limit) return static_cast<long long>(x);
    return x.str();
}

inline BigInt parse_big(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    throw Error("ParseError", "expected an integer", j.dump());
}

inline json poly(const LaurentPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(json::array({e, big(c)}));
    return a;
}

inline LaurentPoly parse_poly(const json& j) {
    if (!j.is_array()) throw Error("ParseError", "polynomial must be an array of [exponent, coefficient]", j.dump());
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw Error("ParseError", "bad polynomial term", t.dump());
        p.add_term(t[0].get<int>(), parse_big(t[1]));
    }
    return p;
}

inline json window(const AffinePermutation& w) { return w.window(); }

inline json partition(const Partition& p) { return p.parts(); }

inline json tableau(const Tableau& t) { return t.rows(); }

inline json matrix(const PeriodicMatrix& A) {
    json e = json::array();
    for (const auto& x : A.support()) e.push_back(json::array({x.row, x.col, x.value}));
    return {{"D", A.D()}, {"n", A.n()}, {"entries", e}};
}

inline PeriodicMatrix parse_matrix(const json& j) {
    try {
        std::vector<PeriodicMatrix::Entry> es;
        for (const auto& t : j.at("entries")) {
            if (!t.is_array() || t.size() != 3) throw Error("ParseError", "entry must be [row, col, value]", t.dump());
            es.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
        }
        return PeriodicMatrix(j.at("D").get<int>(), j.at("n").get<int>(), es);
    } catch (const json::exception& e) {
        throw Error("ParseError", e.what(), j.dump());
    }
}

inline json hecke_element(const HeckeElement& h) {
    json a = json::array();
    for (const auto& [w, p] : h.sorted()) a.push_back({{"y", window(w)}, {"p", poly(p)}});
    return a;
}

inline HeckeElement parse_hecke_element(const json& j, int D) {
    HeckeElement h;
    for (const auto& t : j) h.add(AffinePermutation(D, t.at("y").get<std::vector<int>>()), parse_poly(t.at("p")));
    return h;
}

inline json structure_constants(const StructureConstants& sc) {
    json a = json::array();
    for (const auto& [C, p] : sc) a.push_back({{"matrix", matrix(C)}, {"coeff", poly(p)}});
    return a;
}

inline json gl_weight(const GLWeight& w) { return w.factors; }

inline json triple(const JTriple& t) {
    return {{"E1", matrix(t.e1)}, {"E2", matrix(t.e2)}, {"kappa", gl_weight(t.kappa)}};
}

inline json dominant_weight(const DominantWeight& w) { return {{"n", w.n()}, {"mu", w.representative()}}; }

inline json error(const Error& e) { return {{"code", e.code()}, {"message", e.what()}, {"context", e.context()}}; }

}  // namespace cellkit::json_io
