#pragma once

// JSON serialization for the library's value types.  Uses nlohmann::ordered_json
// throughout so that emitted documents are byte-stable across runs.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhythmbool/anf.hpp"
#include "rhythmbool/boolvec.hpp"
#include "rhythmbool/theory.hpp"

namespace rhythmbool {

using ordered_json = nlohmann::ordered_json;

inline const char* index_set_name(IndexSet s) {
    return s == IndexSet::nonneg ? "nonneg" : "signed";
}

inline IndexSet index_set_from_name(const std::string& s) {
    if (s == "nonneg") return IndexSet::nonneg;
    if (s == "signed") return IndexSet::signed_rep;
    throw std::invalid_argument("unknown index set '" + s + "'");
}

inline VarBasis basis_from_name(const std::string& s) {
    if (s == "v") return VarBasis::v;
    if (s == "w") return VarBasis::w;
    if (s == "y") return VarBasis::y;
    throw std::invalid_argument("unknown variable basis '" + s + "'");
}

// {"n": N, "index_set": "nonneg"|"signed", "basis": "v"|"w"|"y",
//  "terms": [[sorted indices]...]} — [] stands for the constant-1 monomial.
inline ordered_json to_json(const AnfPoly& p) {
    ordered_json j;
    j["n"] = p.modulus().value();
    j["index_set"] = index_set_name(p.index_set());
    j["basis"] = detail::basis_letter(p.basis());
    j["terms"] = p.terms();
    return j;
}

inline AnfPoly poly_from_json(const ordered_json& j) {
    Modulus m(j.at("n").get<int>());
    IndexSet conv = index_set_from_name(j.at("index_set").get<std::string>());
    VarBasis basis = basis_from_name(j.at("basis").get<std::string>());
    auto terms = j.at("terms").get<std::vector<std::vector<int>>>();
    return AnfPoly::from_terms(terms, m, conv, basis);
}

// Nonnegative-index vectors serialize as a plain bit array; signed-index
// vectors as an object keyed by the index so the offset is explicit.
inline ordered_json to_json(const BoolVec& v) {
    if (v.index_set() == IndexSet::nonneg) {
        ordered_json bits = ordered_json::array();
        for (int i = v.min_index(); i <= v.max_index(); ++i) bits.push_back(v.bit(i));
        return bits;
    }
    ordered_json j = ordered_json::object();
    for (int i = v.min_index(); i <= v.max_index(); ++i)
        j[std::to_string(i)] = v.bit(i);
    return j;
}

inline BoolVec bool_vec_from_json(const ordered_json& j, Modulus m) {
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != m.value())
            throw std::invalid_argument("bit array length does not match modulus");
        BoolVec v(m, IndexSet::nonneg);
        for (int i = 0; i < m.value(); ++i) v = v.with_bit(i, j.at(i).get<int>());
        return v;
    }
    BoolVec v(m, IndexSet::signed_rep);
    if (static_cast<int>(j.size()) != m.value())
        throw std::invalid_argument("annotated vector size does not match modulus");
    for (auto it = j.begin(); it != j.end(); ++it)
        v = v.with_bit(std::stoi(it.key()), it.value().get<int>());
    return v;
}

inline ordered_json to_json(ParentalPair p) {
    return ordered_json{{"a", p.a}, {"b", p.b}};
}

inline ParentalPair pair_from_json(const ordered_json& j) {
    return ParentalPair{j.at("a").get<int>(), j.at("b").get<int>()};
}

}  // namespace rhythmbool
