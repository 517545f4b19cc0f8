#pragma once

// Builders for the numbered reference tables behind the `tables` command.
// Each builder produces a JSON document; the text and CSV renderings are
// derived from that document, so the three formats cannot drift apart.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhythmbool/boolvec.hpp"
#include "rhythmbool/jsonio.hpp"
#include "rhythmbool/rhythm.hpp"
#include "rhythmbool/theory.hpp"

namespace rhythmbool {

enum class TableFormat { text, json, csv };

inline TableFormat table_format_from_name(const std::string& s) {
    if (s == "text") return TableFormat::text;
    if (s == "json") return TableFormat::json;
    if (s == "csv") return TableFormat::csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

inline const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"4.2", "4.3", "4.4",
                                              "4.5", "5.1", "5.2"};
    return ids;
}

// ===== builders =============================================================

// "4.2": every 3-bit vector, its onset tuple, the averaged tuple, and the
// Boolean average.  Rows are ordered by the tuple read as a binary number.
inline ordered_json table_three_bit_averages() {
    Modulus m(3);
    ordered_json rows = ordered_json::array();
    for (std::uint64_t k = 0; k < 8; ++k) {
        BoolVec v(m, IndexSet::nonneg);
        for (int i = 0; i < 3; ++i)
            v = v.with_bit(i, static_cast<int>((k >> (2 - i)) & 1));
        IncreasingRhythm onsets = to_increasing_rhythm(v);
        IncreasingRhythm averaged = increasing_average(onsets);
        rows.push_back(ordered_json{{"vector", to_json(v)},
                                    {"onsets", onsets.onsets()},
                                    {"averaged_onsets", averaged.onsets()},
                                    {"average", to_json(boolean_average(v))}});
    }
    return ordered_json{{"table", "4.2"}, {"n", 3}, {"rows", rows}};
}

// "4.3"/"4.4"/"4.5": the first-coordinate average polynomial for small
// moduli, in plain (v), negated (w), or negated signed (y) variables.  Every
// row is a full polynomial document in the standard schema.
inline ordered_json table_small_polynomials(VarBasis basis) {
    const char* id = basis == VarBasis::v   ? "4.3"
                     : basis == VarBasis::w ? "4.4"
                                            : "4.5";
    const int hi = basis == VarBasis::v ? 5 : 6;
    ordered_json rows = ordered_json::array();
    for (int n = 3; n <= hi; ++n)
        rows.push_back(to_json(in_basis(derived_bav0(Modulus(n)), basis)));
    return ordered_json{
        {"table", id}, {"basis", detail::basis_letter(basis)}, {"rows", rows}};
}

// "5.1": the zero-average pairs for each small modulus.
inline ordered_json table_parental_pairs() {
    ordered_json rows = ordered_json::array();
    for (int n = 3; n <= 6; ++n) {
        ordered_json pairs = ordered_json::array();
        for (ParentalPair p : parental_pairs(Modulus(n))) pairs.push_back(to_json(p));
        rows.push_back(ordered_json{{"n", n}, {"pairs", pairs}});
    }
    return ordered_json{{"table", "5.1"}, {"rows", rows}};
}

// "5.2": the six ancestor families of 0 for modulus 6 with their members and
// cardinalities, widest interval first and the singleton family last.
inline ordered_json table_ancestor_families() {
    Modulus m(6);
    std::vector<ParentalPair> pairs = parental_pairs(m);
    std::reverse(pairs.begin(), pairs.end());
    ordered_json rows = ordered_json::array();
    std::uint64_t total = 0;
    for (ParentalPair p : pairs) {
        ordered_json members = ordered_json::array();
        for (const BoolVec& v : enumerate_ancestors(p, m)) members.push_back(to_json(v));
        std::uint64_t count = ancestor_count(p, m);
        total += count;
        rows.push_back(ordered_json{
            {"pair", to_json(p)}, {"count", count}, {"members", members}});
    }
    return ordered_json{{"table", "5.2"}, {"n", 6}, {"rows", rows}, {"total", total}};
}

inline ordered_json make_table(const std::string& id) {
    if (id == "4.2") return table_three_bit_averages();
    if (id == "4.3") return table_small_polynomials(VarBasis::v);
    if (id == "4.4") return table_small_polynomials(VarBasis::w);
    if (id == "4.5") return table_small_polynomials(VarBasis::y);
    if (id == "5.1") return table_parental_pairs();
    if (id == "5.2") return table_ancestor_families();
    throw std::invalid_argument("unknown table id '" + id + "'");
}

// ===== rendering ============================================================

namespace detail {

// [2,3,7] -> "(2,3,7)"
inline std::string tuple_text(const ordered_json& arr) {
    std::string out = "(";
    bool first = true;
    for (const auto& x : arr) {
        if (!first) out += ",";
        out += x.dump();
        first = false;
    }
    return out + ")";
}

// {"-2":1,...,"3":1} -> "(1,0,0,0,0,1)", values in stored (ascending) order
inline std::string annotated_vector_text(const ordered_json& obj) {
    std::string out = "(";
    bool first = true;
    for (const auto& [key, value] : obj.items()) {
        (void)key;
        if (!first) out += ",";
        out += value.dump();
        first = false;
    }
    return out + ")";
}

inline std::string pair_text(const ordered_json& p) {
    return "(" + std::to_string(p.at("a").get<int>()) + "," +
           std::to_string(p.at("b").get<int>()) + ")";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string text_grid(const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            line += cells[c];
            if (c + 1 < cells.size())
                line += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

inline std::string csv_grid(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += ",";
            out += csv_cell(cells[c]);
        }
        out += "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

// header + string cells for the text/csv renderings of one table document
inline void table_cells(const ordered_json& t, std::vector<std::string>& header,
                        std::vector<std::vector<std::string>>& rows,
                        bool with_summary) {
    const std::string id = t.at("table").get<std::string>();
    if (id == "4.2") {
        header = {"vector", "onsets", "averaged_onsets", "average"};
        for (const auto& r : t.at("rows"))
            rows.push_back({tuple_text(r.at("vector")), tuple_text(r.at("onsets")),
                            tuple_text(r.at("averaged_onsets")),
                            tuple_text(r.at("average"))});
    } else if (id == "4.3" || id == "4.4" || id == "4.5") {
        header = {"n", "polynomial"};
        for (const auto& r : t.at("rows"))
            rows.push_back({std::to_string(r.at("n").get<int>()),
                            to_text(poly_from_json(r))});
    } else if (id == "5.1") {
        header = {"n", "pairs"};
        for (const auto& r : t.at("rows")) {
            std::vector<std::string> pairs;
            for (const auto& p : r.at("pairs")) pairs.push_back(pair_text(p));
            rows.push_back({std::to_string(r.at("n").get<int>()), join(pairs, " ")});
        }
    } else if (id == "5.2") {
        header = {"pair", "count", "members"};
        for (const auto& r : t.at("rows")) {
            std::vector<std::string> members;
            for (const auto& v : r.at("members"))
                members.push_back(annotated_vector_text(v));
            rows.push_back({pair_text(r.at("pair")),
                            std::to_string(r.at("count").get<std::uint64_t>()),
                            join(members, " ")});
        }
        if (with_summary)
            rows.push_back({"total",
                            std::to_string(t.at("total").get<std::uint64_t>()), ""});
    } else {
        throw std::invalid_argument("unknown table id '" + id + "'");
    }
}

}  // namespace detail

inline std::string render_table(const ordered_json& t, TableFormat format) {
    if (format == TableFormat::json) return t.dump(2) + "\n";
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    detail::table_cells(t, header, rows, format == TableFormat::text);
    return format == TableFormat::text ? detail::text_grid(header, rows)
                                       : detail::csv_grid(header, rows);
}

}  // namespace rhythmbool
