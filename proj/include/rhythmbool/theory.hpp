#pragma once

/**
 * @file theory.hpp
 * @brief Structure theory of the Boolean average's first coordinate.
 *
 * A "parental pair" is a signed-index pair (a, b) whose discrete average is
 * 0.  Its "ancestor family" collects the signed bit vectors v with v_a = 1,
 * v_b = 1 and zeros strictly between; averaging the support of such a v
 * produces an onset at 0.  The families partition the preimage, which
 * yields a closed-form polynomial for the first average coordinate and a
 * recurrence linking consecutive N.
 */

#include <cstdint>
#include <vector>

#include "anf.hpp"
#include "boolvec.hpp"
#include "modular.hpp"

namespace rhythmbool {

struct ParentalPair {
    int a;
    int b;

    friend bool operator==(ParentalPair x, ParentalPair y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(ParentalPair x, ParentalPair y) { return !(x == y); }
    friend bool operator<(ParentalPair x, ParentalPair y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

inline bool is_parental(ParentalPair p, Modulus m) {
    if (p.a < m.signed_min() || p.a > m.signed_max()) return false;
    if (p.b < m.signed_min() || p.b > m.signed_max()) return false;
    return average(SignedResidue(p.a, m), SignedResidue(p.b, m)).value() == 0;
}

// All N pairs with signed average 0, interleaved by growing width:
// (0,0), (0,1), (-1,1), (-1,2), (-2,2), (-2,3), ...
inline std::vector<ParentalPair> parental_pairs(Modulus m) {
    const int n = m.value();
    const int widest_symmetric = (n - 1) / 2;  // (-k, k)
    const int widest_shifted = (n - 2) / 2;    // (-k, k+1)
    std::vector<ParentalPair> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k <= widest_symmetric || k <= widest_shifted; ++k) {
        if (k <= widest_symmetric) out.push_back({-k, k});
        if (k <= widest_shifted) out.push_back({-k, k + 1});
    }
    return out;
}

namespace detail {

inline void require_parental(ParentalPair p, Modulus m, const char* where) {
    if (!is_parental(p, m))
        throw std::invalid_argument(std::string(where) + ": (" +
                                    std::to_string(p.a) + "," + std::to_string(p.b) +
                                    ") is not a parental pair for modulus " +
                                    std::to_string(m.value()));
}

inline AnfPoly yvar(int index, Modulus m) {
    return AnfPoly::variable(index, m, IndexSet::signed_rep, VarBasis::y);
}

inline AnfPoly yone(Modulus m) {
    return AnfPoly::one(m, IndexSet::signed_rep, VarBasis::y);
}

}  // namespace detail

// ===== family indicators ====================================================

// Indicator of the ancestor family of (a, b) with a < b:
// (y_a + 1) * y_{a+1} * ... * y_{b-1} * (y_b + 1), expanded to ANF.
// In the negated y variables this tests v_a = 1, middles = 0, v_b = 1.
inline AnfPoly ancestor_indicator(ParentalPair p, Modulus m) {
    detail::require_parental(p, m, "ancestor_indicator");
    if (p.a == 0 && p.b == 0)
        throw std::invalid_argument(
            "the (0,0) family has its own indicator, see singleton_indicator");
    AnfPoly one = detail::yone(m);
    AnfPoly acc = detail::yvar(p.a, m) + one;
    for (int k = p.a + 1; k < p.b; ++k) acc = acc * detail::yvar(k, m);
    return acc * (detail::yvar(p.b, m) + one);
}

// Indicator of the (0,0) family: (y_0 + 1) * prod of every other variable.
// Takes value 1 only at the vector supported at index 0 alone.
inline AnfPoly singleton_indicator(Modulus m) {
    AnfPoly acc = detail::yvar(0, m) + detail::yone(m);
    for (int k = m.signed_min(); k <= m.signed_max(); ++k)
        if (k != 0) acc = acc * detail::yvar(k, m);
    return acc;
}

// ===== closed form and recurrence ===========================================

// First coordinate of the Boolean average as a polynomial in the negated
// signed variables: the sum of all family indicators.
inline AnfPoly closed_form_bav0(Modulus m) {
    AnfPoly acc = AnfPoly::zero(m, IndexSet::signed_rep, VarBasis::y);
    for (ParentalPair p : parental_pairs(m)) {
        if (p.a == 0 && p.b == 0)
            acc = acc + singleton_indicator(m);
        else
            acc = acc + ancestor_indicator(p, m);
    }
    return acc;
}

// The same polynomial derived directly from its truth table: 2^N runs of the
// rhythm pipeline, in plain variables on nonneg indices.
inline AnfPoly derived_bav0(Modulus m) {
    return from_truth_table(
        [](const BoolVec& v) { return boolean_average_bit(0, v); }, m,
        IndexSet::nonneg, VarBasis::v);
}

// Builds the polynomial for N = prev_N + 1 from the one for prev_N.  The
// previous index set embeds into the larger one with indices unchanged;
// the correction term depends on the parity of N.
inline AnfPoly recurrence_step(const AnfPoly& prev) {
    if (prev.index_set() != IndexSet::signed_rep || prev.basis() != VarBasis::y)
        throw std::invalid_argument(
            "recurrence_step expects a signed-index polynomial in the y basis");
    const int n = prev.modulus().value() + 1;
    if (n > 64)
        throw BoundExceededError("recurrence capped at modulus 64");
    Modulus m(n);
    AnfPoly embedded =
        AnfPoly::from_terms(prev.terms(), m, IndexSet::signed_rep, VarBasis::y);

    const int half = n / 2;
    AnfPoly one = detail::yone(m);
    AnfPoly delta = one;
    if (n % 2 == 0) {
        // y_{-half+2} ... y_{-1} . y_1 ... y_{half-1} . (y_half + 1) . (y_0 + y_{-half+1})
        for (int k = -half + 2; k <= -1; ++k) delta = delta * detail::yvar(k, m);
        for (int k = 1; k <= half - 1; ++k) delta = delta * detail::yvar(k, m);
        delta = delta * (detail::yvar(half, m) + one);
        delta = delta * (detail::yvar(0, m) + detail::yvar(-half + 1, m));
    } else {
        // y_{-half+1} ... y_{-1} . y_1 ... y_{half-1} . (y_{-half} + 1) . (y_0 + y_half)
        for (int k = -half + 1; k <= -1; ++k) delta = delta * detail::yvar(k, m);
        for (int k = 1; k <= half - 1; ++k) delta = delta * detail::yvar(k, m);
        delta = delta * (detail::yvar(-half, m) + one);
        delta = delta * (detail::yvar(0, m) + detail::yvar(half, m));
    }
    return embedded + delta;
}

// ===== ancestor enumeration =================================================

// 2^{N-1-(b-a)} for an interval family, 1 for the (0,0) singleton family.
inline std::uint64_t ancestor_count(ParentalPair p, Modulus m) {
    detail::require_parental(p, m, "ancestor_count");
    if (p.a == 0 && p.b == 0) return 1;
    return std::uint64_t{1} << (m.value() - 1 - (p.b - p.a));
}

// Materializes the family: bits a and b set, bits strictly between clear,
// all remaining indices free.  Ordered by ascending packed word.
inline std::vector<BoolVec> enumerate_ancestors(ParentalPair p, Modulus m) {
    detail::require_parental(p, m, "enumerate_ancestors");
    if (m.value() > 20)
        throw BoundExceededError("ancestor enumeration capped at modulus 20");
    if (p.a == 0 && p.b == 0)
        return {BoolVec(m, IndexSet::signed_rep).with_bit(0, 1)};

    BoolVec base = BoolVec(m, IndexSet::signed_rep).with_bit(p.a, 1).with_bit(p.b, 1);
    std::vector<int> free_indices;
    for (int j = m.signed_min(); j <= m.signed_max(); ++j)
        if (j < p.a || j > p.b) free_indices.push_back(j);

    std::vector<BoolVec> out;
    out.reserve(std::size_t{1} << free_indices.size());
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << free_indices.size()); ++c) {
        BoolVec v = base;
        for (std::size_t k = 0; k < free_indices.size(); ++k)
            if (c & (std::uint64_t{1} << k)) v = v.with_bit(free_indices[k], 1);
        out.push_back(v);
    }
    return out;
}

}  // namespace rhythmbool
