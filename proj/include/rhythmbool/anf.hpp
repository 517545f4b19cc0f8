#pragma once

/**
 * @file anf.hpp
 * @brief Multilinear polynomials over F_2 (algebraic normal form).
 *
 * A polynomial is a set of monomials; a monomial is a set of variable
 * indices (empty set = the constant 1).  Addition is symmetric difference
 * of term sets, multiplication distributes with idempotent reduction
 * (x*x = x) and mod-2 cancellation.  Conversion from a truth table uses
 * the in-place Möbius (zeta) butterfly over the subset lattice.
 *
 * Variable indices follow the same two conventions as BoolVec; the basis
 * tag (v / w / y) only affects printing.  Conventionally v_i are plain
 * nonneg-indexed inputs, w_i their negations (w_i = v_i + 1), and y_j the
 * negations re-indexed by least-absolute representatives.
 */

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "boolvec.hpp"
#include "modular.hpp"

namespace rhythmbool {

enum class VarBasis { v, w, y };

class AnfPoly {
public:
    // Zero polynomial.
    AnfPoly(Modulus m, IndexSet conv, VarBasis basis)
        : m_(check(m)), conv_(conv), basis_(basis) {}

    static AnfPoly zero(Modulus m, IndexSet conv, VarBasis basis) {
        return AnfPoly(m, conv, basis);
    }

    static AnfPoly one(Modulus m, IndexSet conv, VarBasis basis) {
        AnfPoly p(m, conv, basis);
        p.masks_.insert(0);
        return p;
    }

    static AnfPoly variable(int index, Modulus m, IndexSet conv, VarBasis basis) {
        AnfPoly p(m, conv, basis);
        p.masks_.insert(std::uint64_t{1} << p.pos(index));
        return p;
    }

    // Builds a polynomial from monomials given as index lists (any order
    // within a list).  Duplicate indices inside a monomial and duplicate
    // monomials are rejected rather than silently reduced.
    static AnfPoly from_terms(const std::vector<std::vector<int>>& terms,
                              Modulus m, IndexSet conv, VarBasis basis) {
        AnfPoly p(m, conv, basis);
        for (const auto& t : terms) {
            std::uint64_t mask = 0;
            for (int idx : t) {
                std::uint64_t bit = std::uint64_t{1} << p.pos(idx);
                if (mask & bit)
                    throw std::invalid_argument("repeated index in monomial");
                mask |= bit;
            }
            if (!p.masks_.insert(mask).second)
                throw std::invalid_argument("duplicate monomial in term list");
        }
        return p;
    }

    // Low-level: adopt ready-made bit masks (bit k = variable with index
    // min_index + k).
    static AnfPoly from_term_masks(std::set<std::uint64_t> masks, Modulus m,
                                   IndexSet conv, VarBasis basis) {
        AnfPoly p(m, conv, basis);
        std::uint64_t full = (m.value() == 64) ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << m.value()) - 1;
        for (std::uint64_t mask : masks)
            if (mask & ~full)
                throw std::invalid_argument("monomial mask wider than index set");
        p.masks_ = std::move(masks);
        return p;
    }

    Modulus modulus() const { return m_; }
    IndexSet index_set() const { return conv_; }
    VarBasis basis() const { return basis_; }
    const std::set<std::uint64_t>& term_masks() const { return masks_; }

    int min_index() const {
        return conv_ == IndexSet::nonneg ? 0 : m_.signed_min();
    }
    int max_index() const {
        return conv_ == IndexSet::nonneg ? m_.value() - 1 : m_.signed_max();
    }

    bool is_zero() const { return masks_.empty(); }
    std::size_t term_count() const { return masks_.size(); }

    int degree() const {
        int d = 0;
        for (std::uint64_t mask : masks_)
            d = std::max(d, __builtin_popcountll(mask));
        return d;
    }

    // Monomials as ascending index lists, in canonical order: ascending
    // total degree, ties broken lexicographically on the index tuples.
    std::vector<std::vector<int>> terms() const {
        std::vector<std::vector<int>> out;
        out.reserve(masks_.size());
        for (std::uint64_t mask : masks_) {
            std::vector<int> t;
            for (int k = 0; k < m_.value(); ++k)
                if (mask & (std::uint64_t{1} << k)) t.push_back(min_index() + k);
            out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        return out;
    }

    int evaluate(const BoolVec& assignment) const {
        if (assignment.modulus() != m_)
            throw std::invalid_argument("assignment modulus mismatch");
        if (assignment.index_set() != conv_)
            throw std::invalid_argument("assignment index convention mismatch");
        return evaluate_word(assignment.word());
    }

    // Evaluation on a packed assignment word (bit k = variable min_index + k).
    int evaluate_word(std::uint64_t w) const {
        int acc = 0;
        for (std::uint64_t mask : masks_)
            acc ^= ((w & mask) == mask) ? 1 : 0;
        return acc;
    }

    friend AnfPoly operator+(const AnfPoly& p, const AnfPoly& q) {
        p.require_compatible(q, "polynomial addition");
        AnfPoly out(p.m_, p.conv_, p.basis_);
        out.masks_ = p.masks_;
        for (std::uint64_t mask : q.masks_) out.toggle(mask);
        return out;
    }

    friend AnfPoly operator*(const AnfPoly& p, const AnfPoly& q) {
        p.require_compatible(q, "polynomial multiplication");
        AnfPoly out(p.m_, p.conv_, p.basis_);
        for (std::uint64_t a : p.masks_)
            for (std::uint64_t b : q.masks_) out.toggle(a | b);
        return out;
    }

    friend bool operator==(const AnfPoly& p, const AnfPoly& q) {
        return p.m_ == q.m_ && p.conv_ == q.conv_ && p.basis_ == q.basis_ &&
               p.masks_ == q.masks_;
    }
    friend bool operator!=(const AnfPoly& p, const AnfPoly& q) { return !(p == q); }

private:
    static Modulus check(Modulus m) {
        if (m.value() > 64)
            throw BoundExceededError("monomials are word-packed, modulus capped at 64");
        return m;
    }

    int pos(int index) const {
        if (index < min_index() || index > max_index())
            throw std::invalid_argument("variable index " + std::to_string(index) +
                                        " outside the declared index set");
        return index - min_index();
    }

    void toggle(std::uint64_t mask) {
        auto it = masks_.find(mask);
        if (it == masks_.end())
            masks_.insert(mask);
        else
            masks_.erase(it);
    }

    void require_compatible(const AnfPoly& q, const char* where) const {
        if (m_ != q.m_ || conv_ != q.conv_)
            throw std::invalid_argument(std::string(where) +
                                        ": incompatible index sets");
    }

    std::set<std::uint64_t> masks_;
    Modulus m_;
    IndexSet conv_;
    VarBasis basis_;
};

// ===== truth table to polynomial ============================================

// The unique multilinear polynomial agreeing with f on all 2^N assignments,
// via the in-place Möbius butterfly.  f receives every BoolVec of the given
// convention once.
template <class F>
AnfPoly from_truth_table(F&& f, Modulus m, IndexSet conv, VarBasis basis) {
    const int n = m.value();
    if (n > 24)
        throw BoundExceededError("truth-table conversion capped at 24 variables");
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> table(size);
    for (std::size_t w = 0; w < size; ++w)
        table[w] = static_cast<std::uint8_t>(
                       f(BoolVec::from_word(static_cast<std::uint64_t>(w), m, conv))) &
                   1u;
    for (int i = 0; i < n; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t w = 0; w < size; ++w)
            if (w & bit) table[w] ^= table[w ^ bit];
    }
    std::set<std::uint64_t> masks;
    for (std::size_t w = 0; w < size; ++w)
        if (table[w]) masks.insert(static_cast<std::uint64_t>(w));
    return AnfPoly::from_term_masks(std::move(masks), m, conv, basis);
}

// Value of p at the complemented assignment.  Polynomials in a negated
// basis (w or y, where each variable stands for an input bit plus 1) are
// applied to a raw vector this way.
inline int evaluate_complemented(const AnfPoly& p, const BoolVec& v) {
    if (v.modulus() != p.modulus())
        throw std::invalid_argument("assignment modulus mismatch");
    if (v.index_set() != p.index_set())
        throw std::invalid_argument("assignment index convention mismatch");
    return p.evaluate_word(~v.word() & v.full_mask());
}

// ===== variable substitutions ===============================================

// Substitute x -> x + 1 for every variable and re-expand.  An involution.
// Swaps the v and w naming (y, already a negated basis, keeps its name).
inline AnfPoly negate_variables(const AnfPoly& p) {
    VarBasis b = p.basis();
    if (b == VarBasis::v)
        b = VarBasis::w;
    else if (b == VarBasis::w)
        b = VarBasis::v;
    std::set<std::uint64_t> acc;
    auto toggle = [&acc](std::uint64_t mask) {
        auto it = acc.find(mask);
        if (it == acc.end())
            acc.insert(mask);
        else
            acc.erase(it);
    };
    // each term expands into all of its sub-monomials
    for (std::uint64_t s : p.term_masks()) {
        std::uint64_t t = s;
        while (true) {
            toggle(t);
            if (t == 0) break;
            t = (t - 1) & s;
        }
    }
    return AnfPoly::from_term_masks(std::move(acc), p.modulus(), p.index_set(), b);
}

// Rename every nonneg index i to its least-absolute representative.
// Bijective on indices, so the term structure is untouched.
inline AnfPoly relabel_signed(const AnfPoly& p) {
    if (p.index_set() != IndexSet::nonneg)
        throw std::invalid_argument("relabel_signed expects nonneg indices");
    Modulus m = p.modulus();
    std::vector<std::vector<int>> terms = p.terms();
    for (auto& t : terms)
        for (int& idx : t) idx = to_signed(Residue(idx, m)).value();
    return AnfPoly::from_terms(terms, m, IndexSet::signed_rep, VarBasis::y);
}

// Inverse renaming, back to nonneg indices.
inline AnfPoly relabel_nonneg(const AnfPoly& p) {
    if (p.index_set() != IndexSet::signed_rep)
        throw std::invalid_argument("relabel_nonneg expects signed indices");
    Modulus m = p.modulus();
    std::vector<std::vector<int>> terms = p.terms();
    for (auto& t : terms)
        for (int& idx : t) idx = to_nonneg(SignedResidue(idx, m)).value();
    return AnfPoly::from_terms(terms, m, IndexSet::nonneg, VarBasis::w);
}

// Rewrite p under another variable naming.  The three letters describe the
// same function: w_i = v_i + 1 on the same indices, and y is w relabeled
// onto least-absolute indices.  Supported inputs are (nonneg, v),
// (nonneg, w) and (signed, y).
inline AnfPoly in_basis(const AnfPoly& p, VarBasis want) {
    const bool signed_in = p.index_set() == IndexSet::signed_rep;
    if (signed_in != (p.basis() == VarBasis::y))
        throw std::invalid_argument("unsupported basis/index-set combination");
    if (p.basis() == want) return p;
    switch (p.basis()) {
        case VarBasis::v:
            return want == VarBasis::w ? negate_variables(p)
                                       : relabel_signed(negate_variables(p));
        case VarBasis::w:
            return want == VarBasis::v ? negate_variables(p) : relabel_signed(p);
        case VarBasis::y:
            return want == VarBasis::w ? relabel_nonneg(p)
                                       : negate_variables(relabel_nonneg(p));
    }
    throw std::logic_error("unreachable");
}

// ===== statistics ===========================================================

// Number of assignments on which p evaluates to 1, by exhaustive sweep.
inline std::uint64_t ones_count(const AnfPoly& p, int max_exhaustive_n = 24) {
    const int n = p.modulus().value();
    if (n > max_exhaustive_n)
        throw BoundExceededError("exhaustive evaluation capped at " +
                                 std::to_string(max_exhaustive_n) + " variables");
    std::vector<std::uint64_t> masks(p.term_masks().begin(), p.term_masks().end());
    std::uint64_t ones = 0;
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t w = 0; w < size; ++w) {
        int acc = 0;
        for (std::uint64_t mask : masks) acc ^= ((w & mask) == mask) ? 1 : 0;
        ones += static_cast<std::uint64_t>(acc);
    }
    return ones;
}

// True iff p takes value 1 on exactly half of all assignments.
inline bool is_balanced(const AnfPoly& p, int max_exhaustive_n = 24) {
    return ones_count(p, max_exhaustive_n) ==
           (std::uint64_t{1} << (p.modulus().value() - 1));
}

// ===== printing =============================================================

namespace detail {

inline const char* basis_letter(VarBasis b) {
    switch (b) {
        case VarBasis::v: return "v";
        case VarBasis::w: return "w";
        default: return "y";
    }
}

}  // namespace detail

// Canonical rendering: terms in ascending-degree order (lex tie break),
// variables juxtaposed, negative subscripts braced: "1+y_1+y_{-1}y_0".
inline std::string to_text(const AnfPoly& p) {
    if (p.is_zero()) return "0";
    const char* letter = detail::basis_letter(p.basis());
    std::string out;
    bool first_term = true;
    for (const auto& term : p.terms()) {
        if (!first_term) out += "+";
        first_term = false;
        if (term.empty()) {
            out += "1";
            continue;
        }
        for (int idx : term) {
            out += letter;
            out += "_";
            if (idx < 0)
                out += "{" + std::to_string(idx) + "}";
            else
                out += std::to_string(idx);
        }
    }
    return out;
}

}  // namespace rhythmbool
