#pragma once

/**
 * @file boolvec.hpp
 * @brief Length-N bit vectors over F_2 under two index conventions
 *        (nonnegative residues 0..N-1, or least-absolute representatives),
 *        their correspondence with rhythms via characteristic vectors /
 *        support, the cyclic bit rotation, and the Boolean average.
 *
 * Bits are packed into a single machine word, so N is capped at 64 here
 * even though the arithmetic layer allows larger moduli.
 */

#include <cstdint>
#include <vector>

#include "modular.hpp"
#include "rhythm.hpp"

namespace rhythmbool {

enum class IndexSet { nonneg, signed_rep };

class BoolVec {
public:
    // Zero vector.
    explicit BoolVec(Modulus m, IndexSet conv = IndexSet::nonneg)
        : bits_(0), m_(check(m)), conv_(conv) {}

    static BoolVec from_word(std::uint64_t bits, Modulus m,
                             IndexSet conv = IndexSet::nonneg) {
        BoolVec v(m, conv);
        if (bits & ~v.full_mask())
            throw std::invalid_argument("bit word wider than modulus");
        v.bits_ = bits;
        return v;
    }

    Modulus modulus() const { return m_; }
    IndexSet index_set() const { return conv_; }
    std::uint64_t word() const { return bits_; }

    // Lowest and highest valid index under this convention.
    int min_index() const {
        return conv_ == IndexSet::nonneg ? 0 : m_.signed_min();
    }
    int max_index() const {
        return conv_ == IndexSet::nonneg ? m_.value() - 1 : m_.signed_max();
    }

    int bit(int index) const { return (bits_ >> pos(index)) & 1u; }

    BoolVec with_bit(int index, int value) const {
        BoolVec v(*this);
        std::uint64_t mask = std::uint64_t{1} << pos(index);
        if (value)
            v.bits_ |= mask;
        else
            v.bits_ &= ~mask;
        return v;
    }

    int weight() const { return __builtin_popcountll(bits_); }

    std::uint64_t full_mask() const {
        return m_.value() == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << m_.value()) - 1;
    }

    friend bool operator==(const BoolVec& a, const BoolVec& b) {
        return a.m_ == b.m_ && a.conv_ == b.conv_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const BoolVec& a, const BoolVec& b) { return !(a == b); }

private:
    static Modulus check(Modulus m) {
        if (m.value() > 64)
            throw BoundExceededError("bit vectors are word-packed, modulus capped at 64");
        return m;
    }

    // Map a convention index to its bit position in the packed word.
    int pos(int index) const {
        if (index < min_index() || index > max_index())
            throw std::invalid_argument("index " + std::to_string(index) +
                                        " outside the vector's index set");
        return index - min_index();
    }

    std::uint64_t bits_;
    Modulus m_;
    IndexSet conv_;
};

// ===== support and rhythm correspondence ====================================

// Indices of the nonzero entries, in ascending index order.
inline std::vector<int> support(const BoolVec& v) {
    std::vector<int> out;
    for (int i = v.min_index(); i <= v.max_index(); ++i)
        if (v.bit(i)) out.push_back(i);
    return out;
}

// Characteristic vector of a rhythm's onset set.  Rotation-invariant:
// every rotation of r produces the same vector.
inline BoolVec from_rhythm(const Rhythm& r) {
    BoolVec v(r.modulus(), IndexSet::nonneg);
    for (int a : r.onsets()) v = v.with_bit(a, 1);
    return v;
}

inline BoolVec from_rhythm(const SignedRhythm& r) {
    BoolVec v(r.modulus(), IndexSet::signed_rep);
    for (int a : r.onsets()) v = v.with_bit(a, 1);
    return v;
}

// Sorted support as an increasing rhythm; inverse of from_rhythm on
// increasing input.
inline IncreasingRhythm to_increasing_rhythm(const BoolVec& v) {
    if (v.index_set() != IndexSet::nonneg)
        throw std::invalid_argument("expected a nonneg-indexed vector");
    return IncreasingRhythm(Rhythm(support(v), v.modulus()));
}

// Signed counterpart: support sorted in integer order.
inline SignedRhythm to_signed_rhythm(const BoolVec& v) {
    if (v.index_set() != IndexSet::signed_rep)
        throw std::invalid_argument("expected a signed-indexed vector");
    return SignedRhythm(support(v), v.modulus());
}

// ===== convention conversion ================================================

inline BoolVec to_signed_convention(const BoolVec& v) {
    if (v.index_set() == IndexSet::signed_rep) return v;
    BoolVec out(v.modulus(), IndexSet::signed_rep);
    for (int i = 0; i < v.modulus().value(); ++i)
        if (v.bit(i))
            out = out.with_bit(to_signed(Residue(i, v.modulus())).value(), 1);
    return out;
}

inline BoolVec to_nonneg_convention(const BoolVec& v) {
    if (v.index_set() == IndexSet::nonneg) return v;
    BoolVec out(v.modulus(), IndexSet::nonneg);
    Modulus m = v.modulus();
    for (int j = m.signed_min(); j <= m.signed_max(); ++j)
        if (v.bit(j)) out = out.with_bit(to_nonneg(SignedResidue(j, m)).value(), 1);
    return out;
}

// ===== rotation and Boolean average =========================================

// Cyclic right shift: (v_0,...,v_{N-1}) -> (v_{N-1},v_0,...,v_{N-2}).
// Mirrors onset translation: rotate_right(from_rhythm(r)) == from_rhythm(translate(r)).
inline BoolVec rotate_right(const BoolVec& v) {
    if (v.index_set() != IndexSet::nonneg)
        throw std::invalid_argument("rotation is defined on nonneg-indexed vectors");
    const int n = v.modulus().value();
    std::uint64_t b = v.word();
    std::uint64_t rotated = ((b << 1) | (b >> (n - 1))) & v.full_mask();
    return BoolVec::from_word(rotated, v.modulus(), IndexSet::nonneg);
}

// The Boolean average: conjugate of the increasing-rhythm average by the
// support/characteristic-vector bijection.  Weight-preserving.
inline BoolVec boolean_average(const BoolVec& v) {
    if (v.index_set() == IndexSet::signed_rep)
        return to_signed_convention(boolean_average(to_nonneg_convention(v)));
    return from_rhythm(increasing_average(to_increasing_rhythm(v)).rhythm());
}

// Single coordinate of the Boolean average.
inline int boolean_average_bit(int index, const BoolVec& v) {
    return boolean_average(v).bit(index);
}

// ===== literals =============================================================

// Parses "(0,0,1,1,0,0,0,1)" as a nonneg-indexed vector of length N.
inline BoolVec parse_bool_vec(const std::string& text, Modulus m) {
    std::vector<int> bits = detail::parse_int_tuple(text);
    if (static_cast<int>(bits.size()) != m.value())
        throw std::invalid_argument("vector literal has " +
                                    std::to_string(bits.size()) +
                                    " components, expected " +
                                    std::to_string(m.value()));
    BoolVec v(m, IndexSet::nonneg);
    for (int i = 0; i < m.value(); ++i) {
        if (bits[static_cast<std::size_t>(i)] != 0 &&
            bits[static_cast<std::size_t>(i)] != 1)
            throw std::invalid_argument("vector components must be 0 or 1");
        if (bits[static_cast<std::size_t>(i)]) v = v.with_bit(i, 1);
    }
    return v;
}

inline std::string to_literal(const BoolVec& v) {
    std::string out = "(";
    for (int i = v.min_index(); i <= v.max_index(); ++i) {
        if (i != v.min_index()) out += ",";
        out += v.bit(i) ? "1" : "0";
    }
    out += ")";
    return out;
}

}  // namespace rhythmbool
