#pragma once

/**
 * @file modular.hpp
 * @brief Arithmetic on the cyclic set Z_N = {0, 1, ..., N-1}: wrap-around
 *        addition and subtraction, directed intervals and distances, the
 *        discrete (floor) average, and the signed representative range.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhythmbool {

// Thrown when a computation would exceed its documented size bound.
struct BoundExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ===== modulus ==============================================================

class Modulus {
public:
    explicit Modulus(int n) : n_(n) {
        if (n < 3 || n > 65536)
            throw std::invalid_argument("modulus must lie in [3, 65536], got " +
                                        std::to_string(n));
    }

    int value() const { return n_; }

    // Bounds of the signed representative range: [-floor((N-1)/2), floor(N/2)].
    int signed_min() const { return -((n_ - 1) / 2); }
    int signed_max() const { return n_ / 2; }

    friend bool operator==(Modulus a, Modulus b) { return a.n_ == b.n_; }
    friend bool operator!=(Modulus a, Modulus b) { return a.n_ != b.n_; }

private:
    int n_;
};

namespace detail {

inline void require_same_modulus(Modulus a, Modulus b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": mixed moduli " +
                                    std::to_string(a.value()) + " and " +
                                    std::to_string(b.value()));
}

}  // namespace detail

// ===== residues =============================================================

// An element of Z_N, kept in canonical form 0 <= value < N.
class Residue {
public:
    Residue(int value, Modulus m) : value_(value), m_(m) {
        if (value < 0 || value >= m.value())
            throw std::invalid_argument("residue " + std::to_string(value) +
                                        " out of range for modulus " +
                                        std::to_string(m.value()));
    }

    int value() const { return value_; }
    Modulus modulus() const { return m_; }

    friend Residue operator+(Residue a, Residue b) {
        detail::require_same_modulus(a.m_, b.m_, "residue addition");
        int s = a.value_ + b.value_;
        if (s >= a.m_.value()) s -= a.m_.value();
        return Residue(s, a.m_);
    }

    friend Residue operator-(Residue a, Residue b) {
        detail::require_same_modulus(a.m_, b.m_, "residue subtraction");
        int d = a.value_ - b.value_;
        if (d < 0) d += a.m_.value();
        return Residue(d, a.m_);
    }

    friend bool operator==(Residue a, Residue b) {
        return a.value_ == b.value_ && a.m_ == b.m_;
    }
    friend bool operator!=(Residue a, Residue b) { return !(a == b); }

private:
    int value_;
    Modulus m_;
};

// An element of Z_N written with its least-absolute representative,
// -floor((N-1)/2) <= value <= floor(N/2).  Distinct from Residue on purpose:
// converting between the two is always an explicit call.
class SignedResidue {
public:
    SignedResidue(int value, Modulus m) : value_(value), m_(m) {
        if (value < m.signed_min() || value > m.signed_max())
            throw std::invalid_argument("signed residue " + std::to_string(value) +
                                        " out of range for modulus " +
                                        std::to_string(m.value()));
    }

    int value() const { return value_; }
    Modulus modulus() const { return m_; }

    friend bool operator==(SignedResidue a, SignedResidue b) {
        return a.value_ == b.value_ && a.m_ == b.m_;
    }
    friend bool operator!=(SignedResidue a, SignedResidue b) { return !(a == b); }

private:
    int value_;
    Modulus m_;
};

// Least-absolute representative of a residue: k for k <= floor(N/2), else k - N.
inline SignedResidue to_signed(Residue r) {
    int k = r.value();
    int n = r.modulus().value();
    return SignedResidue(k <= n / 2 ? k : k - n, r.modulus());
}

// Canonical nonnegative representative of a signed residue.
inline Residue to_nonneg(SignedResidue s) {
    int k = s.value();
    int n = s.modulus().value();
    return Residue(k >= 0 ? k : k + n, s.modulus());
}

// ===== distance and intervals ===============================================

// Steps needed to walk forward (by +1) from a to b; 0 when a == b.
inline int distance(Residue a, Residue b) {
    detail::require_same_modulus(a.modulus(), b.modulus(), "distance");
    return (b - a).value();
}

enum class IntervalKind {
    closed,      // [a, b]: both endpoints included
    right_open,  // [a, b): b excluded; empty when a == b
    left_open    // (a, b]: a excluded; empty when a == b
};

// The directed wrap-around interval from a to b, in traversal order.
inline std::vector<Residue> interval(Residue a, Residue b,
                                     IntervalKind kind = IntervalKind::closed) {
    detail::require_same_modulus(a.modulus(), b.modulus(), "interval");
    int n = a.modulus().value();
    int steps = distance(a, b);
    int count = (kind == IntervalKind::closed) ? steps + 1 : steps;
    int start = (kind == IntervalKind::left_open) ? a.value() + 1 : a.value();

    std::vector<Residue> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.emplace_back((start + i) % n, a.modulus());
    return out;
}

// ===== discrete average =====================================================

// Midpoint reached by walking half the forward distance from a toward b,
// rounding down.  Fixes both endpoints' order: average(a, a) == a.
inline Residue average(Residue a, Residue b) {
    detail::require_same_modulus(a.modulus(), b.modulus(), "average");
    return a + Residue(distance(a, b) / 2, a.modulus());
}

// Same value computed through plain integer midpoints instead of walking:
// floor((a+b)/2) when a <= b, else floor((a+b+N)/2) reduced mod N.
// Kept as an independent cross-check of average().
inline Residue average_midpoint_form(Residue a, Residue b) {
    detail::require_same_modulus(a.modulus(), b.modulus(), "average_midpoint_form");
    int n = a.modulus().value();
    if (a.value() <= b.value())
        return Residue((a.value() + b.value()) / 2, a.modulus());
    return Residue(((a.value() + b.value() + n) / 2) % n, a.modulus());
}

// Discrete average transported to the signed representative range.
inline SignedResidue average(SignedResidue a, SignedResidue b) {
    detail::require_same_modulus(a.modulus(), b.modulus(), "average");
    return to_signed(average(to_nonneg(a), to_nonneg(b)));
}

}  // namespace rhythmbool
