#pragma once

/**
 * @file rhythm.hpp
 * @brief Cyclic onset patterns ("rhythms") modulo N and their self-maps:
 *        the componentwise discrete average, rotation, translation, the
 *        jumping number, projection onto increasing form, properness, and
 *        the signed-representative variant.
 *
 * A rhythm is an ordered tuple of distinct residues whose cyclically
 * adjacent forward gaps sum to exactly N, i.e. the tuple winds around the
 * cycle exactly once.  The empty tuple and singletons are admitted.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "modular.hpp"

namespace rhythmbool {

struct DuplicateOnsetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The onset tuple winds around the cycle more (or less) than once.
struct WrapSumError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ===== rhythm ===============================================================

class Rhythm {
public:
    Rhythm(std::vector<int> onsets, Modulus m) : onsets_(std::move(onsets)), m_(m) {
        validate();
    }

    std::size_t size() const { return onsets_.size(); }
    const std::vector<int>& onsets() const { return onsets_; }
    int onset(std::size_t i) const { return onsets_.at(i); }
    Modulus modulus() const { return m_; }

    friend bool operator==(const Rhythm& a, const Rhythm& b) {
        return a.m_ == b.m_ && a.onsets_ == b.onsets_;
    }
    friend bool operator!=(const Rhythm& a, const Rhythm& b) { return !(a == b); }

private:
    void validate() const {
        const int n = m_.value();
        for (int a : onsets_)
            if (a < 0 || a >= n)
                throw std::invalid_argument("onset " + std::to_string(a) +
                                            " out of range for modulus " +
                                            std::to_string(n));
        std::vector<int> sorted(onsets_);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DuplicateOnsetError("duplicate onset in rhythm");
        if (onsets_.size() < 2) return;
        long long sum = 0;
        for (std::size_t i = 0; i < onsets_.size(); ++i) {
            int cur = onsets_[i];
            int nxt = onsets_[(i + 1) % onsets_.size()];
            sum += ((nxt - cur) % n + n) % n;
        }
        if (sum != n)
            throw WrapSumError("onset tuple winds " + std::to_string(sum / n) +
                               " times around the cycle, expected once");
    }

    std::vector<int> onsets_;
    Modulus m_;
};

// A rhythm whose onsets are strictly increasing (the canonical representative
// of its rotation orbit).
class IncreasingRhythm {
public:
    explicit IncreasingRhythm(Rhythm r) : r_(std::move(r)) {
        const auto& a = r_.onsets();
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] >= a[i + 1])
                throw std::invalid_argument("onsets not strictly increasing");
    }

    const Rhythm& rhythm() const { return r_; }
    std::size_t size() const { return r_.size(); }
    const std::vector<int>& onsets() const { return r_.onsets(); }
    Modulus modulus() const { return r_.modulus(); }

    friend bool operator==(const IncreasingRhythm& a, const IncreasingRhythm& b) {
        return a.r_ == b.r_;
    }
    friend bool operator!=(const IncreasingRhythm& a, const IncreasingRhythm& b) {
        return !(a == b);
    }

private:
    Rhythm r_;
};

// A rhythm written with least-absolute representatives.  Valid exactly when
// the componentwise nonnegative image is a valid Rhythm.
class SignedRhythm {
public:
    SignedRhythm(std::vector<int> onsets, Modulus m) : onsets_(std::move(onsets)), m_(m) {
        std::vector<int> nonneg;
        nonneg.reserve(onsets_.size());
        for (int a : onsets_)
            nonneg.push_back(to_nonneg(SignedResidue(a, m)).value());
        Rhythm check(std::move(nonneg), m);  // throws if not a rhythm
        (void)check;
    }

    std::size_t size() const { return onsets_.size(); }
    const std::vector<int>& onsets() const { return onsets_; }
    Modulus modulus() const { return m_; }

    friend bool operator==(const SignedRhythm& a, const SignedRhythm& b) {
        return a.m_ == b.m_ && a.onsets_ == b.onsets_;
    }
    friend bool operator!=(const SignedRhythm& a, const SignedRhythm& b) {
        return !(a == b);
    }

private:
    std::vector<int> onsets_;
    Modulus m_;
};

inline SignedRhythm to_signed(const Rhythm& r) {
    std::vector<int> out;
    out.reserve(r.size());
    for (int a : r.onsets())
        out.push_back(to_signed(Residue(a, r.modulus())).value());
    return SignedRhythm(std::move(out), r.modulus());
}

inline Rhythm to_nonneg(const SignedRhythm& r) {
    std::vector<int> out;
    out.reserve(r.size());
    for (int a : r.onsets())
        out.push_back(to_nonneg(SignedResidue(a, r.modulus())).value());
    return Rhythm(std::move(out), r.modulus());
}

// ===== self-maps ============================================================

// Componentwise discrete average over cyclically adjacent onset pairs:
// (a_0, ..., a_{n-1}) -> (av(a_0,a_1), ..., av(a_{n-1},a_0)).
// Identity on empty and singleton rhythms.
inline Rhythm discrete_average(const Rhythm& r) {
    if (r.size() < 2) return r;
    const Modulus m = r.modulus();
    std::vector<int> out;
    out.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Residue cur(r.onset(i), m);
        Residue nxt(r.onset((i + 1) % r.size()), m);
        out.push_back(average(cur, nxt).value());
    }
    return Rhythm(std::move(out), m);
}

// Right cyclic shift of the tuple: (a_0,...,a_{n-1}) -> (a_{n-1},a_0,...,a_{n-2}).
inline Rhythm rotate_right(const Rhythm& r) {
    if (r.size() < 2) return r;
    std::vector<int> out(r.onsets());
    std::rotate(out.begin(), out.end() - 1, out.end());
    return Rhythm(std::move(out), r.modulus());
}

// Add 1 mod N to every onset.
inline Rhythm translate(const Rhythm& r) {
    const int n = r.modulus().value();
    std::vector<int> out;
    out.reserve(r.size());
    for (int a : r.onsets()) out.push_back((a + 1) % n);
    return Rhythm(std::move(out), r.modulus());
}

// Index of the unique descent a_{j-1} > a_j (indices cyclic); 0 for singletons.
inline int jumping_number(const Rhythm& r) {
    if (r.size() == 0)
        throw std::invalid_argument("jumping number undefined for the empty rhythm");
    if (r.size() == 1) return 0;
    const std::size_t n = r.size();
    for (std::size_t j = 0; j < n; ++j)
        if (r.onset((j + n - 1) % n) > r.onset(j)) return static_cast<int>(j);
    throw std::logic_error("valid rhythm has no descent");  // unreachable
}

// Rotate until increasing: applies rotate_right exactly (n - j) mod n times.
// Collapses every rotation orbit onto its increasing representative.
inline IncreasingRhythm to_increasing(const Rhythm& r) {
    if (r.size() < 2) return IncreasingRhythm(r);
    const std::size_t n = r.size();
    const std::size_t k =
        (n - static_cast<std::size_t>(jumping_number(r))) % n;
    // rot^k as a single permutation: result[i] = a[(i + n - k) mod n]
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = r.onset((i + n - k) % n);
    return IncreasingRhythm(Rhythm(std::move(out), r.modulus()));
}

// True iff the gap wrapping past N strictly exceeds the leading onset,
// i.e. N - a_{n-1} > a_0.  Improper rhythms need one corrective rotation
// after averaging to stay increasing.
inline bool is_proper(const IncreasingRhythm& r) {
    if (r.size() < 2)
        throw std::invalid_argument("properness defined only for two or more onsets");
    const int n = r.modulus().value();
    return n - r.onsets().back() > r.onsets().front();
}

// Discrete average restricted to increasing rhythms: average, then rotate
// once if the input was improper.  Identity on empty and singleton rhythms.
inline IncreasingRhythm increasing_average(const IncreasingRhythm& r) {
    if (r.size() < 2) return r;
    Rhythm averaged = discrete_average(r.rhythm());
    if (!is_proper(r)) averaged = rotate_right(averaged);
    return IncreasingRhythm(std::move(averaged));
}

// Discrete average transported to the signed representative range.
inline SignedRhythm discrete_average(const SignedRhythm& r) {
    return to_signed(discrete_average(to_nonneg(r)));
}

// ===== enumeration ==========================================================

// Visit every rhythm with exactly n onsets: all n rotations of every
// n-element subset of {0..N-1} (singletons and the empty rhythm once each).
inline void for_each_rhythm(Modulus m, int n,
                            const std::function<void(const Rhythm&)>& fn) {
    const int N = m.value();
    if (N > 24) throw BoundExceededError("rhythm enumeration capped at modulus 24");
    if (n < 0 || n > N)
        throw std::invalid_argument("onset count out of range");
    if (n == 0) {
        fn(Rhythm({}, m));
        return;
    }
    const std::uint32_t full = (N == 32) ? 0xffffffffu : ((1u << N) - 1);
    // Gosper's hack: iterate n-bit subsets in increasing mask order.
    std::uint32_t mask = (1u << n) - 1;
    while (mask <= full) {
        std::vector<int> onsets;
        onsets.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < N; ++i)
            if (mask & (1u << i)) onsets.push_back(i);
        Rhythm base(std::move(onsets), m);
        Rhythm cur = base;
        for (int k = 0; k < n; ++k) {
            fn(cur);
            cur = rotate_right(cur);
        }
        std::uint32_t c = mask & (0u - mask);
        std::uint32_t r = mask + c;
        if (r == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

// Visit every rhythm of every onset count 0..N.
inline void for_each_rhythm(Modulus m, const std::function<void(const Rhythm&)>& fn) {
    for (int n = 0; n <= m.value(); ++n) for_each_rhythm(m, n, fn);
}

// ===== literals =============================================================

namespace detail {

inline std::vector<int> parse_int_tuple(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("tuple literal must be parenthesized: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw std::invalid_argument("empty component in tuple literal: " + text);
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad integer '" + item + "' in tuple literal");
        out.push_back(v);
    }
    if (s.back() == ',')
        throw std::invalid_argument("trailing comma in tuple literal: " + text);
    return out;
}

template <class It>
std::string render_tuple(It begin, It end) {
    std::string out = "(";
    for (It it = begin; it != end; ++it) {
        if (it != begin) out += ",";
        out += std::to_string(*it);
    }
    out += ")";
    return out;
}

}  // namespace detail

// Parses "(2,3,7)" or "()" and validates the result as a rhythm.
inline Rhythm parse_rhythm(const std::string& text, Modulus m) {
    return Rhythm(detail::parse_int_tuple(text), m);
}

inline SignedRhythm parse_signed_rhythm(const std::string& text, Modulus m) {
    return SignedRhythm(detail::parse_int_tuple(text), m);
}

inline std::string to_literal(const Rhythm& r) {
    return detail::render_tuple(r.onsets().begin(), r.onsets().end());
}

inline std::string to_literal(const SignedRhythm& r) {
    return detail::render_tuple(r.onsets().begin(), r.onsets().end());
}

}  // namespace rhythmbool
