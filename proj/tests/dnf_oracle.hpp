#pragma once

// Test-only reference for truth-table-to-polynomial conversion, shared by the
// engine tests and the acceptance suite.

#include <cstdint>
#include <set>
#include <vector>

#include <rhythmbool/anf.hpp>

namespace rhythmbool::testing {

// Reference conversion via disjunctive normal form: every 1-row of the truth
// table contributes the expansion of (product of x_i for set bits) times
// (product of (x_j + 1) for clear bits), i.e. one monomial per superset of
// the row's support built from its zero positions; everything summed mod 2.
// Exponential on purpose: an independent slow oracle.
template <class F>
AnfPoly dnf_expansion(F&& f, Modulus m, IndexSet conv, VarBasis basis) {
    const int n = m.value();
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t full = size - 1;
    std::vector<std::uint8_t> coeff(size, 0);
    for (std::uint64_t w = 0; w < size; ++w) {
        if (!(f(BoolVec::from_word(w, m, conv)) & 1)) continue;
        std::uint64_t zeros = full & ~w;
        std::uint64_t t = zeros;
        while (true) {
            coeff[w | t] ^= 1;
            if (t == 0) break;
            t = (t - 1) & zeros;
        }
    }
    std::set<std::uint64_t> masks;
    for (std::uint64_t w = 0; w < size; ++w)
        if (coeff[w]) masks.insert(w);
    return AnfPoly::from_term_masks(std::move(masks), m, conv, basis);
}

}  // namespace rhythmbool::testing
