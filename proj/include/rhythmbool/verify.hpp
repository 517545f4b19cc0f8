#pragma once

// Exhaustive invariant checks behind the `verify` command.  Every check
// sweeps a fully enumerated domain for one modulus and reports pass/fail;
// a failing report always carries a concrete counterexample.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rhythmbool/boolvec.hpp"
#include "rhythmbool/jsonio.hpp"
#include "rhythmbool/rhythm.hpp"
#include "rhythmbool/theory.hpp"

namespace rhythmbool {

struct VerificationReport {
    std::string check;
    int n = 0;
    bool passed = false;
    std::string counterexample;  // non-empty exactly when the check failed
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    double elapsed_seconds = 0.0;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "balanced",   "closed-form", "closure", "commute",
        "cyclicity", "parental",    "recurrence"};
    return names;
}

// Largest modulus each check will sweep; beyond it the run is refused.
inline int check_bound(const std::string& check) {
    if (check == "balanced") return 24;
    if (check == "cyclicity") return 12;
    if (check == "closed-form") return 16;
    if (check == "recurrence") return 64;
    if (check == "parental") return 1024;
    if (check == "closure" || check == "commute") return 10;
    throw std::invalid_argument("unknown check '" + check + "'");
}

namespace detail {

// ones-count of the closed-form polynomial is exactly half the input space
inline void check_balanced(int n, VerificationReport& r) {
    AnfPoly p = closed_form_bav0(Modulus(n));
    const std::uint64_t ones = ones_count(p, check_bound("balanced"));
    const std::uint64_t expected = std::uint64_t{1} << (n - 1);
    r.counts = {{"ones", ones}, {"inputs", std::uint64_t{1} << n}};
    r.passed = ones == expected;
    if (!r.passed)
        r.counterexample = "ones-count " + std::to_string(ones) +
                           " instead of " + std::to_string(expected);
}

// rotating the input shifts every average coordinate by one position
inline void check_cyclicity(int n, VerificationReport& r) {
    Modulus m(n);
    std::uint64_t states = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        BoolVec v = BoolVec::from_word(w, m);
        BoolVec rotated = rotate_right(v);
        for (int i = 0; i < n; ++i) {
            ++states;
            int predecessor = i == 0 ? n - 1 : i - 1;
            if (boolean_average_bit(i, rotated) !=
                boolean_average_bit(predecessor, v)) {
                r.counts = {{"states", states}};
                r.counterexample =
                    "vector " + to_literal(v) + " coordinate " + std::to_string(i);
                return;
            }
        }
    }
    r.counts = {{"states", states}};
    r.passed = true;
}

// the closed-form construction equals the truth-table derivation
inline void check_closed_form(int n, VerificationReport& r) {
    Modulus m(n);
    AnfPoly closed = closed_form_bav0(m);
    AnfPoly derived = in_basis(derived_bav0(m), VarBasis::y);
    r.counts = {{"terms", closed.term_count()},
                {"inputs", std::uint64_t{1} << n}};
    if (closed == derived) {
        r.passed = true;
        return;
    }
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
        if (closed.evaluate_word(w) != derived.evaluate_word(w)) {
            r.counterexample = "assignment word " + std::to_string(w) +
                               " distinguishes the two constructions";
            return;
        }
    r.counterexample = "term sets differ";
}

// stepping the (n-1)-polynomial reproduces the n-polynomial
inline void check_recurrence(int n, VerificationReport& r) {
    AnfPoly stepped = recurrence_step(closed_form_bav0(Modulus(n - 1)));
    AnfPoly direct = closed_form_bav0(Modulus(n));
    r.counts = {{"terms", direct.term_count()}};
    if (stepped == direct) {
        r.passed = true;
        return;
    }
    AnfPoly diff = stepped + direct;
    AnfPoly witness = AnfPoly::from_terms({diff.terms().front()}, diff.modulus(),
                                          diff.index_set(), diff.basis());
    r.counterexample = "monomial " + to_text(witness) + " appears in only one";
}

// the listed zero-average pairs equal the brute-force set and number n
inline void check_parental(int n, VerificationReport& r) {
    Modulus m(n);
    std::vector<ParentalPair> listed = parental_pairs(m);
    std::set<std::pair<int, int>> got;
    for (ParentalPair p : listed) got.insert({p.a, p.b});
    std::set<std::pair<int, int>> brute;
    for (int a = m.signed_min(); a <= m.signed_max(); ++a)
        for (int b = m.signed_min(); b <= m.signed_max(); ++b)
            if (average(SignedResidue(a, m), SignedResidue(b, m)).value() == 0)
                brute.insert({a, b});
    r.counts = {{"pairs", listed.size()}};
    if (got == brute && listed.size() == static_cast<std::size_t>(n)) {
        r.passed = true;
        return;
    }
    for (const auto& [a, b] : brute)
        if (!got.count({a, b})) {
            r.counterexample = "missing pair (" + std::to_string(a) + "," +
                               std::to_string(b) + ")";
            return;
        }
    for (const auto& [a, b] : got)
        if (!brute.count({a, b})) {
            r.counterexample = "extra pair (" + std::to_string(a) + "," +
                               std::to_string(b) + ")";
            return;
        }
    r.counterexample = "duplicate pairs in listing";
}

// averaging any rhythm yields a rhythm with the same onset count
inline void check_closure(int n, VerificationReport& r) {
    Modulus m(n);
    std::uint64_t rhythms = 0;
    std::string bad;
    for_each_rhythm(m, [&](const Rhythm& rh) {
        if (!bad.empty()) return;
        ++rhythms;
        try {
            if (discrete_average(rh).size() != rh.size()) bad = to_literal(rh);
        } catch (const std::exception&) {
            bad = to_literal(rh);
        }
    });
    r.counts = {{"rhythms", rhythms}};
    r.passed = bad.empty();
    if (!r.passed) r.counterexample = "rhythm " + bad;
}

// averaging commutes with translation on rhythms and rotation on vectors
inline void check_commute(int n, VerificationReport& r) {
    Modulus m(n);
    std::uint64_t rhythms = 0;
    std::string bad;
    for_each_rhythm(m, [&](const Rhythm& rh) {
        if (!bad.empty()) return;
        ++rhythms;
        if (discrete_average(translate(rh)) != translate(discrete_average(rh)))
            bad = "rhythm " + to_literal(rh);
    });
    if (bad.empty()) {
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
            BoolVec v = BoolVec::from_word(w, m);
            if (boolean_average(rotate_right(v)) !=
                rotate_right(boolean_average(v))) {
                bad = "vector " + to_literal(v);
                break;
            }
        }
    }
    r.counts = {{"rhythms", rhythms}, {"vectors", std::uint64_t{1} << n}};
    r.passed = bad.empty();
    if (!r.passed) r.counterexample = bad;
}

}  // namespace detail

inline VerificationReport run_check(const std::string& check, int n) {
    const int bound = check_bound(check);  // also rejects unknown names
    const int lowest = check == "recurrence" ? 4 : 3;
    if (n < lowest)
        throw std::invalid_argument("check '" + check + "' needs modulus >= " +
                                    std::to_string(lowest));
    if (n > bound)
        throw BoundExceededError("check '" + check + "' is capped at modulus " +
                                 std::to_string(bound));
    VerificationReport r;
    r.check = check;
    r.n = n;
    const auto t0 = std::chrono::steady_clock::now();
    if (check == "balanced")
        detail::check_balanced(n, r);
    else if (check == "cyclicity")
        detail::check_cyclicity(n, r);
    else if (check == "closed-form")
        detail::check_closed_form(n, r);
    else if (check == "recurrence")
        detail::check_recurrence(n, r);
    else if (check == "parental")
        detail::check_parental(n, r);
    else if (check == "closure")
        detail::check_closure(n, r);
    else
        detail::check_commute(n, r);
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

// Runs one check over an inclusive modulus range, optionally on several
// threads.  The report list is deterministic: bounds are validated up front
// and results are ordered by modulus, then check name.
inline std::vector<VerificationReport> run_checks(const std::string& check,
                                                  int n_first, int n_last,
                                                  int jobs = 1) {
    if (n_first > n_last) throw std::invalid_argument("empty modulus range");
    const int bound = check_bound(check);
    const int lowest = check == "recurrence" ? 4 : 3;
    if (n_first < lowest)
        throw std::invalid_argument("check '" + check + "' needs modulus >= " +
                                    std::to_string(lowest));
    if (n_last > bound)
        throw BoundExceededError("check '" + check + "' is capped at modulus " +
                                 std::to_string(bound));
    std::vector<int> ns;
    for (int n = n_first; n <= n_last; ++n) ns.push_back(n);
    std::vector<VerificationReport> out(ns.size());
    const std::size_t workers =
        std::min<std::size_t>(std::max(jobs, 1), ns.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) out[i] = run_check(check, ns[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= ns.size()) return;
                try {
                    out[i] = run_check(check, ns[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.n != b.n ? a.n < b.n : a.check < b.check;
              });
    return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.passed; });
}

// JSON report; elapsed_seconds is the one run-dependent field.
inline ordered_json to_json(const VerificationReport& r) {
    ordered_json counts = ordered_json::object();
    for (const auto& [key, value] : r.counts) counts[key] = value;
    ordered_json j;
    j["check"] = r.check;
    j["n"] = r.n;
    j["passed"] = r.passed;
    j["counterexample"] =
        r.counterexample.empty() ? ordered_json() : ordered_json(r.counterexample);
    j["counts"] = counts;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

// Stable one-line rendering (no timing, so output is byte-reproducible).
inline std::string to_text_line(const VerificationReport& r) {
    std::string out = r.check + " n=" + std::to_string(r.n) +
                      (r.passed ? "  pass" : "  FAIL");
    for (const auto& [key, value] : r.counts)
        out += "  " + key + "=" + std::to_string(value);
    if (!r.counterexample.empty()) out += "  counterexample: " + r.counterexample;
    return out;
}

}  // namespace rhythmbool
