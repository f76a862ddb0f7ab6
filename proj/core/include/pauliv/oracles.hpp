#pragma once

#include "pauliv/enumeration.hpp"
#include "pauliv/vword.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pauliv {

// Independent brute-force counterparts of the fast paths, shared by the unit
// tests and the selftest command. None of them touch the grid transform or
// the column scan.

// All parity-t members of the meniscus found by scanning the whole disk
// |z|^2 <= 5^t, x ascending then y ascending.
std::vector<GaussianInt> disk_members(const Meniscus& m, unsigned t);
// ... restricted to exact level t (not divisible by 5).
std::vector<GaussianInt> disk_candidates_exact(const Meniscus& m, unsigned t);

// Two-squares witness by direct search over c <= sqrt(n); n is capped.
std::optional<std::pair<BigInt, BigInt>> s2s_exhaustive(const BigInt& n);

// Least t <= t_limit at which some exact-level-t candidate wins (its
// norm-equation remainder is a sum of two squares, decided exhaustively);
// -1 when none exists within the limit.
int min_winning_level_bruteforce(const Meniscus& m, int t_limit);

// Ordered signed four-square count of 5^t via the two-squares convolution.
BigInt four_square_bruteforce(unsigned t);

// Enumerates every normal form of V-count t (all reduced words, all 8 tails),
// evaluates each, and returns (number of words, number of distinct matrices).
std::pair<BigInt, BigInt> normal_form_exhaustive(unsigned t);

struct SweepResult {
    bool ok = true;
    std::uint64_t words_at_max = 0; // reduced words of exactly the maximal length
    std::string first_failure;      // offending word, if any
};

// Checks w[T] != 0 over the given tables for every reduced word of length
// 1..max_len.
SweepResult freeness_sweep(unsigned max_len, const std::array<ModFiveMatrix, 3>& tables);
// Checks that some entry of w[R] has lowest-terms denominator exactly 5^t for
// every reduced word of length 1..max_len.
SweepResult denominator_sweep(unsigned max_len);

struct SelftestReport {
    bool ok = true;
    std::string first_failure;
    std::vector<std::string> passed;
};

// The oracle suites behind `selftest`: normal-form counts, four-square
// counts, freeness, denominator exactness, exhaustive two-squares agreement,
// enumeration-vs-disk equivalence, conjecture-stats smoke. corrupt_generators
// swaps in a broken mod-5 table (negative control).
SelftestReport run_selftest(bool deep, bool corrupt_generators, std::ostream& log);

} // namespace pauliv
