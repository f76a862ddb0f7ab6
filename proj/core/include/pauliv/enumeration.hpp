#pragma once

#include "pauliv/diophantine.hpp"
#include "pauliv/number_theory.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace pauliv {

// Lattice point of the inflated transformed meniscus. z lives in transformed
// coordinates; u_scaled = tau^{-1} z = sqrt(5^t) * u is the candidate numerator
// in original coordinates.
struct Candidate {
    GaussianInt z;
    unsigned t = 0;
    GaussianInt u_scaled;
};

struct ColumnRange {
    BigInt x;
    BigInt y_lo;
    BigInt y_hi; // y_lo > y_hi means the column holds no lattice rows
};

// Vertical segments covering sqrt(5^t) * tau(M), one per integer column of the
// band; bounds come from the transformed enclosing triangle in interval
// arithmetic (outer rounding, so boundary rows are always included).
std::vector<ColumnRange> scan_columns(const Meniscus& m, const GridTransform& tau, unsigned t);

// All members of the parity-t class (levels <= t with t - level even) in
// column-major order, columns ascending, Im ascending within a column.
// exact_level is true when the point is not divisible by 5 after tau^{-1},
// i.e. its level is exactly t. Return false from the visitor to stop.
void for_each_member(const Meniscus& m, const GridTransform& tau, unsigned t,
                     const std::function<bool(const Candidate&, bool exact_level)>& visit);

// The level-t stream: exact-level members only.
std::vector<Candidate> candidates_at(unsigned t, const Meniscus& m, const GridTransform& tau);

// Count of parity-t members (the enumerable part of C_t).
std::uint64_t count_members(const Meniscus& m, const GridTransform& tau, unsigned t);

// Verifies |C_{t+2k}| >= 1 + 5^k by direct count; nullopt marks an unmet
// precondition (fewer than two parity-t members at level t).
std::optional<bool> growth_check(const Meniscus& m, const GridTransform& tau, unsigned t, unsigned k);

struct ConjectureRow {
    unsigned t = 0;
    std::uint64_t candidates = 0;  // cumulative |C_t| over both parities
    std::uint64_t s2s_wins = 0;    // parity-t members whose 5^t - |z|^2 is a sum of two squares
    std::uint64_t prime_wins = 0;  // ... a (probable) prime of the form 4m+1
    std::uint64_t parity_count = 0;
    double area = 0;               // 5^t * Area(M)
};

// Per-level counts backing the two growth conjectures; throws resource_error
// when the lattice-point budget is exceeded.
std::vector<ConjectureRow> conjecture_stats(const Meniscus& m, const GridTransform& tau,
                                            unsigned t_max, Rng& rng,
                                            std::uint64_t max_points = 10'000'000);

std::string conjecture_csv(const std::vector<ConjectureRow>& rows);

} // namespace pauliv
