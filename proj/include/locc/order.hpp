#pragma once

#include <cstddef>
#include <vector>

#include "locc/schmidt.hpp"

namespace locc {

enum class Classification {
    Equivalent,   // convertible both ways (equal within coeff_tol)
    AtoB,         // a -> b deterministically, not b -> a
    BtoA,         // b -> a deterministically, not a -> b
    Incomparable, // neither direction
};

const char* to_string(Classification c) noexcept;

// Prefix sums S_k = c_1 + ... + c_k for k = 1..rank.  Last entry is the
// total (1 within kSumEps).
std::vector<double> partial_sums(const SchmidtVector& v);

// Deterministic convertibility a -> b: every prefix sum of a is at most the
// matching prefix sum of b, with tol slack absorbing float noise.  Vectors of
// unequal rank are compared after zero-padding the shorter one.
bool convertible(const SchmidtVector& a, const SchmidtVector& b,
                 double tol = 1e-9);

struct ClassifyResult {
    Classification variant = Classification::Equivalent;
    // 1-based index of the first prefix-sum violation in each direction;
    // 0 when the direction holds.
    std::size_t witness_ab = 0;
    std::size_t witness_ba = 0;
};

// Four-way ordering verdict for a pair.  Ties within tol count for both
// directions, so a pair that is entrywise equal within tol is Equivalent.
ClassifyResult classify(const SchmidtVector& a, const SchmidtVector& b,
                        double tol = 1e-9);

// Rank-3 shortcut: the pair is incomparable exactly when the largest and
// smallest coefficients are strictly ordered the same way,
//   (a1 > b1 and a3 > b3) or (a1 < b1 and a3 < b3),
// with comparisons strict beyond tol.  Requires effective rank 3 on both
// sides (NotRank3 otherwise).  Agrees with classify() by construction; the
// exhaustive grid suite pins that down.
bool incomparable_rank3_fast(const SchmidtVector& a, const SchmidtVector& b,
                             double tol = 1e-9);

// Slack profile eps_k = S_k(b) - S_k(a) for k = 1..d-1 (the trivial k = d
// entry is dropped).  a -> b convertible iff every entry >= -tol.
std::vector<double> epsilon_profile(const SchmidtVector& a,
                                    const SchmidtVector& b);

} // namespace locc
