#pragma once

#include <cstdint>
#include <string>

#include "locc/schmidt.hpp"

namespace locc {

struct SuiteReport {
    std::string suite;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    // JSON description of the first failing case; empty when clean.
    std::string first_counterexample;

    bool passed() const noexcept { return failures == 0; }
};

// Rank-3 reconstruction from (entropy, one coefficient, position): `trials`
// random rank-3 vectors, each reconstructed from every position, compared
// entrywise within cfg.coeff_tol.
SuiteReport run_theorem1_suite(int trials, std::uint64_t seed,
                               const SearchConfig& cfg = {});

// Strict entropy ordering along convertibility: per rank 2..6,
// `trials_per_rank` random comparable pairs with some coefficient differing
// by at least 1e-4.  Checks the gap exceeds 1e-13 bits and that the direct
// and telescoped gap computations agree within 1e-10.
SuiteReport run_theorem2_suite(int trials_per_rank, std::uint64_t seed,
                               const SearchConfig& cfg = {});

// Strict Schur concavity: `trials` vectors spread over ranks 2..6; every
// coefficient pair separated by more than 1e-6 must give a strictly negative
// witness product, and the analytic gradient must match central differences
// to 1e-6 on interior vectors.
SuiteReport run_schur_suite(int trials, std::uint64_t seed,
                            const SearchConfig& cfg = {});

// Exhaustive agreement between the rank-3 first/last-coefficient shortcut
// and the general prefix-sum classification, over every ordered pair from
// the grid {(i, j, k)/100 : i >= j >= k >= 1, i + j + k = 100}.
SuiteReport run_eq5_suite(const SearchConfig& cfg = {});

// Shared-coefficient reduction: `pairs` rank-5 equal-entropy incomparable
// pairs sharing one or two coefficients (alternating), reduced until no
// shared coefficient remains; the reduced pairs must stay equal-entropy
// (within 1e-10), incomparable, and differ everywhere.
SuiteReport run_reduction_suite(int pairs, std::uint64_t seed,
                                const SearchConfig& cfg = {});

} // namespace locc
