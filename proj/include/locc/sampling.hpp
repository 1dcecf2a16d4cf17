#pragma once

#include <cstdint>
#include <utility>

#include "locc/schmidt.hpp"

namespace locc {

// Deterministic per-trial RNG: every trial derives its own stream from
// (seed, trial) through a splitmix-style mix, so suites reproduce
// byte-identically for a given seed regardless of trial order or count.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();

    // Uniform in [0, 1) with 53-bit resolution; avoids the standard
    // distributions, whose output is implementation-defined.
    double uniform01();

    // Uniform in [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// Uniform (flat Dirichlet) sample from the sorted simplex.
SchmidtVector random_sorted_simplex(std::size_t rank, TrialRng& rng);

// Sample bounded away from the simplex boundary: every coefficient at least
// 0.5 / rank.  Needed where logs or finite differences would blow up.
SchmidtVector random_interior_simplex(std::size_t rank, TrialRng& rng);

// A vector majorized by v: applies `moves` mass transfers from larger to
// smaller coefficients and re-sorts.  The result is convertible to v and,
// with overwhelming probability, differs from it in some coefficient by
// more than min_diff (the caller should resample on the rare miss).
SchmidtVector majorize_down(const SchmidtVector& v, TrialRng& rng, int moves);

// Equal-entropy incomparable pair of the given rank (>= 3) with all
// coefficients differing pairwise: rank 3 delegates to the partner search;
// higher ranks perturb the leading rank-2 coefficients and re-split the tail
// mass by bisection.  Throws ConvergenceFailure if repeated attempts fail
// (which a sane RNG never produces).
std::pair<SchmidtVector, SchmidtVector> random_equal_entropy_pair(
    std::size_t rank, TrialRng& rng, const SearchConfig& cfg = {});

} // namespace locc
