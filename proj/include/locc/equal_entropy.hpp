#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "locc/order.hpp"
#include "locc/schmidt.hpp"

namespace locc {

// Largest entropy a rank-d vector can have once its top coefficient is
// pinned to beta1: the tail spreads uniformly, giving
//   h(beta1) + (1 - beta1) log2(d - 1).
// Needs beta1 in [1/d, 1] and d >= 2 (OutOfDomain otherwise).
EntropyValue max_entropy_given_top(double beta1, std::size_t rank);

struct PartnerResult {
    SchmidtVector partner;
    double entropy_residual = 0.0; // E(partner) - E(input), bits
    Classification classification = Classification::Incomparable;
    int iterations = 0;
};

// Finds the rank-3 vector with top coefficient beta1 whose entropy matches
// the input's.  The middle coefficient is bisected over the sorted bracket
// [(1-beta1)/2, min(beta1, 1-beta1)], where the restricted entropy is
// strictly decreasing, so the solution is unique.  A partner distinct from
// the input is always incomparable to it (equal-entropy vectors are either
// identical or incomparable); the classification is recorded in the result.
//
// Infeasible (exit-code 3 in the CLI) covers every no-partner-exists case:
// beta1 outside [1/3, 1), beta1 within coeff_tol of the input's own top
// coefficient, the pinned-top entropy ceiling falling below the target, or
// the target falling below the bracket's low end.  ConvergenceFailure is
// reserved for the iteration budget running out.
PartnerResult find_partner(const SchmidtVector& v, double beta1,
                           const SearchConfig& cfg = {});

struct FamilyRecord {
    double beta1 = 0.0;
    SchmidtVector partner;
    double entropy_residual = 0.0;
    std::size_t differing_coeffs = 0;
};

// Runs find_partner over an inclusive evenly spaced grid of beta1 values.
// Infeasible grid points and points within coeff_tol of the input's top
// coefficient are skipped, leaving gaps rather than errors; EmptyRange is
// thrown only when exclusion leaves nothing to attempt.  Records come back
// in ascending beta1 order.
std::vector<FamilyRecord> family_sweep(const SchmidtVector& v, double lo,
                                       double hi, int steps,
                                       const SearchConfig& cfg = {});

// Strips one coefficient the pair shares (position j, 1-based, equal within
// tol) and rescales both tails by the remaining mass.  Equal ranks >= 3
// required; kappa = 1 (within kZeroEps) leaves no mass and throws
// DegenerateKappa.
std::pair<SchmidtVector, SchmidtVector> reduce_shared(const SchmidtVector& a,
                                                      const SchmidtVector& b,
                                                      std::size_t j,
                                                      double tol = 1e-9);

// Inverse direction: scales both vectors by (1 - kappa) and inserts kappa as
// a shared coefficient, raising the rank by one.  Entropy obeys the grouping
// law E(lifted) = h(kappa) + (1 - kappa) E(original), so entropy equality of
// a pair survives lifting, and so does incomparability.
std::pair<SchmidtVector, SchmidtVector> lift(const SchmidtVector& a,
                                             const SchmidtVector& b,
                                             double kappa);

// Smallest 1-based position where the two vectors agree within tol, if any.
std::optional<std::size_t> find_shared_index(const SchmidtVector& a,
                                             const SchmidtVector& b,
                                             double tol = 1e-9);

// Number of positions where the vectors differ by more than tol.
// Equal-entropy distinct pairs always differ in at least three.
std::size_t differing_count(const SchmidtVector& a, const SchmidtVector& b,
                            double tol = 1e-9);

} // namespace locc
