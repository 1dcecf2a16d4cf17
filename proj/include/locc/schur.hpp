#pragma once

#include <cstddef>
#include <vector>

#include "locc/order.hpp"
#include "locc/schmidt.hpp"

namespace locc {

// Sign certificate for strict Schur concavity of the entropy: for
// coefficients lambda_i != lambda_j (both positive) the product
//   (lambda_i - lambda_j) * log2(lambda_j / lambda_i)
// is strictly negative; it vanishes only on ties.
struct SchurWitness {
    std::size_t i = 0; // 1-based
    std::size_t j = 0;
    double product = 0.0;
};

// Indices are 1-based.  Throws std::out_of_range for bad indices and
// BoundaryCoefficient when either coefficient is zero (the log diverges).
SchurWitness schur_witness(const SchmidtVector& v, std::size_t i,
                           std::size_t j);

// Max over coordinates of |analytic - central difference| for the gradient
// of the unconstrained entropy, d/dp (-p log2 p) = -log2 p - log2 e.
// Requires every coefficient > 10*step so the stencil stays in-domain;
// violations throw StepTooLarge.
double gradient_check(const SchmidtVector& v, double step = 1e-6);

struct GapReport {
    double direct_gap = 0.0;     // E(a) - E(b), bits
    double telescoped_gap = 0.0; // KL part plus slack-weighted log ramps
    std::vector<double> epsilons;
};

// Entropy gap of a convertible pair a -> b, computed two ways: directly and
// through the decomposition
//   E(a) - E(b) = sum_i b_i log2(b_i / a_i)
//               + sum_k eps_k (log2 a_k - log2 a_{k+1}),
// an exact identity, so the two must agree to float precision.  Zero
// coefficients follow the entropy convention: b_i = 0 kills its KL term, and
// a ramp term with a_{k+1} = 0 is dropped (its eps_k is then forced to dust
// by convertibility).  Throws NotConvertible when a -> b fails and
// EquivalentPair when the pair is entrywise equal within tol.
GapReport verify_theorem2(const SchmidtVector& a, const SchmidtVector& b,
                          double tol = 1e-9);

// Reconstructs a rank-3 vector from its entropy, one pinned coefficient, and
// the pin's sorted position (1-based).  The remaining two coefficients are
// recovered by bisecting the restricted entropy, which is strictly monotone
// on the ordered bracket; the unique solution must be v itself, and the
// reconstruction is compared against v within cfg.coeff_tol (NoSolution on
// mismatch, which would signal a solver bug, since v is a solution).
SchmidtVector verify_theorem1(const SchmidtVector& v, std::size_t shared_index,
                              const SearchConfig& cfg = {});

} // namespace locc
