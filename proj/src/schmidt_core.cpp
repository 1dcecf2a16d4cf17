#include "locc/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace locc {

std::size_t SchmidtVector::effective_rank() const noexcept {
    std::size_t n = 0;
    for (double c : coeffs_) {
        if (c > kZeroEps) ++n;
    }
    return n;
}

SchmidtVector make_schmidt(const std::vector<double>& raw) {
    for (double c : raw) {
        if (c < -kZeroEps) {
            throw NegativeCoefficient(
                "coefficient " + std::to_string(c) + " is negative");
        }
    }

    std::vector<double> v(raw);
    for (double& c : v) {
        if (c <= kZeroEps) c = 0.0;
    }

    // Sorting before summing makes the normalizer, and therefore the whole
    // result, independent of the input order bit-for-bit.
    std::sort(v.begin(), v.end(), std::greater<double>());

    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    if (std::fabs(sum - 1.0) > 1e-6) {
        throw NotNormalizable(
            "coefficients sum to " + std::to_string(sum) +
            ", outside the 1 +/- 1e-6 band");
    }

    // A sum within kSumEps is treated as already normalized.  Dividing by
    // 1 +/- 1ulp would shave last bits off every coefficient, so skipping it
    // makes construction idempotent: feeding a vector's coefficients back in
    // reproduces it exactly.
    if (std::fabs(sum - 1.0) > kSumEps) {
        for (double& c : v) c /= sum;
    }

    // Renormalization can leave dust where a clamped zero used to be.
    for (double& c : v) {
        if (c <= kZeroEps) c = 0.0;
    }
    return SchmidtVector(std::move(v));
}

EntropyValue entropy(const SchmidtVector& v) {
    double bits = 0.0;
    for (double c : v.coeffs()) {
        if (c > kZeroEps) bits -= c * std::log2(c);
    }
    return EntropyValue{bits};
}

EntropyValue binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw OutOfDomain("binary entropy argument " + std::to_string(p) +
                          " outside [0, 1]");
    }
    double bits = 0.0;
    if (p > kZeroEps) bits -= p * std::log2(p);
    if (1.0 - p > kZeroEps) bits -= (1.0 - p) * std::log2(1.0 - p);
    return EntropyValue{bits};
}

void SearchConfig::validate() const {
    if (!(entropy_tol > 0.0) || !(coeff_tol > 0.0) || !(bracket_width > 0.0)) {
        throw std::invalid_argument("search tolerances must be positive");
    }
    if (max_bisection_iters < 1) {
        throw std::invalid_argument("max_bisection_iters must be >= 1");
    }
}

} // namespace locc
