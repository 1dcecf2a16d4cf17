#pragma once

#include <cstddef>
#include <vector>

#include "locc/errors.hpp"

namespace locc {

// Coefficient vectors are canonical probability vectors: sorted
// non-increasing, sum 1 within kSumEps, entries at or below kZeroEps snapped
// to exact zero.  All ordering and search code relies on this, so the only
// way to build one is make_schmidt().
inline constexpr double kSumEps = 1e-12;
inline constexpr double kZeroEps = 1e-15;

class SchmidtVector {
public:
    std::size_t rank() const noexcept { return coeffs_.size(); }

    // Number of strictly positive coefficients (trailing exact zeros are
    // padding, not support).
    std::size_t effective_rank() const noexcept;

    double operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const SchmidtVector& other) const noexcept {
        return coeffs_ == other.coeffs_;
    }

private:
    friend SchmidtVector make_schmidt(const std::vector<double>& raw);
    explicit SchmidtVector(std::vector<double> coeffs)
        : coeffs_(std::move(coeffs)) {}

    std::vector<double> coeffs_;
};

// Validates, sorts descending, renormalizes.  Raw sums may be off by up to
// 1e-6 (hand-typed inputs); anything worse signals garbage, not round-off,
// and throws NotNormalizable.  Entries below -kZeroEps throw
// NegativeCoefficient; entries in [-kZeroEps, kZeroEps] clamp to zero.
SchmidtVector make_schmidt(const std::vector<double>& raw);

// Entanglement entropy in bits.  Kept as a distinct type so call sites can't
// silently mix entropies with raw coefficients.
struct EntropyValue {
    double bits = 0.0;
};

// -sum p_i log2 p_i over the positive entries.
EntropyValue entropy(const SchmidtVector& v);

// h(p) = -p log2 p - (1-p) log2 (1-p) on [0, 1]; endpoints give 0.
// Outside the closed interval throws OutOfDomain.
EntropyValue binary_entropy(double p);

// Tolerances and iteration budget shared by every search routine.
struct SearchConfig {
    double entropy_tol = 1e-12;   // |E(a)-E(b)| below this counts as equal
    double coeff_tol = 1e-9;      // coefficient / partial-sum comparison slack
    int max_bisection_iters = 200;
    double bracket_width = 1e-15; // terminal bisection bracket width

    // Throws std::invalid_argument unless all tolerances are strictly
    // positive and the iteration budget is at least 1.
    void validate() const;
};

} // namespace locc
