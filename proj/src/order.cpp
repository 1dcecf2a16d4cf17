#include "locc/order.hpp"

#include <algorithm>
#include <string>

namespace locc {

namespace {

// Prefix sums after zero-padding to d entries.  Padding leaves sums constant
// past the stored rank.
std::vector<double> padded_sums(const SchmidtVector& v, std::size_t d) {
    std::vector<double> s(d);
    double acc = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        if (k < v.rank()) acc += v[k];
        s[k] = acc;
    }
    return s;
}

// First 1-based k with S_k(a) > S_k(b) + tol, or 0 if none.
std::size_t first_violation(const std::vector<double>& sa,
                            const std::vector<double>& sb, double tol) {
    for (std::size_t k = 0; k < sa.size(); ++k) {
        if (sa[k] > sb[k] + tol) return k + 1;
    }
    return 0;
}

} // namespace

const char* to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Equivalent: return "Equivalent";
        case Classification::AtoB: return "AtoB";
        case Classification::BtoA: return "BtoA";
        case Classification::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

std::vector<double> partial_sums(const SchmidtVector& v) {
    return padded_sums(v, v.rank());
}

bool convertible(const SchmidtVector& a, const SchmidtVector& b, double tol) {
    const std::size_t d = std::max(a.rank(), b.rank());
    return first_violation(padded_sums(a, d), padded_sums(b, d), tol) == 0;
}

ClassifyResult classify(const SchmidtVector& a, const SchmidtVector& b,
                        double tol) {
    const std::size_t d = std::max(a.rank(), b.rank());
    const std::vector<double> sa = padded_sums(a, d);
    const std::vector<double> sb = padded_sums(b, d);

    ClassifyResult r;
    r.witness_ab = first_violation(sa, sb, tol);
    r.witness_ba = first_violation(sb, sa, tol);

    if (r.witness_ab == 0 && r.witness_ba == 0) {
        r.variant = Classification::Equivalent;
    } else if (r.witness_ab == 0) {
        r.variant = Classification::AtoB;
    } else if (r.witness_ba == 0) {
        r.variant = Classification::BtoA;
    } else {
        r.variant = Classification::Incomparable;
    }
    return r;
}

bool incomparable_rank3_fast(const SchmidtVector& a, const SchmidtVector& b,
                             double tol) {
    if (a.effective_rank() != 3 || b.effective_rank() != 3) {
        throw NotRank3("fast incomparability test needs effective rank 3, got " +
                       std::to_string(a.effective_rank()) + " and " +
                       std::to_string(b.effective_rank()));
    }
    const double d1 = a[0] - b[0];
    const double d3 = a[2] - b[2];
    return (d1 > tol && d3 > tol) || (d1 < -tol && d3 < -tol);
}

std::vector<double> epsilon_profile(const SchmidtVector& a,
                                    const SchmidtVector& b) {
    const std::size_t d = std::max(a.rank(), b.rank());
    const std::vector<double> sa = padded_sums(a, d);
    const std::vector<double> sb = padded_sums(b, d);
    std::vector<double> eps(d > 0 ? d - 1 : 0);
    for (std::size_t k = 0; k + 1 < d; ++k) eps[k] = sb[k] - sa[k];
    return eps;
}

} // namespace locc
