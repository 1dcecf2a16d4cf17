#include "locc/equal_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "locc/detail/bisect.hpp"

namespace locc {

namespace {

double phi(double p) { return p > kZeroEps ? -p * std::log2(p) : 0.0; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

EntropyValue max_entropy_given_top(double beta1, std::size_t rank) {
    if (rank < 2) {
        throw OutOfDomain("entropy ceiling needs rank >= 2");
    }
    const double floor = 1.0 / static_cast<double>(rank);
    if (!(beta1 >= floor && beta1 <= 1.0)) {
        throw OutOfDomain("top coefficient " + fmt(beta1) +
                          " outside [1/" + std::to_string(rank) + ", 1]");
    }
    const double tail = 1.0 - beta1;
    return EntropyValue{binary_entropy(beta1).bits +
                        tail * std::log2(static_cast<double>(rank) - 1.0)};
}

PartnerResult find_partner(const SchmidtVector& v, double beta1,
                           const SearchConfig& cfg) {
    cfg.validate();
    if (v.effective_rank() != 3) {
        throw NotRank3("partner search is defined for effective rank 3, got " +
                       std::to_string(v.effective_rank()));
    }
    if (!(beta1 >= 1.0 / 3.0) || !(beta1 < 1.0)) {
        throw Infeasible("top coefficient " + fmt(beta1) +
                         " outside [1/3, 1): no sorted rank-3 vector exists");
    }
    if (std::fabs(beta1 - v[0]) <= cfg.coeff_tol) {
        throw Infeasible("requested top coefficient coincides with the "
                         "input's own; the only solution would be the input "
                         "itself");
    }

    const double target = entropy(v).bits;
    const double ceiling = max_entropy_given_top(beta1, 3).bits;
    if (ceiling < target + cfg.entropy_tol) {
        throw Infeasible("entropy ceiling at top coefficient " + fmt(beta1) +
                         " is " + fmt(ceiling) + ", below the target " +
                         fmt(target));
    }

    const double lo = (1.0 - beta1) / 2.0;
    const double hi = std::min(beta1, 1.0 - beta1);
    const auto f = [&](double b2) {
        return phi(beta1) + phi(b2) + phi(1.0 - beta1 - b2) - target;
    };
    // f(lo) = ceiling - target > 0 by the check above; a root exists in the
    // sorted bracket only if the low end doesn't already overshoot.
    if (f(hi) > 0.0) {
        throw Infeasible("even the most lopsided tail at top coefficient " +
                         fmt(beta1) + " exceeds the target entropy " +
                         fmt(target) + "; no sorted solution");
    }

    // Half the tolerance as the stop target: re-evaluating on the
    // renormalized partner may shift the residual by a few ulps, and the
    // reported value must still clear entropy_tol.
    const auto res = detail::bisect_decreasing(f, lo, hi, 0.5 * cfg.entropy_tol,
                                               cfg.bracket_width,
                                               cfg.max_bisection_iters);
    if (!res.converged) {
        throw ConvergenceFailure("bisection budget of " +
                                 std::to_string(cfg.max_bisection_iters) +
                                 " exhausted");
    }

    const double b2 = res.x;
    SchmidtVector partner = make_schmidt({beta1, b2, 1.0 - beta1 - b2});

    PartnerResult out{partner, entropy(partner).bits - target,
                      classify(v, partner, cfg.coeff_tol).variant,
                      res.iterations};
    return out;
}

std::vector<FamilyRecord> family_sweep(const SchmidtVector& v, double lo,
                                       double hi, int steps,
                                       const SearchConfig& cfg) {
    cfg.validate();
    if (steps < 1 || hi < lo) {
        throw EmptyRange("sweep needs steps >= 1 and hi >= lo");
    }

    std::vector<FamilyRecord> records;
    std::size_t attempted = 0;
    for (int i = 0; i < steps; ++i) {
        const double b1 =
            steps == 1 ? lo
                       : lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1);
        if (std::fabs(b1 - v[0]) <= cfg.coeff_tol) continue; // excluded
        ++attempted;
        try {
            PartnerResult r = find_partner(v, b1, cfg);
            records.push_back(FamilyRecord{
                b1, r.partner, r.entropy_residual,
                differing_count(v, r.partner, cfg.coeff_tol)});
        } catch (const Infeasible&) {
            // feasibility gap, not an error
        }
    }
    if (attempted == 0) {
        throw EmptyRange("every grid point falls in the excluded "
                         "neighborhood of the input's top coefficient");
    }
    return records;
}

std::pair<SchmidtVector, SchmidtVector> reduce_shared(const SchmidtVector& a,
                                                      const SchmidtVector& b,
                                                      std::size_t j,
                                                      double tol) {
    if (a.rank() != b.rank()) {
        throw RankMismatch("ranks " + std::to_string(a.rank()) + " and " +
                           std::to_string(b.rank()) + " differ");
    }
    if (a.rank() < 3) {
        throw WrongRank("reduction below rank 2 is meaningless; need rank "
                        ">= 3");
    }
    if (j < 1 || j > a.rank()) {
        throw NoSharedCoefficient("position " + std::to_string(j) +
                                  " outside 1.." + std::to_string(a.rank()));
    }
    const double kappa = a[j - 1];
    if (std::fabs(kappa - b[j - 1]) > tol) {
        throw NoSharedCoefficient("coefficients at position " +
                                  std::to_string(j) + " differ by " +
                                  fmt(std::fabs(kappa - b[j - 1])));
    }
    if (kappa >= 1.0 - kZeroEps) {
        throw DegenerateKappa("shared coefficient exhausts the state; "
                              "nothing remains to rescale");
    }

    const double mass = 1.0 - kappa;
    std::vector<double> ra, rb;
    ra.reserve(a.rank() - 1);
    rb.reserve(a.rank() - 1);
    for (std::size_t k = 0; k < a.rank(); ++k) {
        if (k == j - 1) continue;
        ra.push_back(a[k] / mass);
        rb.push_back(b[k] / mass);
    }
    return {make_schmidt(ra), make_schmidt(rb)};
}

std::pair<SchmidtVector, SchmidtVector> lift(const SchmidtVector& a,
                                             const SchmidtVector& b,
                                             double kappa) {
    if (a.rank() != b.rank()) {
        throw RankMismatch("ranks " + std::to_string(a.rank()) + " and " +
                           std::to_string(b.rank()) + " differ");
    }
    if (!(kappa > 0.0 && kappa < 1.0)) {
        throw OutOfDomain("inserted coefficient must lie strictly inside "
                          "(0, 1), got " + fmt(kappa));
    }

    const double scale = 1.0 - kappa;
    std::vector<double> la, lb;
    la.reserve(a.rank() + 1);
    lb.reserve(a.rank() + 1);
    for (std::size_t k = 0; k < a.rank(); ++k) {
        la.push_back(scale * a[k]);
        lb.push_back(scale * b[k]);
    }
    la.push_back(kappa);
    lb.push_back(kappa);
    return {make_schmidt(la), make_schmidt(lb)};
}

std::optional<std::size_t> find_shared_index(const SchmidtVector& a,
                                             const SchmidtVector& b,
                                             double tol) {
    const std::size_t d = std::min(a.rank(), b.rank());
    for (std::size_t k = 0; k < d; ++k) {
        if (std::fabs(a[k] - b[k]) <= tol) return k + 1;
    }
    return std::nullopt;
}

std::size_t differing_count(const SchmidtVector& a, const SchmidtVector& b,
                            double tol) {
    if (a.rank() != b.rank()) {
        throw RankMismatch("ranks " + std::to_string(a.rank()) + " and " +
                           std::to_string(b.rank()) + " differ");
    }
    std::size_t n = 0;
    for (std::size_t k = 0; k < a.rank(); ++k) {
        if (std::fabs(a[k] - b[k]) > tol) ++n;
    }
    return n;
}

} // namespace locc
