#include "locc/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "locc/detail/bisect.hpp"

namespace locc {

namespace {

double phi(double p) { return p > kZeroEps ? -p * std::log2(p) : 0.0; }

} // namespace

SchurWitness schur_witness(const SchmidtVector& v, std::size_t i,
                           std::size_t j) {
    if (i < 1 || i > v.rank() || j < 1 || j > v.rank()) {
        throw std::out_of_range("witness index outside 1..rank");
    }
    const double vi = v[i - 1];
    const double vj = v[j - 1];
    if (vi <= kZeroEps || vj <= kZeroEps) {
        throw BoundaryCoefficient(
            "witness undefined on zero coefficients (log diverges)");
    }
    // Difference-of-logs form: both factors negate exactly under an index
    // swap, so the product is bit-for-bit symmetric.
    return SchurWitness{i, j, (vi - vj) * (std::log2(vj) - std::log2(vi))};
}

double gradient_check(const SchmidtVector& v, double step) {
    if (!(step > 0.0)) {
        throw StepTooLarge("finite-difference step must be positive");
    }
    for (double c : v.coeffs()) {
        if (c <= 10.0 * step) {
            throw StepTooLarge("coefficient " + std::to_string(c) +
                               " too close to zero for step " +
                               std::to_string(step));
        }
    }

    const double log2e = 1.0 / std::log(2.0);
    double worst = 0.0;
    for (double c : v.coeffs()) {
        const double analytic = -std::log2(c) - log2e;
        // Only the perturbed term survives the central difference of the
        // unconstrained entropy; the rest cancels exactly.
        const double numeric =
            (phi(c + step) - phi(c - step)) / (2.0 * step);
        worst = std::max(worst, std::fabs(analytic - numeric));
    }
    return worst;
}

GapReport verify_theorem2(const SchmidtVector& a, const SchmidtVector& b,
                          double tol) {
    if (!convertible(a, b, tol)) {
        throw NotConvertible("pair is not convertible in this direction");
    }

    const std::size_t d = std::max(a.rank(), b.rank());
    const auto at = [](const SchmidtVector& v, std::size_t k) {
        return k < v.rank() ? v[k] : 0.0;
    };

    bool all_equal = true;
    for (std::size_t k = 0; k < d; ++k) {
        if (std::fabs(at(a, k) - at(b, k)) > tol) {
            all_equal = false;
            break;
        }
    }
    if (all_equal) {
        throw EquivalentPair("pair is equivalent within tolerance; gap "
                             "decomposition is trivially zero");
    }

    GapReport rep;
    rep.direct_gap = entropy(a).bits - entropy(b).bits;
    rep.epsilons = epsilon_profile(a, b);

    double kl = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double ai = at(a, k);
        const double bi = at(b, k);
        if (bi <= kZeroEps) continue;
        if (ai <= kZeroEps) {
            // Unreachable for genuinely convertible pairs; surface loudly
            // rather than hide a broken input.
            kl = std::numeric_limits<double>::infinity();
            break;
        }
        kl += bi * std::log2(bi / ai);
    }

    double ramp = 0.0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        const double ak = at(a, k);
        const double ak1 = at(a, k + 1);
        if (ak1 <= kZeroEps) break; // eps_k is dust once a's tail is zero
        ramp += rep.epsilons[k] * (std::log2(ak) - std::log2(ak1));
    }

    rep.telescoped_gap = kl + ramp;
    return rep;
}

SchmidtVector verify_theorem1(const SchmidtVector& v, std::size_t shared_index,
                              const SearchConfig& cfg) {
    cfg.validate();
    if (shared_index < 1 || shared_index > 3) {
        throw std::out_of_range("shared position must be 1, 2, or 3");
    }
    if (v.rank() != 3 || v.effective_rank() != 3) {
        throw WrongRank("reconstruction is a rank-3 statement, got rank " +
                        std::to_string(v.rank()) + " (effective " +
                        std::to_string(v.effective_rank()) + ")");
    }

    const double target = entropy(v).bits;
    const double kappa = v[shared_index - 1];
    const double m = 1.0 - kappa;
    const double r = kappa / m;

    // With kappa pinned, E = phi(kappa) - m log2 m + m h(u) where u >= 1/2
    // is the larger remaining coefficient's share of the mass m.  h is
    // strictly decreasing there, and the sorted constraints confine u to a
    // position-dependent bracket.
    double lo = 0.5;
    double hi = 1.0;
    switch (shared_index) {
        case 1: hi = std::min(1.0, r); break;
        case 2: lo = std::max({0.5, r, 1.0 - r}); hi = 1.0; break;
        case 3: hi = 1.0 - r; break;
    }
    if (!(lo <= hi)) {
        throw NoSolution("empty ordered bracket for this pinned position");
    }

    const double h_target =
        (target + kappa * std::log2(kappa) + m * std::log2(m)) / m;
    const auto f = [&](double u) {
        return binary_entropy(u).bits - h_target;
    };

    // The endpoint signs are guaranteed up to float dust because v itself
    // solves the equation inside (or on) the bracket.
    const double slack = cfg.entropy_tol / m;
    double root;
    if (f(lo) < 0.0) {
        if (f(lo) < -slack) throw NoSolution("target above bracket range");
        root = lo;
    } else if (f(hi) > 0.0) {
        if (f(hi) > slack) throw NoSolution("target below bracket range");
        root = hi;
    } else {
        // Bracket-driven termination: entropy flattens out near u = 1/2, so
        // only the bracket width pins the coefficients tightly enough.
        const auto res = detail::bisect_decreasing(
            f, lo, hi, 0.0, cfg.bracket_width, cfg.max_bisection_iters);
        if (!res.converged) {
            throw ConvergenceFailure("bisection budget exhausted");
        }
        root = res.x;
    }

    const double x = m * root;
    const double y = m - x;
    std::vector<double> raw;
    switch (shared_index) {
        case 1: raw = {kappa, x, y}; break;
        case 2: raw = {x, kappa, y}; break;
        default: raw = {x, y, kappa}; break;
    }
    SchmidtVector w = make_schmidt(raw);

    if (std::fabs(entropy(w).bits - target) > cfg.entropy_tol) {
        throw NoSolution("reconstructed vector misses the entropy target");
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (std::fabs(w[k] - v[k]) > cfg.coeff_tol) {
            throw NoSolution("reconstruction disagrees with the input; the "
                             "restricted search should be unique");
        }
    }
    return w;
}

} // namespace locc
