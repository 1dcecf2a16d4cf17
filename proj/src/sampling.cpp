#include "locc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "locc/detail/bisect.hpp"
#include "locc/equal_entropy.hpp"
#include "locc/order.hpp"

namespace locc {

namespace {

double phi(double p) { return p > kZeroEps ? -p * std::log2(p) : 0.0; }

// Pair constructions must survive later rescaling by factors down to ~0.01
// without any coefficient difference or ordering violation dropping under
// the default coeff_tol, so they are accepted only if robust at this much
// coarser band.
constexpr double kConstructionMargin = 1e-5;

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    state_ = seed ^ (trial * 0x9E3779B97F4A7C15ULL + 0x5851F42D4C957F2DULL);
    next_u64();
    next_u64();
}

std::uint64_t TrialRng::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double TrialRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

std::uint64_t TrialRng::below(std::uint64_t n) { return next_u64() % n; }

SchmidtVector random_sorted_simplex(std::size_t rank, TrialRng& rng) {
    std::vector<double> g(rank);
    double total = 0.0;
    for (double& x : g) {
        x = -std::log(1.0 - rng.uniform01());
        total += x;
    }
    for (double& x : g) x /= total;
    return make_schmidt(g);
}

SchmidtVector random_interior_simplex(std::size_t rank, TrialRng& rng) {
    const SchmidtVector base = random_sorted_simplex(rank, rng);
    std::vector<double> v(rank);
    const double floor = 0.5 / static_cast<double>(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = floor + 0.5 * base[i];
    return make_schmidt(v);
}

SchmidtVector majorize_down(const SchmidtVector& v, TrialRng& rng, int moves) {
    std::vector<double> c = v.coeffs();
    const std::size_t d = c.size();
    for (int m = 0; m < moves; ++m) {
        // Pick a donor/receiver pair by value, not position: earlier moves
        // may have disturbed the order.
        std::vector<std::pair<std::size_t, std::size_t>> eligible;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = 0; q < d; ++q) {
                if (c[p] - c[q] > 1e-3) eligible.emplace_back(p, q);
            }
        }
        if (eligible.empty()) break;
        const auto [p, q] = eligible[rng.below(eligible.size())];
        // Transferring at most half the gap keeps donor >= receiver, which
        // is exactly a mass-equalizing step, so the result stays majorized.
        const double t = (c[p] - c[q]) * rng.uniform(0.2, 0.5);
        c[p] -= t;
        c[q] += t;
    }
    return make_schmidt(c);
}

namespace {

std::pair<SchmidtVector, SchmidtVector> rank3_pair(TrialRng& rng,
                                                   const SearchConfig& cfg) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        const SchmidtVector v = random_interior_simplex(3, rng);
        const double scale = 0.05 * std::pow(0.7, attempt / 40);
        const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
        const double b1 = v[0] + sign * rng.uniform(1e-4, scale);
        if (!(b1 > 1.0 / 3.0 + 1e-6) || !(b1 < 0.98)) continue;
        try {
            const PartnerResult r = find_partner(v, b1, cfg);
            if (differing_count(v, r.partner, kConstructionMargin) != 3) continue;
            if (classify(v, r.partner, kConstructionMargin).variant !=
                Classification::Incomparable) continue;
            if (std::fabs(r.entropy_residual) > cfg.entropy_tol) continue;
            return {v, r.partner};
        } catch (const Infeasible&) {
            continue;
        }
    }
    throw ConvergenceFailure("no rank-3 equal-entropy pair found; RNG or "
                             "tolerance setup is broken");
}

std::pair<SchmidtVector, SchmidtVector> rankn_pair(std::size_t rank,
                                                   TrialRng& rng,
                                                   const SearchConfig& cfg) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        const SchmidtVector v = random_interior_simplex(rank, rng);

        // Perturbations ride on the gaps between adjacent coefficients, so
        // near-ties force a resample.
        bool gappy = true;
        for (std::size_t i = 0; i + 1 < rank; ++i) {
            if (v[i] - v[i + 1] < 5e-3) { gappy = false; break; }
        }
        if (!gappy) continue;

        const double shrink = std::pow(0.7, attempt / 40);
        std::vector<double> prefix(rank - 2);
        double prefix_sum = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < rank - 2; ++i) {
            const double room =
                shrink * std::min({0.01,
                                   0.2 * (i == 0 ? 1.0 - v[0]
                                                 : v[i - 1] - v[i]),
                                   0.2 * (v[i] - v[i + 1])});
            if (room <= 1e-4) { ok = false; break; }
            const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
            prefix[i] = v[i] + sign * rng.uniform(1e-4, room);
            if (i > 0 && !(prefix[i] < prefix[i - 1])) { ok = false; break; }
            prefix_sum += prefix[i];
        }
        if (!ok) continue;

        const double m = 1.0 - prefix_sum;
        if (m <= 1e-4) continue;
        const double lo = 0.5 * m;
        const double hi = std::min(prefix.back(), m);
        if (!(lo < hi)) continue;

        const double target = entropy(v).bits;
        double prefix_bits = 0.0;
        for (double p : prefix) prefix_bits += phi(p);
        const auto f = [&](double x) {
            return prefix_bits + phi(x) + phi(m - x) - target;
        };
        if (!(f(lo) > 0.0) || !(f(hi) < 0.0)) continue;

        const auto res = detail::bisect_decreasing(
            f, lo, hi, 0.5 * cfg.entropy_tol, cfg.bracket_width,
            cfg.max_bisection_iters);
        if (!res.converged) continue;

        std::vector<double> raw = prefix;
        raw.push_back(res.x);
        raw.push_back(m - res.x);
        const SchmidtVector b = make_schmidt(raw);

        if (differing_count(v, b, kConstructionMargin) != rank) continue;
        if (classify(v, b, kConstructionMargin).variant !=
            Classification::Incomparable) continue;
        if (std::fabs(entropy(b).bits - target) > cfg.entropy_tol) continue;
        return {v, b};
    }
    throw ConvergenceFailure("no rank-" + std::to_string(rank) +
                             " equal-entropy pair found; RNG or tolerance "
                             "setup is broken");
}

} // namespace

std::pair<SchmidtVector, SchmidtVector> random_equal_entropy_pair(
    std::size_t rank, TrialRng& rng, const SearchConfig& cfg) {
    cfg.validate();
    if (rank < 3) {
        throw WrongRank("equal-entropy distinct pairs need rank >= 3");
    }
    return rank == 3 ? rank3_pair(rng, cfg) : rankn_pair(rank, rng, cfg);
}

} // namespace locc
