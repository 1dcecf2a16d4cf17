#include "locc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "json.hpp"

#include "locc/equal_entropy.hpp"
#include "locc/order.hpp"
#include "locc/sampling.hpp"
#include "locc/schur.hpp"

namespace locc {

namespace {

nlohmann::json as_json(const SchmidtVector& v) {
    return nlohmann::json{{"coeffs", v.coeffs()}};
}

void record_failure(SuiteReport& rep, const nlohmann::json& detail) {
    ++rep.failures;
    if (rep.first_counterexample.empty()) {
        rep.first_counterexample = detail.dump();
    }
}

} // namespace

SuiteReport run_theorem1_suite(int trials, std::uint64_t seed,
                               const SearchConfig& cfg) {
    SuiteReport rep;
    rep.suite = "theorem1";
    for (int t = 0; t < trials; ++t) {
        TrialRng rng(seed, 0x100000ULL + static_cast<std::uint64_t>(t));
        SchmidtVector v = random_sorted_simplex(3, rng);
        while (v.effective_rank() != 3) v = random_sorted_simplex(3, rng);

        for (std::size_t pos = 1; pos <= 3; ++pos) {
            ++rep.checks;
            try {
                const SchmidtVector w = verify_theorem1(v, pos, cfg);
                double worst = 0.0;
                for (std::size_t k = 0; k < 3; ++k) {
                    worst = std::max(worst, std::fabs(w[k] - v[k]));
                }
                if (worst > cfg.coeff_tol) {
                    record_failure(rep, {{"vector", as_json(v)},
                                         {"position", pos},
                                         {"max_coeff_error", worst}});
                }
            } catch (const Error& e) {
                record_failure(rep, {{"vector", as_json(v)},
                                     {"position", pos},
                                     {"error", e.name()},
                                     {"detail", e.what()}});
            }
        }
    }
    return rep;
}

SuiteReport run_theorem2_suite(int trials_per_rank, std::uint64_t seed,
                               const SearchConfig& cfg) {
    SuiteReport rep;
    rep.suite = "theorem2";
    for (std::size_t rank = 2; rank <= 6; ++rank) {
        for (int t = 0; t < trials_per_rank; ++t) {
            TrialRng rng(seed, rank * 0x1000000ULL +
                                   static_cast<std::uint64_t>(t));

            // Comparable pair with a visible separation: a is reachable from
            // b by mass-equalizing moves, hence a -> b converts and the gap
            // floor applies once some coefficient differs by >= 1e-4.
            SchmidtVector b = random_sorted_simplex(rank, rng);
            SchmidtVector a = b;
            bool separated = false;
            for (int retry = 0; retry < 200 && !separated; ++retry) {
                b = random_sorted_simplex(rank, rng);
                a = majorize_down(b, rng, 1 + static_cast<int>(rng.below(3)));
                double sep = 0.0;
                for (std::size_t k = 0; k < rank; ++k) {
                    sep = std::max(sep, std::fabs(a[k] - b[k]));
                }
                separated = sep >= 1e-4;
            }

            ++rep.checks;
            if (!separated) {
                record_failure(rep, {{"rank", rank},
                                     {"trial", t},
                                     {"error", "sampler failed to separate"}});
                continue;
            }

            try {
                const GapReport g = verify_theorem2(a, b, cfg.coeff_tol);
                if (!(g.direct_gap > 1e-13)) {
                    record_failure(rep, {{"a", as_json(a)},
                                         {"b", as_json(b)},
                                         {"direct_gap", g.direct_gap}});
                } else if (std::fabs(g.direct_gap - g.telescoped_gap) >
                           1e-10) {
                    record_failure(rep,
                                   {{"a", as_json(a)},
                                    {"b", as_json(b)},
                                    {"direct_gap", g.direct_gap},
                                    {"telescoped_gap", g.telescoped_gap}});
                }
            } catch (const Error& e) {
                record_failure(rep, {{"a", as_json(a)},
                                     {"b", as_json(b)},
                                     {"error", e.name()},
                                     {"detail", e.what()}});
            }
        }
    }
    return rep;
}

SuiteReport run_schur_suite(int trials, std::uint64_t seed,
                            const SearchConfig& cfg) {
    (void)cfg;
    SuiteReport rep;
    rep.suite = "schur";
    const int per_rank = std::max(1, trials / 5);
    for (std::size_t rank = 2; rank <= 6; ++rank) {
        for (int t = 0; t < per_rank; ++t) {
            TrialRng rng(seed, rank * 0x2000000ULL +
                                   static_cast<std::uint64_t>(t));

            const SchmidtVector v = random_sorted_simplex(rank, rng);
            ++rep.checks;
            bool bad = false;
            for (std::size_t i = 1; i <= rank && !bad; ++i) {
                for (std::size_t j = i + 1; j <= rank && !bad; ++j) {
                    if (v[i - 1] <= kZeroEps || v[j - 1] <= kZeroEps) continue;
                    if (std::fabs(v[i - 1] - v[j - 1]) <= 1e-6) continue;
                    const SchurWitness w = schur_witness(v, i, j);
                    if (!(w.product < 0.0)) {
                        bad = true;
                        record_failure(rep, {{"vector", as_json(v)},
                                             {"i", i},
                                             {"j", j},
                                             {"product", w.product}});
                    }
                }
            }

            const SchmidtVector g = random_interior_simplex(rank, rng);
            ++rep.checks;
            try {
                const double err = gradient_check(g, 1e-6);
                if (!(err <= 1e-6)) {
                    record_failure(rep, {{"vector", as_json(g)},
                                         {"gradient_error", err}});
                }
            } catch (const Error& e) {
                record_failure(rep, {{"vector", as_json(g)},
                                     {"error", e.name()},
                                     {"detail", e.what()}});
            }
        }
    }
    return rep;
}

SuiteReport run_eq5_suite(const SearchConfig& cfg) {
    SuiteReport rep;
    rep.suite = "eq5";

    std::vector<SchmidtVector> grid;
    for (int i = 34; i <= 98; ++i) {
        for (int j = 1; j <= i; ++j) {
            const int k = 100 - i - j;
            if (k < 1 || k > j) continue;
            grid.push_back(make_schmidt(
                {i / 100.0, j / 100.0, k / 100.0}));
        }
    }

    for (const SchmidtVector& a : grid) {
        for (const SchmidtVector& b : grid) {
            ++rep.checks;
            const bool fast = incomparable_rank3_fast(a, b, cfg.coeff_tol);
            const bool general = classify(a, b, cfg.coeff_tol).variant ==
                                 Classification::Incomparable;
            if (fast != general) {
                record_failure(rep, {{"a", as_json(a)},
                                     {"b", as_json(b)},
                                     {"fast", fast},
                                     {"general", general}});
            }
        }
    }
    return rep;
}

SuiteReport run_reduction_suite(int pairs, std::uint64_t seed,
                                const SearchConfig& cfg) {
    SuiteReport rep;
    rep.suite = "reduction";
    for (int t = 0; t < pairs; ++t) {
        TrialRng rng(seed, 0x7000000ULL + static_cast<std::uint64_t>(t));
        const int shared = 1 + t % 2;

        ++rep.checks;
        try {
            // Build the base pair at rank 5 - shared, then insert `shared`
            // fresh coefficients at the top of both vectors.
            auto pair = random_equal_entropy_pair(
                static_cast<std::size_t>(5 - shared), rng, cfg);
            for (int s = 0; s < shared; ++s) {
                const double top = std::max(pair.first[0], pair.second[0]);
                const double lo = top / (1.0 + top) + 0.01;
                const double kappa = rng.uniform(lo, std::min(0.9, lo + 0.35));
                pair = lift(pair.first, pair.second, kappa);
            }
            const SchmidtVector& A = pair.first;
            const SchmidtVector& B = pair.second;

            nlohmann::json ctx{{"a", as_json(A)}, {"b", as_json(B)},
                               {"shared", shared}};

            if (A.rank() != 5 ||
                differing_count(A, B, cfg.coeff_tol) !=
                    static_cast<std::size_t>(5 - shared) ||
                classify(A, B, cfg.coeff_tol).variant !=
                    Classification::Incomparable ||
                std::fabs(entropy(A).bits - entropy(B).bits) > 1e-10) {
                ctx["error"] = "lifted pair violates its own invariants";
                record_failure(rep, ctx);
                continue;
            }

            SchmidtVector x = A;
            SchmidtVector y = B;
            while (auto j = find_shared_index(x, y, cfg.coeff_tol)) {
                std::tie(x, y) = reduce_shared(x, y, *j, cfg.coeff_tol);
            }

            const bool ok =
                x.rank() == static_cast<std::size_t>(5 - shared) &&
                std::fabs(entropy(x).bits - entropy(y).bits) <= 1e-10 &&
                classify(x, y, cfg.coeff_tol).variant ==
                    Classification::Incomparable &&
                differing_count(x, y, cfg.coeff_tol) == x.rank();
            if (!ok) {
                ctx["reduced_a"] = as_json(x);
                ctx["reduced_b"] = as_json(y);
                ctx["entropy_gap"] =
                    std::fabs(entropy(x).bits - entropy(y).bits);
                record_failure(rep, ctx);
            }
        } catch (const Error& e) {
            record_failure(rep, {{"trial", t},
                                 {"shared", shared},
                                 {"error", e.name()},
                                 {"detail", e.what()}});
        }
    }
    return rep;
}

} // namespace locc
