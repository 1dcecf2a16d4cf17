#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "locc/order.hpp"
#include "locc/sampling.hpp"

using namespace locc;

namespace {

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

const SchmidtVector kPaperA = make_schmidt({0.45, 0.39, 0.16});
const SchmidtVector kPaperB = make_schmidt({0.49, 0.33676028, 0.17323972});

} // namespace

TEST_CASE("partial sums accumulate to one") {
    const auto s = partial_sums(make_schmidt({0.5, 0.3, 0.2}));
    REQUIRE(s.size() == 3);
    CHECK(near(s[0], 0.5, 1e-15));
    CHECK(near(s[1], 0.8, 1e-15));
    CHECK(near(s[2], 1.0, kSumEps));
}

TEST_CASE("convertible follows prefix-sum domination") {
    const SchmidtVector more_mixed = make_schmidt({0.4, 0.35, 0.25});
    const SchmidtVector less_mixed = make_schmidt({0.5, 0.3, 0.2});
    CHECK(convertible(more_mixed, less_mixed));
    CHECK_FALSE(convertible(less_mixed, more_mixed));

    // The uniform state reaches every state of equal or smaller rank.
    const double third = 1.0 / 3.0;
    const SchmidtVector uniform = make_schmidt({third, third, third});
    CHECK(convertible(uniform, less_mixed));
    CHECK(convertible(uniform, make_schmidt({1.0, 0.0, 0.0})));
    CHECK_FALSE(convertible(less_mixed, uniform));
}

TEST_CASE("convertible is reflexive and tolerant of float dust") {
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng(21, t);
        const SchmidtVector v = random_sorted_simplex(2 + rng.below(5), rng);
        CHECK(convertible(v, v));
    }
}

TEST_CASE("classify: equal-entropy pair from the worked example is "
          "incomparable") {
    const ClassifyResult r = classify(kPaperA, kPaperB);
    CHECK(r.variant == Classification::Incomparable);
    // a's prefix sums first exceed b's at k = 2, b's exceed a's at k = 1.
    CHECK(r.witness_ab == 2);
    CHECK(r.witness_ba == 1);
}

TEST_CASE("classify: ordered pair and its reverse") {
    const SchmidtVector a = make_schmidt({0.4, 0.35, 0.25});
    const SchmidtVector b = make_schmidt({0.5, 0.3, 0.2});

    const ClassifyResult ab = classify(a, b);
    CHECK(ab.variant == Classification::AtoB);
    CHECK(ab.witness_ab == 0);
    CHECK(ab.witness_ba == 1);

    const ClassifyResult ba = classify(b, a);
    CHECK(ba.variant == Classification::BtoA);
    CHECK(ba.witness_ab == 1);
    CHECK(ba.witness_ba == 0);
}

TEST_CASE("classify: identical and nearly identical pairs are equivalent") {
    const SchmidtVector v = make_schmidt({0.5, 0.3, 0.2});
    CHECK(classify(v, v).variant == Classification::Equivalent);

    const SchmidtVector w = make_schmidt({0.5 + 2e-10, 0.3, 0.2 - 2e-10});
    CHECK(classify(v, w).variant == Classification::Equivalent);
}

TEST_CASE("classification matches the two convertibility calls") {
    for (std::uint64_t t = 0; t < 2000; ++t) {
        TrialRng rng(22, t);
        const std::size_t d = 2 + rng.below(5);
        const SchmidtVector a = random_sorted_simplex(d, rng);
        const SchmidtVector b = rng.uniform01() < 0.3
                                    ? a
                                    : random_sorted_simplex(d, rng);
        const bool ab = convertible(a, b);
        const bool ba = convertible(b, a);
        const Classification c = classify(a, b).variant;
        if (ab && ba) CHECK(c == Classification::Equivalent);
        if (ab && !ba) CHECK(c == Classification::AtoB);
        if (!ab && ba) CHECK(c == Classification::BtoA);
        if (!ab && !ba) CHECK(c == Classification::Incomparable);
    }
}

TEST_CASE("convertibility is transitive along sampled chains") {
    for (std::uint64_t t = 0; t < 10000; ++t) {
        TrialRng rng(23, t);
        const std::size_t d = 2 + rng.below(5);
        const SchmidtVector c = random_sorted_simplex(d, rng);
        const SchmidtVector b = majorize_down(c, rng, 1);
        const SchmidtVector a = majorize_down(b, rng, 1);
        REQUIRE(convertible(a, b));
        REQUIRE(convertible(b, c));
        CHECK(convertible(a, c));
    }
}

TEST_CASE("zero padding never changes a verdict") {
    for (std::uint64_t t = 0; t < 1000; ++t) {
        TrialRng rng(24, t);
        const std::size_t d = 2 + rng.below(3);
        const SchmidtVector a = random_sorted_simplex(d, rng);
        const SchmidtVector b = random_sorted_simplex(d, rng);

        std::vector<double> pa = a.coeffs();
        pa.resize(d + 2, 0.0);
        std::vector<double> pb = b.coeffs();
        pb.resize(d + 1, 0.0);
        const SchmidtVector apad = make_schmidt(pa);
        const SchmidtVector bpad = make_schmidt(pb);

        const Classification ref = classify(a, b).variant;
        CHECK(classify(apad, b).variant == ref);
        CHECK(classify(a, bpad).variant == ref);
        CHECK(classify(apad, bpad).variant == ref);
    }
}

TEST_CASE("rank-3 shortcut on the worked examples") {
    CHECK(incomparable_rank3_fast(kPaperA, kPaperB));
    CHECK(incomparable_rank3_fast(kPaperB, kPaperA));
    CHECK_FALSE(incomparable_rank3_fast(make_schmidt({0.4, 0.35, 0.25}),
                                        make_schmidt({0.5, 0.3, 0.2})));
    const SchmidtVector v = make_schmidt({0.5, 0.3, 0.2});
    CHECK_FALSE(incomparable_rank3_fast(v, v));
}

TEST_CASE("rank-3 shortcut rejects other ranks") {
    const SchmidtVector r2 = make_schmidt({0.6, 0.4});
    const SchmidtVector r3 = make_schmidt({0.5, 0.3, 0.2});
    CHECK_THROWS_AS(incomparable_rank3_fast(r2, r3), NotRank3);
    CHECK_THROWS_AS(incomparable_rank3_fast(r3, r2), NotRank3);
    // Rank is about support, not storage: zero padding is fine.
    const SchmidtVector padded = make_schmidt({0.5, 0.3, 0.2, 0.0});
    CHECK_FALSE(incomparable_rank3_fast(padded, r3));
    CHECK_THROWS_AS(
        incomparable_rank3_fast(make_schmidt({0.5, 0.5, 0.0}), r3), NotRank3);
}

TEST_CASE("rank-3 shortcut agrees with the general classification") {
    for (std::uint64_t t = 0; t < 10000; ++t) {
        TrialRng rng(25, t);
        SchmidtVector a = random_sorted_simplex(3, rng);
        SchmidtVector b = random_sorted_simplex(3, rng);
        if (a.effective_rank() != 3 || b.effective_rank() != 3) continue;
        CHECK(incomparable_rank3_fast(a, b) ==
              (classify(a, b).variant == Classification::Incomparable));
    }
}

TEST_CASE("epsilon profile of the worked examples") {
    const auto ramp = epsilon_profile(make_schmidt({0.4, 0.35, 0.25}),
                                      make_schmidt({0.5, 0.3, 0.2}));
    REQUIRE(ramp.size() == 2);
    CHECK(near(ramp[0], 0.1, 1e-15));
    CHECK(near(ramp[1], 0.05, 1e-15));

    const auto mixed = epsilon_profile(kPaperA, kPaperB);
    REQUIRE(mixed.size() == 2);
    CHECK(near(mixed[0], 0.04, 1e-12));
    CHECK(near(mixed[1], -0.01323972, 1e-12));

    const SchmidtVector v = make_schmidt({0.5, 0.3, 0.2});
    for (double e : epsilon_profile(v, v)) CHECK(e == 0.0);
}

TEST_CASE("nonnegative slack profile characterizes convertibility") {
    for (std::uint64_t t = 0; t < 10000; ++t) {
        TrialRng rng(26, t);
        const std::size_t d = 2 + rng.below(5);
        // Mix comparable pairs in: purely random pairs of rank > 3 are
        // almost always incomparable.
        const SchmidtVector b = random_sorted_simplex(d, rng);
        const SchmidtVector a = rng.uniform01() < 0.5
                                    ? majorize_down(b, rng, 1)
                                    : random_sorted_simplex(d, rng);
        bool all_nonneg = true;
        for (double e : epsilon_profile(a, b)) {
            if (e < -1e-9) { all_nonneg = false; break; }
        }
        CHECK(all_nonneg == convertible(a, b));
    }
}
