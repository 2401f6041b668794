#include <random>

#include "batchcodes/bounds.hpp"
#include "batchcodes/constructions.hpp"
#include "batchcodes/errors.hpp"
#include "batchcodes/profile.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace batchcodes;

TEST_CASE("closed-form arithmetic") {
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(6, 2) == 3);
    CHECK(ceil_div(0, 5) == 0);
    CHECK(singleton(4, 4) == 7);
    CHECK(gopalan_lrc(4, 2, 2) == 6);
    CHECK(gopalan_lrc(5, 3, 2) == 9);
    CHECK(wang_zhang(3, 4, 2, 3) == 3 + 4 + ceil_div(3 * 2 + 1, 3 * 1 + 1) - 2);
    CHECK(zs_base(9, 2, 2, 2) == 12);
    CHECK(zs_base(3, 4, 2, 4) == 3 + 4 + 3 * (ceil_div(3, 5) - 1) - 1);
}

TEST_CASE("wang_zhang with availability 1 equals gopalan_lrc") {
    for (std::size_t k = 1; k <= 10; ++k) {
        for (std::size_t d = 1; d <= 10; ++d) {
            for (std::size_t r = 1; r <= 10; ++r) CHECK(wang_zhang(k, d, r, 1) == gopalan_lrc(k, d, r));
        }
    }
}

TEST_CASE("zs_base with t = 1 reduces to singleton") {
    for (std::size_t k = 1; k <= 8; ++k) {
        for (std::size_t d = 1; d <= 6; ++d) CHECK(zs_base(k, d, 3, 1) == singleton(k, d));
    }
}

TEST_CASE("plotkin_batch") {
    const PlotkinVerdict v = plotkin_batch(7, 3, 4, 2);
    CHECK(v.applicable);
    CHECK(v.cap == 8);
    CHECK(v.holds);
    CHECK(v.attained);
    for (std::size_t m = 2; m <= 4; ++m) {
        const std::size_t n = (std::size_t{1} << m) - 1;
        const PlotkinVerdict s = plotkin_batch(n, m, std::size_t{1} << (m - 1), 2);
        CHECK(s.applicable);
        CHECK(s.cap == (std::int64_t{1} << m));
        CHECK(s.attained);
    }
    CHECK_FALSE(plotkin_batch(9, 4, 4, 2).applicable);
    CHECK_FALSE(plotkin_batch(3, 2, 1, 2).applicable);
}

TEST_CASE("zs_best dominates zs_base and picks the smallest maximizer") {
    for (std::size_t k = 1; k <= 12; ++k) {
        for (std::size_t r = 1; r <= 4; ++r) {
            for (std::size_t t = 1; t <= 5; ++t) {
                const MaximizedBound best = zs_best(k, 3, r, t);
                CHECK(best.rhs >= zs_base(k, 3, r, t));
                CHECK(best.rhs == zs_base(k, 3, r, best.beta));
                for (std::size_t b = 1; b < best.beta; ++b) CHECK(zs_base(k, 3, r, b) < best.rhs);
            }
        }
    }
}

TEST_CASE("zs_systematic") {
    const MaximizedBound s = zs_systematic(3, 4, 2, 4);
    CHECK(s.rhs == 7);
    CHECK(s.beta == 2);
    CHECK(zs_systematic(4, 2, 2, 2).rhs == 6);
    CHECK(zs_systematic(5, 2, 2, 2).rhs == 8);
    for (std::size_t k = 2; k <= 6; ++k) {
        CHECK(zs_systematic(k, 2, 2, 2).rhs == static_cast<std::int64_t>(k + (k + 1) / 2));
    }
    CHECK_THROWS_AS((void)zs_systematic(3, 4, 2, 1), NotApplicable);
}

TEST_CASE("zs_refined") {
    CHECK_FALSE(zs_refined(9, 2, 1, 2).applicable);
    CHECK_FALSE(zs_refined(3, 2, 2, 2).applicable);
    const RefinedBound b = zs_refined(9, 2, 2, 2);
    REQUIRE(b.applicable);
    CHECK(b.rhs == 13);
    CHECK(b.beta == 2);
    CHECK(b.epsilon == 1);
    CHECK(b.lambda == 1);
    for (long long k = 3; k <= 30; ++k) {
        for (long long r = 2; r <= 4; ++r) {
            for (long long t = 1; t <= 4; ++t) {
                for (long long d = 1; d <= 5; ++d) {
                    const RefinedBound got = zs_refined(static_cast<std::size_t>(k), static_cast<std::size_t>(d),
                                                        static_cast<std::size_t>(r), static_cast<std::size_t>(t));
                    if (k < 2 * (r * t - t + 1) + 1) {
                        CHECK_FALSE(got.applicable);
                        continue;
                    }
                    const oracle::GridMax want = oracle::refined_grid(k, d, r, t);
                    REQUIRE(got.applicable == !want.empty);
                    if (!want.empty) CHECK(got.rhs == want.value);
                }
            }
        }
    }
}

TEST_CASE("redundancy_bound") {
    RedundancyTable table;
    for (std::size_t k = 1; k <= 8; ++k) {
        table[{k, 1}] = 0;
        table[{k, 2}] = 1;
    }
    CHECK(redundancy_bound(5, 1, table) == 0);
    CHECK(redundancy_bound(5, 2, table) == 1);
    table[{5, 3}] = 3;
    CHECK(redundancy_bound(5, 3, table) == 3);
    table[{8, 4}] = 5;
    // h = 2: 1 - 2!/2^2 = 1/2, so the factor is ceil(log2 C(8,2)) = ceil(log2 28) = 5.
    CHECK(redundancy_log_factor(8, 2) == 5);
    CHECK(redundancy_bound(8, 4, table) == 5 + 2 * 5 * 1);
    CHECK(redundancy_log_factor(4, 2) == 3);
    CHECK(redundancy_log_factor(2, 2) == 0);
    CHECK_THROWS_AS((void)redundancy_bound(9, 4, table), InsufficientData);
}

TEST_CASE("evaluate_all on simplex(3)") {
    const std::vector<SizeCap> caps = {SizeCap::at_most(2)};
    const CodeProfile p = profile_code(simplex(3), caps);
    const auto verdicts = evaluate_all(p);
    bool saw_systematic = false;
    bool saw_plotkin = false;
    for (const BoundVerdict& v : verdicts) {
        CAPTURE(v.name);
        if (v.applicable && v.kind == BoundKind::lower_bound_on_n) CHECK(v.rhs <= 7);
        if (v.name == "zs_systematic") {
            saw_systematic = true;
            CHECK(v.rhs == 7);
            CHECK(v.attained);
        }
        if (v.name == "plotkin_batch") {
            saw_plotkin = true;
            CHECK(v.rhs == 8);
            CHECK(v.attained);
        }
    }
    CHECK(saw_systematic);
    CHECK(saw_plotkin);
}

TEST_CASE("evaluate_all never reports an applicable lower bound above n") {
    auto check = [](const LinearCode& code) {
        const CodeProfile p = profile_code(code, default_profile_caps());
        for (const BoundVerdict& v : evaluate_all(p)) {
            CAPTURE(v.name);
            if (!v.applicable) continue;
            CHECK(v.satisfied);
            if (v.kind == BoundKind::lower_bound_on_n) CHECK(v.rhs <= static_cast<std::int64_t>(code.n()));
        }
    };
    for (const auto& entry : corpus::all()) {
        CAPTURE(entry.name);
        check(entry.code);
    }
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t k = 2 + trial % 4;
        check(corpus::random_systematic(rng, k, k + 1 + trial % 5));
    }
}

TEST_CASE("evaluate_parameters") {
    BoundInputs in;
    in.k = 3;
    in.d = 4;
    in.r = 2;
    in.t = 4;
    in.systematic = true;
    in.n = 7;
    bool saw = false;
    for (const BoundVerdict& v : evaluate_parameters(in)) {
        if (v.name == "zs_systematic") {
            saw = true;
            CHECK(v.rhs == 7);
            CHECK(v.attained);
        }
    }
    CHECK(saw);
    CHECK(to_string(BoundKind::cardinality_cap) != to_string(BoundKind::lower_bound_on_n));
}
