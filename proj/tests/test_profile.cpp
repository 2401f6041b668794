#include <random>

#include "batchcodes/constructions.hpp"
#include "batchcodes/errors.hpp"
#include "batchcodes/profile.hpp"
#include "batchcodes/query.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace batchcodes;

namespace {

const SizeCap kInf = SizeCap::unbounded();

SizeCap cap(std::size_t r) { return SizeCap::at_most(r); }

// Largest t with every uniform query (i, ..., i) servable, via the planner.
std::size_t uniform_query_t(const LinearCode& code, SizeCap r) {
    QueryPlanner planner(code, r);
    std::size_t t = 0;
    while (true) {
        for (std::size_t i = 0; i < code.k(); ++i) {
            if (!planner.plan(Query(std::vector<std::size_t>(t + 1, i), code.k()))) return t;
        }
        ++t;
    }
}

}  // namespace

TEST_CASE("max_disjoint_packing") {
    const LinearCode sx = simplex(3);
    const auto sets = enumerate_recovery_sets(sx, BitVector::unit(3, 0)).sets;
    CHECK(max_disjoint_packing(sets) == 4);
    CHECK(max_disjoint_packing(sets, 2) >= 2);
    CHECK(max_disjoint_packing({}) == 0);
}

TEST_CASE("batch_t examples") {
    CHECK(batch_t(subcube(2, 2)) == 4);
    CHECK(subcube(2, 2).min_distance() == 4);
    CHECK(batch_t(simplex(3), cap(2)) == 4);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(batch_t(identity_code(k)) == 1);
        CHECK(batch_t(identity_code(k), cap(1)) == 1);
    }
    CHECK(batch_t(triplicated_parity(3), cap(1)) == 0);
}

TEST_CASE("pir_t examples") {
    CHECK(pir_t(simplex(3), cap(2)) == 4);
    CHECK(pir_t(subcube(2, 1)) == 2);
    for (std::size_t k = 1; k <= 4; ++k) CHECK(pir_t(identity_code(k)) == 1);
    CHECK(has_property_a(simplex(3), 4, cap(2)));
    CHECK_FALSE(has_property_a(simplex(3), 5, cap(2)));
}

TEST_CASE("lrc_profile examples") {
    for (std::size_t k = 3; k <= 5; ++k) {
        const LrcProfile p = lrc_profile(triplicated_parity(k), cap(1));
        CHECK(p.locality == 1);
        CHECK(p.availability == 2);
    }
    for (std::size_t kappa = 2; kappa <= 3; ++kappa) {
        const LinearCode code = blockwise_subcube_allones(kappa);
        const LrcProfile p = lrc_profile(code, cap(2));
        REQUIRE(p.per_symbol.back().min_size.has_value());
        CHECK(*p.per_symbol.back().min_size >= kappa);
    }
    const LrcProfile sx = lrc_profile(simplex(3), cap(2));
    CHECK(sx.availability == 3);
    for (const auto& s : sx.per_symbol) CHECK(s.packing == 3);
    CHECK(sx.locality == 2);

    const LrcProfile id = lrc_profile(identity_code(3), cap(2));
    CHECK_FALSE(id.locality.has_value());
    CHECK(id.availability == 0);
}

TEST_CASE("lrc_profile packings match the all-subsets oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const LinearCode code = corpus::random_full_rank(rng, 2 + trial % 3, 5 + trial % 5);
        const auto cols = oracle::column_masks(code.generator());
        const std::size_t r = 1 + trial % 3;
        const LrcProfile p = lrc_profile(code, cap(r));
        for (std::size_t j = 0; j < code.n(); ++j) {
            if (cols[j] == 0) {
                CHECK_FALSE(p.per_symbol[j].packing.has_value());
                continue;
            }
            CHECK(p.per_symbol[j].packing == oracle::max_packing_any_subsets(cols, cols[j], r, 1U << j));
        }
    }
}

TEST_CASE("info_lrc_profile") {
    const LrcProfile pp = info_lrc_profile(paired_parity(4), cap(2));
    for (const auto& s : pp.per_symbol) CHECK(*s.packing >= 2);
    for (const auto& s : info_lrc_profile(identity_code(3), cap(2)).per_symbol) CHECK(s.packing == 1);
    CHECK(info_lrc_profile(simplex(3), cap(2)).availability == 4);
    CHECK(info_lrc_profile(simplex(3), cap(2), true).availability == 3);
    CHECK_THROWS_AS((void)info_lrc_profile(LinearCode(BitMatrix::from_strings(std::vector<std::string_view>{
                                               "110", "111"})),
                                           cap(2)),
                    NotApplicable);
}

TEST_CASE("corollary_check") {
    CHECK(corollary_check(paired_parity(4), 2, cap(2)));
    CHECK(corollary_check(simplex(3), 4, cap(2)));
    CHECK(corollary_check(identity_code(3), 2, cap(1)));
    CHECK(corollary_check(blockwise_subcube_allones(2), 2, cap(2)));
    const LinearCode no_identity(BitMatrix::from_strings(std::vector<std::string_view>{"110", "111"}));
    CHECK_THROWS_AS((void)corollary_check(no_identity, 2, cap(2)), NotApplicable);
}

TEST_CASE("batch_t <= pir_t <= d, monotone in r, and pir_t equals the uniform-query route") {
    std::mt19937_64 rng(43);
    auto check_code = [](const LinearCode& code) {
        const std::size_t d = code.min_distance();
        std::size_t prev_batch = 0;
        std::size_t prev_pir = 0;
        for (const SizeCap r : {cap(1), cap(2), cap(3), kInf}) {
            const std::size_t b = batch_t(code, r);
            const std::size_t p = pir_t(code, r);
            CHECK(b <= p);
            CHECK(p <= d);
            CHECK(b >= prev_batch);
            CHECK(p >= prev_pir);
            CHECK(p == uniform_query_t(code, r));
            prev_batch = b;
            prev_pir = p;
        }
    };
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + trial % 5;
        check_code(corpus::random_systematic(rng, k, k + trial % (11 - k)));
    }
}

TEST_CASE("batch_t matches the all-subsets oracle on small codes") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const LinearCode code = corpus::random_full_rank(rng, 2 + trial % 2, 4 + trial % 4);
        const auto cols = oracle::column_masks(code.generator());
        CHECK(batch_t(code) == oracle::batch_t(cols, code.k()));
        CHECK(batch_t(code, cap(2)) == oracle::batch_t(cols, code.k(), 2));
    }
}

TEST_CASE("profile_code") {
    const std::vector<SizeCap> caps = {cap(2), kInf};
    const CodeProfile p = profile_code(simplex(3), caps);
    CHECK(p.n == 7);
    CHECK(p.k == 3);
    CHECK(p.d == 4);
    CHECK(p.systematic);
    CHECK(p.all_symbol_locality == 2);
    REQUIRE(p.caps.size() == 2);
    CHECK(p.caps[0].batch_t == 4);
    CHECK(p.caps[0].pir_t == 4);
    CHECK(p.caps[0].all_symbol_availability == 3);
    CHECK(p.caps[0].info_symbol_availability == 4);
    CHECK(p.caps[1].batch_t == 4);
}
