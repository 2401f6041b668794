#include <random>
#include <string_view>
#include <thread>

#include "batchcodes/constructions.hpp"
#include "batchcodes/errors.hpp"
#include "batchcodes/gf2.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace batchcodes;

namespace {

BitMatrix rows(std::initializer_list<std::string_view> r) {
    std::vector<std::string_view> v(r);
    return BitMatrix::from_strings(v);
}

}  // namespace

TEST_CASE("BitVector basics across word boundaries") {
    BitVector v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.weight() == 3);
    CHECK(v.ones() == std::vector<std::size_t>{0, 64, 129});
    v.flip(64);
    CHECK_FALSE(v.get(64));
    CHECK(v.to_string().size() == 130);

    BitVector w(130);
    w.set(129);
    CHECK(w.is_subset_of(v));
    CHECK(v.intersects(w));
    CHECK((v ^ w).ones() == std::vector<std::size_t>{0});

    CHECK_THROWS_AS(BitVector(0), DimensionError);
    CHECK_THROWS_AS(v ^= BitVector(3), DimensionError);
    CHECK_THROWS_AS((void)v.get(130), DimensionError);
    CHECK(BitVector::from_word(5, 0b10110).to_string() == "01101");
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix::identity(4)) == 4);
    CHECK(rank(simplex(3).generator()) == 3);
    CHECK(rank(rows({"101", "101"})) == 1);
    CHECK(rank(rows({"000", "000"})) == 0);
}

TEST_CASE("rank agrees with the span-size oracle and survives row operations") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> rows_dist(1, 6);
    std::uniform_int_distribution<std::size_t> cols_dist(1, 9);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 300; ++trial) {
        BitMatrix m(rows_dist(rng), cols_dist(rng));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, coin(rng));
        }
        const std::size_t r = rank(m);
        REQUIRE(r == oracle::span_rank(m));

        // Random row permutation followed by adding one row into another.
        std::vector<BitVector> permuted;
        for (std::size_t i = 0; i < m.rows(); ++i) permuted.push_back(m.row(i));
        std::shuffle(permuted.begin(), permuted.end(), rng);
        if (permuted.size() > 1) permuted[0] ^= permuted[1];
        CHECK(rank(BitMatrix(permuted)) == r);
    }
}

TEST_CASE("LinearCode rejects rank-deficient generators") {
    CHECK_THROWS_AS(LinearCode(rows({"101", "101"})), InvalidArgument);
    CHECK_NOTHROW(LinearCode(rows({"101", "011"})));
}

TEST_CASE("encode") {
    const LinearCode sub = subcube(2, 1);
    CHECK(sub.encode(BitVector::from_string("11")).to_string() == "110");
    CHECK(sub.encode(BitVector(2)).is_zero());
    CHECK(simplex(3).encode(BitVector::from_string("100")).to_string() == "1001101");
    CHECK_THROWS_AS((void)sub.encode(BitVector(3)), DimensionError);
}

TEST_CASE("encode is linear") {
    std::mt19937_64 rng(11);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 100; ++trial) {
        const LinearCode code = corpus::random_full_rank(rng, 1 + trial % 6, 6 + trial % 9);
        BitVector a(code.k()), b(code.k());
        for (std::size_t i = 0; i < code.k(); ++i) {
            a.set(i, coin(rng));
            b.set(i, coin(rng));
        }
        CHECK((code.encode(a) ^ code.encode(b)) == code.encode(a ^ b));
    }
}

TEST_CASE("min_distance") {
    CHECK(simplex(3).min_distance() == 4);
    CHECK(identity_code(5).min_distance() == 1);
    CHECK(subcube(2, 1).min_distance() == 2);
    for (std::size_t m = 2; m <= 5; ++m) CHECK(simplex(m).min_distance() == (std::size_t{1} << (m - 1)));

    const LinearCode wide = identity_code(25);
    CHECK_THROWS_AS((void)wide.min_distance(), CapacityError);
    CHECK(wide.min_distance(25) == 1);
}

TEST_CASE("min_distance matches the oracle and the Singleton bound") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const LinearCode code = corpus::random_full_rank(rng, 1 + trial % 7, 7 + trial % 6);
        const std::size_t d = code.min_distance();
        CHECK(d == oracle::distance(code.generator()));
        CHECK(d <= code.n() - code.k() + 1);
    }
    for (const auto& entry : corpus::all()) {
        CAPTURE(entry.name);
        CHECK(entry.code.min_distance() <= entry.code.n() - entry.code.k() + 1);
    }
}

TEST_CASE("min_distance memo is safe to fill from several threads") {
    const LinearCode code = simplex(10);
    std::vector<std::size_t> results(8, 0);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) {
        threads.emplace_back([&, i] { results[i] = code.min_distance(); });
    }
    for (auto& t : threads) t.join();
    for (const std::size_t d : results) CHECK(d == 512);
}

TEST_CASE("identity_column_map") {
    const LinearCode s21 = subcube(2, 1);
    const auto& sub = s21.identity_columns();
    REQUIRE(sub.has_value());
    CHECK(*sub == std::vector<std::size_t>{0, 1});

    CHECK_FALSE(LinearCode(rows({"110", "111"})).identity_columns().has_value());

    const LinearCode id4 = identity_code(4);
    const auto& id = id4.identity_columns();
    REQUIRE(id.has_value());
    CHECK(*id == std::vector<std::size_t>{0, 1, 2, 3});

    // Smallest column index wins when a unit vector repeats.
    const LinearCode dup_code(rows({"1101", "0010"}));
    const auto& dup = dup_code.identity_columns();
    REQUIRE(dup.has_value());
    CHECK(*dup == std::vector<std::size_t>{0, 2});
}

TEST_CASE("rate is reduced") {
    CHECK(simplex(3).rate() == Rate{3, 7});
    CHECK(paired_parity(4).rate() == Rate{2, 3});
    CHECK(identity_code(3).rate() == Rate{1, 1});
}
