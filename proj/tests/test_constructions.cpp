#include "batchcodes/constructions.hpp"
#include "batchcodes/errors.hpp"
#include "batchcodes/profile.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace batchcodes;

namespace {

std::vector<std::string> column_strings(const LinearCode& code) {
    std::vector<std::string> out;
    for (const auto& c : code.columns()) out.push_back(c.to_string());
    return out;
}

}  // namespace

TEST_CASE("subcube") {
    const LinearCode s21 = subcube(2, 1);
    CHECK(column_strings(s21) == std::vector<std::string>{"10", "01", "11"});

    const LinearCode s22 = subcube(2, 2);
    CHECK(s22.k() == 4);
    CHECK(s22.n() == 9);
    CHECK(sorted_columns(s22.generator()) == sorted_columns(corpus::reference_subcube22().generator()));
    // The row-major layout happens to reproduce the reference column order too.
    CHECK(s22.generator() == corpus::reference_subcube22().generator());

    const LinearCode s31 = subcube(3, 1);
    CHECK(s31.k() == 3);
    CHECK(s31.n() == 4);
    CHECK(s31.columns().back().to_string() == "111");

    CHECK(subcube(4, 2).n() == 25);
    CHECK_THROWS_AS((void)subcube(5, 2), CapacityError);
    CHECK_THROWS_AS((void)subcube(1, 2), InvalidArgument);
}

TEST_CASE("simplex") {
    CHECK(simplex(3).generator() == corpus::reference_simplex3().generator());
    CHECK(sorted_columns(simplex(2).generator()) == sorted_columns(subcube(2, 1).generator()));
    for (std::size_t m = 2; m <= 6; ++m) {
        const LinearCode s = simplex(m);
        CHECK(s.n() == (std::size_t{1} << m) - 1);
        CHECK(s.systematic());
        auto cols = sorted_columns(s.generator());
        CHECK(std::adjacent_find(cols.begin(), cols.end()) == cols.end());
    }
    CHECK_THROWS_AS((void)simplex(1), InvalidArgument);
    CHECK_THROWS_AS((void)simplex(13), CapacityError);
}

TEST_CASE("triplicated_parity") {
    const LinearCode t3 = triplicated_parity(3);
    CHECK(column_strings(t3) ==
          std::vector<std::string>{"100", "010", "111", "100", "010", "111", "100", "010", "111"});
    CHECK_THROWS_AS((void)triplicated_parity(1), InvalidArgument);
}

TEST_CASE("blockwise_subcube_allones") {
    const LinearCode b1 = blockwise_subcube_allones(1);
    CHECK(b1.generator().row(0).to_string() == "1101");
    CHECK(b1.generator().row(1).to_string() == "0111");
    const LinearCode b3 = blockwise_subcube_allones(3);
    CHECK(b3.k() == 6);
    CHECK(b3.n() == 10);
    CHECK(b3.generator().row(2).to_string() == "0001100001");
}

TEST_CASE("paired_parity") {
    CHECK(paired_parity(4).n() == 6);
    CHECK(paired_parity(5).n() == 8);
    CHECK(paired_parity(5).columns().back().to_string() == "00001");
    for (std::size_t k = 2; k <= 6; ++k) {
        CHECK(paired_parity(k).min_distance() == 2);
        CHECK(paired_parity(k).systematic());
    }
}

TEST_CASE("identity") {
    const LinearCode id = identity_code(4);
    CHECK(id.min_distance() == 1);
    CHECK(id.rate() == Rate{1, 1});
    CHECK(batch_t(id) == 1);
}

TEST_CASE("every constructor yields a full-rank generator") {
    for (const auto& entry : corpus::all()) {
        CAPTURE(entry.name);
        CHECK(rank(entry.code.generator()) == entry.code.k());
    }
}
