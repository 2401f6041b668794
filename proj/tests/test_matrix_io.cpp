#include "batchcodes/constructions.hpp"
#include "batchcodes/errors.hpp"
#include "batchcodes/matrix_io.hpp"
#include "doctest.h"

using namespace batchcodes;

TEST_CASE("parse with and without header") {
    const BitMatrix a = parse_matrix("2 3\n101\n011\n");
    const BitMatrix b = parse_matrix("101\n011\n");
    const BitMatrix c = parse_matrix("1 0 1\n0 1 1\n");
    CHECK(a == b);
    CHECK(b == c);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
}

TEST_CASE("ambiguous first line") {
    // "1 1" is a header for a 1 x 1 matrix when the rest agrees...
    CHECK(parse_matrix("1 1\n1\n").cols() == 1);
    // ...and a row otherwise.
    const BitMatrix m = parse_matrix("1 1\n0 1\n");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
}

TEST_CASE("format round trip") {
    const BitMatrix g = simplex(3).generator();
    CHECK(format_matrix(g) == "3 7\n1001101\n0101011\n0010111\n");
    CHECK(parse_matrix(format_matrix(g)) == g);
    CHECK(parse_matrix("2 3\r\n101\r\n011\r\n\n\n") == parse_matrix("101\n011"));
}

TEST_CASE("parse errors carry positions") {
    try {
        (void)parse_matrix("101\n01\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        (void)parse_matrix("101\n0x1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
    CHECK_THROWS_AS((void)parse_matrix("2 3\n101\n"), ParseError);
    CHECK_THROWS_AS((void)parse_matrix("1  0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_matrix(""), ParseError);
    CHECK_THROWS_AS((void)parse_matrix("3 7\n1001101\n0101011\n00101111\n"), ParseError);
}
