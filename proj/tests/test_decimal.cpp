#include "doctest.h"

#include "growth/decimal.hpp"

using namespace growth;

TEST_CASE("upward rounding at five places") {
    CHECK(ceil_decimal(mpq_class(27, 4)) == "6.75000");
    CHECK(ceil_decimal(mpq_class(1, 3)) == "0.33334");
    CHECK(ceil_decimal(mpq_class(-1, 3)) == "-0.33333");
    CHECK(ceil_root_decimal(12, 2) == "3.46411");
    CHECK(ceil_root_decimal(16, 2) == "4.00000");
}

TEST_CASE("half-even rounding") {
    CHECK(half_even_decimal(mpq_class(9375, 256)) == "36.62109");
    CHECK(half_even_decimal(mpq_class(1, 200000)) == "0.00000");
    CHECK(half_even_decimal(mpq_class(3, 200000)) == "0.00002");
    CHECK(half_even_root_decimal(3, 4) == "1.31607");
}

TEST_CASE("rational strings") {
    CHECK(rational_string(mpq_class(3)) == "3");
    CHECK(fraction_string(mpq_class(3)) == "3/1");
    CHECK(fraction_string(mpq_class(81, 4)) == "81/4");
    CHECK(decimal_to_rational("2.83118") == mpq_class(141559, 50000));
    CHECK(exact_rational(0.5L) == mpq_class(1, 2));
}
