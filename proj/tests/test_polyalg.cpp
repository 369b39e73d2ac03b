#include "doctest.h"

#include <cmath>

#include "growth/polyalg.hpp"
#include "growth/twig.hpp"
#include "properties.hpp"

using namespace growth;

namespace {
BivariatePolynomial y_one_plus_x_cubed() {
    BivariatePolynomial p = BivariatePolynomial::monomial(0, 0) + BivariatePolynomial::monomial(1, 0);
    return BivariatePolynomial::monomial(0, 1) * p.pow(3);
}
}  // namespace

TEST_CASE("quadratic discriminant") {
    // s^2 + z s + 1
    SPoly q{{1}, {0, 1}, {1}};
    CHECK(discriminant_in_s(q) == ZPoly{-4, 0, 1});
    SPoly lin{{0, 1}, {1}};
    CHECK(degree(discriminant_in_s(lin)) == 0);
}

TEST_CASE("modular and Sylvester resultants agree on a fixed pair") {
    SPoly a{{1, 2}, {0, -1}, {3}};
    SPoly b{{-2}, {1, 0, 1}};
    CHECK(resultant(a, b) == resultant_sylvester(a, b));
}

TEST_CASE("resultant vanishes exactly on common factors") {
    auto r = props::resultant_gcd(200);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("integer gcd of polynomials") {
    ZPoly a = mul(ZPoly{-1, 1}, ZPoly{2, 3});
    ZPoly b = mul(ZPoly{-1, 1}, ZPoly{5, 0, 1});
    CHECK(gcd(a, b) == ZPoly{-1, 1});
    CHECK(degree(gcd(ZPoly{1, 1}, ZPoly{-1, 1})) == 0);
}

TEST_CASE("complex roots") {
    // (z - 1)(z - 2)(z + 3)
    ZPoly p = mul(mul(ZPoly{-1, 1}, ZPoly{-2, 1}), ZPoly{3, 1});
    auto roots = polynomial_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0] - std::complex<long double>(-3)) < 1e-12L);
    CHECK(std::abs(roots[2] - std::complex<long double>(2)) < 1e-12L);
    auto ci = polynomial_roots(ZPoly{1, 0, 1});
    CHECK(std::abs(std::abs(ci[0].imag()) - 1) < 1e-12L);
    CHECK_THROWS(polynomial_roots(ZPoly{5}));
}

TEST_CASE("positive real roots are isolated exactly") {
    ZPoly p = mul(ZPoly{-2, 0, 1}, ZPoly{1, 1});  // (z^2 - 2)(z + 1)
    auto rr = positive_real_roots(p);
    REQUIRE(rr.size() == 1);
    CHECK(sign_at(p, rr[0].lo) * sign_at(p, rr[0].hi) <= 0);
    CHECK(std::fabs(rr[0].value() - std::sqrt(2.0L)) < 1e-15L);
    CHECK(positive_real_roots(ZPoly{1, 0, 1}).empty());
}

TEST_CASE("Laurent normalization of y(1+x)^3") {
    int shift = -1;
    SPoly d = laurent_normalize(y_one_plus_x_cubed(), &shift);
    CHECK(shift == 1);
    CHECK(s_degree(d) >= 1);
}

TEST_CASE("diagonal of 1/(1 - y(1+x)^3) grows like 27/4") {
    auto r = diagonal_radius(y_one_plus_x_cubed(), 1e9, 1);
    CHECK(r.bound == "6.75000");
    CHECK(r.z_lo <= mpq_class(4, 27));
    CHECK(r.z_hi >= mpq_class(4, 27));
    CHECK(r.audit.discriminant_degree == 2);
    auto cp = critical_point(y_one_plus_x_cubed());
    CHECK(std::fabs(cp.bound - 6.75L) < 1e-9L);
}

TEST_CASE("square-lattice twig bounds decrease with level") {
    auto l1 = twig_bound(2, 1);
    auto l2 = twig_bound(2, 2);
    auto l3 = twig_bound(2, 3);
    CHECK(l1.bound == "6.75000");
    CHECK(l2.bound == "5.49382");
    CHECK(l3.bound == "5.24269");
    CHECK(std::stod(l2.bound) < 6.75);
    CHECK(std::stod(l3.bound) < std::stod(l2.bound));
    CHECK(l3.oracle_agrees);
    CHECK(l3.numerators_nonvanishing);
    REQUIRE(l3.audits.size() == 3);
    CHECK(l3.audits[1].discriminant_degree == 20);
    CHECK(l3.audits[2].discriminant_degree == 105);
}

TEST_CASE("cubic twig bounds, levels 1 and 2") {
    auto r = twig_bound(3, 2);
    REQUIRE(r.audits.size() == 2);
    CHECK(std::fabs(r.audits[0].selected - 20.25L) < 1e-9L);
    CHECK(r.bound == "18.23447");
    CHECK(r.oracle_agrees);
    CHECK(r.numerators_nonvanishing);
    CHECK(r.audits[1].discriminant_degree == 64);
}
