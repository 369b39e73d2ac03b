#pragma once

#include <gmpxx.h>

#include <string>

namespace growth {

// Decimal rendering of m / 10^places, e.g. (308378, 5) -> "3.08378".
std::string scaled_to_decimal(const mpz_class& m, int places);

// Smallest decimal with `places` digits that is >= c^(1/n), computed exactly.
std::string ceil_root_decimal(const mpz_class& c, unsigned long n, int places = 5);

// Smallest decimal with `places` digits that is >= q.
std::string ceil_decimal(const mpq_class& q, int places = 5);
// Same for a binary float; the float is taken as exact.
std::string ceil_decimal(long double x, int places = 5);

// Round half to even at `places` digits.
std::string half_even_decimal(const mpq_class& q, int places = 5);

// Round half to even of c^(1/n), exact.
std::string half_even_root_decimal(const mpz_class& c, unsigned long n, int places = 5);
std::string rational_string(const mpq_class& q);  // "3" or "27/4"
std::string fraction_string(const mpq_class& q);  // always "p/q"
// The binary value of a finite float as a rational.
mpq_class exact_rational(long double x);

// Exact value of a plain decimal string such as "2.83118".
mpq_class decimal_to_rational(const std::string& s);

}  // namespace growth
