#include "growth/decimal.hpp"

#include <cmath>
#include <stdexcept>

namespace growth {

namespace {

mpz_class pow10(int places) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(places));
    return p;
}

}  // namespace

mpq_class exact_rational(long double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    int e = 0;
    long double frac = std::frexp(x, &e);
    // 64-bit significand: scale to an integer exactly
    mpz_class mant;
    long double scaled = std::ldexp(frac, 64);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    unsigned long long hi = static_cast<unsigned long long>(std::ldexp(scaled, -32));
    unsigned long long lo = static_cast<unsigned long long>(scaled - std::ldexp(static_cast<long double>(hi), 32));
    mant = static_cast<unsigned long>(hi);
    mant <<= 32;
    mant += static_cast<unsigned long>(lo);
    if (neg) mant = -mant;
    mpq_class q(mant);
    const int shift = e - 64;
    if (shift >= 0) {
        mpz_class num = mant << shift;
        q = mpq_class(num);
    } else {
        mpz_class den = 1;
        den <<= -shift;
        q = mpq_class(mant, den);
        q.canonicalize();
    }
    return q;
}

std::string scaled_to_decimal(const mpz_class& m, int places) {
    const bool neg = m < 0;
    mpz_class a = neg ? mpz_class(-m) : m;
    std::string digits = a.get_str();
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, static_cast<std::size_t>(places + 1 - digits.size()), '0');
        digits.insert(digits.size() - places, ".");
    }
    return neg ? "-" + digits : digits;
}

std::string ceil_root_decimal(const mpz_class& c, unsigned long n, int places) {
    if (c <= 0) throw std::invalid_argument("count must be positive");
    if (n == 0) throw std::invalid_argument("root index must be positive");
    mpz_class target = c;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), pow10(places).get_mpz_t(), n);
    target *= scale;
    mpz_class r;
    const int exact = mpz_root(r.get_mpz_t(), target.get_mpz_t(), n);
    if (!exact) r += 1;
    return scaled_to_decimal(r, places);
}

std::string ceil_decimal(const mpq_class& q, int places) {
    mpq_class s = q * pow10(places);
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return scaled_to_decimal(r, places);
}

std::string ceil_decimal(long double x, int places) { return ceil_decimal(exact_rational(x), places); }

std::string half_even_decimal(const mpq_class& q, int places) {
    mpq_class s = q * pow10(places);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    mpq_class rem = s - fl;
    if (rem > mpq_class(1, 2) || (rem == mpq_class(1, 2) && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
    return scaled_to_decimal(fl, places);
}

std::string half_even_root_decimal(const mpz_class& c, unsigned long n, int places) {
    if (c <= 0) throw std::invalid_argument("radicand must be positive");
    if (n == 0) throw std::invalid_argument("root index must be positive");
    mpz_class scale, target, fl;
    mpz_pow_ui(scale.get_mpz_t(), pow10(places).get_mpz_t(), n);
    target = c * scale;
    mpz_root(fl.get_mpz_t(), target.get_mpz_t(), n);
    // compare 2 * 10^places * c^(1/n) with 2 fl + 1
    mpz_class lhs, rhs = 2 * fl + 1, two = 2;
    mpz_pow_ui(lhs.get_mpz_t(), two.get_mpz_t(), n);
    lhs *= target;
    mpz_pow_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), n);
    if (lhs > rhs || (lhs == rhs && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
    return scaled_to_decimal(fl, places);
}

std::string fraction_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string rational_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpq_class decimal_to_rational(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(mpz_class(s));
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpq_class q(mpz_class(digits), pow10(static_cast<int>(s.size() - dot - 1)));
    q.canonicalize();
    return q;
}

}  // namespace growth
