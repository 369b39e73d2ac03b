#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace growth {

// Dense univariate polynomial over Z, coefficients from degree 0 upward.
// The zero polynomial is the empty vector.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p);
int degree(const ZPoly& p);  // -1 for the zero polynomial
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
ZPoly derivative(const ZPoly& a);
// Exact division; throws if b does not divide a over Z.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
mpz_class content(const ZPoly& a);
mpq_class evaluate(const ZPoly& a, const mpq_class& x);
std::string to_string(const ZPoly& p, const char* var = "z");

// Sparse bivariate polynomial over Z in x and y.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;  // (x-degree, y-degree)

    BivariatePolynomial() = default;
    static BivariatePolynomial monomial(int dx, int dy, const mpz_class& c = 1);

    void add_term(int dx, int dy, const mpz_class& c);
    const std::map<Key, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree_x() const;
    int degree_y() const;
    mpz_class coefficient(int dx, int dy) const;

    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial pow(int e) const;
    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    long double evaluate(long double x, long double y) const;

private:
    std::map<Key, mpz_class> terms_;
};

// Polynomial in s with coefficients in Z[z]; index = power of s.
using SPoly = std::vector<ZPoly>;

int s_degree(const SPoly& q);
SPoly s_derivative(const SPoly& q);
// Divides out the largest power of s that divides q; returns that power.
int strip_s_power(SPoly& q);

}  // namespace growth
