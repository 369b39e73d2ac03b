#include "growth/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace growth {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
    ZPoly r = a;
    for (auto& v : r) v *= c;
    trim(r);
    return r;
}

ZPoly derivative(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
    trim(r);
    return r;
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    const int db = degree(b);
    if (db < 0) throw std::domain_error("division by the zero polynomial");
    ZPoly rem = a;
    trim(rem);
    const int da = degree(rem);
    if (da < db) {
        if (da >= 0) throw std::domain_error("polynomial division is not exact");
        return {};
    }
    ZPoly q(da - db + 1);
    const mpz_class& lead = b[db];
    for (int i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("polynomial division is not exact");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) mpz_submul(rem[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("polynomial division is not exact");
    trim(q);
    return q;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

mpq_class evaluate(const ZPoly& a, const mpq_class& x) {
    mpq_class r = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = r * x + a[i];
    return r;
}

std::string to_string(const ZPoly& p, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(p); i >= 0; --i) {
        if (p[i] == 0) continue;
        mpz_class c = p[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a;
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

BivariatePolynomial BivariatePolynomial::monomial(int dx, int dy, const mpz_class& c) {
    BivariatePolynomial p;
    p.add_term(dx, dy, c);
    return p;
}

void BivariatePolynomial::add_term(int dx, int dy, const mpz_class& c) {
    if (dx < 0 || dy < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Key{dx, dy}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BivariatePolynomial::degree_x() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivariatePolynomial::degree_y() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

mpz_class BivariatePolynomial::coefficient(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    BivariatePolynomial r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) r.add_term(a.first + b.first, a.second + b.second, ca * cb);
    return r;
}

BivariatePolynomial BivariatePolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    BivariatePolynomial r = monomial(0, 0);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

long double BivariatePolynomial::evaluate(long double x, long double y) const {
    long double r = 0;
    for (const auto& [k, c] : terms_) r += c.get_d() * std::pow(x, k.first) * std::pow(y, k.second);
    return r;
}

int s_degree(const SPoly& q) {
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i)
        if (degree(q[i]) >= 0) return i;
    return -1;
}

SPoly s_derivative(const SPoly& q) {
    SPoly r;
    for (std::size_t i = 1; i < q.size(); ++i) r.push_back(scale(q[i], static_cast<unsigned long>(i)));
    while (!r.empty() && degree(r.back()) < 0) r.pop_back();
    return r;
}

int strip_s_power(SPoly& q) {
    int j = 0;
    while (j < static_cast<int>(q.size()) && degree(q[j]) < 0) ++j;
    if (j == static_cast<int>(q.size())) return 0;
    q.erase(q.begin(), q.begin() + j);
    return j;
}

}  // namespace growth
