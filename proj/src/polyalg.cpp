#include "growth/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "growth/decimal.hpp"
#include "growth/manifolds.hpp"
#include "growth/twig.hpp"

namespace growth {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using cld = std::complex<long double>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const mpz_class& c, u64 p) { return mpz_fdiv_ui(c.get_mpz_t(), p); }

using ModPoly = std::vector<u64>;

void trim_mod(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Resultant over F_p by the Euclidean algorithm; both inputs trimmed.
u64 resultant_mod(ModPoly a, ModPoly b, u64 p) {
    u64 res = 1;
    if (a.empty() || b.empty()) return 0;
    while (true) {
        const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
        if (db == 0) return mulmod(res, powmod(b[0], da, p), p);
        if (da < db) {
            if ((da & 1) && (db & 1)) res = submod(0, res, p);
            std::swap(a, b);
            continue;
        }
        // a mod b
        const u64 inv = invmod(b.back(), p);
        for (int i = da; i >= db; --i) {
            const u64 f = mulmod(a[i], inv, p);
            if (!f) continue;
            for (int j = 0; j <= db; ++j) a[i - db + j] = submod(a[i - db + j], mulmod(f, b[j], p), p);
        }
        a.resize(db);
        trim_mod(a);
        if (a.empty()) return 0;
        const int dr = static_cast<int>(a.size()) - 1;
        // res(A, B) = (-1)^(da db) lc(B)^(da - dr) res(B, R)
        if ((da & 1) && (db & 1)) res = submod(0, res, p);
        res = mulmod(res, powmod(b.back(), da - dr, p), p);
        std::swap(a, b);
    }
}

u64 eval_mod(const ZPoly& c, u64 z, u64 p) {
    u64 r = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = addmod(mulmod(r, z, p), reduce(c[i], p), p);
    return r;
}

// Newton interpolation through small increasing points (xs[i], ys[i]) over F_p.
ModPoly interpolate_mod(const std::vector<u64>& xs, std::vector<u64> ys, u64 p) {
    const std::size_t n = xs.size();
    const u64 span = n ? xs.back() - xs.front() : 0;
    std::vector<u64> inv(span + 1, 1);
    for (u64 d = 2; d <= span; ++d) inv[d] = mulmod(p - p / d, inv[p % d], p);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            ys[i] = mulmod(submod(ys[i], ys[i - 1], p), inv[xs[i] - xs[i - j]], p);
    ModPoly r(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // r = r * (x - xs[k]) + ys[k]
        for (std::size_t i = n - 1; i > 0; --i) r[i] = submod(r[i - 1], mulmod(r[i], xs[k], p), p);
        r[0] = submod(ys[k], mulmod(r[0], xs[k], p), p);
    }
    return r;
}

int z_degree(const SPoly& a) {
    int d = -1;
    for (const auto& c : a) d = std::max(d, degree(c));
    return d;
}

double log2_norm1(const SPoly& a) {
    mpz_class s = 0;
    for (const auto& c : a)
        for (const auto& v : c) s += abs(v);
    if (s == 0) return 0;
    long e;
    const double m = mpz_get_d_2exp(&e, s.get_mpz_t());
    return std::log2(m) + static_cast<double>(e);
}

long double to_ld(const mpz_class& v) {
    long e;
    const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(m), static_cast<int>(e));
}

// log2 |v| for v != 0.
long double log2_abs(const mpz_class& v) {
    long e;
    const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log2(std::fabs(static_cast<long double>(m))) + e;
}

ZPoly primitive(ZPoly a) {
    trim(a);
    if (a.empty()) return a;
    mpz_class c = content(a);
    if (a.back() < 0) c = -c;
    for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return a;
}

// Pseudo-remainder of a by b (deg a >= deg b).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const int db = degree(b);
    const mpz_class& lb = b[db];
    while (degree(a) >= db) {
        const int da = degree(a);
        const mpz_class la = a[da];
        for (auto& v : a) v *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        trim(a);
    }
    return a;
}

}  // namespace

SPoly laurent_normalize(const BivariatePolynomial& p, int* shift) {
    // x^n y^m -> s^(n-m) z^m, then multiply by s^(max y-degree)
    const int sh = std::max(p.degree_y(), 0);
    SPoly q;
    auto coef = [&](int sdeg, int zdeg) -> mpz_class& {
        if (static_cast<int>(q.size()) <= sdeg) q.resize(sdeg + 1);
        if (static_cast<int>(q[sdeg].size()) <= zdeg) q[sdeg].resize(zdeg + 1);
        return q[sdeg][zdeg];
    };
    coef(sh, 0) += 1;
    for (const auto& [k, c] : p.terms()) coef(k.first - k.second + sh, k.second) -= c;
    for (auto& c : q) trim(c);
    while (!q.empty() && q.back().empty()) q.pop_back();
    if (shift) *shift = sh;
    return q;
}

ZPoly resultant(const SPoly& a_in, const SPoly& b_in) {
    SPoly a = a_in, b = b_in;
    while (!a.empty() && degree(a.back()) < 0) a.pop_back();
    while (!b.empty() && degree(b.back()) < 0) b.pop_back();
    if (a.empty() || b.empty()) return {};
    const int na = static_cast<int>(a.size()) - 1, nb = static_cast<int>(b.size()) - 1;
    if (na == 0 && nb == 0) return ZPoly{1};
    const int ma = std::max(z_degree(a), 0), mb = std::max(z_degree(b), 0);
    const int deg_bound = nb * ma + na * mb;
    const double bits = nb * log2_norm1(a) + na * log2_norm1(b) + 2;

    std::vector<mpz_class> acc(deg_bound + 1, 0);
    mpz_class modulus = 1;
    mpz_class prime = mpz_class(1) << 61;
    while (static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) <= bits + 1) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 p = mpz_get_ui(prime.get_mpz_t());
        std::vector<u64> xs, ys;
        for (u64 z = 1; static_cast<int>(xs.size()) <= deg_bound; ++z) {
            ModPoly ea(a.size()), eb(b.size());
            for (std::size_t i = 0; i < a.size(); ++i) ea[i] = eval_mod(a[i], z, p);
            for (std::size_t i = 0; i < b.size(); ++i) eb[i] = eval_mod(b[i], z, p);
            if (ea.back() == 0 || eb.back() == 0) continue;  // degree drop
            xs.push_back(z);
            ys.push_back(resultant_mod(ea, eb, p));
        }
        const ModPoly r = interpolate_mod(xs, ys, p);
        // CRT: acc + modulus * t with t = (r - acc) / modulus mod p
        const u64 minv = invmod(reduce(modulus, p), p);
        for (int i = 0; i <= deg_bound; ++i) {
            const u64 t = mulmod(submod(r[i], reduce(acc[i], p), p), minv, p);
            acc[i] += modulus * static_cast<unsigned long>(t);
        }
        modulus *= static_cast<unsigned long>(p);
    }
    const mpz_class half = modulus / 2;
    for (auto& v : acc)
        if (v > half) v -= modulus;
    trim(acc);
    return acc;
}

ZPoly resultant_sylvester(const SPoly& a_in, const SPoly& b_in) {
    SPoly a = a_in, b = b_in;
    while (!a.empty() && degree(a.back()) < 0) a.pop_back();
    while (!b.empty() && degree(b.back()) < 0) b.pop_back();
    if (a.empty() || b.empty()) return {};
    const int na = static_cast<int>(a.size()) - 1, nb = static_cast<int>(b.size()) - 1;
    const int n = na + nb;
    if (n == 0) return ZPoly{1};
    std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
    for (int r = 0; r < nb; ++r)
        for (int i = 0; i <= na; ++i) m[r][r + na - i] = a[i];
    for (int r = 0; r < na; ++r)
        for (int i = 0; i <= nb; ++i) m[nb + r][r + nb - i] = b[i];
    ZPoly prev{1};
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (degree(m[k][k]) < 0) {
            int r = k + 1;
            while (r < n && degree(m[r][k]) < 0) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_div(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    ZPoly det = m[n - 1][n - 1];
    if (negate) det = scale(det, -1);
    return det;
}

ZPoly discriminant_in_s(const SPoly& q_in) {
    SPoly q = q_in;
    while (!q.empty() && degree(q.back()) < 0) q.pop_back();
    const int n = static_cast<int>(q.size()) - 1;
    if (n < 1) throw std::invalid_argument("discriminant needs positive degree in s");
    ZPoly r = resultant(q, s_derivative(q));
    r = exact_div(r, q.back());
    if ((n * (n + 1) / 2) % 2) r = scale(r, -1);
    return r;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
    ZPoly a = primitive(a_in), b = primitive(b_in);
    if (a.empty()) return b;
    if (b.empty()) return a;
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), content(a_in).get_mpz_t(), content(b_in).get_mpz_t());
    if (degree(a) < degree(b)) std::swap(a, b);
    while (degree(b) > 0) {
        ZPoly r = primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    ZPoly g = b.empty() ? a : ZPoly{1};
    return scale(g, c);
}

std::vector<cld> polynomial_roots(const ZPoly& p_in) {
    ZPoly p = p_in;
    trim(p);
    if (degree(p) < 1) throw std::invalid_argument("root finding needs degree >= 1");
    std::vector<cld> roots;
    int low = 0;
    while (p[low] == 0) ++low;
    for (int i = 0; i < low; ++i) roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + low);
    const int n = degree(p);
    if (n == 0) return roots;

    // Normalised coefficients; log2 scale keeps huge integers in range.
    long double top = -std::numeric_limits<long double>::infinity();
    std::vector<long double> lg(n + 1, -std::numeric_limits<long double>::infinity());
    for (int i = 0; i <= n; ++i)
        if (p[i] != 0) top = std::max(top, lg[i] = log2_abs(p[i]));
    std::vector<long double> a(n + 1, 0);
    for (int i = 0; i <= n; ++i)
        if (p[i] != 0) {
            long e;
            const double m = mpz_get_d_2exp(&e, p[i].get_mpz_t());
            a[i] = std::ldexp(static_cast<long double>(m), static_cast<int>(e - std::lround(top)));
        }

    // Starting points on circles from the upper hull of (i, log|a_i|).
    std::vector<int> hull;
    for (int i = 0; i <= n; ++i) {
        if (p[i] == 0) continue;
        while (hull.size() >= 2) {
            const int i1 = hull[hull.size() - 2], i2 = hull.back();
            if ((lg[i2] - lg[i1]) * (i - i1) <= (lg[i] - lg[i1]) * (i2 - i1)) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    std::vector<cld> z;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const int gap = hull[h + 1] - hull[h];
        const long double r = std::exp2((lg[hull[h]] - lg[hull[h + 1]]) / gap);
        for (int j = 0; j < gap; ++j) {
            const long double ang = two_pi * j / gap + two_pi * h / n + 0.4L;
            z.push_back(std::polar(r, ang));
        }
    }

    auto newton = [&](cld x) -> cld {
        if (std::abs(x) <= 1) {
            cld v = a[n], d = 0;
            for (int i = n - 1; i >= 0; --i) {
                d = d * x + v;
                v = v * x + a[i];
            }
            return d == cld(0) ? cld(0) : v / d;
        }
        const cld w = 1.0L / x;
        cld v = a[0], d = 0;  // reversed polynomial in w
        for (int i = 1; i <= n; ++i) {
            d = d * w + v;
            v = v * w + a[i];
        }
        const cld den = static_cast<long double>(n) * v - w * d;
        return den == cld(0) ? cld(0) : x * v / den;
    };

    std::vector<bool> done(n, false);
    const long double eps = 64 * std::numeric_limits<long double>::epsilon();
    for (int it = 0; it < 2000; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            const cld N = newton(z[i]);
            cld s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            const cld step = N / (1.0L - N * s);
            z[i] -= step;
            if (std::abs(step) <= eps * std::abs(z[i])) done[i] = true;
            else all = false;
        }
        if (all) break;
    }
    roots.insert(roots.end(), z.begin(), z.end());
    std::sort(roots.begin(), roots.end(), [](const cld& a, const cld& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

int sign_at(const ZPoly& p, const mpq_class& x) {
    const int n = degree(p);
    if (n < 0) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    // den^n p(x) = sum c_i num^i den^(n-i), Horner from the top
    mpz_class acc = p[n], bp = 1;
    for (int i = n - 1; i >= 0; --i) {
        bp *= den;
        acc = acc * num + p[i] * bp;
    }
    return sgn(acc);
}

std::vector<RealRoot> positive_real_roots(const ZPoly& p, int bits) {
    std::vector<long double> cand;
    for (const auto& r : polynomial_roots(p))
        if (r.real() > 0 && std::fabs(r.imag()) <= 1e-6L * std::abs(r)) cand.push_back(r.real());
    std::sort(cand.begin(), cand.end());
    std::vector<RealRoot> out;
    for (long double c : cand) {
        if (!out.empty() && c <= out.back().hi.get_d()) continue;  // inside the previous bracket
        for (long double delta = 1e-15L; delta <= 1e-5L; delta *= 10) {
            mpq_class lo = exact_rational(c * (1 - delta)), hi = exact_rational(c * (1 + delta));
            if (!out.empty() && lo <= out.back().hi) lo = out.back().hi;
            const int sl = sign_at(p, lo), sh = sign_at(p, hi);
            if (sl == 0 || sh == 0 || sl == sh) continue;
            // bisect to the requested relative width
            const mpq_class target = hi / (mpq_class(mpz_class(1) << bits));
            while (hi - lo > target) {
                mpq_class mid = (lo + hi) / 2;
                const int sm = sign_at(p, mid);
                if (sm == 0) {
                    lo = hi = mid;
                    break;
                }
                (sm == sl ? lo : hi) = mid;
            }
            out.push_back({lo, hi});
            break;
        }
    }
    return out;
}

DiagonalResult diagonal_radius(const BivariatePolynomial& p, long double prev, int level) {
    SPoly q = laurent_normalize(p);
    strip_s_power(q);  // an s^j factor would make the discriminant vanish identically
    ZPoly disc = discriminant_in_s(q);
    DiagonalResult res;
    res.audit.level = level;
    res.audit.prev = prev;
    res.audit.discriminant_degree = degree(disc);
    const auto roots = positive_real_roots(disc);
    const RealRoot* best = nullptr;
    for (const auto& r : roots) {
        const long double inv = 1.0L / r.value();
        res.audit.inverse_roots_sorted.push_back(inv);
        if (inv <= prev * (1 + 1e-9L) && (!best || r.value() < best->value())) best = &r;
    }
    std::sort(res.audit.inverse_roots_sorted.rbegin(), res.audit.inverse_roots_sorted.rend());
    if (!best) throw std::runtime_error("no admissible positive real singularity");
    res.z_lo = best->lo;
    res.z_hi = best->hi;
    res.audit.selected = 1.0L / best->value();
    res.bound = ceil_decimal(mpq_class(1 / best->lo), 5);
    // The bracket may straddle a decimal boundary (exact rational roots such
    // as 4/27); the lower decimal t is valid iff 1/t <= z*, decided by sign.
    const std::string tighter = ceil_decimal(mpq_class(1 / best->hi), 5);
    if (tighter != res.bound) {
        const mpq_class zt = 1 / decimal_to_rational(tighter);
        const int st = sign_at(disc, zt);
        if (zt <= best->lo || st == 0 || (zt < best->hi && st == sign_at(disc, best->lo))) res.bound = tighter;
    }
    return res;
}

CriticalPoint critical_point(const BivariatePolynomial& p) {
    struct Term {
        int dx, dy;
        long double c;
    };
    std::vector<Term> terms;
    for (const auto& [k, c] : p.terms()) terms.push_back({k.first, k.second, to_ld(c)});
    auto P = [&](long double x, long double y) {
        long double r = 0;
        for (const auto& t : terms) r += t.c * std::pow(x, t.dx) * std::pow(y, t.dy);
        return r;
    };
    auto G = [&](long double x, long double y) {
        long double r = 0;
        for (const auto& t : terms) r += t.c * (t.dx - t.dy) * std::pow(x, t.dx) * std::pow(y, t.dy);
        return r;
    };
    auto y_of = [&](long double x) {
        long double lo = 0, hi = 1;
        while (P(x, hi) < 1 && hi < 1e6L) hi *= 2;
        for (int i = 0; i < 80; ++i) {
            const long double mid = (lo + hi) / 2;
            (P(x, mid) > 1 ? hi : lo) = mid;
        }
        return (lo + hi) / 2;
    };
    CriticalPoint cp;
    long double px = 0, pg = 0;
    for (long double x = 1e-4L; x < 10; x *= 1.02L) {
        const long double g = G(x, y_of(x));
        if (px > 0 && (g > 0) != (pg > 0)) {
            long double a = px, b = x;
            for (int i = 0; i < 70; ++i) {
                const long double m = (a + b) / 2;
                ((G(m, y_of(m)) > 0) == (pg > 0) ? a : b) = m;
            }
            cp.x = (a + b) / 2;
            cp.y = y_of(cp.x);
            cp.bound = 1 / (cp.x * cp.y);
            return cp;
        }
        px = x;
        pg = g;
    }
    return cp;
}

TwigBoundReport twig_bound(int d, int level) {
    if (d != 2 && d != 3) throw std::invalid_argument("twig bounds are implemented for d = 2 and d = 3");
    if (level < 1) throw std::invalid_argument("twig level must be >= 1");
    TwigBoundReport rep;
    rep.d = d;
    rep.level = level;
    long double prev = bound_sam_som_upper(d, 2).get_d();
    DiagonalResult last;
    for (int l = 1; l <= level; ++l) {
        rep.poly = twig_level_polynomial(d, l);
        last = diagonal_radius(rep.poly, prev, l);
        rep.audits.push_back(last.audit);
        prev = last.audit.selected;
    }
    rep.bound = last.bound;
    const CriticalPoint cp = critical_point(rep.poly);
    const long double z = 1.0L / last.audit.selected;
    rep.oracle_agrees = cp.bound > 0 && std::fabs(cp.x * cp.y - z) <= 1e-9L * z;
    const long double n1 = cp.x;
    const long double n2 = d == 3 ? cp.x * cp.y * std::pow(1 + 3 * cp.x, 4) : n1;
    rep.numerators_nonvanishing = rep.oracle_agrees && n1 > 0 && n2 > 0;
    return rep;
}

}  // namespace growth
