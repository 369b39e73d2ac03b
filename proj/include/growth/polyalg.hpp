#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "growth/polynomial.hpp"

namespace growth {

// D(s, z) = s^Ny (1 - p(s, z/s)) with Ny the largest y-degree of p (returned
// through `shift`). D may carry a factor s^j; see strip_s_power.
SPoly laurent_normalize(const BivariatePolynomial& p, int* shift = nullptr);

// Res_s(a, b) as a polynomial in z. The modular version uses word-size primes,
// evaluation/interpolation in z and CRT against a norm bound.
ZPoly resultant(const SPoly& a, const SPoly& b);
// Fraction-free Sylvester determinant over Z[z]; only sensible for small inputs.
ZPoly resultant_sylvester(const SPoly& a, const SPoly& b);
// (-1)^(n(n+1)/2) Res(q, q') / lc(q), n = deg_s q. For n = 2 this is b^2 - 4ac.
ZPoly discriminant_in_s(const SPoly& q);

// Gcd over Z[z] (primitive, positive leading coefficient).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// All complex roots with multiplicity, Aberth-Ehrlich iteration in long
// double, ordered by (real, imag). Throws for constant input.
std::vector<std::complex<long double>> polynomial_roots(const ZPoly& p);

// Sign of p at a/b with b > 0, exact.
int sign_at(const ZPoly& p, const mpq_class& x);

struct RealRoot {
    mpq_class lo, hi;  // p changes sign on [lo, hi]
    long double value() const { return mpq_class((lo + hi) / 2).get_d(); }
};
// Positive real roots of odd multiplicity, isolated and bisected to a
// relative width of about 2^-bits.
std::vector<RealRoot> positive_real_roots(const ZPoly& p, int bits = 60);

struct DiagonalAudit {
    int level = 0;
    int discriminant_degree = 0;
    std::vector<long double> inverse_roots_sorted;  // descending
    long double selected = 0;
    long double prev = 0;
};

struct DiagonalResult {
    mpq_class z_lo, z_hi;    // bracket of the dominant singularity
    std::string bound;       // ceil(1 / z_lo) at 5 places
    DiagonalAudit audit;
};

// Growth bound of the diagonal of 1/(1 - p(x, y)). Among the positive real
// discriminant roots, selects the largest 1/z not exceeding prev (1 + 1e-9).
DiagonalResult diagonal_radius(const BivariatePolynomial& p, long double prev, int level = 0);

// Independent route: solve 1 = p and x p_x = y p_y for x, y > 0 and return
// 1 / (x y). Scans x on a log grid and bisects; -1 if nothing is found.
struct CriticalPoint {
    long double x = 0, y = 0, bound = -1;
};
CriticalPoint critical_point(const BivariatePolynomial& p);

// Twig bound for d in {2, 3}: chains diagonal_radius over levels 1..level,
// starting from the SAM/SOM formula value for (d, 2).
struct TwigBoundReport {
    int d = 0, level = 0;
    BivariatePolynomial poly;  // p_level
    std::vector<DiagonalAudit> audits;
    std::string bound;
    // The critical point of 1 = p, x p_x = y p_y lands on the selected
    // singularity and neither numerator (x, or xy(1+3x)^4 when d = 3)
    // vanishes there, so both generating functions share the bound.
    bool oracle_agrees = false;
    bool numerators_nonvanishing = false;
};
TwigBoundReport twig_bound(int d, int level);

}  // namespace growth
