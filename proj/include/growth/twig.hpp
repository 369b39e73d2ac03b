#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growth/lattice.hpp"
#include "growth/polynomial.hpp"

namespace growth {

enum class CellState { Dead, Alive, Excluded };

// A twig in the frame where the first cell is the unit square at the origin
// (d=2, entered from the square below it) or the square (1/2,1/2,0) entered
// through its edge (1/2,0,0) (d=3).
struct Twig {
    int level = 0;
    std::vector<FaceCoord> dead;
    std::vector<FaceCoord> alive;
    std::vector<FaceCoord> excluded;

    // Monomial x^(N_c - 1) y^(N_b) with N_c = dead + alive, N_b = dead.
    int x_degree() const { return static_cast<int>(dead.size() + alive.size()) - 1; }
    int y_degree() const { return static_cast<int>(dead.size()); }
};

struct TwigSet {
    int d = 2;
    int level = 0;
    std::vector<Twig> twigs;
};

FaceCoord twig_first_cell(int d);
FaceCoord twig_entering_face(int d);  // d = 2 only
FaceCoord twig_entering_edge(int d);  // d = 3 only

TwigSet level1_twigs(int d);
// Explicit expansion: every alive cell turns dead, every admissible choice of
// new alive cells becomes a twig; twigs without alive cells are carried.
TwigSet next_level(const TwigSet& ts);

// Sum of the monomials of an explicit twig set.
BivariatePolynomial twig_polynomial(const TwigSet& ts);
// Polynomial of next_level(ts) computed without listing the next level:
// candidates are grouped by shared constraints and free groups contribute
// closed-form factors such as (1 + 3x).
BivariatePolynomial compact_next_polynomial(const TwigSet& ts);

// p_level(x, y), streamed so that only twigs below the last level are listed.
BivariatePolynomial twig_level_polynomial(int d, int level);

// Every lattice edge is incident to at most two cells of the twig.
bool twig_is_self_avoiding(const Twig& t);

}  // namespace growth
