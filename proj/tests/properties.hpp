#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

// Property checks shared by the unit tests and the acceptance runner.
namespace props {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Every path of length <= max_len: NAW => SAW => ODW => SOW => EAW => NRW.
Outcome walk_hierarchy(int max_len = 8);

// Chord-only vertex configurations: SOW table membership <=> noncrossing.
Outcome sow_noncrossing_equivalence();

// Collatz-Wielandt brackets against dense eigenvalues on random sparse matrices.
Outcome collatz_wielandt_random(int trials = 100, std::uint32_t seed = 12345);

// Random twig sequences with N_twigs = N_white + 1 multiply to x^(n-1) y^n.
Outcome twig_monomial_identity(int trials = 1000, std::uint32_t seed = 777);

// resultant(q, q') == 0 <=> deg gcd(q, q') >= 1, and modular == Sylvester.
Outcome resultant_gcd(int trials = 200, std::uint32_t seed = 4242);

// Fixed polyomino counts by a cell-by-cell untried-set enumeration.
std::vector<mpz_class> redelmeier_polyominoes(int n_max);

}  // namespace props
