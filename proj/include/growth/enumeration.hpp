#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "growth/walk_rules.hpp"

namespace growth {

// c_1..c_{n_max}: walks of exactly n steps from the origin, all first directions.
std::vector<mpz_class> count_walks(const WalkRule& rule, int n_max);

// c_n^(1/n) rounded up at the 5th decimal, one entry per count.
std::vector<std::string> mu_upper_from_counts(const std::vector<mpz_class>& counts);

}  // namespace growth
