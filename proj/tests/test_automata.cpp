#include "doctest.h"

#include <cmath>

#include "growth/automata.hpp"
#include "growth/decimal.hpp"
#include "growth/spectral.hpp"
#include "properties.hpp"

using namespace growth;

TEST_CASE("Collatz-Wielandt bracket on a known matrix") {
    // [[1,1],[1,0]] has spectral radius the golden ratio.
    SparseMatrix m(2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}});
    auto br = certified_dominant_eigenvalue(m, 1e-12L);
    const long double phi = (1 + std::sqrt(5.0L)) / 2;
    CHECK(br.lower <= phi);
    CHECK(br.upper >= phi);
    CHECK(br.upper - br.lower < 1e-10L);
    CHECK(certify_radius_at_most(m, mpq_class(1619, 1000)));
    CHECK_FALSE(certify_radius_at_most(m, mpq_class(1617, 1000)));
}

TEST_CASE("bracket handles reducible and nilpotent matrices") {
    SparseMatrix nil(3, {{0, 1, 1}, {1, 2, 1}});
    auto b = certified_dominant_eigenvalue(nil);
    CHECK(b.lower <= 0);
    CHECK(b.upper >= 0);
    CHECK(b.upper < 1e-6L);
    SparseMatrix red(3, {{0, 0, 2}, {1, 1, 3}, {0, 1, 5}});
    auto r = certified_dominant_eigenvalue(red, 1e-12L);
    CHECK(r.lower <= 3);
    CHECK(r.upper >= 3);
    int comps = 0;
    auto scc = strongly_connected_components(red, comps);
    CHECK(comps == 3);
    CHECK(scc.size() == 3);
}

TEST_CASE("Collatz-Wielandt brackets contain the dense spectral radius") {
    auto r = props::collatz_wielandt_random(100);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("sparse matrix sums duplicate entries") {
    SparseMatrix m(2, {{0, 1, 2}, {0, 1, 3}, {1, 0, 1}});
    CHECK(m.at(0, 1) == 5);
    CHECK(m.at(1, 1) == 0);
    CHECK(m.triplets().size() == 2);
}

TEST_CASE("SAW with loops up to 4 on the square lattice") {
    auto rep = automata_bound({Rule::SAW, LatticeId::Square}, 4, 1e-12L);
    CHECK(rep.dim == 3);
    const std::int64_t expected[3][3] = {{1, 1, 1}, {2, 1, 1}, {0, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(rep.transfer.matrix.at(i, j) == expected[i][j]);
    CHECK(rep.bound == "2.83118");
    CHECK(rep.bracket.lower <= rep.bracket.upper);
    CHECK(rep.bracket.upper - rep.bracket.lower <= 1e-5L);
    CHECK(rep.bracket.upper <= 2.83118L);
    CHECK(rep.bracket.lower >= 2.83117L);
}

TEST_CASE("forbidding only immediate reversals gives 3") {
    auto rep = automata_bound({Rule::SAW, LatticeId::Square}, 2);
    CHECK(rep.bound == "3.00000");
    CHECK(rep.loops_per_size.at(2) == 1);
}

TEST_CASE("loop search finds the unit square once") {
    auto loops = find_loops({Rule::SAW, LatticeId::Square}, 4);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].size() == 4);
}

TEST_CASE("canonical steps are invariant under the point group") {
    const Steps a{0, 1, 0};
    const Steps b{1, 2, 1};  // rotated by a quarter turn
    CHECK(canonical_steps(a, LatticeId::Square) == canonical_steps(b, LatticeId::Square));
}

TEST_CASE("osculating walks: odd loop sizes") {
    const char* expected[] = {"2.86055", "2.82042", "2.79208", "2.77524"};
    int i = 0;
    for (int k : {5, 7, 9, 11}) {
        auto rep = automata_bound({Rule::SOW, LatticeId::Square}, k, 1e-9L, LoopSizes::Odd);
        CHECK(std::fabs(std::stod(rep.bound) - std::stod(expected[i++])) <= 2e-5);
    }
}

TEST_CASE("triangular osculating and domain-wall walks") {
    struct Row {
        Rule rule;
        int k;
        double value;
    };
    for (auto row : {Row{Rule::SOW, 4, 4.81152}, Row{Rule::SOW, 5, 4.70066}, Row{Rule::SOW, 6, 4.63539},
                     Row{Rule::ODW, 4, 4.81152}, Row{Rule::ODW, 6, 4.63518}, Row{Rule::ODW, 8, 4.55164}}) {
        auto rep = automata_bound({row.rule, LatticeId::Triangular}, row.k);
        INFO(to_string(row.rule), " k=", row.k, " got ", rep.bound);
        CHECK(std::fabs(std::stod(rep.bound) - row.value) <= 2e-5);
    }
}

TEST_CASE("bounds decrease as more loops are excluded") {
    std::string prev = "9";
    for (int k = 4; k <= 9; ++k) {
        auto rep = automata_bound({Rule::SOW, LatticeId::Triangular}, k);
        CHECK(std::stod(rep.bound) <= std::stod(prev));
        prev = rep.bound;
    }
}

TEST_CASE("L-walks") {
    auto a = automata_bound({Rule::LWALK, LatticeId::Square}, 4);
    CHECK(a.bound == "1.61804");
    auto b = automata_bound({Rule::LWALK, LatticeId::Square}, 12);
    CHECK(b.bound == "1.60135");
}

TEST_CASE("loop-size policy names") {
    CHECK(parse_loop_sizes("odd") == LoopSizes::Odd);
    CHECK(to_string(LoopSizes::All) == "all");
    CHECK_THROWS(parse_loop_sizes("even"));
}
