#include "doctest.h"

#include "growth/decimal.hpp"
#include "growth/manifolds.hpp"
#include "properties.hpp"

using namespace growth;

namespace {
std::vector<long> counts(ManifoldClassId id, int d, int k, int n) {
    std::vector<long> out;
    for (const auto& c : enumerate_fixed({id, d, k}, n)) out.push_back(c.get_si());
    return out;
}

FaceSet faces(std::initializer_list<std::vector<int>> cs) {
    FaceSet f;
    for (const auto& c : cs) f.push_back(FaceCoord{c});
    return f;
}
}  // namespace

TEST_CASE("polyominoes match an independent enumeration") {
    const auto oracle = props::redelmeier_polyominoes(10);
    const auto ours = enumerate_fixed({ManifoldClassId::SAM, 2, 2}, 10);
    CHECK(oracle == ours);
    CHECK(oracle[7] == 2725);
}

TEST_CASE("surface counts in the cubic lattice") {
    CHECK(counts(ManifoldClassId::SAM, 3, 2, 5) == std::vector<long>{3, 18, 146, 1332, 13089});
    CHECK(counts(ManifoldClassId::XD, 3, 2, 5) == std::vector<long>{3, 18, 158, 1611, 17811});
    CHECK(counts(ManifoldClassId::SOM, 3, 2, 5) == std::vector<long>{3, 18, 146, 1380, 14337});
    CHECK(counts(ManifoldClassId::SAM_closed, 3, 2, 6) == std::vector<long>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("walks and full-dimensional animals as manifolds") {
    CHECK(counts(ManifoldClassId::SAM, 2, 1, 6) == std::vector<long>{2, 6, 18, 51, 142, 392});
    CHECK(counts(ManifoldClassId::SAM, 3, 3, 5) == std::vector<long>{1, 3, 15, 86, 534});
    CHECK(counts(ManifoldClassId::XD, 3, 3, 5) == std::vector<long>{1, 3, 15, 86, 534});
}

TEST_CASE("class inclusions SAM <= SOM <= XD") {
    const auto sam = enumerate_fixed({ManifoldClassId::SAM, 3, 2}, 5);
    const auto som = enumerate_fixed({ManifoldClassId::SOM, 3, 2}, 5);
    const auto xd = enumerate_fixed({ManifoldClassId::XD, 3, 2}, 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(sam[i] <= som[i]);
        CHECK(sam[i] <= xd[i]);
    }
}

TEST_CASE("size caps are enforced") {
    CHECK_THROWS_AS(enumerate_fixed({ManifoldClassId::SAM, 3, 2}, default_size_cap(3, 2) + 1), std::invalid_argument);
    CHECK_NOTHROW(enumerate_fixed({ManifoldClassId::SAM, 2, 2}, 3, 3));
}

TEST_CASE("osculation pairings at a crowded edge") {
    // Two bends touch; two straight passages would cross.
    CHECK(osculating_ok_dirs({{1, 2}, {-1, -2}}, std::nullopt, 3));
    CHECK_FALSE(osculating_ok_dirs({{1, -1}, {2, -2}}, std::nullopt, 3));
    CHECK(osculating_ok_dirs({{1, -1}, {2, 3}}, std::nullopt, 4));
    CHECK_FALSE(osculating_ok_dirs({{1, 2}, {1, -2}}, std::nullopt, 3));
}

TEST_CASE("crossing surface resolves into two osculating ones") {
    const FaceSet fig = faces({{1, 0, -1}, {0, 1, -1}, {0, -1, -1}, {-1, 0, -1}, {-1, 2, -1},
                               {-3, 2, -1}, {-1, -2, -1}, {-3, -2, -1}, {-4, 1, -1}, {-4, -1, -1}});
    CHECK(is_connected(fig));
    CHECK_FALSE(is_self_avoiding(fig));
    CHECK(count_connection_structures(fig) == 2);
    for (const auto& cx : connection_structures(fig)) CHECK(cx.faces.size() == 10);
}

TEST_CASE("a unit cube is the smallest closed surface") {
    const FaceSet cube = faces({{1, 1, 0}, {1, 1, 2}, {1, 0, 1}, {1, 2, 1}, {0, 1, 1}, {2, 1, 1}});
    CHECK(is_closed(cube));
    CHECK(is_self_avoiding(cube));
    FaceSet open = cube;
    open.pop_back();
    CHECK_FALSE(is_closed(open));
}

TEST_CASE("directed walk configurations") {
    for (int n = 1; n <= 4; ++n) {
        const auto fam = directed_walk_family(3, 2, n);
        CHECK(mpz_class(fam.size()) == directed_walk_count(3, 2, n));
        for (const auto& f : fam) {
            CHECK(is_self_avoiding(f));
            CHECK(is_connected(f));
        }
    }
    CHECK(directed_walk_count(3, 2, 4) == 192);
    CHECK(directed_walk_count(4, 2, 3) == 6 * 36);
}

TEST_CASE("directed walks are among the enumerated surfaces") {
    const auto fam = directed_walk_family(3, 2, 4);
    CHECK(mpz_class(fam.size()) <= enumerate_fixed({ManifoldClassId::SAM, 3, 2}, 4)[3]);
}

TEST_CASE("closed-form bounds") {
    auto check = [](int t, int d, int k, const char* exact, const char* dec) {
        auto r = formula_bound(t, d, k);
        INFO(t, " ", d, " ", k);
        CHECK(r.exact == exact);
        CHECK(r.decimal == dec);
    };
    check(2, 3, 2, "3/1", "3.00000");
    check(3, 3, 2, "81/4", "20.25000");
    check(3, 4, 3, "9375/256", "36.62109");
    check(4, 3, 2, "387420489/16777216", "23.09206");
    check(5, 3, 2, "4/1", "4.00000");
    check(6, 3, 2, "3^(1/4)", "1.31607");
    for (int d = 2; d <= 6; ++d) CHECK(formula_bound(3, d, 1).exact == std::to_string(2 * d - 1) + "/1");
    CHECK_THROWS(formula_bound(9, 3, 2));
}

TEST_CASE("closed manifolds grow strictly slower than open ones") {
    for (int d = 3; d <= 8; ++d)
        for (int k = 2; k < d; ++k) {
            INFO(d, " ", k);
            CHECK(closed_open_separated(d, k));
        }
}

TEST_CASE("counting inequalities hold on enumerated data") {
    const auto som = enumerate_fixed({ManifoldClassId::SOM, 3, 2}, 5);
    const auto xd = enumerate_fixed({ManifoldClassId::XD, 3, 2}, 5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(mpq_class(som[n - 1]) <= som_count_bound(3, 2, n));
        CHECK(mpq_class(xd[n - 1]) <= xd_count_bound(3, 2, n));
        CHECK(directed_walk_count(3, 2, n) <= enumerate_fixed({ManifoldClassId::SAM, 3, 2}, n)[n - 1]);
    }
}

TEST_CASE("class names") {
    CHECK(parse_manifold_class("sos") == ManifoldClassId::SOM);
    CHECK(to_string(ManifoldClassId::SAM_closed) == "sam_closed");
    CHECK_THROWS(parse_manifold_class("torus"));
}
