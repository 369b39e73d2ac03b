#include "doctest.h"

#include "growth/tables.hpp"
#include "json_io.hpp"

using namespace growth;

TEST_CASE("transfer matrix JSON round-trips") {
    auto rep = automata_bound({Rule::SAW, LatticeId::Square}, 5);
    const json j = matrix_to_json(rep.transfer);
    const auto back = matrix_from_json(json::parse(j.dump()));
    CHECK(back.start_index == rep.transfer.start_index);
    CHECK(back.matrix.dim() == rep.transfer.matrix.dim());
    CHECK(matrix_to_json(back) == j);
    const json r = automata_report_to_json(rep);
    CHECK(json::parse(r.dump()) == r);
    CHECK(r.at("bracket").size() == 2);
}

TEST_CASE("polynomial JSON round-trips with big coefficients") {
    BivariatePolynomial p;
    p.add_term(3, 1, mpz_class("123456789012345678901234567890"));
    p.add_term(0, 2, -7);
    CHECK(poly_from_json(json::parse(poly_to_json(p).dump())) == p);
}

TEST_CASE("formula JSON round-trips") {
    for (int t = 2; t <= 6; ++t) {
        auto f = formula_bound(t, 4, 3);
        auto back = formula_from_json(json::parse(formula_to_json(f).dump()));
        CHECK(back.exact == f.exact);
        CHECK(back.decimal == f.decimal);
        CHECK(back.theorem == t);
    }
    CHECK(formula_to_json(formula_bound(3, 4, 3)).dump() ==
          R"({"d":4,"decimal":36.62109,"exact":"9375/256","formula_id":3,"k":3})");
}

TEST_CASE("golden tables parse") {
    for (int id = 1; id <= 6; ++id) CHECK_FALSE(golden_table(id).rows.empty());
    CHECK(golden_table(1).rows.size() == 18);
    CHECK(golden_table(5).rows.back().values[0] == "17.11728");
    CHECK_THROWS(golden_table(7));
    CHECK_THROWS(parse_golden_csv(1, "a,b\n1,2,3\n"));
}

TEST_CASE("reproduction is deterministic and reports mismatches") {
    auto a = reproduce_table(2, 9);
    auto b = reproduce_table(2, 9);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(a.ok());
    CHECK(a.skipped.size() == 6);
    auto t3 = reproduce_table(3, 7);
    CHECK_FALSE(t3.ok());
    CHECK(t3.rows.back().key == 7);
    CHECK_FALSE(t3.rows.back().note.empty());
}
