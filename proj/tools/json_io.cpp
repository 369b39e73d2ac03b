#include "json_io.hpp"

#include <cmath>
#include <stdexcept>

#include "growth/walk_rules.hpp"

namespace growth {

json decimal_number(const std::string& s) { return std::stod(s); }

json matrix_to_json(const TransferMatrix& t) {
    json triplets = json::array();
    for (const auto& e : t.matrix.triplets()) triplets.push_back({e.row, e.col, e.value});
    return {{"dim", t.matrix.dim()}, {"triplets", triplets}, {"start_index", t.start_index}};
}

TransferMatrix matrix_from_json(const json& j) {
    std::vector<Triplet> trips;
    for (const auto& e : j.at("triplets")) trips.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>()});
    TransferMatrix t;
    t.matrix = SparseMatrix(j.at("dim").get<int>(), std::move(trips));
    t.start_index = j.at("start_index").get<int>();
    return t;
}

json automata_report_to_json(const AutomataReport& r) {
    json loops = json::object();
    for (auto [size, n] : r.loops_per_size) loops[std::to_string(size)] = n;
    return {{"rule", to_string(r.rule.id)},
            {"lattice", to_string(r.rule.lattice)},
            {"k", r.k},
            {"loop_sizes", to_string(r.sizes)},
            {"dim", r.dim},
            {"loops_per_size", loops},
            {"bracket", {static_cast<double>(r.bracket.lower), static_cast<double>(r.bracket.upper)}},
            {"converged", r.bracket.converged},
            {"bound", decimal_number(r.bound)}};
}

json poly_to_json(const BivariatePolynomial& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) terms.push_back({{"dx", key.first}, {"dy", key.second}, {"coef_string", c.get_str()}});
    return {{"terms", terms}};
}

BivariatePolynomial poly_from_json(const json& j) {
    BivariatePolynomial p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("dx").get<int>(), t.at("dy").get<int>(), mpz_class(t.at("coef_string").get<std::string>()));
    return p;
}

json audit_to_json(const DiagonalAudit& a) {
    json inv = json::array();
    for (long double v : a.inverse_roots_sorted) inv.push_back(static_cast<double>(v));
    return {{"level", a.level},
            {"discriminant_degree", a.discriminant_degree},
            {"inverse_roots_sorted", inv},
            {"selected", static_cast<double>(a.selected)},
            {"prev", static_cast<double>(a.prev)}};
}

json twig_report_to_json(const TwigBoundReport& r) {
    json audits = json::array();
    for (const auto& a : r.audits) audits.push_back(audit_to_json(a));
    return {{"d", r.d},
            {"level", r.level},
            {"bound", decimal_number(r.bound)},
            {"oracle_agrees", r.oracle_agrees},
            {"numerators_nonvanishing", r.numerators_nonvanishing},
            {"terms", r.poly.terms().size()},
            {"audits", audits}};
}

json formula_to_json(const FormulaResult& f) {
    return {{"formula_id", f.theorem}, {"d", f.d}, {"k", f.k}, {"exact", f.exact}, {"decimal", decimal_number(f.decimal)}};
}

FormulaResult formula_from_json(const json& j) {
    FormulaResult f;
    f.theorem = j.at("formula_id").get<int>();
    f.d = j.at("d").get<int>();
    f.k = j.at("k").get<int>();
    f.exact = j.at("exact").get<std::string>();
    // Doubles print in shortest form; pad back to the five places we emit.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5f", j.at("decimal").get<double>());
    f.decimal = buf;
    return f;
}

json reproduction_to_json(const Reproduction& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"key", row.key}, {"computed", row.computed}, {"expected", row.expected}, {"match", row.match}, {"note", row.note}});
    return {{"table", r.id}, {"header", r.header}, {"rows", rows}, {"skipped", r.skipped}, {"ok", r.ok()}};
}

}  // namespace growth
