#pragma once

#include "json.hpp"

#include "growth/automata.hpp"
#include "growth/manifolds.hpp"
#include "growth/polyalg.hpp"
#include "growth/polynomial.hpp"
#include "growth/spectral.hpp"
#include "growth/tables.hpp"

namespace growth {

using nlohmann::json;

// 5-place decimal strings become JSON numbers; the shortest round-trip form of
// the double prints the same digits back.
json decimal_number(const std::string& s);

json matrix_to_json(const TransferMatrix& t);
TransferMatrix matrix_from_json(const json& j);

json automata_report_to_json(const AutomataReport& r);

json poly_to_json(const BivariatePolynomial& p);
BivariatePolynomial poly_from_json(const json& j);

json audit_to_json(const DiagonalAudit& a);
json twig_report_to_json(const TwigBoundReport& r);

json formula_to_json(const FormulaResult& f);
FormulaResult formula_from_json(const json& j);

json reproduction_to_json(const Reproduction& r);

}  // namespace growth
