#pragma once

#include <string>

#include "superloop/datum.hpp"
#include "superloop/form.hpp"
#include "superloop/loop.hpp"
#include "superloop/vertex.hpp"

namespace superloop {

/// JSON / CSV emission with deterministic key and row order. Monomial words
/// serialize as lists of [kind, index, mode] triples, coefficients as
/// rational strings, degrees as reduced "p/2" strings.

std::string datum_report_to_json(const DatumReport& report);
std::string jacobi_witnesses_to_json(const std::vector<JacobiWitness>& ws);
std::string module_vector_to_json(const ModuleVector& v);
std::string verify_report_to_json(const VerifyReport& report);
std::string gram_to_json(const GramMatrix& g);
std::string gram_to_csv(const GramMatrix& g);
std::string radical_to_json(const RadicalBasis& r);
std::string character_to_json(const CharacterSeries& rows);
std::string character_to_csv(const CharacterSeries& rows);
std::string ell_scan_to_json(const std::vector<std::pair<Rational, long>>& rs);
std::string ell_scan_to_csv(const std::vector<std::pair<Rational, long>>& rs);
std::string contragredient_to_json(const ContragredientReport& report);

}  // namespace superloop
