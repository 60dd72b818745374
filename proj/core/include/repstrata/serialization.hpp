#pragma once

#include <string>
#include <vector>

#include "repstrata/cohomology.hpp"
#include "repstrata/invariants.hpp"
#include "repstrata/local_models.hpp"
#include "repstrata/surface_group.hpp"

namespace repstrata {

/// Canonical JSON text: keys sorted, floats printed with 17 significant
/// digits, no locale dependence.  Reports are byte-stable across runs.
std::string representation_to_json(const Representation& rep);
Representation representation_from_json(const std::string& text);

std::string cohomology_to_json(const Representation& rep,
                               const CohomologyData& data,
                               const LambdaAnalysis& lambda, int pairing_rank);

std::string bracket_table_to_json(const BracketTable& table);
std::string bracket_table_to_text(const BracketTable& table);

std::string structure_constants_to_json(const StructureConstants& sc);

std::string stratum_rows_to_json(const std::vector<StratumRow>& rows);
std::string stratum_rows_to_csv(const std::vector<StratumRow>& rows);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double v);

}  // namespace repstrata
