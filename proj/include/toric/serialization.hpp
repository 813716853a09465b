#pragma once

#include "json.hpp"
#include "toric/cohomology.hpp"
#include "toric/fan.hpp"
#include "toric/oracle.hpp"

namespace toric {

// JSON views used by the CLI and the Python layer. All arrays are emitted in
// deterministic order so repeated runs are byte-identical.

nlohmann::json mask_to_json(Mask m);
nlohmann::json homology_to_json(const HomologyDims& h);
nlohmann::json diagnostics_to_json(const FanDiagnostics& d);
nlohmann::json class_element_to_json(const ClassElement& c);
nlohmann::json cohomology_to_json(const CohomologyVector& v, bool include_terms);
nlohmann::json report_to_json(const OracleReport& r);

}  // namespace toric
