#include "toric/serialization.hpp"

namespace toric {

using nlohmann::json;

json mask_to_json(Mask m) { return json(mask_to_indices(m)); }

json homology_to_json(const HomologyDims& h) {
  json out = json::array();
  for (const auto& [degree, dim] : h.nonzero()) out.push_back({degree, dim});
  return out;
}

json diagnostics_to_json(const FanDiagnostics& d) {
  return json{{"is_simplicial", d.is_simplicial},
              {"spans", d.spans},
              {"ridge_counts_ok", d.ridge_counts_ok},
              {"ok", d.ok()},
              {"messages", d.messages}};
}

json class_element_to_json(const ClassElement& c) {
  json free = json::array(), torsion = json::array();
  for (const Integer& x : c.free_part) free.push_back(to_int64_checked(x));
  for (const Integer& x : c.torsion_part) torsion.push_back(to_int64_checked(x));
  return json{{"free", std::move(free)}, {"torsion", std::move(torsion)}};
}

json cohomology_to_json(const CohomologyVector& v, bool include_terms) {
  json out{{"divisor", v.divisor},
           {"class", class_element_to_json(v.divisor_class)},
           {"h", v.h}};
  if (include_terms) {
    json terms = json::array();
    for (const CohomologyTerm& t : v.terms)
      terms.push_back(json{{"i", t.degree},
                           {"support", mask_to_json(t.support)},
                           {"multiplicity", t.multiplicity},
                           {"homology_dim", t.homology_dim}});
    out["terms"] = std::move(terms);
  }
  return out;
}

json report_to_json(const OracleReport& r) {
  json box = json::array();
  for (const auto& [lo, hi] : r.box.ranges) box.push_back({lo, hi});
  json mismatches = json::array();
  for (const OracleMismatch& m : r.mismatches)
    mismatches.push_back(json{{"kind", m.kind},
                              {"p", m.p},
                              {"i", m.degree},
                              {"algorithm", m.algorithm_value},
                              {"oracle", m.oracle_value}});
  return json{{"fan", r.fan_id},
              {"box", std::move(box)},
              {"mismatches", std::move(mismatches)},
              {"total_mismatches", r.total_mismatches},
              {"match_count", r.match_count},
              {"classes_compared", r.classes_compared},
              {"classes_skipped", r.classes_skipped},
              {"messages", r.messages},
              {"ok", r.ok()}};
}

}  // namespace toric
