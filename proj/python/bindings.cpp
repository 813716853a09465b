// Python bindings for the toric line-bundle cohomology core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "toric/errors.hpp"
#include "toric/oracle.hpp"
#include "toric/serialization.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

Mask mask_from_list(const std::vector<int>& verts) {
  return mask_from_indices(verts);
}

std::vector<std::vector<int>> masks_to_lists(const std::vector<Mask>& masks) {
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(mask_to_indices(m));
  return out;
}

Box box_from_ranges(const std::vector<std::pair<long long, long long>>& ranges) {
  return Box{ranges};
}

py::dict homology_dict(const HomologyDims& h) {
  py::dict out;
  for (const auto& [degree, dim] : h.nonzero()) out[py::int_(degree)] = dim;
  return out;
}

py::dict report_dict(const OracleReport& r) {
  py::dict out;
  out["fan"] = r.fan_id;
  out["ok"] = r.ok();
  out["total_mismatches"] = r.total_mismatches;
  out["match_count"] = r.match_count;
  out["classes_compared"] = r.classes_compared;
  out["classes_skipped"] = r.classes_skipped;
  py::list mismatches;
  for (const OracleMismatch& m : r.mismatches) {
    py::dict e;
    e["kind"] = m.kind;
    e["p"] = m.p;
    e["i"] = m.degree;
    e["algorithm"] = m.algorithm_value;
    e["oracle"] = m.oracle_value;
    mismatches.append(e);
  }
  out["mismatches"] = mismatches;
  out["messages"] = r.messages;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "line-bundle cohomology on simplicial complete toric varieties";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<UnboundedError>(m, "UnboundedError", PyExc_RuntimeError);
  py::register_exception<BoxTooSmallError>(m, "BoxTooSmallError", PyExc_ValueError);

  py::class_<Fan>(m, "Fan")
      .def_readonly("dim", &Fan::dim)
      .def_readonly("rays", &Fan::rays)
      .def_property_readonly(
          "max_cones", [](const Fan& f) { return masks_to_lists(f.max_cones); })
      .def("__repr__", [](const Fan& f) {
        return "<Fan dim=" + std::to_string(f.dim) + " rays=" +
               std::to_string(f.ray_count()) + ">";
      });

  py::class_<ClassElement>(m, "ClassElement")
      .def_property_readonly("free",
                             [](const ClassElement& c) {
                               std::vector<std::int64_t> out;
                               for (const Integer& x : c.free_part)
                                 out.push_back(to_int64_checked(x));
                               return out;
                             })
      .def_property_readonly("torsion",
                             [](const ClassElement& c) {
                               std::vector<std::int64_t> out;
                               for (const Integer& x : c.torsion_part)
                                 out.push_back(to_int64_checked(x));
                               return out;
                             })
      .def("__eq__", [](const ClassElement& a, const ClassElement& b) { return a == b; })
      .def("__repr__", [](const ClassElement& c) { return c.to_string(); });

  py::class_<ClassGroup>(m, "ClassGroup")
      .def(py::init<const Fan&>())
      .def_property_readonly("free_rank", &ClassGroup::free_rank)
      .def_property_readonly("torsion",
                             [](const ClassGroup& g) {
                               std::vector<std::int64_t> out;
                               for (const Integer& t : g.torsion_invariants())
                                 out.push_back(to_int64_checked(t));
                               return out;
                             })
      .def("divisor_class",
           [](const ClassGroup& g, const std::vector<long long>& a) {
             return g.divisor_class(a);
           })
      .def("particular_preimage", [](const ClassGroup& g, const ClassElement& c) {
        std::vector<std::int64_t> out;
        for (const Integer& x : g.particular_preimage(c))
          out.push_back(to_int64_checked(x));
        return out;
      });

  py::class_<CohomologyEngine>(m, "CohomologyEngine")
      .def(py::init<Fan>())
      .def_property_readonly("fan", &CohomologyEngine::fan)
      .def_property_readonly(
          "class_group", &CohomologyEngine::class_group,
          py::return_value_policy::reference_internal)
      .def("stanley_reisner",
           [](const CohomologyEngine& e) { return masks_to_lists(e.sr().generators); })
      .def("usr", [](const CohomologyEngine& e) { return masks_to_lists(e.usr()); })
      .def("graded_dim",
           [](const CohomologyEngine& e, const std::vector<int>& support, int i) {
             return e.graded_dim(mask_from_list(support), i);
           })
      .def("multiplicity",
           [](const CohomologyEngine& e, const std::vector<int>& support,
              const std::vector<long long>& divisor) {
             return to_int64_checked(e.multiplicity(mask_from_list(support), divisor));
           })
      .def(
          "cohomology",
          [](const CohomologyEngine& e, const std::vector<long long>& divisor,
             bool explain) {
            const CohomologyVector v = e.cohomology(divisor, explain);
            py::dict out;
            out["h"] = v.h;
            out["divisor"] = v.divisor;
            out["class"] = v.divisor_class;
            if (explain) {
              py::list terms;
              for (const CohomologyTerm& t : v.terms) {
                py::dict e2;
                e2["i"] = t.degree;
                e2["support"] = mask_to_indices(t.support);
                e2["multiplicity"] = t.multiplicity;
                e2["homology_dim"] = t.homology_dim;
                terms.append(e2);
              }
              out["terms"] = terms;
            }
            return out;
          },
          py::arg("divisor"), py::arg("explain") = false);

  py::class_<OracleContext>(m, "OracleContext")
      .def(py::init<Fan>())
      .def("graded_dim",
           [](const OracleContext& o, const std::vector<int>& support, int i) {
             return o.graded_dim(mask_from_list(support), i);
           })
      .def("cohomology",
           [](const OracleContext& o, const std::vector<long long>& divisor,
              const std::vector<std::pair<long long, long long>>& box) {
             return o.cohomology(divisor, box_from_ranges(box));
           });

  m.def("parse_fan", [](const std::string& text) { return parse_fan(text); });
  m.def("serialize_fan", &serialize_fan);
  m.def("validate", [](const Fan& f) {
    const FanDiagnostics d = validate(f);
    py::dict out;
    out["is_simplicial"] = d.is_simplicial;
    out["spans"] = d.spans;
    out["ridge_counts_ok"] = d.ridge_counts_ok;
    out["ok"] = d.ok();
    out["messages"] = d.messages;
    return out;
  });
  m.def("reduced_homology_dims", [](int n_vertices,
                                    const std::vector<std::vector<int>>& faces) {
    std::vector<Mask> masks;
    masks.reserve(faces.size());
    for (const auto& f : faces) masks.push_back(mask_from_indices(f));
    return homology_dict(
        reduced_homology_dims(SimplicialComplex::from_faces(n_vertices, masks)));
  });
  m.def(
      "verify",
      [](const Fan& fan,
         std::optional<std::vector<std::pair<long long, long long>>> box) {
        const CohomologyEngine engine(fan);
        const Box b = box ? box_from_ranges(*box) : default_box(fan);
        return report_dict(verify(engine, b, "python"));
      },
      py::arg("fan"), py::arg("box") = std::nullopt);

  m.attr("__version__") = "0.1.0";
}
