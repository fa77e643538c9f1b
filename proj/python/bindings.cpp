#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acdlab/audit.hpp"
#include "acdlab/chartab.hpp"
#include "acdlab/fieldvals.hpp"
#include "acdlab/stats.hpp"

namespace py = pybind11;

namespace {

acdlab::CharacterTable table_of(const std::string& spec) {
  return acdlab::character_table(acdlab::build(acdlab::parse_group_spec(spec)));
}

py::dict row_dict(const acdlab::AuditRow& r) {
  py::dict d;
  d["theorem"] = r.theorem;
  d["clause"] = r.clause;
  d["spec"] = r.spec;
  d["order"] = r.order;
  d["p"] = r.p;
  d["field"] = r.field;
  d["acd"] = r.acd.to_string();
  d["bound"] = r.bound.to_string();
  d["below_bound"] = r.below_bound;
  d["p_nilpotent"] = r.p_nilpotent;
  d["hypotheses"] = r.hypotheses;
  d["verdict"] = acdlab::verdict_text(r.verdict);
  if (r.sharpness) d["sharpness"] = *r.sharpness;
  if (r.note) d["note"] = *r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character tables and average character degree statistics";

  py::register_exception<acdlab::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<acdlab::ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<acdlab::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<acdlab::DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<acdlab::SizeLimitError>(m, "SizeLimitError", PyExc_RuntimeError);

  m.def("canonical_spec", [](const std::string& s) { return acdlab::to_string(acdlab::parse_group_spec(s)); },
        py::arg("spec"), "Parse and re-emit a group spec in canonical form.");
  m.def("default_catalog", [] {
    std::vector<std::string> out;
    for (const auto& s : acdlab::default_catalog()) out.push_back(acdlab::to_string(s));
    return out;
  });
  m.def("group_order", [](const std::string& s) { return acdlab::build(acdlab::parse_group_spec(s)).order(); },
        py::arg("spec"));
  m.def("degrees", [](const std::string& s) { return table_of(s).degrees; }, py::arg("spec"),
        "Character degrees in table row order.");
  m.def("table_json", [](const std::string& s) { return acdlab::cmd_table(s, "json"); }, py::arg("spec"));
  m.def(
      "acd",
      [](const std::string& s, const std::string& field, std::optional<std::uint64_t> p) {
        const auto t = table_of(s);
        return acdlab::acd(t, acdlab::AcdQuery{acdlab::parse_field_spec(field), p, std::nullopt}).to_string();
      },
      py::arg("spec"), py::arg("field") = "C", py::arg("p") = py::none(),
      "Average degree as an exact 'n/d' string.");
  m.def("stats", &acdlab::cmd_stats, py::arg("spec"), py::arg("field"), py::arg("p") = py::none(),
        py::arg("quotient") = py::none());
  m.def(
      "is_p_nilpotent",
      [](const std::string& s, std::uint64_t p) {
        return acdlab::is_p_nilpotent(acdlab::build(acdlab::parse_group_spec(s)), p).p_nilpotent;
      },
      py::arg("spec"), py::arg("p"));
  m.def("bound_f", [](std::uint64_t p, long x) { return acdlab::bound_f(p, x).to_string(); }, py::arg("p"),
        py::arg("x") = 1);
  m.def(
      "abelian3_formula",
      [](std::uint64_t p, std::uint64_t a, std::uint64_t d, std::uint64_t index) {
        return acdlab::abelian3_formula(p, a, d, index).to_string();
      },
      py::arg("p"), py::arg("a"), py::arg("d"), py::arg("index"));
  m.def(
      "audit",
      [](const std::string& theorem, std::optional<std::vector<std::string>> catalog, unsigned jobs) {
        std::vector<acdlab::GroupSpec> specs;
        if (catalog) {
          for (const auto& s : *catalog) specs.push_back(acdlab::parse_group_spec(s));
        } else {
          specs = acdlab::default_catalog();
        }
        std::vector<acdlab::AuditRow> rows;
        {
          py::gil_scoped_release release;
          rows = acdlab::audit_theorem(theorem, specs, jobs);
        }
        py::list out;
        for (const auto& r : rows) out.append(row_dict(r));
        return out;
      },
      py::arg("theorem"), py::arg("catalog") = py::none(), py::arg("jobs") = 1);
}
