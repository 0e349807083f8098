#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kantor/report.hpp"

namespace py = pybind11;
using namespace kantor;

namespace {

std::string dump(const Json& j) { return j.dump(); }

Json entry_summary(const CatalogEntry& e) {
  return Json{{"id", e.id}, {"algebra", e.algebra}, {"kind", e.kind}, {"dim", e.dim}, {"expected", to_json(e.expected)}};
}

std::optional<CheckMode> mode_arg(const std::optional<std::string>& m) {
  if (!m) return std::nullopt;
  return parse_mode(*m);
}

}  // namespace

PYBIND11_MODULE(_kantor, m) {
  m.doc() = "Exact Q(i) engine for Kantor triple systems; every function returns a JSON document";

  py::register_exception<UnknownId>(m, "UnknownId", PyExc_KeyError);
  py::register_exception<ImportError>(m, "DocumentError", PyExc_ValueError);

  m.def("list_entries", [](bool classical, std::size_t max_dim) {
    Json out = Json::array();
    for (const auto& e : exceptional_catalog()) out.push_back(entry_summary(e));
    if (classical)
      for (const auto& e : classical_grid(max_dim)) out.push_back(entry_summary(e));
    return dump(out);
  }, py::arg("classical") = false, py::arg("max_dim") = 12);

  m.def("verify", [](const std::string& id, std::optional<std::string> mode, std::size_t samples, uint64_t seed) {
    py::gil_scoped_release nogil;
    return dump(to_json(verify_entry(find_entry(id), mode_arg(mode), Sampling{samples, seed})));
  }, py::arg("id"), py::arg("mode") = py::none(), py::arg("samples") = 200, py::arg("seed") = 0);

  m.def("tkk", [](const std::string& id, std::optional<std::string> jacobi, std::size_t samples, uint64_t seed) {
    py::gil_scoped_release nogil;
    return dump(to_json(tkk_report(find_entry(id), mode_arg(jacobi), Sampling{samples, seed})));
  }, py::arg("id"), py::arg("jacobi") = py::none(), py::arg("samples") = 500, py::arg("seed") = 0);

  m.def("derivations", [](const std::string& id) {
    py::gil_scoped_release nogil;
    return dump(to_json(derivations_report(find_entry(id))));
  }, py::arg("id"));

  m.def("enumerate_gradings", [](const std::string& algebra) { return dump(to_json(grading_table(algebra))); },
        py::arg("algebra"));
  m.def("count_kts", [](const std::string& algebra) { return dump(to_json(kts_count(algebra))); },
        py::arg("algebra"));

  m.def("export_entry", [](const std::string& id) {
    const CatalogEntry e = find_entry(id);
    return dump(entry_to_json(e, e.build()));
  }, py::arg("id"));

  m.def("verify_document", [](const std::string& text, std::optional<std::string> mode, std::size_t samples,
                              uint64_t seed) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ImportError(std::string("document: ") + e.what());
    }
    const ImportedEntry imp = entry_from_json(doc);
    py::gil_scoped_release nogil;
    return dump(to_json(verify_entry(imp.entry, mode_arg(mode), Sampling{samples, seed})));
  }, py::arg("document"), py::arg("mode") = py::none(), py::arg("samples") = 200, py::arg("seed") = 0);

  m.def("roundtrip", [](const std::string& id) {
    py::gil_scoped_release nogil;
    return roundtrip_check(find_entry(id).build());
  }, py::arg("id"));

  m.def("acceptance", [](std::size_t classical_max_dim) {
    py::gil_scoped_release nogil;
    AcceptanceOptions opt;
    opt.classical_max_dim = classical_max_dim;
    Json out = Json::array();
    for (const auto& c : run_acceptance(opt)) out.push_back(to_json(c));
    return dump(out);
  }, py::arg("classical_max_dim") = 12);
}
