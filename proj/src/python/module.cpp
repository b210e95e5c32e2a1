#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "vknot/cobordism.hpp"
#include "vknot/errors.hpp"
#include "vknot/invariants.hpp"
#include "vknot/json_io.hpp"
#include "vknot/moves.hpp"
#include "vknot/transforms.hpp"

namespace py = pybind11;

namespace {

using namespace vknot;

Diagram dg(const std::string& code) { return parse(code); }

std::string invariants_json(const std::string& code,
                            const std::optional<std::vector<long long>>& pins) {
  Diagram d = dg(code);
  InvariantReport report =
      pins ? compute_invariants_pinned(d, *pins) : compute_invariants(d);
  return report_to_json(d, report).dump();
}

std::string transform(const std::string& code, const std::string& name) {
  Diagram d = dg(code);
  if (name == "reverse") return serialize(reverse(d));
  if (name == "mirror-flat") return serialize(switch_all(d));
  if (name == "mirror-vertical") return serialize(vertical_mirror(d));
  fail("bad_argument", "unknown transform \"" + name + "\"");
}

py::tuple seifert(const std::string& code) {
  SeifertStats s = seifert_stats(dg(code));
  return py::make_tuple(s.n, s.r,
                        s.genus ? py::cast(*s.genus) : py::none().cast<py::object>());
}

py::tuple genus_bounds(const std::string& code) {
  GenusBounds b = four_ball_genus_bounds(dg(code));
  return py::make_tuple(b.lower, b.upper,
                        b.exact ? py::cast(*b.exact) : py::none().cast<py::object>());
}

py::tuple scramble_py(const std::string& code, int moves, std::uint64_t seed) {
  auto result = scramble(dg(code), moves, seed);
  Json trace = Json::array();
  for (const auto& site : result.trace) trace.push_back(site_to_json(site));
  return py::make_tuple(serialize(result.diagram), trace.dump());
}

py::tuple reduce_null(const std::string& code,
                      const std::optional<std::vector<long long>>& pins) {
  Diagram d = dg(code);
  std::vector<long long> bases =
      pins ? *pins : std::vector<long long>(d.components.size(), 0);
  auto result = null_weight_reduction(d, compute_labeling_pinned(d, bases));
  IndexPolynomial p;
  for (const auto& w : crossing_weights(result.diagram, result.labeling)) {
    p.add_term(w.weight, w.sign);
    p.add_term(AffineExponent{}, -w.sign);
  }
  return py::make_tuple(serialize(result.diagram), p.to_string());
}

std::string verify_trace(const std::string& code, const std::string& events_json) {
  CobordismTrace trace;
  trace.start = dg(code);
  Json events;
  try {
    events = Json::parse(events_json);
  } catch (const nlohmann::json::exception& e) {
    fail("bad_argument", std::string("trace: ") + e.what());
  }
  trace.events = events_from_json(events);
  return trace_report_to_json(replay_trace(trace)).dump();
}

}  // namespace

PYBIND11_MODULE(_vknot, m) {
  m.doc() = "Gauss-code invariants for virtual knots and links";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const vknot::Error& e) {
      PyErr_SetString(PyExc_ValueError,
                      (e.code() + ": " + std::string(e.what())).c_str());
    }
  });

  m.def("canonical", [](const std::string& code) { return serialize(dg(code)); },
        py::arg("code"), "Validate a Gauss code and return its canonical form.");
  m.def("invariants_json", &invariants_json, py::arg("code"),
        py::arg("pins") = std::nullopt,
        "Full invariant report as a JSON string.");
  m.def("polynomial",
        [](const std::string& code) {
          return affine_index_polynomial(dg(code)).to_string();
        },
        py::arg("code"), "Affine index polynomial as a string.");
  m.def("writhe", [](const std::string& code) { return writhe(dg(code)); });
  m.def("odd_writhe", [](const std::string& code) { return odd_writhe(dg(code)); });
  m.def("compatible",
        [](const std::string& code) { return is_compatible(dg(code)).compatible; });
  m.def("defects",
        [](const std::string& code) { return is_compatible(dg(code)).defects; });
  m.def("transform", &transform, py::arg("code"), py::arg("name"));
  m.def("switch_crossing",
        [](const std::string& code, int crossing) {
          return serialize(switch_crossing(dg(code), crossing));
        },
        py::arg("code"), py::arg("crossing"));
  m.def("connected_sum",
        [](const std::string& k1, const std::string& k2, int arc1, int arc2) {
          return serialize(connected_sum(dg(k1), {0, arc1}, dg(k2), {0, arc2}));
        },
        py::arg("k1"), py::arg("k2"), py::arg("arc1") = 0, py::arg("arc2") = 0);
  m.def("smooth",
        [](const std::string& code, int crossing) {
          return serialize(smooth_crossing(dg(code), crossing));
        },
        py::arg("code"), py::arg("crossing"));
  m.def("seifert", &seifert, py::arg("code"), "(n, r, genus) tuple.");
  m.def("genus_bounds", &genus_bounds, py::arg("code"),
        "(lower, upper, exact) four-ball genus bounds.");
  m.def("scramble", &scramble_py, py::arg("code"), py::arg("moves"),
        py::arg("seed"), "(diagram, trace_json) after seeded random moves.");
  m.def("reduce_null", &reduce_null, py::arg("code"), py::arg("pins") = std::nullopt,
        "(diagram, polynomial) after smoothing all null-weight crossings.");
  m.def("verify_trace", &verify_trace, py::arg("code"), py::arg("events_json"),
        "Replay a cobordism trace; returns the report as JSON.");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
