#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swrbd/certificate.hpp"
#include "swrbd/presets.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> python int (via decimal strings; values are exact).
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::cast<std::string>(py::str(src)));
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

// mpq_class -> fractions.Fraction; accepts int or Fraction on input.
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(mpz_class(py::cast<std::string>(py::str(src))));
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      mpz_class num(py::cast<std::string>(py::str(src.attr("numerator"))));
      mpz_class den(py::cast<std::string>(py::str(src.attr("denominator"))));
      if (den == 0) return false;
      value = mpq_class(num, den);
      value.canonicalize();
      return true;
    }
    return false;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    object num = reinterpret_steal<object>(
        PyLong_FromString(mpz_class(v.get_num()).get_str().c_str(), nullptr, 10));
    object den = reinterpret_steal<object>(
        PyLong_FromString(mpz_class(v.get_den()).get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace swrbd;

py::tuple stage_counts_tuple(const StageReport& r) {
  return py::make_tuple(r.count_candidates, r.count_characteristic, r.count_dimension,
                        r.count_basic);
}

}  // namespace

PYBIND11_MODULE(swrbd, m) {
  m.doc() = "exact enumeration of Seiberg-Witten basic classes over rational "
            "blow-down configurations";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<SearchConfig>(m, "Config")
      .def_property_readonly("label", &SearchConfig::label)
      .def_property_readonly("rank", [](const SearchConfig& c) { return c.form().rank(); })
      .def_property_readonly("chain_length",
                             [](const SearchConfig& c) { return c.chain().classes().size(); })
      .def_property_readonly("sphere_count",
                             [](const SearchConfig& c) { return c.spheres().size(); })
      .def_property_readonly("extension_tuples",
                             [](const SearchConfig& c) {
                               return c.chain().extension_tuples();
                             })
      .def("to_json", &serialize_config)
      .def("__eq__", [](const SearchConfig& a, const SearchConfig& b) { return a == b; })
      .def("__repr__", [](const SearchConfig& c) {
        return "<swrbd.Config '" + c.label() + "' rank " + std::to_string(c.form().rank()) + ">";
      });

  py::class_<StageReport>(m, "Report")
      .def_readonly("count_candidates", &StageReport::count_candidates)
      .def_readonly("count_characteristic", &StageReport::count_characteristic)
      .def_readonly("count_dimension", &StageReport::count_dimension)
      .def_readonly("count_basic", &StageReport::count_basic)
      .def_readonly("basic_classes", &StageReport::basic_classes)
      .def_readonly("zero_pairing_diagnostics", &StageReport::zero_pairing_diagnostics)
      .def_readonly("lemma_verified", &StageReport::lemma_verified)
      .def_readonly("minimal", &StageReport::minimal)
      .def_property_readonly("stage_counts", &stage_counts_tuple)
      .def("__repr__", [](const StageReport& r) {
        return "<swrbd.Report (" + std::to_string(r.count_candidates) + ", " +
               std::to_string(r.count_characteristic) + ", " +
               std::to_string(r.count_dimension) + ", " + std::to_string(r.count_basic) + ")>";
      });

  m.def("list_presets", &preset_labels);
  m.def("load_preset", &load_preset, py::arg("label"));
  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("serialize_config", &serialize_config, py::arg("config"));
  m.def("config_digest", &config_digest, py::arg("config"));

  m.def("run_pipeline", &run_pipeline, py::arg("config"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("verify_lemma_hypothesis", &verify_lemma_hypothesis, py::arg("config"),
        py::arg("report"));
  m.def("check_minimality", &check_minimality, py::arg("config"), py::arg("report"));
  m.def("certificate_json", [](const SearchConfig& c, const StageReport& r) {
    return certificate_to_json(make_certificate(c, r));
  });
  m.def("invariant_checks", [](const SearchConfig& c) {
    std::vector<std::pair<std::string, bool>> out;
    for (const CheckResult& r : check_config(c)) out.emplace_back(r.name, r.passed);
    return out;
  });

  m.def("derived_bound", [](const SearchConfig& c) { return derived_bound(c.form()); });
  m.def("pairing", [](const SearchConfig& c, const ClassVector& v, const ClassVector& w) {
    return pairing(c.form(), v, w);
  });
  m.def("square", [](const SearchConfig& c, const ClassVector& v) {
    return square(c.form(), v);
  });
  m.def("is_characteristic", [](const SearchConfig& c, const ClassVector& v) {
    return is_characteristic(c.form(), v);
  });
  m.def("k0_square", [](const SearchConfig& c, const ExtensionTuple& e) {
    return k0_square(c.chain(), e);
  });
  m.def("blown_down_square", [](const SearchConfig& c, const ClassVector& v) {
    return blown_down_square(c.chain(), c.form(), v);
  });
  m.def("formal_dimension", [](const SearchConfig& c, const ClassVector& v) {
    return formal_dimension(c.chain(), c.form(), v);
  });

  m.attr("__version__") = "1.0.0";
}
