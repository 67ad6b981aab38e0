#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gbcode/binomial_bound.hpp"
#include "gbcode/brute.hpp"
#include "gbcode/code_io.hpp"
#include "gbcode/error.hpp"
#include "gbcode/gbmetrics.hpp"
#include "gbcode/oracle.hpp"
#include "gbcode/report.hpp"

namespace py = pybind11;
using namespace gbcode;

namespace {

std::vector<std::vector<PrimeField::Value>> words_of(const std::vector<Word>& words) {
  std::vector<std::vector<PrimeField::Value>> out;
  for (const auto& w : words) out.push_back(w.symbols);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gbcode, m) {
  m.doc() = "Gröbner-basis metrics of systematic codes";

  static py::exception<Error> error(m, "GbcodeError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<SystematicCode>(m, "SystematicCode")
      .def_property_readonly("n", &SystematicCode::n)
      .def_property_readonly("k", &SystematicCode::k)
      .def_property_readonly("q", &SystematicCode::q)
      .def_property_readonly("f",
                             [](const SystematicCode& c) {
                               std::vector<std::string> out;
                               for (const auto& p : c.f()) out.push_back(p.to_string());
                               return out;
                             })
      .def("encode",
           [](const SystematicCode& c, const std::vector<PrimeField::Value>& v) { return c.encode(v).symbols; })
      .def("words", [](const SystematicCode& c) { return words_of(enumerate(c)); })
      .def("__str__", &format_code)
      .def("__eq__", [](const SystematicCode& a, const SystematicCode& b) { return a == b; });

  m.def("parse_code", [](const std::string& text) { return parse_code(text); }, py::arg("text"));
  m.def("read_code_file", [](const std::string& path) { return read_code_file(path); }, py::arg("path"));
  m.def("random_code", &random_code, py::arg("n"), py::arg("k"), py::arg("q"), py::arg("max_degree"),
        py::arg("seed"));

  m.def(
      "brute_report_json", [](const SystematicCode& c) { return report_to_json(brute_metrics(c)); }, py::arg("code"));
  m.def(
      "gb_report_json",
      [](const SystematicCode& c, unsigned jobs) {
        GbOptions options;
        options.jobs = jobs;
        py::gil_scoped_release release;
        return report_to_json(gb_metrics(c, options));
      },
      py::arg("code"), py::arg("jobs") = 1);
  m.def("min_distance_gb", [](const SystematicCode& c) { return min_distance_gb(c); }, py::arg("code"));
  m.def(
      "weight_distribution_gb", [](const SystematicCode& c) { return weight_distribution_gb(c); }, py::arg("code"));
  m.def(
      "distance_distribution_gb", [](const SystematicCode& c) { return distance_distribution_gb(c); },
      py::arg("code"));

  m.def(
      "verify_binomial_bound",
      [](std::uint64_t n_max, const std::string& alpha, const std::string& s) {
        return verify_binomial_bound(n_max, Rational::parse(alpha), Rational::parse(s));
      },
      py::arg("n_max"), py::arg("alpha"), py::arg("s"));

  m.def(
      "sphere_decode_calls",
      [](std::size_t n) {
        const auto inst = sphere_instance(n);
        DistanceOracle oracle;
        const Word found = naive_decode(oracle, inst.points, *inst.query);
        return py::make_tuple(found.symbols, oracle.calls());
      },
      py::arg("n"), "Runs naive decoding on the sphere-plus-point instance; returns (answer, oracle calls).");
  m.def(
      "aspect_ratio_pair_calls",
      [](std::size_t n, std::uint64_t seed) {
        const auto inst = aspect_ratio_instance(n, seed);
        DistanceOracle oracle;
        const auto r = pruned_closest_pair(oracle, inst.points);
        return py::make_tuple(inst.points.size(), r.distance, oracle.calls());
      },
      py::arg("n"), py::arg("seed"), "Returns (|X|, closest distance, oracle calls).");
}
