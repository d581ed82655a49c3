#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "padictheta/json_io.hpp"
#include "padictheta/symmetrizer.hpp"
#include "padictheta/theta.hpp"

namespace py = pybind11;
using namespace padictheta;

namespace {

py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

std::vector<Integer> from_py(const std::vector<py::int_>& alpha) {
  std::vector<Integer> out;
  for (const auto& a : alpha) out.emplace_back(py::str(a).cast<std::string>());
  return out;
}

Weight weight(const std::string& sig, const std::string& kappa) { return parse_weight(parse_signature(sig), kappa); }

py::tuple run(const std::vector<std::string>& args) {
  std::vector<std::string> full{"padictheta"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of padictheta";
  py::register_exception<Error>(m, "PadicThetaError", PyExc_ValueError);

  m.def("run", &run, py::arg("args"),
        "Runs a CLI subcommand in process and returns (exit_code, stdout, stderr).");
  m.def(
      "phi", [](const std::string& sig, const std::string& kappa, const std::vector<py::int_>& alpha) {
        return to_py(phi_oracle(weight(sig, kappa), from_py(alpha)));
      },
      py::arg("sig"), py::arg("kappa"), py::arg("alpha"));
  m.def(
      "phi_minor", [](const std::string& sig, const std::string& kappa, const std::vector<py::int_>& alpha) {
        return to_py(phi_kappa_minor(weight(sig, kappa), from_py(alpha)));
      },
      py::arg("sig"), py::arg("kappa"), py::arg("alpha"));
  m.def(
      "lcan_json", [](const std::string& sig, const std::string& kappa) { return to_json(lcan_expand(weight(sig, kappa))).dump(); },
      py::arg("sig"), py::arg("kappa"));
  m.def(
      "is_symmetric", [](const std::string& sig, const std::string& kappa) { return is_symmetric(weight(sig, kappa)); },
      py::arg("sig"), py::arg("kappa"));
  m.def(
      "weight_congruent",
      [](const std::string& sig, const std::string& kappa, const std::string& kappa_prime, unsigned long p, unsigned mm) {
        const Signature s = parse_signature(sig);
        return weight_congruent(parse_weight(s, kappa), parse_weight(s, kappa_prime), p, mm);
      },
      py::arg("sig"), py::arg("kappa"), py::arg("kappa_prime"), py::arg("p"), py::arg("m"));
}
