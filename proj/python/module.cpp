#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinhecke/commands.hpp"
#include "spinhecke/suites.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_spinhecke, m) {
  m.doc() = "Exact computation in spin, covering and Hecke-Clifford algebras";
  m.def(
      "run",
      [](const std::string& command, const std::string& args_json) {
        nlohmann::json args = args_json.empty() ? nlohmann::json::object() : nlohmann::json::parse(args_json);
        spinhecke::CommandResult r;
        {
          py::gil_scoped_release release;
          r = spinhecke::run_command(command, args);
        }
        return py::make_tuple(r.body.dump(), r.exit_code);
      },
      py::arg("command"), py::arg("args_json") = "{}",
      "Run a command; returns (json text, exit code).");
  m.def("command_names", &spinhecke::command_names);
  m.def("suite_names", &spinhecke::suite_names);
  m.def("map_names", &spinhecke::map_names);
}
