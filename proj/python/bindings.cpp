#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <string>
#include <vector>

#include "conifold/commands.hpp"
#include "conifold/error.hpp"
#include "conifold/json_io.hpp"

namespace py = pybind11;
using namespace conifold;

namespace {

// Python ints of any size cross the boundary as decimal strings.
Integer to_integer(const py::handle& x) {
  if (!py::isinstance<py::int_>(x)) throw Error(ErrorKind::InvalidArgument, "expected an int");
  return parse_integer(py::str(x).cast<std::string>());
}

Polytope to_polytope(const std::vector<std::vector<py::int_>>& vertices) {
  if (vertices.empty()) throw Error(ErrorKind::EmptyInput, "no vertices");
  std::vector<LatticeVector> points;
  for (const auto& v : vertices) {
    std::vector<Integer> coords;
    for (const auto& x : v) coords.push_back(to_integer(x));
    points.emplace_back(std::move(coords));
  }
  return convex_hull(points, static_cast<int>(vertices.front().size()));
}

std::vector<Integer> to_sequence(const std::vector<py::int_>& terms) {
  std::vector<Integer> out;
  for (const auto& x : terms) out.push_back(to_integer(x));
  return out;
}

py::int_ to_python(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Config make_config(int dmax, bool prune, const std::string& mode, unsigned threads) {
  Config c;
  c.dmax = dmax;
  c.prune = prune;
  if (mode == "cy") c.mode = SmoothingMode::CalabiYau;
  else if (mode != "fano") throw Error(ErrorKind::InvalidArgument, "mode must be 'fano' or 'cy'");
  c.threads = threads;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conifold transitions of toric Fano threefolds (exact arithmetic core)";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "ConifoldError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("periods_json",
        [](const std::vector<std::vector<py::int_>>& vertices, int dmax, bool prune, bool recurrence,
           unsigned threads) {
          Config c = make_config(dmax, prune, "fano", threads);
          c.find_recurrence = recurrence;
          return periods_command(to_polytope(vertices), c).dump();
        },
        py::arg("vertices"), py::arg("dmax") = 20, py::arg("prune") = true, py::arg("recurrence") = false,
        py::arg("threads") = 1);

  m.def("transition_json",
        [](const std::vector<std::vector<py::int_>>& vertices, const std::string& mode, unsigned threads) {
          return transition_command(to_polytope(vertices), make_config(0, true, mode, threads)).dump();
        },
        py::arg("vertices"), py::arg("mode") = "fano", py::arg("threads") = 1);

  m.def("resolve_json",
        [](const std::vector<std::vector<py::int_>>& vertices) {
          return resolve_command(to_polytope(vertices), make_config(0, true, "fano", 1)).dump();
        },
        py::arg("vertices"));

  m.def("match_json",
        [](const std::vector<std::vector<py::int_>>& vertices, const std::string& db_path, int dmax) {
          const auto db = load_database(db_path);
          return match_command(to_polytope(vertices), db, make_config(dmax, true, "fano", 1)).dump();
        },
        py::arg("vertices"), py::arg("db_path"), py::arg("dmax") = 20);

  m.def("recurrence_json",
        [](const std::vector<py::int_>& terms, int max_order, int max_degree, int holdout) {
          Config c;
          c.max_order = max_order;
          c.max_degree = max_degree;
          c.holdout = holdout;
          return recurrence_command(to_sequence(terms), c).dump();
        },
        py::arg("terms"), py::arg("max_order") = 4, py::arg("max_degree") = 3, py::arg("holdout") = 5);

  m.def("period_term_direct",
        [](const std::vector<std::vector<py::int_>>& vertices, int d) {
          return to_python(period_term_direct(from_fan_polytope(to_polytope(vertices)), d));
        },
        py::arg("vertices"), py::arg("d"));

  m.def("degree",
        [](const std::vector<std::vector<py::int_>>& vertices) {
          const Rational v = normalized_volume(polar_dual(to_polytope(vertices)));
          return py::make_tuple(to_python(v.get_num()), to_python(v.get_den()));
        },
        py::arg("vertices"), "normalized volume of the polar dual as (numerator, denominator)");

  m.def("is_reflexive",
        [](const std::vector<std::vector<py::int_>>& vertices) { return is_reflexive(to_polytope(vertices)); },
        py::arg("vertices"));
}
