#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shintani/cli.hpp"
#include "shintani/json_io.hpp"
#include "shintani/shintani_cocycle.hpp"

namespace py = pybind11;
using namespace shintani;

namespace {

// Python side passes JSON text; dimensions come from the test function or the data.
TestFunction tf(const std::string& text) { return test_function_from_json(Json::parse(text), LatticeContext{1, 3, 1}); }

std::vector<IntMatrix> matrices(const std::string& text) {
  std::vector<IntMatrix> out;
  for (const auto& m : Json::parse(text)) out.push_back(json_int_matrix(m, "matrix"));
  return out;
}

DeformationVector deformation(const std::string& text) { return DeformationVector{json_ratvec(Json::parse(text), "q")}; }

std::size_t width(const Json& pm) {
  for (const auto& t : pm.at("numerator")) return t.at("vector").size();
  for (const auto& u : pm.at("denominator")) return u.size();
  return 0;
}

PseudoMeasure measure(const std::string& text, std::size_t dim = 0) {
  const auto j = Json::parse(text);
  return pseudo_measure_from_json(j, dim ? dim : width(j));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shintani cocycles, cone pairings and p-adic pseudo-measures";

  static py::exception<Error> error(m, "ShintaniError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    } catch (const SchemaError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const Json::exception& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("pair", [](const std::string& f, const std::string& cone) {
    const auto g = tf(f);
    return to_json(pair_open_cone(cone_from_json(Json::parse(cone), g.dim()), g)).dump();
  });
  m.def("pair_cone_function", [](const std::string& f, const std::string& k) {
    const auto g = tf(f);
    return to_json(pair_cone_function(cone_function_from_json(Json::parse(k), g.dim()), g)).dump();
  });
  m.def("check_vh", [](const std::string& f, const std::string& ray) {
    return check_vh(tf(f), json_ratvec(Json::parse(ray), "ray"));
  });
  m.def("pm_eq", [](const std::string& a, const std::string& b) {
    const auto x = measure(a);
    return pm_eq(x, measure(b, x.dim()));
  });
  m.def("pm_is_integer_constant", [](const std::string& a, std::size_t dim) -> std::optional<std::string> {
    const auto c = pm_is_integer_constant(measure(a, dim));
    if (!c) return std::nullopt;
    return c->get_str();
  });
  m.def("deformed_cone_decompose", [](const std::string& gens, const std::string& q) {
    const auto g = Json::parse(gens);
    std::vector<RatVector> vs;
    for (const auto& v : g) vs.push_back(json_ratvec(v, "generator"));
    return to_json(deformed_cone_decompose(vs, deformation(q))).dump();
  });
  m.def("psi_cdg", [](const std::string& ms, const std::string& q) {
    return to_json(psi_cdg(CocycleInput{to_rational(matrices(ms)), deformation(q)})).dump();
  });
  m.def("phi", [](const std::string& f, const std::string& ms, const std::string& q) {
    return to_json(phi(tf(f), CocycleInput{to_rational(matrices(ms)), deformation(q)})).dump();
  });
  m.def("verify_cocycle", [](const std::string& f, const std::string& ms, const std::string& q) {
    return verify_cocycle(tf(f), matrices(ms), deformation(q));
  });
  m.def("verify_equivariance", [](const std::string& f, const std::string& g, const std::string& ms, const std::string& q) {
    return verify_equivariance(tf(f), json_int_matrix(Json::parse(g), "g"), matrices(ms), deformation(q));
  });
  m.def("is_measure_amice",
        [](const std::string& a, const std::string& basis, std::int64_t p, std::int64_t precision, int degree) {
          std::vector<LatticeVector> b;
          for (const auto& v : Json::parse(basis)) b.push_back(json_lattice(v, "basis"));
          return is_measure_amice(measure(a, b.size()), b, AmiceParams{p, precision, degree});
        });
  m.def(
      "run",
      [](const std::string& command, const std::string& input, std::int64_t p, std::int64_t M, std::int64_t n,
         std::int64_t precision, std::int64_t degree, std::int64_t bound, std::uint64_t seed, std::int64_t trials,
         bool corrupt_sign) {
        cli::RunConfig c{command, input, p, M, n, precision, degree, bound, seed, trials, corrupt_sign};
        const auto r = cli::run(c);
        return py::make_tuple(r.exit_code, r.output, r.error);
      },
      py::arg("command"), py::arg("input"), py::arg("p") = 3, py::arg("M") = 4, py::arg("n") = 1,
      py::arg("precision") = 20, py::arg("degree") = 12, py::arg("bound") = 12, py::arg("seed") = 0,
      py::arg("trials") = 10, py::arg("corrupt_sign") = false);
}
