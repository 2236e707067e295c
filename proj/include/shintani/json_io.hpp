#pragma once

// JSON encodings of test functions, cones, pseudo-measures and series.
// Scalars travel as decimal strings; lattice vectors as integer arrays.
// Malformed input raises SchemaError.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "shintani/cone_algebra.hpp"
#include "shintani/padic_amice.hpp"
#include "shintani/solomon_hu.hpp"
#include "shintani/test_functions.hpp"

namespace shintani {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer from a JSON number or decimal string.
std::int64_t json_int(const Json& j, const std::string& what);
Rational json_rational(const Json& j, const std::string& what);
LatticeVector json_lattice(const Json& j, const std::string& what);
RatVector json_ratvec(const Json& j, const std::string& what);
IntMatrix json_int_matrix(const Json& j, const std::string& what);

Json to_json(const LatticeVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);

/// {"n", "p", "M", "terms": [{"residue": [...], "weight": w}]}; missing n/p/M
/// fall back to `defaults`.
TestFunction test_function_from_json(const Json& j, const LatticeContext& defaults);
Json to_json(const TestFunction& f);

/// A cone is an array of generators.
OpenCone cone_from_json(const Json& j, std::size_t dim);
Json to_json(const OpenCone& c);
/// [{"coeff": "c", "generators": [...]}]
ConeFunction cone_function_from_json(const Json& j, std::size_t dim);
Json to_json(const ConeFunction& k);

/// {"numerator": [{"vector": [...], "coeff": "c"}], "denominator": [[...], ...]}
PseudoMeasure pseudo_measure_from_json(const Json& j, std::size_t dim);
Json to_json(const PseudoMeasure& a);

/// {"p", "precision", "degree", "coeffs": [{"exp": [...], "val": "p^v*u"}]}
Json to_json(const AmiceSeries& s);

}  // namespace shintani
