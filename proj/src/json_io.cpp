#include "shintani/json_io.hpp"

namespace shintani {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(what + ": missing \"" + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  return j;
}

}  // namespace

std::int64_t json_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    try {
      const auto q = parse_rational(j.get<std::string>());
      if (is_integer(q)) return to_int64(q.get_num());
    } catch (const Error&) {
    }
  }
  throw SchemaError(what + ": expected an integer");
}

Rational json_rational(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw SchemaError(what + ": expected a rational string");
}

LatticeVector json_lattice(const Json& j, const std::string& what) {
  LatticeVector v;
  for (const auto& x : array(j, what)) v.push_back(json_int(x, what));
  return v;
}

RatVector json_ratvec(const Json& j, const std::string& what) {
  RatVector v;
  for (const auto& x : array(j, what)) v.push_back(json_rational(x, what));
  return v;
}

IntMatrix json_int_matrix(const Json& j, const std::string& what) {
  std::vector<LatticeVector> rows;
  for (const auto& r : array(j, what)) rows.push_back(json_lattice(r, what));
  try {
    return IntMatrix::from_rows(rows);
  } catch (const Error&) {
    throw SchemaError(what + ": ragged matrix");
  }
}

Json to_json(const LatticeVector& v) { return Json(v); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

TestFunction test_function_from_json(const Json& j, const LatticeContext& defaults) {
  if (!j.is_object()) throw SchemaError("test function: expected an object");
  LatticeContext ctx = defaults;
  if (j.contains("n")) ctx.n = static_cast<std::size_t>(json_int(j["n"], "n"));
  if (j.contains("p")) ctx.p = json_int(j["p"], "p");
  if (j.contains("M")) ctx.M = json_int(j["M"], "M");
  try {
    ctx.validate();
  } catch (const Error& e) {
    throw SchemaError(std::string("test function: ") + e.what());
  }
  std::vector<TestFunction::Term> terms;
  for (const auto& t : array(field(j, "terms", "test function"), "terms")) {
    auto r = json_lattice(field(t, "residue", "term"), "residue");
    if (r.size() != ctx.n) throw SchemaError("term: residue has wrong length");
    terms.push_back({std::move(r), t.contains("weight") ? json_int(t["weight"], "weight") : 1});
  }
  return TestFunction::from_terms(ctx, terms);
}

Json to_json(const TestFunction& f) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (f.values()[i] != 0) terms.push_back(Json{{"residue", f.residue_at(i)}, {"weight", f.values()[i]}});
  const auto& c = f.context();
  return Json{{"n", c.n}, {"p", c.p}, {"M", c.M}, {"terms", terms}};
}

OpenCone cone_from_json(const Json& j, std::size_t dim) {
  std::vector<RatVector> gens;
  for (const auto& g : array(j, "cone")) {
    auto v = json_ratvec(g, "generator");
    if (v.size() != dim) throw SchemaError("cone: generator has wrong length");
    gens.push_back(std::move(v));
  }
  return OpenCone(dim, std::move(gens));
}

Json to_json(const OpenCone& c) {
  Json out = Json::array();
  for (const auto& g : c.generators()) out.push_back(to_json(g));
  return out;
}

ConeFunction cone_function_from_json(const Json& j, std::size_t dim) {
  ConeFunction k(dim);
  for (const auto& t : array(j, "cone function")) {
    const auto c = json_rational(t.contains("coeff") ? t["coeff"] : Json("1"), "coeff");
    if (!is_integer(c)) throw SchemaError("cone function: coefficients must be integers");
    k.add(c.get_num(), cone_from_json(field(t, "generators", "cone term"), dim));
  }
  return k;
}

Json to_json(const ConeFunction& k) {
  Json out = Json::array();
  for (const auto& t : k.terms()) out.push_back(Json{{"coeff", t.coeff.get_str()}, {"generators", to_json(t.cone)}});
  return out;
}

PseudoMeasure pseudo_measure_from_json(const Json& j, std::size_t dim) {
  GroupAlgebraElement num(dim);
  for (const auto& t : array(field(j, "numerator", "pseudo-measure"), "numerator")) {
    auto v = json_lattice(field(t, "vector", "numerator term"), "vector");
    if (v.size() != dim) throw SchemaError("pseudo-measure: vector has wrong length");
    num.add_term(v, json_rational(field(t, "coeff", "numerator term"), "coeff"));
  }
  std::vector<LatticeVector> den;
  for (const auto& u : array(field(j, "denominator", "pseudo-measure"), "denominator")) {
    auto v = json_lattice(u, "denominator");
    if (v.size() != dim) throw SchemaError("pseudo-measure: denominator has wrong length");
    den.push_back(std::move(v));
  }
  return PseudoMeasure(std::move(num), std::move(den));
}

Json to_json(const PseudoMeasure& a) {
  Json num = Json::array();
  for (const auto& [v, c] : a.numerator().terms()) num.push_back(Json{{"vector", v}, {"coeff", to_string(c)}});
  Json den = Json::array();
  for (const auto& u : a.denominator()) den.push_back(u);
  return Json{{"numerator", num}, {"denominator", den}};
}

Json to_json(const AmiceSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.coeffs()) coeffs.push_back(Json{{"exp", e}, {"val", c.to_string()}});
  return Json{{"p", s.ring().p}, {"precision", s.ring().precision}, {"degree", s.degree()}, {"coeffs", coeffs}};
}

}  // namespace shintani
