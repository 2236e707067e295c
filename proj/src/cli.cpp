#include "shintani/cli.hpp"

#include <random>

#include "shintani/json_io.hpp"
#include "shintani/shintani_cocycle.hpp"

namespace shintani::cli {

namespace {

LatticeContext defaults(const RunConfig& c) {
  return LatticeContext{static_cast<std::size_t>(c.n), c.p, c.M};
}

void validate(const RunConfig& c) {
  if (c.precision <= 0 || c.degree <= 0 || c.bound <= 0) throw SchemaError("precision, degree and bound must be positive");
  if (c.trials < 0) throw SchemaError("trials must be non-negative");
  try {
    defaults(c).validate();
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
}

AmiceParams amice_params(const RunConfig& c, std::int64_t p) { return AmiceParams{p, c.precision, static_cast<int>(c.degree)}; }

Json parse_input(const RunConfig& c) {
  if (c.input.empty()) throw SchemaError("no input document");
  try {
    return Json::parse(c.input);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

ConeFunction cone_argument(const Json& in, std::size_t dim) {
  if (in.contains("cone_function")) return cone_function_from_json(in["cone_function"], dim);
  if (in.contains("cone")) return ConeFunction(dim, {ConeTerm{1, cone_from_json(in["cone"], dim)}});
  throw SchemaError("expected \"cone\" or \"cone_function\"");
}

Json cmd_pair(const RunConfig& c, const Json& in) {
  if (!in.contains("test_function")) throw SchemaError("missing \"test_function\"");
  const auto f = test_function_from_json(in["test_function"], defaults(c));
  return to_json(pair_cone_function(cone_argument(in, f.dim()), f));
}

Json cmd_vh(const RunConfig& c, const Json& in) {
  if (!in.contains("test_function")) throw SchemaError("missing \"test_function\"");
  const auto f = test_function_from_json(in["test_function"], defaults(c));
  Json out = Json::object();
  const Json rays = in.contains("rays") ? in["rays"] : Json::array();
  auto check = [&](const Json& r) {
    const auto v = json_ratvec(r, "ray");
    if (v.size() != f.dim()) throw SchemaError("ray has wrong length");
    return check_vh(f, v);
  };
  if (rays.is_object()) {
    for (const auto& [name, r] : rays.items()) out[name] = check(r);
  } else if (rays.is_array()) {
    for (const auto& r : rays) out[r.dump()] = check(r);
  } else {
    throw SchemaError("rays must be an object or an array");
  }
  return out;
}

std::vector<std::vector<int>> orders_up_to(std::size_t n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(n, 0);
  for (;;) {
    if (total_degree(k) <= total) out.push_back(k);
    std::size_t i = 0;
    while (i < n && ++k[i] > total) k[i++] = 0;
    if (i == n) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return total_degree(a) < total_degree(b); });
  return out;
}

Json cmd_moments(const RunConfig& c, const Json& in) {
  std::int64_t p = c.p;
  std::size_t dim = static_cast<std::size_t>(c.n);
  std::vector<LatticeVector> basis;
  PseudoMeasure a(dim);
  if (in.contains("pseudo_measure")) {
    if (in.contains("p")) p = json_int(in["p"], "p");
    if (in.contains("n")) dim = static_cast<std::size_t>(json_int(in["n"], "n"));
    a = pseudo_measure_from_json(in["pseudo_measure"], dim);
    if (in.contains("basis")) {
      for (const auto& b : in["basis"]) basis.push_back(json_lattice(b, "basis"));
    } else {
      for (std::size_t i = 0; i < dim; ++i) {
        LatticeVector e(dim, 0);
        e[i] = 1;
        basis.push_back(e);
      }
    }
  } else if (in.contains("test_function")) {
    const auto f = test_function_from_json(in["test_function"], defaults(c));
    p = f.context().p;
    dim = f.dim();
    if (!in.contains("cone")) throw SchemaError("moments of a test function need a \"cone\"");
    const auto cone = cone_from_json(in["cone"], dim);
    if (!is_measure_vh(cone, f)) throw Error(ErrorKind::NotAMeasure, "the vanishing hypothesis fails on a ray of the cone");
    a = pair_open_cone(cone, f);
    basis = in.contains("basis") ? std::vector<LatticeVector>{} : cone_basis(cone);
    if (in.contains("basis"))
      for (const auto& b : in["basis"]) basis.push_back(json_lattice(b, "basis"));
  } else {
    throw SchemaError("expected \"pseudo_measure\" or \"test_function\"");
  }
  if (!is_prime(p)) throw SchemaError("p must be prime");

  std::vector<std::vector<int>> orders;
  if (in.contains("orders")) {
    for (const auto& o : in["orders"]) {
      std::vector<int> k;
      for (const auto& x : o) k.push_back(static_cast<int>(json_int(x, "order")));
      if (k.size() != dim) throw SchemaError("moment order has wrong length");
      orders.push_back(std::move(k));
    }
  } else {
    orders = orders_up_to(dim, std::min<int>(3, static_cast<int>(c.degree)));
  }

  const auto params = amice_params(c, p);
  const auto series = amice_in_basis(a, basis, params);
  const auto exact = amice_in_basis_exact(a, basis, p, params.degree);
  Json table = Json::array();
  for (const auto& k : orders) {
    Json row{{"k", k}, {"padic", moment(series, k).to_string()}};
    const auto q = moment(exact, k);
    if (is_p_integral(q, p)) row["exact"] = to_string(q);
    table.push_back(std::move(row));
  }
  return Json{{"p", p}, {"precision", params.precision}, {"degree", params.degree}, {"moments", table},
              {"series", to_json(series)}};
}

Json q_json(const DeformationVector& q) { return to_json(q.q); }

Json matrices_json(const std::vector<IntMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json cocycle_trial(const TestFunction& f, const std::vector<IntMatrix>& tuple, const DeformationVector& q,
                   bool corrupt, bool& passed) {
  const auto sum = cocycle_sum(f, tuple, q, corrupt ? std::optional<std::size_t>(0) : std::nullopt);
  Json t{{"matrices", matrices_json(tuple)}, {"q", q_json(q)}, {"cocycle", sum.constant.has_value()}};
  if (sum.constant) t["constant"] = sum.constant->get_str();
  else t["failure"] = to_json(sum.total);
  passed = passed && sum.constant.has_value();
  return t;
}

Json cmd_cocycle(const RunConfig& c, const Json& in) {
  if (!in.contains("test_function")) throw SchemaError("missing \"test_function\"");
  const auto f = test_function_from_json(in["test_function"], defaults(c));
  const std::size_t n = f.dim();
  const auto params = amice_params(c, f.context().p);
  LatticeVector e1(n, 0);
  e1[0] = 1;
  const bool vh_e1 = check_vh(f, to_rational(e1));

  bool passed = true;
  Json explicit_trials = Json::array();
  if (in.contains("tuples")) {
    for (const auto& t : in["tuples"]) {
      std::vector<IntMatrix> tuple;
      for (const auto& m : t.at("matrices")) tuple.push_back(json_int_matrix(m, "matrix"));
      if (tuple.size() != n + 1) throw SchemaError("a cocycle tuple has n+1 matrices");
      const DeformationVector q{json_ratvec(t.at("q"), "q")};
      if (q.q.size() != n) throw SchemaError("q has wrong length");
      explicit_trials.push_back(cocycle_trial(f, tuple, q, c.corrupt_sign, passed));
    }
  }

  Json trials = Json::array();
  for (std::int64_t i = 0; i < c.trials; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const auto tuple = random_congruence_tuple(f.context(), rng, n + 1);
    bool ok = true;
    Json t = with_generic_deformation(n, rng, [&](const DeformationVector& q) {
      ok = true;
      return cocycle_trial(f, tuple, q, c.corrupt_sign, ok);
    });
    t["index"] = i;

    const std::vector<IntMatrix> head(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(n));
    const auto g = random_congruence_element(f.context(), rng());
    Json eq = with_generic_deformation(n, rng, [&](const DeformationVector& q) {
      return Json{{"g", to_json(g)}, {"q", q_json(q)}, {"ok", verify_equivariance(f, g, head, q)}};
    });
    ok = ok && eq["ok"].get<bool>();
    t["equivariance"] = eq;

    if (vh_e1) {
      const auto report = with_generic_deformation(n, rng, [&](const DeformationVector& q) {
        return measure_report(f, head, q, params);
      });
      const bool m = report.all_vh && report.all_amice && report.support_ok;
      t["measure"] = m;
      ok = ok && m;
    } else {
      t["measure"] = nullptr;
    }
    t["passed"] = ok;
    passed = passed && ok;
    trials.push_back(std::move(t));
  }
  return Json{{"seed", std::to_string(c.seed)}, {"vh_e1", vh_e1}, {"explicit", explicit_trials}, {"trials", trials},
              {"passed", passed}};
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult r;
  try {
    validate(config);
    const auto in = parse_input(config);
    if (!in.is_object()) throw SchemaError("input must be a JSON object");
    Json out;
    if (config.command == "pair") out = cmd_pair(config, in);
    else if (config.command == "vh") out = cmd_vh(config, in);
    else if (config.command == "moments") out = cmd_moments(config, in);
    else if (config.command == "cocycle") {
      out = cmd_cocycle(config, in);
      if (!out["passed"].get<bool>()) r.exit_code = kTrialFailed;
    } else throw SchemaError("unknown command \"" + config.command + "\"");
    r.output = out.dump(2) + "\n";
  } catch (const SchemaError& e) {
    r = {kSchema, "", e.what()};
  } catch (const Json::exception& e) {
    r = {kSchema, "", e.what()};
  } catch (const Error& e) {
    int code = kOther;
    switch (e.kind()) {
      case ErrorKind::DependentInput: code = kDependentInput; break;
      case ErrorKind::NotAMeasure: code = kNotAMeasure; break;
      case ErrorKind::PrecisionExhausted: code = kPrecisionExhausted; break;
      default: break;
    }
    r = {code, "", e.what()};
  } catch (const std::exception& e) {
    r = {kOther, "", e.what()};
  }
  return r;
}

}  // namespace shintani::cli
