#include "shintani/shintani_cocycle.hpp"

#include <algorithm>

namespace shintani {

std::vector<RatVector> first_columns(const std::vector<RatMatrix>& matrices) {
  std::vector<RatVector> cols;
  for (const auto& m : matrices) cols.push_back(m.column(0));
  return cols;
}

ConeFunction psi_cdg(const CocycleInput& in) {
  if (in.matrices.empty()) throw Error(ErrorKind::InvalidArgument, "no matrices");
  const std::size_t n = in.matrices.front().rows();
  if (in.matrices.size() != n) throw Error(ErrorKind::InvalidArgument, "psi takes n matrices");
  for (const auto& m : in.matrices)
    if (m.rows() != n || m.cols() != n || det(m) == 0) throw Error(ErrorKind::SingularMatrix, "matrix not invertible");
  const auto cols = first_columns(in.matrices);
  const auto d = det(RatMatrix::from_columns(cols, n));
  if (d == 0) return ConeFunction(n);
  auto k = deformed_cone_decompose(cols, in.q);
  if (d < 0) k *= -1;
  return k;
}

PseudoMeasure phi(const TestFunction& f, const CocycleInput& in) {
  for (const auto& m : in.matrices) to_integer(m);
  return pair_cone_function(psi_cdg(in), f);
}

std::vector<RatMatrix> to_rational(const std::vector<IntMatrix>& ms) {
  std::vector<RatMatrix> out;
  for (const auto& m : ms) out.push_back(shintani::to_rational(m));
  return out;
}

CocycleSum cocycle_sum(const TestFunction& f, const std::vector<IntMatrix>& matrices, const DeformationVector& q,
                       std::optional<std::size_t> corrupt_term) {
  const std::size_t n = f.dim();
  if (matrices.size() != n + 1) throw Error(ErrorKind::InvalidArgument, "cocycle check takes n+1 matrices");
  const auto rat = to_rational(matrices);
  CocycleSum out{{}, PseudoMeasure(n), std::nullopt};
  for (std::size_t i = 0; i <= n; ++i) {
    CocycleInput in{{}, q};
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) in.matrices.push_back(rat[j]);
    auto term = phi(f, in);
    if (i % 2 == 1) term = pm_neg(term);
    out.terms.push_back(std::move(term));
  }
  if (corrupt_term) {
    for (std::size_t i = *corrupt_term; i <= n; ++i)
      if (!out.terms[i].numerator().is_zero()) {
        out.terms[i] = pm_neg(out.terms[i]);
        break;
      }
  }
  for (const auto& t : out.terms) out.total = pm_add(out.total, t);
  out.constant = pm_is_integer_constant(out.total);
  return out;
}

bool verify_cocycle(const TestFunction& f, const std::vector<IntMatrix>& matrices, const DeformationVector& q) {
  return cocycle_sum(f, matrices, q).constant.has_value();
}

bool verify_equivariance(const TestFunction& f, const IntMatrix& g, const std::vector<IntMatrix>& matrices,
                         const DeformationVector& q) {
  if (!stabilizes(f, g)) throw Error(ErrorKind::NotStabilizer, "g does not stabilize f");
  const auto gr = shintani::to_rational(g);
  CocycleInput moved{{}, q};
  for (const auto& m : matrices) moved.matrices.push_back(shintani::to_rational(g * m));
  const CocycleInput base{to_rational(matrices), DeformationVector{solve(gr, q.q)}};
  return pm_eq(phi(f, moved), act_pm(g, phi(f, base)));
}

MeasureReport measure_report(const TestFunction& f, const std::vector<IntMatrix>& matrices, const DeformationVector& q,
                             const AmiceParams& params) {
  const auto rat = to_rational(matrices);
  const auto cols = first_columns(rat);
  const auto k = psi_cdg(CocycleInput{rat, q});
  MeasureReport report;
  for (const auto& t : k.terms()) {
    ConeVerdict v{t.cone, {}, true, false};
    for (const auto& g : t.cone.generators()) {
      if (std::find(cols.begin(), cols.end(), g) == cols.end()) report.support_ok = false;
      const bool ok = check_vh(f, g);
      v.ray_vh.push_back(ok);
      v.vh = v.vh && ok;
    }
    v.amice = is_measure_amice(pair_open_cone(t.cone, f), cone_basis(t.cone), params);
    report.all_vh = report.all_vh && v.vh;
    report.all_amice = report.all_amice && v.amice;
    report.cones.push_back(std::move(v));
  }
  return report;
}

DeformationVector random_deformation(std::size_t n, std::mt19937_64& rng) {
  DeformationVector q;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t num = 0;
    while (num == 0) num = static_cast<std::int64_t>(rng() % 61) - 30;
    const std::int64_t den = static_cast<std::int64_t>(rng() % 11) + 1;
    q.q.push_back(Rational(num, den));
    q.q.back().canonicalize();
  }
  return q;
}

std::vector<IntMatrix> random_congruence_tuple(const LatticeContext& ctx, std::mt19937_64& rng, std::size_t count,
                                               std::size_t factors) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_congruence_element(ctx, rng(), factors));
  return out;
}

bool verify_measure_valued(const TestFunction& f, std::size_t samples, std::uint64_t seed, const AmiceParams& params) {
  LatticeVector e1(f.dim(), 0);
  e1[0] = 1;
  if (!check_vh(f, to_rational(e1))) throw Error(ErrorKind::VHFailsForE1, "f fails the vanishing hypothesis along e1");
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto tuple = random_congruence_tuple(f.context(), rng, f.dim());
    const auto report = with_generic_deformation(f.dim(), rng, [&](const DeformationVector& q) {
      return measure_report(f, tuple, q, params);
    });
    if (!report.all_vh || !report.all_amice || !report.support_ok) return false;
  }
  return true;
}

}  // namespace shintani
