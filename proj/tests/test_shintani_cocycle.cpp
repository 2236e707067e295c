#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "shintani/shintani_cocycle.hpp"

using namespace shintani;

namespace {

using GA = GroupAlgebraElement;

const IntMatrix I2 = IntMatrix::identity(2);
const IntMatrix rot = IntMatrix::from_rows({{0, -1}, {1, 0}});
const IntMatrix tr = IntMatrix::from_rows({{1, -1}, {1, 0}});  // [[1,1],[0,1]] * rot

TestFunction odd_in_first(std::int64_t level = 4) {
  const LatticeContext ctx{2, 3, level};
  std::vector<TestFunction::Term> terms;
  for (std::int64_t y = 0; y < level; ++y) {
    terms.push_back({{1, y}, 1});
    terms.push_back({{3 % level, y}, -1});
  }
  return TestFunction::from_terms(ctx, terms);
}

DeformationVector q2(Rational a, Rational b) { return DeformationVector{{a, b}}; }

}  // namespace

TEST_CASE("psi_cdg examples") {
  CHECK(psi_cdg(CocycleInput{to_rational(std::vector<IntMatrix>{I2, I2}), q2(Rational(-1, 2), Rational(1, 3))}).empty());

  const auto k = psi_cdg(CocycleInput{to_rational(std::vector<IntMatrix>{I2, rot}), q2(Rational(-1, 2), Rational(1, 3))});
  REQUIRE(k.terms().size() == 2);
  std::vector<std::size_t> ranks;
  for (const auto& t : k.terms()) {
    CHECK(t.coeff == 1);
    ranks.push_back(t.cone.rank());
  }
  std::sort(ranks.begin(), ranks.end());
  CHECK(ranks == std::vector<std::size_t>{1, 2});

  // swapping the matrices flips the determinant sign
  const auto swapped = psi_cdg(CocycleInput{to_rational(std::vector<IntMatrix>{rot, I2}), q2(Rational(-1, 3), Rational(1, 2))});
  for (const auto& t : swapped.terms()) CHECK(t.coeff == -1);
}

TEST_CASE("psi_cdg vanishes on the mirabolic subgroup") {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 2;
    std::vector<RatMatrix> ms;
    for (std::size_t i = 0; i < n; ++i) {
      RatMatrix m = RatMatrix::identity(n);
      do {
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 1; c < n; ++c) m(r, c) = static_cast<long>(rng() % 7) - 3;
      } while (det(m) == 0);
      ms.push_back(m);
    }
    CHECK(psi_cdg(CocycleInput{ms, random_deformation(n, rng)}).empty());
  }
}

TEST_CASE("phi example") {
  const auto f = odd_in_first();
  const auto a = phi(f, CocycleInput{to_rational(std::vector<IntMatrix>{I2, rot}), q2(Rational(-1, 2), Rational(-1, 3))});
  GA num(2);
  for (std::int64_t y = 1; y <= 4; ++y) {
    num.add_term({1, y}, 1);
    num.add_term({3, y}, -1);
  }
  CHECK(pm_eq(a, PseudoMeasure(num, {{4, 0}, {0, 4}})));
  CHECK(pm_eq(phi(f, CocycleInput{to_rational(std::vector<IntMatrix>{I2, I2}), q2(1, 1)}), PseudoMeasure(2)));
  const auto half = RatMatrix::from_rows({{Rational(1, 2), 0}, {0, 2}});
  CHECK_THROWS_AS(phi(f, CocycleInput{{half, to_rational(rot)}, q2(Rational(-1, 2), Rational(-1, 3))}), Error);
}

TEST_CASE("phi changes sign when the column determinant does") {
  const auto f = odd_in_first();
  const auto q = q2(Rational(-1, 2), Rational(-1, 3));
  const auto a = phi(f, CocycleInput{to_rational(std::vector<IntMatrix>{I2, rot}), q});
  const auto b = phi(f, CocycleInput{to_rational(std::vector<IntMatrix>{rot, I2}), q});
  CHECK(pm_eq(a, pm_neg(b)));
}

TEST_CASE("cocycle identity examples") {
  const auto f = odd_in_first();
  CHECK(verify_cocycle(f, {I2, rot, tr}, q2(Rational(-1, 2), Rational(1, 3))));
  CHECK(verify_cocycle(f, {rot, rot, rot}, q2(Rational(-1, 2), Rational(1, 3))));
  const auto corrupted = cocycle_sum(f, {I2, rot, tr}, q2(Rational(-1, 2), Rational(1, 3)), 0);
  CHECK_FALSE(corrupted.constant.has_value());
}

TEST_CASE("cocycle identity on Gamma(4) triples") {
  const auto f = odd_in_first();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto tuple = random_congruence_tuple(f.context(), rng, 3);
    CHECK(with_generic_deformation(2, rng, [&](const DeformationVector& q) { return verify_cocycle(f, tuple, q); }));
  }
}

TEST_CASE("equivariance") {
  const auto f = odd_in_first();
  const auto q = q2(Rational(-1, 2), Rational(1, 3));
  CHECK(verify_equivariance(f, I2, {I2, rot}, q));
  CHECK(verify_equivariance(f, elementary(2, 0, 1, 4), {I2, rot}, q));
  CHECK(verify_equivariance(f, elementary(2, 1, 0, -4), {I2, rot}, q));
  try {
    verify_equivariance(f, rot, {I2, rot}, q);
    FAIL("expected NotStabilizer");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStabilizer);
  }
}

TEST_CASE("support of psi and per-cone measure report") {
  const auto f = odd_in_first();
  std::mt19937_64 rng(22);
  const AmiceParams params{3, 20, 6};
  for (int t = 0; t < 10; ++t) {
    const auto tuple = random_congruence_tuple(f.context(), rng, 2);
    const auto report = with_generic_deformation(2, rng, [&](const DeformationVector& q) {
      return measure_report(f, tuple, q, params);
    });
    CHECK(report.support_ok);
    CHECK(report.all_vh);
    CHECK(report.all_amice);
  }
}

TEST_CASE("verify_measure_valued") {
  const AmiceParams params{3, 20, 6};
  CHECK(verify_measure_valued(odd_in_first(), 25, 5, params));
  const LatticeContext ctx{2, 3, 4};
  try {
    verify_measure_valued(TestFunction::indicator(ctx, {1, 0}), 5, 5, params);
    FAIL("expected VHFailsForE1");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VHFailsForE1);
  }
  // trivial tuple: psi vanishes, so the zero measure passes
  const auto report = measure_report(odd_in_first(), {I2, I2}, q2(1, 1), params);
  CHECK(report.cones.empty());
  CHECK(report.all_vh);
}

TEST_CASE("samplers are deterministic") {
  const LatticeContext ctx{3, 5, 4};
  std::mt19937_64 a(9), b(9);
  CHECK(random_congruence_tuple(ctx, a, 4) == random_congruence_tuple(ctx, b, 4));
  CHECK(random_deformation(3, a).q == random_deformation(3, b).q);
}
