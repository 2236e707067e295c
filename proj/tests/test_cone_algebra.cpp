#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "shintani/cone_algebra.hpp"

using namespace shintani;

namespace {

const RatVector e1{1, 0}, e2{0, 1};

OpenCone cone(std::vector<RatVector> gens) { return OpenCone(gens.empty() ? 2 : gens[0].size(), std::move(gens)); }

ConeFunction single(const OpenCone& c, Integer k = 1) { return ConeFunction(c.dim(), {ConeTerm{k, c}}); }

RatVector random_point(std::mt19937_64& rng, std::size_t n, int den) {
  RatVector v;
  for (std::size_t i = 0; i < n; ++i) {
    v.emplace_back(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % den) + 1);
    v.back().canonicalize();
  }
  return v;
}

std::vector<RatVector> random_gens(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    std::vector<RatVector> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(random_point(rng, n, 1));
    if (linearly_independent(g, n)) return g;
  }
}

bool same_function(const ConeFunction& a, const ConeFunction& b, std::mt19937_64& rng, std::size_t n) {
  for (int t = 0; t < 200; ++t) {
    const auto w = random_point(rng, n, 3);
    if (eval_cone_function(a, w) != eval_cone_function(b, w)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cone_contains") {
  CHECK(cone_contains(cone({e1, e2}), RatVector{1, 1}));
  CHECK_FALSE(cone_contains(cone({e1, e2}), RatVector{1, 0}));
  CHECK(cone_contains(cone({RatVector{1, 1}}), RatVector{2, 2}));
  CHECK_FALSE(cone_contains(cone({RatVector{1, 1}}), RatVector{1, 2}));
  CHECK(cone_contains(OpenCone::origin(2), RatVector{0, 0}));
  CHECK_FALSE(cone_contains(OpenCone::origin(2), RatVector{0, 1}));
}

TEST_CASE("open cones reject dependent generators") {
  try {
    OpenCone(2, {e1, RatVector{2, 0}});
    FAIL("expected DependentInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DependentInput);
  }
}

TEST_CASE("eval_cone_function") {
  CHECK(eval_cone_function(ConeFunction(2), RatVector{1, 0}) == 0);
  auto k = single(cone({e1, e2})) + single(cone({e1}));
  CHECK(eval_cone_function(k, RatVector{1, 0}) == 1);
  auto z = single(cone({e1})) - single(cone({e1}));
  CHECK(z.empty());
  CHECK(eval_cone_function(z, RatVector{1, 0}) == 0);
}

TEST_CASE("act_on_cone_function") {
  const auto k = single(cone({e1, e2}));
  const auto id = act_on_cone_function(RatMatrix::identity(2), k);
  CHECK(id.terms().size() == 1);
  CHECK(id.terms()[0].cone == k.terms()[0].cone);

  const auto flipped = act_on_cone_function(RatMatrix::from_rows({{1, 0}, {0, -1}}), k);
  REQUIRE(flipped.terms().size() == 1);
  CHECK(flipped.terms()[0].coeff == -1);
  CHECK(flipped.terms()[0].cone == cone({e1, RatVector{0, -1}}));

  const auto scaled = act_on_cone_function(RatMatrix::from_rows({{2, 0}, {0, 2}}), single(cone({e1})));
  std::mt19937_64 rng(4);
  CHECK(same_function(scaled, single(cone({e1})), rng, 2));
  CHECK(eval_cone_function(scaled, RatVector{Rational(1, 3), 0}) == 1);

  CHECK_THROWS_AS(act_on_cone_function(RatMatrix(2, 2), k), Error);
}

TEST_CASE("action is compatible with composition and with the pointwise formula") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 2;
    ConeFunction k(n);
    k.add(1, OpenCone(n, random_gens(rng, n)));
    k.add(-2, OpenCone(n, {random_point(rng, n, 1)}));
    RatMatrix g(n, n), h(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          g(i, j) = static_cast<long>(rng() % 7) - 3;
          h(i, j) = static_cast<long>(rng() % 7) - 3;
        }
    } while (det(g) == 0 || det(h) == 0);
    CHECK(same_function(act_on_cone_function(g * h, k), act_on_cone_function(g, act_on_cone_function(h, k)), rng, n));
    const auto gk = act_on_cone_function(g, k);
    const auto ginv = inverse(g);
    const int s = sign(det(g));
    for (int i = 0; i < 50; ++i) {
      const auto w = random_point(rng, n, 2);
      CHECK(eval_cone_function(gk, w) == s * eval_cone_function(k, ginv * w));
    }
  }
}

TEST_CASE("deformed_cone_eval") {
  const DeformationVector q{{Rational(-1, 2), Rational(1, 3)}};
  CHECK(deformed_cone_eval({e1, e2}, q, RatVector{1, 0}) == 1);
  CHECK(deformed_cone_eval({e1, e2}, q, RatVector{0, 1}) == 0);
  try {
    deformed_cone_eval({e1, e2}, DeformationVector{{0, 1}}, RatVector{0, 1});
    FAIL("expected NonGenericDeformation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonGenericDeformation);
  }
  CHECK(deformed_cone_eval({e1, RatVector{2, 0}}, q, RatVector{1, 0}) == 0);
}

TEST_CASE("deformed_cone_decompose examples") {
  auto faces = [](const ConeFunction& k) {
    std::vector<std::size_t> ranks;
    for (const auto& t : k.terms()) {
      CHECK(t.coeff == 1);
      ranks.push_back(t.cone.rank());
    }
    std::sort(ranks.begin(), ranks.end());
    return ranks;
  };
  const auto a = deformed_cone_decompose({e1, e2}, DeformationVector{{Rational(-1, 2), Rational(1, 3)}});
  CHECK(faces(a) == std::vector<std::size_t>{1, 2});
  bool has_e1 = false;
  for (const auto& t : a.terms()) has_e1 = has_e1 || t.cone == cone({e1});
  CHECK(has_e1);
  CHECK(faces(deformed_cone_decompose({e1, e2}, DeformationVector{{Rational(1, 2), Rational(1, 3)}})) ==
        std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(faces(deformed_cone_decompose({e1, e2}, DeformationVector{{Rational(-1, 2), Rational(-1, 3)}})) ==
        std::vector<std::size_t>{2});
  CHECK_THROWS_AS(deformed_cone_decompose({e1, e2}, DeformationVector{{0, 1}}), Error);
}

TEST_CASE("deformed_cone_decompose agrees with deformed_cone_eval, support among generators") {
  std::mt19937_64 rng(6);
  int compared = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto gens = random_gens(rng, n);
    const DeformationVector q{random_point(rng, n, 7)};
    ConeFunction k(n);
    try {
      k = deformed_cone_decompose(gens, q);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonGenericDeformation);
      continue;
    }
    for (const auto& term : k.terms())
      for (const auto& g : term.cone.generators()) CHECK(std::find(gens.begin(), gens.end(), g) != gens.end());
    for (int i = 0; i < 40; ++i) {
      // integer combinations of the generators hit the faces often
      RatVector w(n, 0);
      for (const auto& g : gens) {
        const long c = static_cast<long>(rng() % 3) - 1;
        for (std::size_t j = 0; j < n; ++j) w[j] += c * g[j];
      }
      try {
        CHECK(eval_cone_function(k, w) == deformed_cone_eval(gens, q, w));
        ++compared;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonGenericDeformation);
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("wedge_decompose") {
  const auto line = wedge_decompose(Wedge{{RatVector{1}}});
  CHECK(line.terms().size() == 3);
  for (long x : {-3L, -1L, 0L, 2L}) CHECK(eval_cone_function(line, RatVector{x}) == 1);

  const auto w = wedge_decompose(Wedge{{e1, e2}});
  CHECK(eval_cone_function(w, RatVector{-1, 1}) == 1);
  CHECK(eval_cone_function(w, RatVector{1, -1}) == 0);
  CHECK_THROWS_AS(wedge_decompose(Wedge{{e1, RatVector{3, 0}}}), Error);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 3;
    const Wedge wd{random_gens(rng, n)};
    const auto k = wedge_decompose(wd);
    for (int i = 0; i < 60; ++i) {
      const auto x = random_point(rng, n, 2);
      CHECK(eval_cone_function(k, x) == (wedge_contains(wd, x) ? 1 : 0));
    }
  }
}
