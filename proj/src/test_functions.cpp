#include "shintani/test_functions.hpp"

#include <numeric>
#include <random>
#include <utility>

namespace shintani {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void LatticeContext::validate() const {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (M < 1) throw Error(ErrorKind::InvalidArgument, "level M must be positive");
  if (std::gcd(M, p) != 1) throw Error(ErrorKind::InvalidArgument, "level M must be prime to p");
}

namespace {

std::size_t table_size(const LatticeContext& ctx) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < ctx.n; ++i) s = static_cast<std::size_t>(checked_mul(static_cast<std::int64_t>(s), ctx.M));
  return s;
}

}  // namespace

TestFunction::TestFunction(LatticeContext ctx) : ctx_(ctx) {
  ctx_.validate();
  values_.assign(table_size(ctx_), 0);
}

TestFunction::TestFunction(LatticeContext ctx, std::vector<std::int64_t> values)
    : ctx_(ctx), values_(std::move(values)) {
  ctx_.validate();
  if (values_.size() != table_size(ctx_)) throw Error(ErrorKind::InvalidArgument, "value table has wrong size");
}

TestFunction TestFunction::from_terms(LatticeContext ctx, const std::vector<Term>& terms) {
  TestFunction f(ctx);
  for (const auto& t : terms) {
    if (t.residue.size() != ctx.n) throw Error(ErrorKind::InvalidArgument, "residue has wrong dimension");
    auto& slot = f.values_[f.index_of(t.residue)];
    slot = checked_add(slot, t.weight);
  }
  return f;
}

TestFunction TestFunction::indicator(LatticeContext ctx, const LatticeVector& residue) {
  return from_terms(ctx, {Term{residue, 1}});
}

std::size_t TestFunction::index_of(const LatticeVector& v) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < ctx_.n; ++i)
    idx = idx * static_cast<std::size_t>(ctx_.M) + static_cast<std::size_t>(mod_floor(v[i], ctx_.M));
  return idx;
}

LatticeVector TestFunction::residue_at(std::size_t index) const {
  LatticeVector r(ctx_.n);
  for (std::size_t i = ctx_.n; i-- > 0;) {
    r[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(ctx_.M));
    index /= static_cast<std::size_t>(ctx_.M);
  }
  return r;
}

bool TestFunction::is_zero() const {
  for (auto x : values_)
    if (x != 0) return false;
  return true;
}

TestFunction& TestFunction::operator+=(const TestFunction& other) {
  if (other.ctx_.n != ctx_.n || other.ctx_.M != ctx_.M)
    throw Error(ErrorKind::InvalidArgument, "test functions of different shapes");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked_add(values_[i], other.values_[i]);
  return *this;
}

TestFunction& TestFunction::operator-=(const TestFunction& other) {
  if (other.ctx_.n != ctx_.n || other.ctx_.M != ctx_.M)
    throw Error(ErrorKind::InvalidArgument, "test functions of different shapes");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked_sub(values_[i], other.values_[i]);
  return *this;
}

namespace {

void require_special_linear(const IntMatrix& g, std::size_t n) {
  if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::InvalidArgument, "matrix has wrong size");
  if (det(g) != 1) throw Error(ErrorKind::NotUnimodular, "matrix is not in SL_n(Z)");
}

}  // namespace

TestFunction act(const TestFunction& f, const IntMatrix& g) {
  require_special_linear(g, f.dim());
  std::vector<std::int64_t> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(g * f.residue_at(i));
  return TestFunction(f.context(), std::move(out));
}

bool stabilizes(const TestFunction& f, const IntMatrix& g) { return act(f, g) == f; }

SliceFunction slice(const TestFunction& f, const LatticeVector& v, const LatticeVector& w) {
  if (is_zero(v)) throw Error(ErrorKind::ZeroDirection, "slice direction is zero");
  SliceFunction s{f.level(), std::vector<std::int64_t>(static_cast<std::size_t>(f.level()))};
  LatticeVector x(w.size());
  for (std::int64_t t = 0; t < f.level(); ++t) {
    for (std::size_t i = 0; i < w.size(); ++i)
      x[i] = mod_floor(w[i], f.level()) + mod_floor(t * mod_floor(v[i], f.level()), f.level());
    s.values[static_cast<std::size_t>(t)] = f(x);
  }
  return s;
}

Rational haar(const SliceFunction& s) {
  Integer total = 0;
  for (auto x : s.values) total += static_cast<long>(x);
  Rational h(total, static_cast<long>(s.level));
  h.canonicalize();
  return h;
}

Rational haar(const TestFunction& f) {
  Integer total = 0;
  for (auto x : f.values()) total += static_cast<long>(x);
  Rational h(total, Integer(static_cast<unsigned long>(f.values().size())));
  h.canonicalize();
  return h;
}

bool check_vh(const TestFunction& f, const RatVector& v) {
  if (v.size() != f.dim()) throw Error(ErrorKind::InvalidArgument, "direction has wrong dimension");
  if (shintani::is_zero(v)) throw Error(ErrorKind::ZeroDirection, "VH direction is zero");
  const auto dir = primitive(v);
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (haar(slice(f, dir, f.residue_at(i))) != 0) return false;
  return true;
}

Rational line_haar(const TestFunction& f, const LatticeVector& v, const RatVector& w) {
  if (is_zero(v)) throw Error(ErrorKind::ZeroDirection, "slice direction is zero");
  const auto dir = primitive(v);
  // dir is primitive, so any integral point w + t dir has t in (1/den)Z; t mod 1 suffices.
  Integer den = 1;
  for (const auto& x : w) den = lcm(den, Integer(x.get_den()));
  const std::int64_t d = to_int64(den);
  for (std::int64_t s = 0; s < d; ++s) {
    LatticeVector point(w.size());
    bool integral = true;
    for (std::size_t i = 0; i < w.size() && integral; ++i) {
      Rational c = w[i] + Rational(static_cast<long>(s), static_cast<long>(d)) * static_cast<long>(dir[i]);
      if (!is_integer(c)) integral = false;
      else point[i] = to_int64(c.get_num());
    }
    if (integral) return haar(slice(f, dir, point));
  }
  return 0;
}

IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, std::int64_t mult) {
  auto e = IntMatrix::identity(n);
  e(i, j) = checked_add(e(i, j), mult);
  return e;
}

IntMatrix random_congruence_element(const LatticeContext& ctx, std::uint64_t seed, std::size_t factors) {
  std::mt19937_64 rng(seed);
  auto g = IntMatrix::identity(ctx.n);
  if (ctx.n < 2) return g;
  for (std::size_t k = 0; k < factors; ++k) {
    const std::size_t i = rng() % ctx.n;
    std::size_t j = rng() % (ctx.n - 1);
    if (j >= i) ++j;
    const std::int64_t s = (rng() & 1) ? 1 : -1;
    g = g * elementary(ctx.n, i, j, s * ctx.M);
  }
  return g;
}

}  // namespace shintani
