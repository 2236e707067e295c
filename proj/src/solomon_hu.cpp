#include "shintani/solomon_hu.hpp"

#include <algorithm>
#include <utility>

namespace shintani {

// ---------------------------------------------------------------------------
// Group algebra

GroupAlgebraElement GroupAlgebraElement::delta(const LatticeVector& v, const Rational& c) {
  GroupAlgebraElement e(v.size());
  e.add_term(v, c);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::constant(std::size_t dim, const Rational& c) {
  return delta(LatticeVector(dim, 0), c);
}

GroupAlgebraElement GroupAlgebraElement::one_minus_delta(const LatticeVector& u) {
  auto e = constant(u.size(), 1);
  e.add_term(u, -1);
  return e;
}

Rational GroupAlgebraElement::coefficient(const LatticeVector& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const LatticeVector& v, const Rational& c) {
  if (v.size() != dim_) throw Error(ErrorKind::InvalidArgument, "group algebra exponent has wrong dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::shifted(const LatticeVector& v) const {
  GroupAlgebraElement out(dim_);
  for (const auto& [x, c] : terms_) out.terms_.emplace(add(x, v), c);
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (o.dim_ != dim_) throw Error(ErrorKind::InvalidArgument, "group algebra dimension mismatch");
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (o.dim_ != dim_) throw Error(ErrorKind::InvalidArgument, "group algebra dimension mismatch");
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, c] : terms_) c *= s;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::InvalidArgument, "group algebra dimension mismatch");
  GroupAlgebraElement out(a.dim_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) out.add_term(add(x, y), c * d);
  return out;
}

// ---------------------------------------------------------------------------
// Pseudo-measures

PseudoMeasure::PseudoMeasure(GroupAlgebraElement numerator, std::vector<LatticeVector> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (const auto& u : denominator_) {
    if (u.size() != numerator_.dim()) throw Error(ErrorKind::InvalidArgument, "denominator has wrong dimension");
    if (is_zero(u)) throw Error(ErrorKind::InvalidArgument, "denominator factor 1 - δ_0 is zero");
  }
}

GroupAlgebraElement expand_denominator(std::size_t dim, const std::vector<LatticeVector>& den) {
  auto out = GroupAlgebraElement::constant(dim, 1);
  for (const auto& u : den) out = out * GroupAlgebraElement::one_minus_delta(u);
  return out;
}

namespace {

bool positive_direction(const LatticeVector& u) {
  for (auto x : u)
    if (x != 0) return x > 0;
  return false;
}

// 1/(1 - δ_u) = -δ_{-u}/(1 - δ_{-u}): every factor is rewritten with a
// lexicographically positive vector so that common factors can be shared.
std::pair<GroupAlgebraElement, std::vector<LatticeVector>> sign_normalized(const PseudoMeasure& a) {
  GroupAlgebraElement num = a.numerator();
  std::vector<LatticeVector> den;
  for (const auto& u : a.denominator()) {
    if (positive_direction(u)) {
      den.push_back(u);
    } else {
      const auto v = negate(u);
      num = num.shifted(v);
      num *= -1;
      den.push_back(v);
    }
  }
  std::sort(den.begin(), den.end());
  return {std::move(num), std::move(den)};
}

// Multiset difference a \ b of sorted lists.
std::vector<LatticeVector> multiset_minus(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  std::vector<LatticeVector> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PseudoMeasure pm_add(const PseudoMeasure& a, const PseudoMeasure& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "pseudo-measure dimension mismatch");
  if (a.numerator().is_zero()) return b;
  if (b.numerator().is_zero()) return a;
  auto [na, da] = sign_normalized(a);
  auto [nb, db] = sign_normalized(b);
  std::vector<LatticeVector> common;
  std::set_union(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common));
  auto num = na * expand_denominator(a.dim(), multiset_minus(common, da));
  num += nb * expand_denominator(a.dim(), multiset_minus(common, db));
  return PseudoMeasure(std::move(num), std::move(common));
}

PseudoMeasure pm_neg(const PseudoMeasure& a) { return pm_scale(a, -1); }

PseudoMeasure pm_sub(const PseudoMeasure& a, const PseudoMeasure& b) { return pm_add(a, pm_neg(b)); }

PseudoMeasure pm_scale(const PseudoMeasure& a, const Rational& s) {
  auto num = a.numerator();
  num *= s;
  return PseudoMeasure(std::move(num), a.denominator());
}

PseudoMeasure pm_mul(const PseudoMeasure& a, const PseudoMeasure& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "pseudo-measure dimension mismatch");
  auto den = a.denominator();
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return PseudoMeasure(a.numerator() * b.numerator(), std::move(den));
}

PseudoMeasure pm_mul_one_minus(const PseudoMeasure& a, const LatticeVector& u) {
  auto den = a.denominator();
  if (auto it = std::find(den.begin(), den.end(), u); it != den.end()) {
    den.erase(it);
    return PseudoMeasure(a.numerator(), std::move(den));
  }
  const auto neg = negate(u);
  if (auto it = std::find(den.begin(), den.end(), neg); it != den.end()) {
    // (1 - δ_u) / (1 - δ_{-u}) = -δ_u
    den.erase(it);
    auto num = a.numerator().shifted(u);
    num *= -1;
    return PseudoMeasure(std::move(num), std::move(den));
  }
  return PseudoMeasure(a.numerator() * GroupAlgebraElement::one_minus_delta(u), std::move(den));
}

bool pm_eq(const PseudoMeasure& a, const PseudoMeasure& b) {
  if (a.dim() != b.dim()) return false;
  auto da = a.denominator();
  auto db = b.denominator();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  // Cancelling shared factors is sound in an integral domain.
  const auto only_a = multiset_minus(da, db);
  const auto only_b = multiset_minus(db, da);
  return a.numerator() * expand_denominator(a.dim(), only_b) == b.numerator() * expand_denominator(a.dim(), only_a);
}

std::optional<Integer> pm_is_integer_constant(const PseudoMeasure& a) {
  if (a.numerator().is_zero()) return Integer(0);
  const auto d = expand_denominator(a.dim(), a.denominator());
  // Lex order on Z^n is a group order, so the leading term of d is nonzero.
  const auto& [lead, lead_coeff] = *d.terms().rbegin();
  const Rational m = a.numerator().coefficient(lead) / lead_coeff;
  if (!is_integer(m)) return std::nullopt;
  auto md = d;
  md *= m;
  if (!(md == a.numerator())) return std::nullopt;
  return m.get_num();
}

PseudoMeasure act_pm(const IntMatrix& g, const PseudoMeasure& a) {
  if (g.rows() != a.dim() || g.cols() != a.dim()) throw Error(ErrorKind::InvalidArgument, "matrix has wrong size");
  if (det(g) != 1) throw Error(ErrorKind::NotUnimodular, "act_pm needs det g = 1");
  GroupAlgebraElement num(a.dim());
  for (const auto& [x, c] : a.numerator().terms()) num.add_term(g * x, c);
  std::vector<LatticeVector> den;
  for (const auto& u : a.denominator()) den.push_back(g * u);
  return PseudoMeasure(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Fundamental domains and the pairing

std::vector<LatticeVector> enumerate_fundamental_domain(const std::vector<LatticeVector>& ws, std::size_t dim) {
  const std::size_t r = ws.size();
  for (const auto& w : ws)
    if (w.size() != dim) throw Error(ErrorKind::InvalidArgument, "cell generator has wrong dimension");
  if (!linearly_independent(ws, dim)) throw Error(ErrorKind::DependentInput, "cell generators are dependent");
  if (r == 0) return {LatticeVector(dim, 0)};

  std::vector<RatVector> rws;
  for (const auto& w : ws) rws.push_back(to_rational(w));
  const auto sat = saturate_span(rws, dim);
  const auto basis = to_rational(IntMatrix::from_columns(sat, dim));

  // Coordinates of the generators inside the saturated sublattice (r x r, integral).
  IntMatrix coords(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto c = solve_in_span(basis, rws[j]);
    const auto ci = to_lattice(*c);
    for (std::size_t i = 0; i < r; ++i) coords(i, j) = ci[i];
  }
  const auto s = snf(coords);
  const auto left_inv = inverse_unimodular(s.left);
  const auto coords_inv = inverse(to_rational(coords));

  std::vector<LatticeVector> out;
  LatticeVector z(r, 0);
  for (;;) {
    // Coset representative y = left^-1 z of Z^r / coords Z^r, moved into the cell (0,1]^r.
    const auto y = left_inv * z;
    const auto t = coords_inv * to_rational(y);
    LatticeVector shift(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer ceil_t;
      mpz_cdiv_q(ceil_t.get_mpz_t(), t[i].get_num_mpz_t(), t[i].get_den_mpz_t());
      shift[i] = checked_sub(1, to_int64(ceil_t));
    }
    const auto local = add(y, coords * shift);
    LatticeVector x(dim, 0);
    for (std::size_t j = 0; j < r; ++j) x = add(x, scale(sat[j], local[j]));
    out.push_back(std::move(x));

    std::size_t k = 0;
    while (k < r && ++z[k] == s.d[k]) z[k++] = 0;
    if (k == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> cone_periods(const OpenCone& c, std::int64_t level) {
  std::vector<LatticeVector> periods;
  for (const auto& g : c.generators()) periods.push_back(scale(primitive(g), level));
  return periods;
}

PseudoMeasure pair_open_cone(const OpenCone& c, const TestFunction& f) {
  if (c.dim() != f.dim()) throw Error(ErrorKind::InvalidArgument, "cone and test function dimensions differ");
  auto periods = cone_periods(c, f.level());
  GroupAlgebraElement num(c.dim());
  for (const auto& x : enumerate_fundamental_domain(periods, c.dim())) {
    const auto v = f(x);
    if (v != 0) num.add_term(x, Rational(static_cast<long>(v)));
  }
  return PseudoMeasure(std::move(num), std::move(periods));
}

PseudoMeasure pair_cone_function(const ConeFunction& k, const TestFunction& f) {
  PseudoMeasure total(k.dim());
  for (const auto& t : k.terms()) total = pm_add(total, pm_scale(pair_open_cone(t.cone, f), Rational(t.coeff)));
  return total;
}

// ---------------------------------------------------------------------------
// q-expansions and specialization

GroupAlgebraElement truncated_q_expansion(const PseudoMeasure& a, std::int64_t bound, const LatticeVector& weights) {
  if (weights.size() != a.dim()) throw Error(ErrorKind::InvalidArgument, "weight vector has wrong dimension");
  GroupAlgebraElement acc(a.dim());
  for (const auto& [x, c] : a.numerator().terms())
    if (dot(weights, x) <= bound) acc.add_term(x, c);
  for (const auto& u : a.denominator()) {
    const auto wu = dot(weights, u);
    if (wu <= 0) throw Error(ErrorKind::NonPositiveDenominator, "denominator " + to_string(u) + " has weight <= 0");
    GroupAlgebraElement next(a.dim());
    for (const auto& [x, c] : acc.terms()) {
      LatticeVector y = x;
      for (auto w = dot(weights, x); w <= bound; w += wu) {
        next.add_term(y, c);
        y = add(y, u);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

LatticeVector positive_functional(const std::vector<LatticeVector>& gens, std::size_t dim) {
  if (gens.empty()) return LatticeVector(dim, 0);
  if (!linearly_independent(gens, dim)) throw Error(ErrorKind::DependentInput, "generators are dependent");
  // λ = G (G^T G)^-1 1 satisfies <λ, g_j> = 1 for every generator.
  std::vector<RatVector> cols;
  for (const auto& g : gens) cols.push_back(to_rational(g));
  const auto g = RatMatrix::from_columns(cols, dim);
  const auto gram_inv = inverse(g.transpose() * g);
  const auto lambda = g * (gram_inv * RatVector(gens.size(), Rational(1)));
  Integer l = 1;
  for (const auto& x : lambda) l = lcm(l, Integer(x.get_den()));
  LatticeVector out;
  for (const auto& x : lambda) out.push_back(to_int64(Integer(x * l)));
  return out;
}

LatticeVector Specialization::project(const LatticeVector& x) const {
  auto full = basis_inverse * x;
  return LatticeVector(full.begin() + 1, full.end());
}

LatticeVector Specialization::lift(const LatticeVector& c) const {
  LatticeVector full(1, 0);
  full.insert(full.end(), c.begin(), c.end());
  return basis * full;
}

Specialization specialization_along(const LatticeVector& direction) {
  if (is_zero(direction)) throw Error(ErrorKind::ZeroDirection, "specialization direction is zero");
  auto u = saturated_basis_extension({to_rational(direction)}, direction.size());
  auto inv = inverse_unimodular(u);
  return Specialization{std::move(u), std::move(inv)};
}

PseudoMeasure specialize(const PseudoMeasure& a, const Specialization& s) {
  const std::size_t dim = a.dim() - 1;
  GroupAlgebraElement num(dim);
  for (const auto& [x, c] : a.numerator().terms()) num.add_term(s.project(x), c);
  std::vector<LatticeVector> den;
  for (const auto& u : a.denominator()) {
    auto pu = s.project(u);
    if (is_zero(pu)) throw Error(ErrorKind::InvalidArgument, "denominator " + to_string(u) + " becomes a pole");
    den.push_back(std::move(pu));
  }
  return PseudoMeasure(std::move(num), std::move(den));
}

std::vector<SliceComparison> slice_identity_report(const TestFunction& f, const OpenCone& c, std::size_t ray,
                                                   std::int64_t bound) {
  if (ray >= c.rank()) throw Error(ErrorKind::InvalidArgument, "ray index out of range");
  const std::size_t n = c.dim();
  const auto periods = cone_periods(c, f.level());
  const auto direction = primitive(c.generators()[ray]);

  const auto reduced = pm_mul_one_minus(pair_open_cone(c, f), periods[ray]);
  const auto spec = specialization_along(direction);
  const auto specialized = specialize(reduced, spec);

  std::vector<LatticeVector> face;
  for (std::size_t j = 0; j < periods.size(); ++j)
    if (j != ray) face.push_back(spec.project(periods[j]));
  const auto weights = positive_functional(face, n - 1);
  const auto expansion = truncated_q_expansion(specialized, bound, weights);

  std::vector<RatVector> face_rat;
  for (const auto& g : face) face_rat.push_back(to_rational(g));
  const OpenCone face_cone(n - 1, face_rat);

  // Box containing every face-cone point of weight <= bound.
  LatticeVector radius(n - 1, 0);
  for (const auto& g : face) {
    const auto steps = bound / dot(weights, g) + 1;
    for (std::size_t k = 0; k + 1 < n; ++k) radius[k] = checked_add(radius[k], checked_mul(steps, std::abs(g[k])));
  }

  std::vector<SliceComparison> out;
  if (bound < 0) return out;
  LatticeVector cls(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) cls[k] = -radius[k];
  for (;;) {
    if (dot(weights, cls) <= bound && cone_contains(face_cone, to_rational(cls))) {
      const auto point = spec.lift(cls);
      // The slice t -> f(point + t M v) has period 1 and its Z-normalized Haar mass
      // counts M residues, i.e. M times the average over a primitive cycle.
      const Rational h = haar(slice(f, direction, point)) * static_cast<long>(f.level());
      out.push_back(SliceComparison{point, expansion.coefficient(cls), h});
    }
    std::size_t k = 0;
    while (k + 1 < n && cls[k] == radius[k]) {
      cls[k] = -radius[k];
      ++k;
    }
    if (k + 1 >= n) break;
    ++cls[k];
  }
  return out;
}

bool slice_identity_check(const TestFunction& f, const OpenCone& c, std::size_t ray, std::int64_t bound) {
  for (const auto& cmp : slice_identity_report(f, c, ray, bound))
    if (cmp.coefficient != cmp.slice_haar) return false;
  return true;
}

}  // namespace shintani
