#include "shintani/padic_amice.hpp"

#include <map>
#include <utility>

namespace shintani {

namespace {

RatMatrix basis_inverse(const std::vector<LatticeVector>& basis, std::size_t dim) {
  if (basis.size() != dim) throw Error(ErrorKind::InvalidArgument, "basis must have n vectors");
  return inverse(to_rational(IntMatrix::from_columns(basis, dim)));
}

RatVector p_integral_coordinates(const RatMatrix& winv, const LatticeVector& v, std::int64_t p) {
  auto x = winv * to_rational(v);
  for (const auto& c : x)
    if (!is_p_integral(c, p))
      throw Error(ErrorKind::NotPIntegral, "coordinates of " + to_string(v) + " are not p-integral");
  return x;
}

// prod_j (1 + T_j)^{x_j}, with a cache of the one-variable factors.
template <class Ring>
class DiracTransform {
 public:
  DiracTransform(Ring ring, std::size_t vars, int degree) : ring_(ring), vars_(vars), degree_(degree) {}

  PowerSeries<Ring> operator()(const RatVector& x) {
    PowerSeries<Ring> out(ring_, vars_, degree_);
    out.set(Exponent(vars_, 0), ring_.from(1));
    for (std::size_t j = 0; j < vars_; ++j) {
      if (x[j] == 0) continue;
      auto key = std::make_pair(j, x[j]);
      auto it = cache_.find(key);
      if (it == cache_.end()) it = cache_.emplace(key, binomial_series(ring_, vars_, j, x[j], degree_)).first;
      out = out * it->second;
    }
    return out;
  }

 private:
  Ring ring_;
  std::size_t vars_;
  int degree_;
  std::map<std::pair<std::size_t, Rational>, PowerSeries<Ring>> cache_;
};

template <class Ring>
PowerSeries<Ring> numerator_series(DiracTransform<Ring>& transform, const Ring& ring, const GroupAlgebraElement& num,
                                   const RatMatrix& winv, std::int64_t p, int degree) {
  PowerSeries<Ring> f(ring, num.dim(), degree);
  for (const auto& [v, c] : num.terms()) f += transform(p_integral_coordinates(winv, v, p)).scaled(ring.from(c));
  return f;
}

// S_u = prod_j (1 + T_j)^{y_j} - 1, so that A(1 - δ_u) = -S_u.
template <class Ring>
PowerSeries<Ring> denominator_series(DiracTransform<Ring>& transform, const Ring& ring, const RatVector& y,
                                     int degree) {
  auto s = transform(y);
  s.add_to(Exponent(y.size(), 0), ring.from(-1));
  return s.truncated(degree);
}

std::size_t unit_coordinate(const RatVector& y, std::int64_t p) {
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y[j] != 0 && valuation(y[j], p) == 0) return j;
  throw Error(ErrorKind::NonUnitDenominator, "denominator vector has no p-adic unit coordinate");
}

template <class Ring>
PowerSeries<Ring> amice_generic(const Ring& ring, const PseudoMeasure& a, const std::vector<LatticeVector>& basis,
                                std::int64_t p, int degree) {
  const std::size_t n = a.dim();
  const auto winv = basis_inverse(basis, n);
  const int work = degree + static_cast<int>(a.denominator().size());
  DiracTransform<Ring> transform(ring, n, work);
  auto f = numerator_series(transform, ring, a.numerator(), winv, p, work);
  for (const auto& u : a.denominator()) {
    const auto y = p_integral_coordinates(winv, u, p);
    const auto pivot = unit_coordinate(y, p);
    const auto s = denominator_series(transform, ring, y, f.degree());
    auto q = divide_exact(f, s, pivot);
    if (!q) throw Error(ErrorKind::NotAMeasure, "Amice numerator is not divisible by 1 - δ_" + to_string(u));
    f = q->scaled(ring.from(-1));
  }
  return f.truncated(degree);
}

}  // namespace

AmiceSeries binom_pow(const Rational& x, const AmiceParams& params) {
  if (!is_p_integral(x, params.p)) throw Error(ErrorKind::NotPIntegral, "exponent " + to_string(x) + " is not in Z_p");
  return binomial_series(PadicRing{params.p, params.precision}, 1, 0, x, params.degree);
}

AmiceSeries amice_in_basis(const PseudoMeasure& a, const std::vector<LatticeVector>& basis, const AmiceParams& params) {
  return amice_generic(PadicRing{params.p, params.precision}, a, basis, params.p, params.degree);
}

ExactAmiceSeries amice_in_basis_exact(const PseudoMeasure& a, const std::vector<LatticeVector>& basis, std::int64_t p,
                                      int degree) {
  return amice_generic(ExactRing{}, a, basis, p, degree);
}

CosetDecomposition coset_reps(const std::vector<LatticeVector>& basis, std::int64_t p) {
  const std::size_t n = basis.size();
  const auto w = IntMatrix::from_columns(basis, n);
  const auto s = snf(w);
  const auto left_inv = inverse_unimodular(s.left);
  // Z^n / W Z^n ≅ ⊕ Z/d_i through z = left x; the p-part keeps Z/p^{v_p(d_i)}.
  std::vector<std::int64_t> orders;
  for (auto d : s.d) {
    std::int64_t q = 1;
    while (d % p == 0) {
      d /= p;
      q = checked_mul(q, p);
    }
    orders.push_back(q);
  }
  CosetDecomposition out{basis, {}};
  LatticeVector z(n, 0);
  for (;;) {
    out.representatives.push_back(left_inv * z);
    std::size_t k = 0;
    while (k < n && ++z[k] == orders[k]) z[k++] = 0;
    if (k == n) break;
  }
  return out;
}

bool is_measure_vh(const OpenCone& c, const TestFunction& f) {
  for (const auto& g : c.generators())
    if (!check_vh(f, g)) return false;
  return true;
}

std::vector<LatticeVector> cone_basis(const OpenCone& c) {
  std::vector<LatticeVector> basis;
  for (const auto& g : c.generators()) basis.push_back(primitive(g));
  const auto ext = saturated_basis_extension(c.generators(), c.dim());
  for (std::size_t j = c.rank(); j < c.dim(); ++j) basis.push_back(ext.column(j));
  return basis;
}

bool is_measure_amice(const PseudoMeasure& a, const std::vector<LatticeVector>& basis, const AmiceParams& params) {
  const std::size_t n = a.dim();
  const auto winv = basis_inverse(basis, n);
  const auto cosets = coset_reps(basis, params.p);

  // Split the numerator by coset of U_p and strip the Dirac prefactor δ_u.
  std::vector<GroupAlgebraElement> parts(cosets.representatives.size(), GroupAlgebraElement(n));
  for (const auto& [v, c] : a.numerator().terms()) {
    bool placed = false;
    for (std::size_t i = 0; i < cosets.representatives.size() && !placed; ++i) {
      const auto shifted = sub(v, cosets.representatives[i]);
      const auto x = winv * to_rational(shifted);
      bool integral = true;
      for (const auto& xi : x) integral = integral && is_p_integral(xi, params.p);
      if (integral) {
        parts[i].add_term(shifted, c);
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorKind::InvalidArgument, "lattice point outside every coset");
  }

  const PadicRing ring{params.p, params.precision};
  const int work = params.degree + static_cast<int>(a.denominator().size());
  DiracTransform<PadicRing> transform(ring, n, work);
  for (const auto& part : parts) {
    if (part.is_zero()) continue;
    auto f = numerator_series(transform, ring, part, winv, params.p, work);
    for (const auto& u : a.denominator()) {
      const auto y = p_integral_coordinates(winv, u, params.p);
      std::size_t nonzero = 0, axis = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (y[j] != 0) {
          ++nonzero;
          axis = j;
        }
      if (nonzero == 1 && valuation(y[axis], params.p) == 0) {
        // (1 + T_i)^α - 1 is T_i times a unit: divisibility is vanishing at T_i = 0.
        if (!f.restrict_zero(axis).vanishes()) return false;
      }
      const auto pivot = unit_coordinate(y, params.p);
      auto q = divide_exact(f, denominator_series(transform, ring, y, f.degree()), pivot);
      if (!q) return false;
      f = std::move(*q);
    }
  }
  return true;
}

std::vector<Integer> stirling2_row(int k) {
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int m = 1; m <= k; ++m) {
    for (int j = m; j >= 1; --j)
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)] * j + row[static_cast<std::size_t>(j - 1)];
    row[0] = 0;
  }
  return row;
}

}  // namespace shintani
