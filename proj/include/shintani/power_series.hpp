#pragma once

// Truncated multivariate power series over an exact or p-adic coefficient ring.
// A ring policy supplies the scalar type and the embedding of Q.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shintani/error.hpp"
#include "shintani/padic.hpp"
#include "shintani/rational.hpp"

namespace shintani {

struct ExactRing {
  using Scalar = Rational;
  Scalar from(const Rational& q) const { return q; }
  bool is_zero(const Scalar& x) const { return x == 0; }
  bool is_unit(const Scalar& x) const { return x != 0; }
  void require_determined(const Scalar&) const {}
};

struct PadicRing {
  using Scalar = PadicScalar;
  std::int64_t p;
  std::int64_t precision;
  Scalar from(const Rational& q) const { return PadicScalar::from_rational(q, p, precision); }
  bool is_zero(const Scalar& x) const { return x.is_zero(); }
  bool is_unit(const Scalar& x) const { return x.is_unit(); }
  /// A vanishing verdict needs at least one known digit.
  void require_determined(const Scalar& x) const {
    if (x.is_zero() && x.absolute_precision() <= 0)
      throw Error(ErrorKind::PrecisionExhausted, "coefficient is undetermined at the working precision");
  }
};

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

template <class Ring>
class PowerSeries {
 public:
  using Scalar = typename Ring::Scalar;

  PowerSeries(Ring ring, std::size_t vars, int degree) : ring_(ring), vars_(vars), degree_(degree) {}

  const Ring& ring() const { return ring_; }
  std::size_t vars() const { return vars_; }
  int degree() const { return degree_; }
  /// Stored coefficients; absent exponents are exact zeros.
  const std::map<Exponent, Scalar>& coeffs() const { return coeffs_; }

  Scalar coefficient(const Exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? ring_.from(0) : it->second;
  }

  void add_to(const Exponent& e, const Scalar& c) {
    if (total_degree(e) > degree_) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) coeffs_.emplace(e, c);
    else it->second = it->second + c;
  }

  void set(const Exponent& e, const Scalar& c) {
    if (total_degree(e) <= degree_) coeffs_.insert_or_assign(e, c);
  }

  void erase(const Exponent& e) { coeffs_.erase(e); }

  PowerSeries truncated(int degree) const {
    PowerSeries out(ring_, vars_, degree);
    for (const auto& [e, c] : coeffs_)
      if (total_degree(e) <= degree) out.coeffs_.emplace(e, c);
    return out;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    for (const auto& [e, c] : o.coeffs_) add_to(e, c);
    degree_ = std::min(degree_, o.degree_);
    *this = truncated(degree_);
    return *this;
  }

  PowerSeries scaled(const Scalar& s) const {
    PowerSeries out(ring_, vars_, degree_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, c * s);
    return out;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(a.ring_, a.vars_, std::min(a.degree_, b.degree_));
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) {
        Exponent e(a.vars_);
        for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        out.add_to(e, ca * cb);
      }
    return out;
  }

  /// Substitutes T_var = 0.
  PowerSeries restrict_zero(std::size_t var) const {
    PowerSeries out(ring_, vars_, degree_);
    for (const auto& [e, c] : coeffs_)
      if (e[var] == 0) out.coeffs_.emplace(e, c);
    return out;
  }

  /// True when every stored coefficient vanishes at the working precision.
  bool vanishes() const {
    for (const auto& [e, c] : coeffs_) {
      ring_.require_determined(c);
      if (!ring_.is_zero(c)) return false;
    }
    return true;
  }

  /// Homogeneous component of the given degree.
  PowerSeries component(int d) const {
    PowerSeries out(ring_, vars_, degree_);
    for (const auto& [e, c] : coeffs_)
      if (total_degree(e) == d) out.coeffs_.emplace(e, c);
    return out;
  }

 private:
  Ring ring_;
  std::size_t vars_;
  int degree_;
  std::map<Exponent, Scalar> coeffs_;
};

/// (1 + T_var)^x = sum_j binom(x, j) T_var^j with x in Z_(p).
template <class Ring>
PowerSeries<Ring> binomial_series(const Ring& ring, std::size_t vars, std::size_t var, const Rational& x, int degree) {
  PowerSeries<Ring> s(ring, vars, degree);
  Rational b = 1;
  for (int j = 0; j <= degree; ++j) {
    if (b != 0) {
      Exponent e(vars, 0);
      e[var] = j;
      s.set(e, ring.from(b));
    }
    b *= (x - j);
    b /= (j + 1);
  }
  return s;
}

/// Divides a homogeneous polynomial h by the linear form sum_j l_j T_j in the
/// variable `pivot` (l_pivot a unit). Returns (quotient, remainder).
template <class Ring>
std::pair<PowerSeries<Ring>, PowerSeries<Ring>> divide_by_linear(const PowerSeries<Ring>& h,
                                                                  const std::vector<typename Ring::Scalar>& linear,
                                                                  std::size_t pivot) {
  const auto& ring = h.ring();
  PowerSeries<Ring> rem = h;
  PowerSeries<Ring> quot(ring, h.vars(), h.degree());
  int top = 0;
  for (const auto& [e, c] : h.coeffs()) top = std::max(top, e[pivot]);
  for (int level = top; level >= 1; --level) {
    std::vector<std::pair<Exponent, typename Ring::Scalar>> row;
    for (const auto& [e, c] : rem.coeffs())
      if (e[pivot] == level) row.emplace_back(e, c);
    for (const auto& [e, c] : row) {
      Exponent qe = e;
      --qe[pivot];
      const auto qc = c / linear[pivot];
      quot.add_to(qe, qc);
      rem.erase(e);
      for (std::size_t j = 0; j < h.vars(); ++j) {
        if (j == pivot || ring.is_zero(linear[j])) continue;
        Exponent te = qe;
        ++te[j];
        rem.add_to(te, -(qc * linear[j]));
      }
    }
  }
  return {std::move(quot), std::move(rem)};
}

/// Exact quotient f / s where s has zero constant term and a unit linear
/// coefficient at `pivot`; nullopt when s does not divide f. The quotient is
/// known one degree lower than f.
template <class Ring>
std::optional<PowerSeries<Ring>> divide_exact(const PowerSeries<Ring>& f, const PowerSeries<Ring>& s, std::size_t pivot) {
  const auto& ring = f.ring();
  const int top = std::min(f.degree(), s.degree());
  std::vector<typename Ring::Scalar> linear(f.vars(), ring.from(0));
  for (std::size_t j = 0; j < f.vars(); ++j) {
    Exponent e(f.vars(), 0);
    e[j] = 1;
    linear[j] = s.coefficient(e);
  }
  if (!ring.is_unit(linear[pivot])) throw Error(ErrorKind::NonUnitDenominator, "divisor has no unit linear term");

  const auto f0 = f.component(0);
  if (!f0.vanishes()) return std::nullopt;

  std::vector<PowerSeries<Ring>> s_parts, q_parts;
  for (int d = 0; d <= top; ++d) s_parts.push_back(s.component(d));
  PowerSeries<Ring> quotient(ring, f.vars(), top - 1);
  for (int d = 1; d <= top; ++d) {
    auto g = f.component(d);
    for (int e = 2; e <= d; ++e) {
      auto prod = q_parts[static_cast<std::size_t>(d - e)] * s_parts[static_cast<std::size_t>(e)];
      g += prod.scaled(ring.from(-1));
    }
    auto [q, r] = divide_by_linear(g, linear, pivot);
    if (!r.vanishes()) return std::nullopt;
    quotient += q;
    q_parts.push_back(std::move(q));
  }
  return quotient.truncated(top - 1);
}

}  // namespace shintani
