#pragma once

// Pseudo-measures as fractions in the group algebra Q[Z^n], and the pairing
// between cone functions and level-M test functions.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "shintani/cone_algebra.hpp"
#include "shintani/exact_linalg.hpp"
#include "shintani/rational.hpp"
#include "shintani/test_functions.hpp"

namespace shintani {

/// Finite sum of c_v δ_v, v in Z^n. δ_u δ_v = δ_{u+v}; δ_0 is the identity.
class GroupAlgebraElement {
 public:
  using TermMap = std::map<LatticeVector, Rational>;

  explicit GroupAlgebraElement(std::size_t dim) : dim_(dim) {}
  static GroupAlgebraElement delta(const LatticeVector& v, const Rational& c = 1);
  static GroupAlgebraElement constant(std::size_t dim, const Rational& c);
  /// 1 - δ_u
  static GroupAlgebraElement one_minus_delta(const LatticeVector& u);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const LatticeVector& v) const;

  void add_term(const LatticeVector& v, const Rational& c);
  GroupAlgebraElement shifted(const LatticeVector& v) const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Rational& s);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// numerator * prod_{u in denominator} (1 - δ_u)^-1, kept unreduced.
class PseudoMeasure {
 public:
  explicit PseudoMeasure(std::size_t dim) : numerator_(dim) {}
  PseudoMeasure(GroupAlgebraElement numerator, std::vector<LatticeVector> denominator);

  std::size_t dim() const { return numerator_.dim(); }
  const GroupAlgebraElement& numerator() const { return numerator_; }
  const std::vector<LatticeVector>& denominator() const { return denominator_; }

 private:
  GroupAlgebraElement numerator_;
  std::vector<LatticeVector> denominator_;
};

GroupAlgebraElement expand_denominator(std::size_t dim, const std::vector<LatticeVector>& den);

PseudoMeasure pm_add(const PseudoMeasure& a, const PseudoMeasure& b);
PseudoMeasure pm_neg(const PseudoMeasure& a);
PseudoMeasure pm_sub(const PseudoMeasure& a, const PseudoMeasure& b);
PseudoMeasure pm_mul(const PseudoMeasure& a, const PseudoMeasure& b);
PseudoMeasure pm_scale(const PseudoMeasure& a, const Rational& s);
/// Multiplies by (1 - δ_u), cancelling one matching denominator factor when present.
PseudoMeasure pm_mul_one_minus(const PseudoMeasure& a, const LatticeVector& u);
/// Equality in the localization, by cross-multiplication.
bool pm_eq(const PseudoMeasure& a, const PseudoMeasure& b);
/// m when a = m δ_0 with m an integer; nullopt otherwise.
std::optional<Integer> pm_is_integer_constant(const PseudoMeasure& a);
/// δ_v -> δ_{g v}. Throws NotUnimodular unless det g = 1.
PseudoMeasure act_pm(const IntMatrix& g, const PseudoMeasure& a);

/// Integer points sum x_i w_i with x_i in (0, 1]. Sorted. Throws DependentInput.
std::vector<LatticeVector> enumerate_fundamental_domain(const std::vector<LatticeVector>& ws, std::size_t dim);

/// Periods used for a cone: M times the primitive generators.
std::vector<LatticeVector> cone_periods(const OpenCone& c, std::int64_t level);

PseudoMeasure pair_open_cone(const OpenCone& c, const TestFunction& f);
PseudoMeasure pair_cone_function(const ConeFunction& k, const TestFunction& f);

/// Geometric-series expansion keeping terms v with <weights, v> <= bound.
/// Throws NonPositiveDenominator when a denominator vector has weight <= 0.
GroupAlgebraElement truncated_q_expansion(const PseudoMeasure& a, std::int64_t bound, const LatticeVector& weights);

/// Integral functional strictly positive on every given (independent) vector.
LatticeVector positive_functional(const std::vector<LatticeVector>& gens, std::size_t dim);

/// Specializes q^direction = 1: exponents are pushed to Z^n / (Z^n ∩ Q direction)
/// ≅ Z^{n-1} through a unimodular complement basis.
struct Specialization {
  IntMatrix basis;           // unimodular; first column is the primitive direction
  IntMatrix basis_inverse;
  LatticeVector project(const LatticeVector& x) const;
  /// An integral representative of a class in the quotient.
  LatticeVector lift(const LatticeVector& c) const;
};
Specialization specialization_along(const LatticeVector& direction);
/// Throws InvalidArgument if a denominator becomes a pole (parallel to the direction).
PseudoMeasure specialize(const PseudoMeasure& a, const Specialization& s);

struct SliceComparison {
  LatticeVector point;      // integral representative of the compared class
  Rational coefficient;     // coefficient of (1 - q^{P_i}) G at that class after q^{P_i} = 1
  Rational slice_haar;      // Z-normalized Haar mass of t -> f(point + t P_i)
};

/// Compares the specialized expansion of (1 - δ_{P_i}) <C, f> against the Haar
/// masses of the slices along the period P_i = M v_i, over every lattice class of
/// the opposite face cone with weight <= bound.
std::vector<SliceComparison> slice_identity_report(const TestFunction& f, const OpenCone& c, std::size_t ray,
                                                   std::int64_t bound);
bool slice_identity_check(const TestFunction& f, const OpenCone& c, std::size_t ray, std::int64_t bound);

}  // namespace shintani
