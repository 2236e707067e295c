#pragma once

#include <cstdint>
#include <string>

#include "shintani/rational.hpp"

namespace shintani {

/// p^valuation * unit with `relative_precision` known digits of the unit.
/// A scalar with no known digits is zero modulo p^absolute_precision.
class PadicScalar {
 public:
  static PadicScalar zero(std::int64_t p, std::int64_t absolute_precision);
  static PadicScalar from_rational(const Rational& q, std::int64_t p, std::int64_t relative_precision);

  std::int64_t prime() const { return p_; }
  std::int64_t valuation() const { return val_; }
  std::int64_t relative_precision() const { return rel_; }
  std::int64_t absolute_precision() const { return val_ + rel_; }
  const Integer& unit() const { return unit_; }

  /// No nonzero digit is known.
  bool is_zero() const { return rel_ == 0; }
  bool is_unit() const { return rel_ > 0 && val_ == 0; }
  /// Agreement with an exact rational up to this scalar's absolute precision.
  bool matches(const Rational& q) const;
  Rational lift() const;
  /// "p^v*u", or "O(p^N)" when no digit is known.
  std::string to_string() const;

  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  /// Throws PrecisionExhausted when the divisor has no known digits.
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
  PadicScalar operator-() const;
  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }

 private:
  PadicScalar(std::int64_t p, std::int64_t val, std::int64_t rel, Integer unit)
      : p_(p), val_(val), rel_(rel), unit_(std::move(unit)) {}
  // p^base * value, where value is known modulo p^(abs - base).
  static PadicScalar normalize(std::int64_t p, std::int64_t base, Integer value, std::int64_t abs);

  std::int64_t p_ = 2;
  std::int64_t val_ = 0;
  std::int64_t rel_ = 0;
  Integer unit_ = 0;
};

/// p-adic valuation of a nonzero integer.
std::int64_t valuation(const Integer& z, std::int64_t p);
std::int64_t valuation(const Rational& q, std::int64_t p);
bool is_p_integral(const Rational& q, std::int64_t p);

}  // namespace shintani
