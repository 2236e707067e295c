#include "shintani/padic.hpp"

#include <algorithm>

#include "shintani/error.hpp"

namespace shintani {

namespace {

Integer ipow(std::int64_t p, std::int64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::max<std::int64_t>(e, 0)));
  return r;
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorKind::InvalidArgument, "p-adic unit is not invertible");
  return r;
}

}  // namespace

std::int64_t valuation(const Integer& z, std::int64_t p) {
  if (z == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  const Integer pz = static_cast<long>(p);
  Integer w = z;
  std::int64_t v = 0;
  while (mpz_divisible_p(w.get_mpz_t(), pz.get_mpz_t())) {
    w /= pz;
    ++v;
  }
  return v;
}

std::int64_t valuation(const Rational& q, std::int64_t p) {
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

bool is_p_integral(const Rational& q, std::int64_t p) {
  const Integer pz = static_cast<long>(p);
  return !mpz_divisible_p(q.get_den_mpz_t(), pz.get_mpz_t());
}

PadicScalar PadicScalar::zero(std::int64_t p, std::int64_t absolute_precision) {
  return PadicScalar(p, absolute_precision, 0, 0);
}

PadicScalar PadicScalar::from_rational(const Rational& q, std::int64_t p, std::int64_t relative_precision) {
  if (q == 0) return zero(p, relative_precision);
  const std::int64_t vn = shintani::valuation(Integer(q.get_num()), p);
  const std::int64_t vd = shintani::valuation(Integer(q.get_den()), p);
  const Integer num = Integer(q.get_num()) / ipow(p, vn);
  const Integer den = Integer(q.get_den()) / ipow(p, vd);
  const Integer mod = ipow(p, relative_precision);
  return PadicScalar(p, vn - vd, relative_precision, mod_positive(num * mod_inverse(den, mod), mod));
}

PadicScalar PadicScalar::normalize(std::int64_t p, std::int64_t base, Integer value, std::int64_t abs) {
  if (abs - base <= 0) return zero(p, abs);
  value = mod_positive(value, ipow(p, abs - base));
  if (value == 0) return zero(p, abs);
  const std::int64_t v = shintani::valuation(value, p);
  const std::int64_t rel = abs - base - v;
  return PadicScalar(p, base + v, rel, mod_positive(value / ipow(p, v), ipow(p, rel)));
}

bool PadicScalar::matches(const Rational& q) const {
  if (q == 0) return is_zero();
  return (*this - from_rational(q, p_, std::max<std::int64_t>(absolute_precision() - shintani::valuation(q, p_), 1))).is_zero();
}

Rational PadicScalar::lift() const {
  if (is_zero()) return 0;
  Rational r(unit_);
  if (val_ >= 0) r *= Rational(ipow(p_, val_));
  else r /= Rational(ipow(p_, -val_));
  return r;
}

std::string PadicScalar::to_string() const {
  if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
  return std::to_string(p_) + "^" + std::to_string(val_) + "*" + unit_.get_str();
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::InvalidArgument, "p-adic scalars over different primes");
  const std::int64_t abs = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero() && b.is_zero()) return PadicScalar::zero(a.p_, abs);
  if (a.is_zero()) return PadicScalar::normalize(b.p_, b.val_, b.unit_, abs);
  if (b.is_zero()) return PadicScalar::normalize(a.p_, a.val_, a.unit_, abs);
  const std::int64_t base = std::min(a.val_, b.val_);
  const Integer value = a.unit_ * ipow(a.p_, a.val_ - base) + b.unit_ * ipow(b.p_, b.val_ - base);
  return PadicScalar::normalize(a.p_, base, value, abs);
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  return PadicScalar(p_, val_, rel_, mod_positive(-unit_, ipow(p_, rel_)));
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::InvalidArgument, "p-adic scalars over different primes");
  if (a.is_zero() && b.is_zero()) return PadicScalar::zero(a.p_, a.val_ + b.val_);
  if (a.is_zero()) return PadicScalar::zero(a.p_, a.val_ + b.val_);
  if (b.is_zero()) return PadicScalar::zero(a.p_, a.val_ + b.val_);
  const std::int64_t rel = std::min(a.rel_, b.rel_);
  return PadicScalar(a.p_, a.val_ + b.val_, rel, mod_positive(a.unit_ * b.unit_, ipow(a.p_, rel)));
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::InvalidArgument, "p-adic scalars over different primes");
  if (b.is_zero()) throw Error(ErrorKind::PrecisionExhausted, "division by a p-adic scalar with no known digits");
  if (a.is_zero()) return PadicScalar::zero(a.p_, a.val_ - b.val_);
  const std::int64_t rel = std::min(a.rel_, b.rel_);
  const Integer mod = ipow(a.p_, rel);
  return PadicScalar(a.p_, a.val_ - b.val_, rel, mod_positive(a.unit_ * mod_inverse(b.unit_, mod), mod));
}

}  // namespace shintani
