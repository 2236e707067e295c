#pragma once

// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shintani {

using Integer = mpz_class;
using Rational = mpq_class;

using RatVector = std::vector<Rational>;
/// Integer lattice point of Z^n. Desk-scale entries; arithmetic is overflow-checked.
using LatticeVector = std::vector<std::int64_t>;

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

int sign(const Rational& q);
bool is_integer(const Rational& q);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const Integer& z);
/// Floor of a / b for b > 0, rounding toward negative infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// Least non-negative residue of a modulo m > 0.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

RatVector to_rational(const LatticeVector& v);
/// Throws NonIntegralInput if some entry is not an integer.
LatticeVector to_lattice(const RatVector& v);

/// Positive rescaling of a nonzero rational vector to a primitive integer vector.
LatticeVector primitive(const RatVector& v);
LatticeVector primitive(const LatticeVector& v);
/// gcd of the entries (0 for the zero vector).
std::int64_t content(const LatticeVector& v);

bool is_zero(const RatVector& v);
bool is_zero(const LatticeVector& v);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);
LatticeVector scale(const LatticeVector& a, std::int64_t s);
std::int64_t dot(const LatticeVector& a, const LatticeVector& b);

std::string to_string(const LatticeVector& v);
std::string to_string(const RatVector& v);

}  // namespace shintani
