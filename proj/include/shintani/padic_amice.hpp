#pragma once

// Amice transforms of pseudo-measures on Z_p^n, the divisibility criterion
// for measures, coset decompositions and moments.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shintani/power_series.hpp"
#include "shintani/solomon_hu.hpp"

namespace shintani {

using AmiceSeries = PowerSeries<PadicRing>;
using ExactAmiceSeries = PowerSeries<ExactRing>;

struct AmiceParams {
  std::int64_t p;
  std::int64_t precision = 20;
  int degree = 12;
};

/// (1 + T)^x truncated at degree D. Throws NotPIntegral when p divides den(x).
AmiceSeries binom_pow(const Rational& x, const AmiceParams& params);

/// Amice transform of `a` in the coordinates of `basis` (columns of a matrix
/// with nonzero determinant). Every denominator must become divisible, which
/// is the case exactly when `a` is a measure; otherwise throws NotAMeasure.
/// Throws NotPIntegral / NonUnitDenominator for inadmissible coordinates.
AmiceSeries amice_in_basis(const PseudoMeasure& a, const std::vector<LatticeVector>& basis, const AmiceParams& params);
/// Same transform with exact rational coefficients.
ExactAmiceSeries amice_in_basis_exact(const PseudoMeasure& a, const std::vector<LatticeVector>& basis,
                                      std::int64_t p, int degree);

/// [L_p] = sum_i [u_i + U_p] for U = span_Z(basis).
struct CosetDecomposition {
  std::vector<LatticeVector> basis;
  std::vector<LatticeVector> representatives;
};

/// Representatives of Z_p^n / U_p via Smith normal form; their number is the
/// p-part of |det basis|. Throws SingularMatrix.
CosetDecomposition coset_reps(const std::vector<LatticeVector>& basis, std::int64_t p);

/// Sufficient (and in the single-cone setting exact) condition: VH holds for
/// every extremal ray of the cone.
bool is_measure_vh(const OpenCone& c, const TestFunction& f);

/// Divisibility test on the Amice side: per coset of U_p, after splitting off
/// the Dirac prefactor, the numerator series must vanish at T_i = 0 for every
/// denominator aligned with basis direction i (general denominators are
/// divided out exactly). Throws PrecisionExhausted when undetermined.
bool is_measure_amice(const PseudoMeasure& a, const std::vector<LatticeVector>& basis, const AmiceParams& params);

/// Basis used for a single cone: primitive generators completed by a
/// complement of their saturated span.
std::vector<LatticeVector> cone_basis(const OpenCone& c);

/// Stirling numbers of the second kind S(k, j), 0 <= j <= k.
std::vector<Integer> stirling2_row(int k);

/// Power moment ∫ x^kk dμ from binomial moments. Throws TruncationTooSmall.
template <class Ring>
typename Ring::Scalar moment(const PowerSeries<Ring>& s, const std::vector<int>& kk) {
  if (kk.size() != s.vars()) throw Error(ErrorKind::InvalidArgument, "moment index has wrong length");
  if (total_degree(kk) > s.degree()) throw Error(ErrorKind::TruncationTooSmall, "moment order exceeds truncation degree");
  const auto& ring = s.ring();
  std::vector<std::vector<Rational>> weights;  // S(k_i, j) j!
  for (int k : kk) {
    const auto row = stirling2_row(k);
    std::vector<Rational> w;
    Integer fact = 1;
    for (int j = 0; j <= k; ++j) {
      if (j > 0) fact *= j;
      w.emplace_back(row[static_cast<std::size_t>(j)] * fact);
    }
    weights.push_back(std::move(w));
  }
  auto total = ring.from(0);
  for (const auto& [e, c] : s.coeffs()) {
    Rational w = 1;
    for (std::size_t i = 0; i < kk.size() && w != 0; ++i)
      w = (e[i] <= kk[i]) ? w * weights[i][static_cast<std::size_t>(e[i])] : Rational(0);
    if (w != 0) total = total + c * ring.from(w);
  }
  return total;
}

}  // namespace shintani
