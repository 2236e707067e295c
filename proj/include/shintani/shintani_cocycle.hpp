#pragma once

// The deformed-cone cocycle Ψ, its pairing Φ with a test function, and the
// exact verification harnesses built on them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shintani/cone_algebra.hpp"
#include "shintani/padic_amice.hpp"
#include "shintani/solomon_hu.hpp"
#include "shintani/test_functions.hpp"

namespace shintani {

struct CocycleInput {
  std::vector<RatMatrix> matrices;  // α_1, ..., α_n
  DeformationVector q;
};

/// First columns α_i e_1 of the matrices.
std::vector<RatVector> first_columns(const std::vector<RatMatrix>& matrices);

/// sign(det(α_1 e_1 ... α_n e_1)) c_Q(α_1 e_1, ..., α_n e_1); zero for dependent columns.
ConeFunction psi_cdg(const CocycleInput& in);

/// Pairing of psi_cdg with f. Throws NonIntegralInput for non-integral matrices.
PseudoMeasure phi(const TestFunction& f, const CocycleInput& in);

std::vector<RatMatrix> to_rational(const std::vector<IntMatrix>& ms);

struct CocycleSum {
  std::vector<PseudoMeasure> terms;  // (-1)^i phi(omit i), after any corruption
  PseudoMeasure total;
  std::optional<Integer> constant;   // set iff total is an integer multiple of δ_0
};

/// Alternating sum over the n+1 matrices. `corrupt_term` flips the sign of the
/// first nonzero term at or after that index.
CocycleSum cocycle_sum(const TestFunction& f, const std::vector<IntMatrix>& matrices, const DeformationVector& q,
                       std::optional<std::size_t> corrupt_term = std::nullopt);
bool verify_cocycle(const TestFunction& f, const std::vector<IntMatrix>& matrices, const DeformationVector& q);

/// phi(f, gα, q) == g · phi(f, α, g^-1 q). Throws NotStabilizer.
bool verify_equivariance(const TestFunction& f, const IntMatrix& g, const std::vector<IntMatrix>& matrices,
                         const DeformationVector& q);

struct ConeVerdict {
  OpenCone cone;
  std::vector<bool> ray_vh;  // per generator
  bool vh = false;
  bool amice = false;
};

struct MeasureReport {
  std::vector<ConeVerdict> cones;
  bool all_vh = true;
  bool all_amice = true;
  bool support_ok = true;  // every generator is among the input first columns
};

/// Per-cone diagnostics for one tuple; no precondition on f.
MeasureReport measure_report(const TestFunction& f, const std::vector<IntMatrix>& matrices, const DeformationVector& q,
                             const AmiceParams& params);

// ---------------------------------------------------------------------------
// Seeded sampling

/// Random rational vector with nonzero coordinates of small height.
DeformationVector random_deformation(std::size_t n, std::mt19937_64& rng);

/// `count` elements of Gamma(M).
std::vector<IntMatrix> random_congruence_tuple(const LatticeContext& ctx, std::mt19937_64& rng, std::size_t count,
                                               std::size_t factors = 3);

/// Runs `body(q)` with fresh deformations until it does not throw
/// NonGenericDeformation (at most `attempts` times).
template <class Body>
auto with_generic_deformation(std::size_t n, std::mt19937_64& rng, Body&& body, int attempts = 64) {
  for (int k = 1;; ++k) {
    const auto q = random_deformation(n, rng);
    try {
      return body(q);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericDeformation || k >= attempts) throw;
    }
  }
}

/// VH(e_1) precondition, then `samples` seeded Gamma(M) tuples, each required
/// to pass the per-cone VH and Amice tests. Throws VHFailsForE1.
bool verify_measure_valued(const TestFunction& f, std::size_t samples, std::uint64_t seed, const AmiceParams& params);

}  // namespace shintani
