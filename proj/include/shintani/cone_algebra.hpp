#pragma once

// Rational open simplicial cones, cone functions with the GL_n(Q) action,
// wedges, and Q-deformed cones.

#include <cstddef>
#include <vector>

#include "shintani/exact_linalg.hpp"
#include "shintani/rational.hpp"

namespace shintani {

/// C°(v_1, ..., v_r): strictly positive combinations of independent generators.
/// r = 0 is the cone {0}.
class OpenCone {
 public:
  OpenCone(std::size_t dim, std::vector<RatVector> generators);
  static OpenCone origin(std::size_t dim) { return OpenCone(dim, {}); }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return generators_.size(); }
  const std::vector<RatVector>& generators() const { return generators_; }

  friend bool operator==(const OpenCone& a, const OpenCone& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }

 private:
  std::size_t dim_;
  std::vector<RatVector> generators_;
};

bool cone_contains(const OpenCone& c, const RatVector& w);

struct ConeTerm {
  Integer coeff;
  OpenCone cone;
};

/// Formal integer combination of open-cone indicators. No reduction modulo
/// wedges is attempted; identical cones are merged.
class ConeFunction {
 public:
  explicit ConeFunction(std::size_t dim) : dim_(dim) {}
  ConeFunction(std::size_t dim, std::vector<ConeTerm> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<ConeTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Integer& coeff, const OpenCone& cone);
  ConeFunction& operator+=(const ConeFunction& other);
  ConeFunction& operator*=(const Integer& s);

  friend ConeFunction operator+(ConeFunction a, const ConeFunction& b) { return a += b; }
  friend ConeFunction operator-(ConeFunction a, const ConeFunction& b) {
    ConeFunction nb = b;
    nb *= -1;
    return a += nb;
  }

 private:
  std::size_t dim_;
  std::vector<ConeTerm> terms_;
};

Integer eval_cone_function(const ConeFunction& k, const RatVector& w);

/// (g·k)(v) = sign(det g) k(g^-1 v), realized on generators. Throws SingularMatrix.
ConeFunction act_on_cone_function(const RatMatrix& g, const ConeFunction& k);

/// Rv_1 + R_+v_2 + ... + R_+v_n.
struct Wedge {
  std::vector<RatVector> generators;
};

/// [C°(v1..vn)] + [C°(-v1,v2..vn)] + [C°(v2..vn)]. Throws DependentInput.
ConeFunction wedge_decompose(const Wedge& w);
/// Direct indicator of the wedge, independent of the decomposition.
bool wedge_contains(const Wedge& w, const RatVector& x);

/// Rational stand-in for an irrational deformation vector. Genericity is
/// checked against each generator system it meets.
struct DeformationVector {
  RatVector q;
};

/// lim_{eps->0+} [C°(gens)](w + eps q). Returns 0 for dependent generators.
/// Throws NonGenericDeformation when w and q both sit on a common face hyperplane.
int deformed_cone_eval(const std::vector<RatVector>& gens, const DeformationVector& q, const RatVector& w);

/// Sum of the open faces C°(v_i : i in S) over subsets S whose complement only
/// contains indices j with b_j > 0, where b = coordinates of q.
/// Throws NonGenericDeformation if some b_j = 0, DependentInput for dependent gens.
ConeFunction deformed_cone_decompose(const std::vector<RatVector>& gens, const DeformationVector& q);

}  // namespace shintani
