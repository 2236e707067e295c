#include "shintani/cone_algebra.hpp"

#include <utility>

namespace shintani {

OpenCone::OpenCone(std::size_t dim, std::vector<RatVector> generators)
    : dim_(dim), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != dim_) throw Error(ErrorKind::InvalidArgument, "cone generator has wrong dimension");
  if (!linearly_independent(generators_, dim_))
    throw Error(ErrorKind::DependentInput, "cone generators are linearly dependent");
}

bool cone_contains(const OpenCone& c, const RatVector& w) {
  if (w.size() != c.dim()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  if (c.rank() == 0) return is_zero(w);
  auto a = solve_in_span(RatMatrix::from_columns(c.generators(), c.dim()), w);
  if (!a) return false;
  for (const auto& x : *a)
    if (x <= 0) return false;
  return true;
}

ConeFunction::ConeFunction(std::size_t dim, std::vector<ConeTerm> terms) : dim_(dim) {
  for (auto& t : terms) add(t.coeff, t.cone);
}

void ConeFunction::add(const Integer& coeff, const OpenCone& cone) {
  if (cone.dim() != dim_) throw Error(ErrorKind::InvalidArgument, "cone dimension mismatch");
  if (coeff == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->cone == cone) {
      it->coeff += coeff;
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back(ConeTerm{coeff, cone});
}

ConeFunction& ConeFunction::operator+=(const ConeFunction& other) {
  for (const auto& t : other.terms_) add(t.coeff, t.cone);
  return *this;
}

ConeFunction& ConeFunction::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Integer eval_cone_function(const ConeFunction& k, const RatVector& w) {
  Integer total = 0;
  for (const auto& t : k.terms())
    if (cone_contains(t.cone, w)) total += t.coeff;
  return total;
}

ConeFunction act_on_cone_function(const RatMatrix& g, const ConeFunction& k) {
  const Rational d = det(g);
  if (d == 0) throw Error(ErrorKind::SingularMatrix, "acting matrix is singular");
  ConeFunction out(k.dim());
  for (const auto& t : k.terms()) {
    std::vector<RatVector> gens;
    for (const auto& v : t.cone.generators()) gens.push_back(g * v);
    out.add(sign(d) * t.coeff, OpenCone(k.dim(), std::move(gens)));
  }
  return out;
}

ConeFunction wedge_decompose(const Wedge& w) {
  if (w.generators.empty()) throw Error(ErrorKind::InvalidArgument, "wedge needs at least one generator");
  const std::size_t n = w.generators[0].size();
  if (w.generators.size() != n || !linearly_independent(w.generators, n))
    throw Error(ErrorKind::DependentInput, "wedge generators must be n independent vectors");
  auto flipped = w.generators;
  for (auto& x : flipped[0]) x = -x;
  std::vector<RatVector> rest(w.generators.begin() + 1, w.generators.end());
  ConeFunction k(n);
  k.add(1, OpenCone(n, w.generators));
  k.add(1, OpenCone(n, flipped));
  k.add(1, OpenCone(n, rest));
  return k;
}

bool wedge_contains(const Wedge& w, const RatVector& x) {
  const std::size_t n = x.size();
  auto a = solve(RatMatrix::from_columns(w.generators, n), x);
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] <= 0) return false;
  return true;
}

namespace {

RatVector coordinates(const std::vector<RatVector>& gens, const RatVector& x) {
  return solve(RatMatrix::from_columns(gens, x.size()), x);
}

}  // namespace

int deformed_cone_eval(const std::vector<RatVector>& gens, const DeformationVector& q, const RatVector& w) {
  const std::size_t n = w.size();
  if (gens.size() != n || q.q.size() != n) throw Error(ErrorKind::InvalidArgument, "deformed cone needs n generators");
  if (!linearly_independent(gens, n)) return 0;
  const auto a = coordinates(gens, w);
  const auto b = coordinates(gens, q.q);
  int result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > 0) continue;
    if (a[i] == 0 && b[i] == 0)
      throw Error(ErrorKind::NonGenericDeformation, "deformation vector lies on a face hyperplane through w");
    if (a[i] < 0 || b[i] < 0) result = 0;
  }
  return result;
}

ConeFunction deformed_cone_decompose(const std::vector<RatVector>& gens, const DeformationVector& q) {
  const std::size_t n = q.q.size();
  if (gens.size() != n) throw Error(ErrorKind::InvalidArgument, "deformed cone needs n generators");
  if (!linearly_independent(gens, n)) throw Error(ErrorKind::DependentInput, "generators are dependent");
  const auto b = coordinates(gens, q.q);
  std::size_t optional_mask = 0;  // faces whose coordinate may vanish
  for (std::size_t j = 0; j < n; ++j) {
    if (b[j] == 0) throw Error(ErrorKind::NonGenericDeformation, "deformation vector lies on a facet hyperplane");
    if (b[j] > 0) optional_mask |= std::size_t{1} << j;
  }
  ConeFunction k(n);
  // Enumerate dropped index sets D ⊆ optional_mask in increasing order; the face keeps the rest.
  std::size_t dropped = 0;
  do {
    std::vector<RatVector> face;
    for (std::size_t i = 0; i < n; ++i)
      if (!(dropped >> i & 1)) face.push_back(gens[i]);
    k.add(1, OpenCone(n, std::move(face)));
    dropped = (dropped - optional_mask) & optional_mask;
  } while (dropped != 0);
  return k;
}

}  // namespace shintani
