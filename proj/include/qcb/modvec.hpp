#pragma once

// Vectors of W(lambda) on the tabloid basis and the divided-power actions.

#include <map>
#include <utility>
#include <vector>

#include "qcb/laurent.hpp"
#include "qcb/shapes.hpp"

namespace qcb {

struct ModuleVector {
  Shape shape;
  std::map<Tabloid, LaurentPoly> terms;  // raw key order; no zero coefficients

  bool is_zero() const { return terms.empty(); }
  void add(const Tabloid& t, const LaurentPoly& coeff);
  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  ModuleVector scaled(const LaurentPoly& coeff) const;
  LaurentPoly coeff(const Tabloid& t) const;
  // Terms ⊴-ascending.
  std::vector<std::pair<Tabloid, LaurentPoly>> sorted() const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.terms == b.terms; }
};

// Sequence of (i, r) standing for f_{i_1}^{(r_1)} ... f_{i_m}^{(r_m)}.
using OperatorPath = std::vector<std::pair<int, int>>;

ModuleVector tabloid_vector(const Tabloid& t, const Shape& shape);
ModuleVector highest_vector(const DominantWeight& lambda, const AlgebraKind& kind);

// f_i^{(m)} through the coproduct, factors in reading order: C_r, ..., C_1,
// then the spin column.
ModuleVector module_f_divided(const ModuleVector& v, int i, int m);

// The rightmost operator of the path acts first.
ModuleVector apply_monomial(const ModuleVector& v, const OperatorPath& path);

}  // namespace qcb
