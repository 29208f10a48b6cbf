#pragma once

// The q-wedge modules W(omega_p): straightening onto the column basis, the
// closed-form f_i action and its divided powers.

#include <map>
#include <vector>

#include "qcb/laurent.hpp"
#include "qcb/shapes.hpp"

namespace qcb {

// Support keyed by columns of one height, in raw order; no zero coefficients.
struct WedgeVector {
  AlgebraKind kind;
  int p = 0;
  std::map<Column, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Column& c, const LaurentPoly& coeff);
  WedgeVector& operator+=(const WedgeVector& other);
  WedgeVector scaled(const LaurentPoly& coeff) const;
  LaurentPoly coeff(const Column& c) const;
  // Terms ⊴-ascending.
  std::vector<std::pair<Column, LaurentPoly>> sorted() const;

  friend bool operator==(const WedgeVector& a, const WedgeVector& b) { return a.p == b.p && a.terms == b.terms; }
};

WedgeVector basis_vector(const Column& c, const AlgebraKind& kind);

// Maximal recursion depth of the rewriting; 10 p^2 unless QCB_STEP_LIMIT is set.
int straighten_fuel(int p);

// v_{x_1} ∧ ... ∧ v_{x_p} on the column basis.
WedgeVector straighten(const std::vector<Letter>& letters, const AlgebraKind& kind);

// Swaps n and n̄.
Column phi_involution(const Column& c, int n);

WedgeVector wedge_f(const Column& c, int i, const AlgebraKind& kind);
WedgeVector wedge_f(const WedgeVector& v, int i);
int wedge_t_exponent(const Column& c, int i, const AlgebraKind& kind);
// f_i^{(k)} = f_i^k / [k]_i!.
WedgeVector wedge_f_divided(const WedgeVector& v, int i, int k);
WedgeVector wedge_f_divided(const Column& c, int i, int k, const AlgebraKind& kind);

// f_i through the coproduct on the tensor power of the vector
// representation, followed by straightening.
WedgeVector tensor_lift_f(const Column& c, int i, const AlgebraKind& kind);

}  // namespace qcb
