#pragma once

// The spin representations on the basis of spin columns.

#include <map>

#include "qcb/crystal.hpp"
#include "qcb/laurent.hpp"

namespace qcb {

enum class SpinClass { B, DPlus, DMinus };

SpinClass spin_class(const SpinColumn& s);

struct SpinVector {
  AlgebraKind kind;
  SpinClass cls = SpinClass::B;
  std::map<SpinColumn, LaurentPoly> terms;

  void add(const SpinColumn& s, const LaurentPoly& coeff);
  friend bool operator==(const SpinVector& a, const SpinVector& b) { return a.terms == b.terms; }
};

SpinVector spin_basis_vector(const SpinColumn& s);
SpinVector spin_module_f(const SpinVector& v, int i);
int spin_t_exponent(const SpinColumn& s, int i);

}  // namespace qcb
