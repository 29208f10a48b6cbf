#include "qcb/spinmod.hpp"

#include "qcb/error.hpp"

namespace qcb {

SpinClass spin_class(const SpinColumn& s) {
  if (s.kind.is_B()) return SpinClass::B;
  return s.is_plus() ? SpinClass::DPlus : SpinClass::DMinus;
}

void SpinVector::add(const SpinColumn& s, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  if (spin_class(s) != cls) fail(ErrorKind::InternalInvariant, "spin column " + s.to_string() + " has the wrong class");
  auto [it, fresh] = terms.try_emplace(s, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

SpinVector spin_basis_vector(const SpinColumn& s) {
  SpinVector v{s.kind, spin_class(s), {}};
  v.add(s, 1);
  return v;
}

// The module action has the same support as the crystal action, with
// coefficient 1.
SpinVector spin_module_f(const SpinVector& v, int i) {
  SpinVector out{v.kind, v.cls, {}};
  for (const auto& [s, coeff] : v.terms)
    if (auto t = spin_apply(s, i, Dir::F)) out.add(*t, coeff);
  return out;
}

int spin_t_exponent(const SpinColumn& s, int i) { return cartan_exponent(s.weight(), i, s.kind); }

}  // namespace qcb
