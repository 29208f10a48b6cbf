#include "qcb/modvec.hpp"

#include <algorithm>
#include <tuple>

#include "qcb/error.hpp"
#include "qcb/spinmod.hpp"
#include "qcb/wedge.hpp"

namespace qcb {

namespace {

LaurentPoly q(int e) { return LaurentPoly::q_power(e); }

// f^{(k)} of one factor: the alternatives for the factor and their coefficients.
struct FactorImage {
  std::vector<std::pair<Column, LaurentPoly>> columns;
  std::vector<std::pair<SpinColumn, LaurentPoly>> spins;
};

using Key = std::tuple<int, int, Tabloid, int, int>;

std::map<Key, ModuleVector>& basis_cache() {
  thread_local std::map<Key, ModuleVector> cache;
  return cache;
}

ModuleVector basis_f_divided(const Tabloid& t, const Shape& shape, int i, int m) {
  const AlgebraKind& kind = shape.kind;
  const Key key{static_cast<int>(kind.family), kind.rank, t, i, m};
  auto& cache = basis_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int d = qi_exponent(kind, i);
  const std::size_t r = t.columns.size();
  // Factor j < r is C_{r-j}; factor r is the spin column when present.
  const std::size_t count = r + (t.spin ? 1 : 0);
  std::vector<int> a(count);
  std::vector<std::vector<FactorImage>> images(count, std::vector<FactorImage>(m + 1));
  for (std::size_t j = 0; j < count; ++j) {
    if (j == r) {
      a[j] = spin_t_exponent(*t.spin, i);
      images[j][0].spins.push_back({*t.spin, 1});
      if (m >= 1)
        for (auto& [s, c] : spin_module_f(spin_basis_vector(*t.spin), i).terms) images[j][1].spins.push_back({s, c});
      continue;
    }
    const Column& c = t.columns[r - 1 - j];
    a[j] = wedge_t_exponent(c, i, kind);
    for (int k = 0; k <= m; ++k)
      for (auto& [col, coeff] : wedge_f_divided(c, i, k, kind).terms) images[j][k].columns.push_back({col, coeff});
  }

  ModuleVector out{shape, {}};
  Tabloid cur = t;
  auto place = [&](std::size_t j, const FactorImage& img, auto&& next) {
    for (auto& [s, c] : img.spins) {
      cur.spin = s;
      next(c);
    }
    for (auto& [col, c] : img.columns) {
      cur.columns[r - 1 - j] = col;
      next(c);
    }
  };
  // f^{(M)}(u ⊗ rest) = sum_k q_i^{(M-k)(a-k)} f^{(k)} u ⊗ f^{(M-k)} rest.
  auto descend = [&](auto&& self, std::size_t j, int left, const LaurentPoly& coeff) -> void {
    if (j + 1 == count) {
      place(j, images[j][left], [&](const LaurentPoly& c) { out.add(cur, coeff * c); });
      return;
    }
    for (int k = 0; k <= left; ++k) {
      const LaurentPoly step = coeff * q(d * (left - k) * (a[j] - k));
      place(j, images[j][k], [&](const LaurentPoly& c) { self(self, j + 1, left - k, step * c); });
    }
  };
  if (count == 0) {
    if (m == 0) out.add(t, 1);
  } else {
    descend(descend, 0, m, LaurentPoly(1));
  }
  cache.emplace(key, out);
  return out;
}

}  // namespace

void ModuleVector::add(const Tabloid& t, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(t, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  for (const auto& [t, c] : other.terms) add(t, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  for (const auto& [t, c] : other.terms) add(t, -c);
  return *this;
}

ModuleVector ModuleVector::scaled(const LaurentPoly& coeff) const {
  ModuleVector out{shape, {}};
  if (coeff.is_zero()) return out;
  for (const auto& [t, c] : terms) out.terms.emplace(t, c * coeff);
  return out;
}

LaurentPoly ModuleVector::coeff(const Tabloid& t) const {
  auto it = terms.find(t);
  return it == terms.end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<Tabloid, LaurentPoly>> ModuleVector::sorted() const {
  std::vector<std::pair<Tabloid, LaurentPoly>> out(terms.begin(), terms.end());
  const TabloidLess less{shape.kind.rank};
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
  return out;
}

ModuleVector tabloid_vector(const Tabloid& t, const Shape& shape) {
  if (!fits_shape(t, shape)) fail(ErrorKind::ShapeMismatch, "tabloid " + tabloid_to_string(t) + " does not fit the shape");
  ModuleVector v{shape, {}};
  v.add(t, 1);
  return v;
}

ModuleVector highest_vector(const DominantWeight& lambda, const AlgebraKind& kind) {
  const Shape shape = shape_for(lambda, kind);
  return tabloid_vector(highest_tableau(shape), shape);
}

ModuleVector module_f_divided(const ModuleVector& v, int i, int m) {
  require(i >= 1 && i <= v.shape.kind.rank, ErrorKind::InvalidArgument, "operator index out of range");
  require(m >= 0, ErrorKind::InvalidArgument, "divided power must be nonnegative");
  if (m == 0) return v;
  ModuleVector out{v.shape, {}};
  for (const auto& [t, c] : v.terms) out += basis_f_divided(t, v.shape, i, m).scaled(c);
  return out;
}

ModuleVector apply_monomial(const ModuleVector& v, const OperatorPath& path) {
  ModuleVector out = v;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out = module_f_divided(out, it->first, it->second);
  return out;
}

}  // namespace qcb
