#pragma once

// Marsh paths, the monomial vectors A(T) and the canonical basis G(T).

#include <optional>
#include <vector>

#include "qcb/modvec.hpp"
#include "qcb/wedge.hpp"

namespace qcb {

// Steps (i_k, p_k) with G(C) = f_{i_1}^{(p_1)} ... f_{i_r}^{(p_r)} v_{omega_p};
// i_1 is the first raising step taken from C.
OperatorPath marsh_path(const Column& c, const AlgebraKind& kind);

// The operator index chosen for the leftmost movable letter of the column.
int marsh_index(const Column& c, const AlgebraKind& kind);

WedgeVector global_column(const Column& c, const AlgebraKind& kind);

// A(T) = f_{i_1}^{(r_1)} ... f_{i_m}^{(r_m)} v_{T_m}. T_m is T_lambda, or with
// direct set a spin tableau whose other columns are highest (then v_{T_m} is
// already a global basis vector).
struct APath {
  OperatorPath steps;
  std::vector<Tabloid> tableaux;  // T, T_1, ..., T_m
  bool direct = false;
};

APath a_path(const Tabloid& t, const Shape& shape);
ModuleVector a_vector(const Tabloid& t, const Shape& shape);

struct GammaStep {
  std::size_t col;  // index into cols
  std::size_t j;    // index of the subtracted G(T^(j))
  LaurentPoly gamma;
};

struct CanonicalMatrix {
  Shape shape;
  std::optional<Weight> weight;
  std::vector<Tabloid> rows;  // ⊴-ascending tabloids
  std::vector<Tabloid> cols;  // ⊴-ascending tableaux
  std::vector<ModuleVector> a;  // A(T) per column
  std::vector<ModuleVector> g;  // G(T) per column
  std::vector<GammaStep> gamma_log;

  LaurentPoly entry(std::size_t row, std::size_t col) const { return g[col].coeff(rows[row]); }
};

// Restricted to the weight mu when given; otherwise every weight of V(lambda)
// is computed and the blocks are merged in ⊴ order. jobs > 1 spreads the
// weight spaces over threads.
CanonicalMatrix canonical_matrix(const DominantWeight& lambda, const AlgebraKind& kind,
                                 const std::optional<Weight>& mu = std::nullopt, int jobs = 1);

}  // namespace qcb
