#pragma once

// Columns, tabloids, shapes Y(lambda), readings and the order ⊴.

#include <optional>
#include <string>
#include <vector>

#include "qcb/crystal.hpp"
#include "qcb/rootdata.hpp"

namespace qcb {

// Letters top to bottom.
using Column = std::vector<Letter>;

bool is_valid_column(const Column& c, const AlgebraKind& kind);
std::string column_to_string(const Column& c);
Column parse_column(const std::string& text, const AlgebraKind& kind);
Word column_word(const Column& c, const AlgebraKind& kind);
Weight column_weight(const Column& c, int n);

// Lexicographic on B ranks; the order ⊴ restricted to columns of one height.
bool column_less(const Column& a, const Column& b, int n);

// Raises w(C) to highest weight and compares with 1..p (or 1..n-1,n̄ in type D).
bool is_admissible(const Column& c, const AlgebraKind& kind);

// The highest column of height p; minus selects 1..n-1,n̄ for D at p = n.
Column highest_column(const AlgebraKind& kind, int p, bool minus = false);

std::vector<Column> enumerate_columns(const AlgebraKind& kind, int p, bool admissible_only);

enum class SpinSlot { None, B, DPlus, DMinus };
enum class DSign { Plus, Zero, Minus };

struct Decomposition {
  SpinSlot spin = SpinSlot::None;
  DominantWeight rest;  // lambda' in Omega_+
};

Decomposition decompose_lambda(const DominantWeight& lambda, const AlgebraKind& kind);

struct Shape {
  AlgebraKind kind;
  DominantWeight lambda;
  SpinSlot spin = SpinSlot::None;
  std::vector<int> heights;  // C_1, ..., C_r, weakly decreasing
  DSign sign = DSign::Zero;

  int boxes() const;
  friend bool operator==(const Shape&, const Shape&) = default;
};

// Throws NotInOmegaPlus when lambda_prime is not in Omega_+.
Shape shape_of(const DominantWeight& lambda_prime, SpinSlot spin, const AlgebraKind& kind);
Shape shape_for(const DominantWeight& lambda, const AlgebraKind& kind);

struct Tabloid {
  std::optional<SpinColumn> spin;
  std::vector<Column> columns;  // C_1, ..., C_r left to right

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
  // Raw order for container keys; use TabloidLess for ⊴.
  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
};

// Strict ⊴ for tabloids of one shape: lexicographic on the reading, the spin
// column last.
struct TabloidLess {
  int n;
  bool operator()(const Tabloid& a, const Tabloid& b) const;
};

bool tabloid_leq(const Tabloid& a, const Tabloid& b, const Shape& shape);

// w(C_r) ... w(C_1), then the spin factor.
Word tabloid_reading(const Tabloid& t, const AlgebraKind& kind);
Tabloid word_to_tabloid(const Word& w, const Shape& shape);
Weight weight_of_tabloid(const Tabloid& t, const AlgebraKind& kind);
bool fits_shape(const Tabloid& t, const Shape& shape);

Tabloid highest_tableau(const Shape& shape);
bool is_orthogonal_tableau(const Tabloid& t, const Shape& shape);

// "2,0,-2/2,-3/2" with an optional "s:1,-2/" prefix.
std::string tabloid_to_string(const Tabloid& t);
Tabloid parse_tabloid(const std::string& text, const AlgebraKind& kind);

// All tabloids of the shape, optionally of one weight, ⊴-ascending.
std::vector<Tabloid> enumerate_tabloids(const Shape& shape, const std::optional<Weight>& mu = std::nullopt);

// Orthogonal tableaux of shape Y(lambda), ⊴-ascending. Without a weight the
// crystal component of w(T_lambda) is generated; with one, the tabloids of
// that weight are filtered by crystal membership.
std::vector<Tabloid> enumerate_tableaux(const Shape& shape, const std::optional<Weight>& mu = std::nullopt);
std::vector<Tabloid> enumerate_tableaux_bfs(const Shape& shape);

}  // namespace qcb
