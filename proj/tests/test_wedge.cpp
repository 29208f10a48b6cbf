#include <map>

#include "doctest.h"
#include "qcb/error.hpp"
#include "qcb/wedge.hpp"

using namespace qcb;

namespace {

AlgebraKind B(int n) { return AlgebraKind::make(Family::B, n); }
AlgebraKind D(int n) { return AlgebraKind::make(Family::D, n); }
LaurentPoly q(int e) { return LaurentPoly::q_power(e); }
Column col(const std::string& s, const AlgebraKind& k) { return parse_column(s, k); }

using Sum = std::map<std::vector<Letter>, LaurentPoly>;

void accumulate(Sum& s, const std::vector<Letter>& m, const LaurentPoly& c) {
  auto& slot = s[m];
  slot += c;
  if (slot.is_zero()) s.erase(m);
}

// Oracle: rewriting at the rightmost offending pair, without memoization,
// with the two-letter relations spelled out on their own. Confluence onto the
// column basis means the order of rewriting must not matter.
Sum naive_straighten(const std::vector<Letter>& m, const AlgebraKind& kind, int depth = 0) {
  REQUIRE(depth < 400);
  const int n = kind.rank;
  const bool b = kind.is_B();
  auto ok = [&](Letter x, Letter y) {
    if (b) return b_rank(x, n) < b_rank(y, n) || (x.value == 0 && y.value == 0);
    int lx = d_level(x, n), ly = d_level(y, n);
    return lx < ly || (lx == n && ly == n && x.value != y.value);
  };
  int k = static_cast<int>(m.size()) - 2;
  while (k >= 0 && ok(m[k], m[k + 1])) --k;
  Sum out;
  if (k < 0) {
    out[m] = 1;
    return out;
  }
  std::vector<std::pair<LaurentPoly, std::vector<Letter>>> rhs;
  auto with = [&](int x, int y) {
    auto r = m;
    r[k] = Letter{x};
    r[k + 1] = Letter{y};
    return r;
  };
  const int x = m[k].value, y = m[k + 1].value;
  if (x == y) return out;
  if (x < 0 && y == -x) {
    const int i = y;
    const int top = b ? n : n - 1;
    LaurentPoly sign = 1;
    for (int j = i; j <= top; ++j) {
      LaurentPoly c;
      if (j == i) c = b ? -q(4) : -q(2);
      else c = b ? sign * (1 - q(4)) * q(2 * (j - i)) : sign * (1 - q(2)) * q(j - i);
      if (b || j < n) rhs.push_back({c, with(j, -j)});
      sign = -sign;
    }
    if (b) {
      rhs.push_back({((n - i) % 2 ? 1 : -1) * q(2 * (n - i) + 1), with(0, 0)});
    } else {
      LaurentPoly c = ((n - i) % 2 ? -1 : 1) * q(n - i);
      rhs.push_back({c, with(n, -n)});
      rhs.push_back({c, with(-n, n)});
    }
  } else {
    rhs.push_back({-q(b ? 2 : 1), with(y, x)});
  }
  for (auto& [c, r] : rhs)
    for (auto& [mono, v] : naive_straighten(r, kind, depth + 1)) accumulate(out, mono, c * v);
  return out;
}

// Oracle: Delta(f) = f ⊗ 1 + t ⊗ f on the tensor power, then the naive
// straightener. The vector representation is written out here directly.
Sum naive_lift(const Column& c, int i, const AlgebraKind& kind) {
  const int n = kind.rank;
  const int d = kind.is_B() && i < n ? 2 : 1;
  auto f_letter = [&](int x) -> std::pair<int, LaurentPoly> {
    if (i < n) {
      if (x == i) return {i + 1, 1};
      if (x == -(i + 1)) return {-i, 1};
      return {0, 0};
    }
    if (kind.is_B()) {
      if (x == n) return {0, 1};
      if (x == 0) return {-n, q(1) + q(-1)};
      return {0, 0};
    }
    if (x == n - 1) return {-n, 1};
    if (x == n) return {-(n - 1), 1};
    return {0, 0};
  };
  auto pairing = [&](int x) {
    // <wt x, alpha_i^vee>
    auto coord = [&](int j) { return x == j ? 1 : (x == -j ? -1 : 0); };
    if (i < n) return coord(i) - coord(i + 1);
    if (kind.is_B()) return 2 * coord(n);
    return coord(n - 1) + coord(n);
  };
  Sum out;
  int t = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    auto [y, coeff] = f_letter(c[k].value);
    if (!coeff.is_zero()) {
      auto m = c;
      m[k] = Letter{y};
      for (auto& [mono, v] : naive_straighten(m, kind)) accumulate(out, mono, q(d * t) * coeff * v);
    }
    t += pairing(c[k].value);
  }
  return out;
}

Sum as_sum(const WedgeVector& v) {
  Sum s;
  for (auto& [c, coeff] : v.terms) s[c] = coeff;
  return s;
}

std::vector<std::vector<Letter>> all_monomials(const AlgebraKind& kind, int p) {
  std::vector<std::vector<Letter>> out{{}};
  for (int k = 0; k < p; ++k) {
    std::vector<std::vector<Letter>> next;
    for (auto& m : out)
      for (Letter x : alphabet(kind)) {
        auto e = m;
        e.push_back(x);
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("straightening examples") {
  auto v = straighten({barred_letter(1), unbarred(1)}, B(2));
  WedgeVector expect{B(2), 2, {}};
  expect.add(col("1,-1", B(2)), -q(4));
  expect.add(col("2,-2", B(2)), -q(2) * (1 - q(4)));
  expect.add(col("0,0", B(2)), q(3));
  CHECK(v == expect);
  CHECK(straighten({unbarred(2), unbarred(2)}, B(2)).is_zero());
  CHECK(straighten({Letter{0}, Letter{0}}, B(2)) == basis_vector(col("0,0", B(2)), B(2)));
  CHECK(straighten({unbarred(2), unbarred(1)}, D(3)) == basis_vector(col("1,2", D(3)), D(3)).scaled(-q(1)));

  auto d2 = AlgebraKind::make(Family::D, 2, true);
  WedgeVector e2{d2, 2, {}};
  e2.add({unbarred(1), barred_letter(1)}, -q(2));
  e2.add({unbarred(2), barred_letter(2)}, -q(1));
  e2.add({barred_letter(2), unbarred(2)}, -q(1));
  CHECK(straighten({barred_letter(1), unbarred(1)}, d2) == e2);
}

TEST_CASE("straightening is independent of the rewriting order") {
  for (auto kind : {B(2), B(3), D(3), D(4)}) {
    for (int p = 1; p <= 3; ++p) {
      for (auto& m : all_monomials(kind, p)) {
        auto v = straighten(m, kind);
        CHECK(as_sum(v) == naive_straighten(m, kind));
        for (auto& [c, coeff] : v.terms) {
          CHECK(is_valid_column(c, kind));
          CHECK(coeff.is_polynomial());
        }
      }
    }
  }
}

TEST_CASE("closed-form f examples") {
  WedgeVector e{B(2), 2, {}};
  e.add(col("2,-2", B(2)), 1);
  e.add(col("1,-1", B(2)), q(2));
  CHECK(wedge_f(col("1,-2", B(2)), 1, B(2)) == e);
  CHECK(wedge_f(col("0,0", B(2)), 2, B(2)) == basis_vector(col("0,-2", B(2)), B(2)).scaled(q(-1) - q(3)));
  WedgeVector d{D(3), 2, {}};
  d.add(col("-3,3", D(3)), 1);
  d.add(col("2,-2", D(3)), q(1));
  CHECK(wedge_f(col("2,3", D(3)), 3, D(3)) == d);
  CHECK(wedge_f_divided(col("2", B(2)), 2, 2, B(2)) == basis_vector(col("-2", B(2)), B(2)));
  CHECK(wedge_f_divided(col("1,2", B(2)), 1, 0, B(2)) == basis_vector(col("1,2", B(2)), B(2)));
  CHECK(wedge_f_divided(col("1,2", B(2)), 1, 2, B(2)).is_zero());
  CHECK(wedge_t_exponent(col("1,2", B(2)), 1, B(2)) == 0);
  CHECK(wedge_t_exponent(col("1,2", B(2)), 2, B(2)) == 2);
  CHECK(wedge_t_exponent(col("0,0,0", B(3)), 3, B(3)) == 0);
}

TEST_CASE("closed-form f agrees with the coproduct on every small column") {
  for (auto kind : {B(2), B(3), D(3), AlgebraKind::make(Family::D, 4)}) {
    const int top = kind.rank == 4 ? 4 : 3;
    for (int p = 1; p <= top; ++p) {
      for (auto& c : enumerate_columns(kind, p, false)) {
        for (int i = 1; i <= kind.rank; ++i) {
          auto f = wedge_f(c, i, kind);
          INFO(kind.name(), " ", column_to_string(c), " i=", i);
          CHECK(as_sum(f) == naive_lift(c, i, kind));
          CHECK(f == tensor_lift_f(c, i, kind));
        }
      }
    }
  }
}

TEST_CASE("f properties") {
  for (auto kind : {B(2), B(3), D(3), D(4)}) {
    for (int p = 1; p <= kind.rank; ++p) {
      for (auto& c : enumerate_columns(kind, p, false)) {
        for (int i = 1; i <= kind.rank; ++i) {
          auto f = wedge_f(c, i, kind);
          const Weight target = column_weight(c, kind.rank) - simple_root(kind, i);
          for (auto& [x, coeff] : f.terms) CHECK(column_weight(x, kind.rank) == target);
          auto ep = word_eps_phi(column_word(c, kind), i);
          if (ep.eps == 0 && ep.phi == 1) {
            auto target_col = word_apply(column_word(c, kind), i, Dir::F)->letters;
            for (auto& [x, coeff] : f.terms) CHECK(coeff.eval_at_zero() == (x == target_col ? 1 : 0));
          }
          for (int k = 2; k <= 4; ++k) CHECK_NOTHROW(wedge_f_divided(c, i, k, kind));
        }
      }
    }
  }
}
