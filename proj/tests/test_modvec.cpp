#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "qcb/error.hpp"
#include "qcb/modvec.hpp"
#include "qcb/spinmod.hpp"
#include "qcb/wedge.hpp"

using namespace qcb;

namespace {

AlgebraKind B(int n) { return AlgebraKind::make(Family::B, n); }
AlgebraKind D(int n) { return AlgebraKind::make(Family::D, n); }
LaurentPoly q(int e) { return LaurentPoly::q_power(e); }

Shape shape(const char* lambda, const AlgebraKind& kind) { return shape_for(parse_dominant(lambda, kind.rank), kind); }
Tabloid tab(const std::string& s, const AlgebraKind& kind) { return parse_tabloid(s, kind); }

// Oracle: one f_i through f(u ⊗ v) = f u ⊗ v + q_i^{<wt u, alpha_i>} u ⊗ f v,
// factors C_r, ..., C_1 then the spin column.
ModuleVector single_f(const ModuleVector& v, int i) {
  const AlgebraKind& kind = v.shape.kind;
  const int d = qi_exponent(kind, i);
  ModuleVector out{v.shape, {}};
  for (const auto& [t, c] : v.terms) {
    Weight left(kind.rank);
    for (std::size_t j = t.columns.size(); j-- > 0;) {
      const LaurentPoly tq = q(d * cartan_exponent(left, i, kind));
      for (const auto& [col, cc] : wedge_f(t.columns[j], i, kind).terms) {
        Tabloid u = t;
        u.columns[j] = col;
        out.add(u, c * cc * tq);
      }
      left += column_weight(t.columns[j], kind.rank);
    }
    if (t.spin) {
      if (auto s = spin_apply(*t.spin, i, Dir::F)) {
        Tabloid u = t;
        u.spin = s;
        out.add(u, c * q(d * cartan_exponent(left, i, kind)));
      }
    }
  }
  return out;
}

ModuleVector naive_divided(ModuleVector v, int i, int m) {
  for (int k = 0; k < m; ++k) v = single_f(v, i);
  const LaurentPoly fac = quantum_factorial(m, qi_exponent(v.shape.kind, i));
  for (auto& [t, c] : v.terms) c = divide_exact(c, fac);
  return v;
}

std::vector<Tabloid> sample(const std::vector<Tabloid>& all, std::size_t count, unsigned seed) {
  if (all.size() <= count) return all;
  std::mt19937 rng(seed);
  std::vector<Tabloid> out;
  std::sample(all.begin(), all.end(), std::back_inserter(out), count, rng);
  return out;
}

bool homogeneous(const ModuleVector& v, const Weight& w) {
  for (const auto& [t, c] : v.terms)
    if (!(weight_of_tabloid(t, v.shape.kind) == w)) return false;
  return true;
}

}  // namespace

TEST_CASE("divided powers on two vector factors") {
  const Shape s = shape("2,0", B(2));
  const ModuleVector v = tabloid_vector(tab("1/1", B(2)), s);
  const ModuleVector f2 = module_f_divided(v, 1, 2);
  CHECK(f2 == tabloid_vector(tab("2/2", B(2)), s));
  CHECK(module_f_divided(v, 1, 0) == v);
  CHECK(module_f_divided(v, 1, 3).is_zero());
  // f_1 (v_1 ⊗ v_1) = v_2 ⊗ v_1 + q^2 v_1 ⊗ v_2; the tabloid 1/2 reads 2 then 1.
  const ModuleVector f1 = module_f_divided(v, 1, 1);
  CHECK(f1.terms.size() == 2);
  CHECK(f1.coeff(tab("1/2", B(2))) == LaurentPoly(1));
  CHECK(f1.coeff(tab("2/1", B(2))) == q(2));
}

TEST_CASE("single-factor shapes reduce to the wedge action") {
  for (const auto& kind : {B(2), B(3), D(3), D(4)}) {
    // omega_p = Lambda_p in this range.
    for (int p = 1; p < kind.rank - (kind.is_D() ? 1 : 0); ++p) {
      std::string text;
      for (int k = 1; k <= kind.rank; ++k) text += std::string(k > 1 ? "," : "") + (k == p ? "1" : "0");
      const Shape s = shape_for(parse_dominant(text, kind.rank), kind);
      REQUIRE(s.heights == std::vector<int>{p});
      for (const Column& c : enumerate_columns(kind, p, false)) {
        for (int i = 1; i <= kind.rank; ++i) {
          for (int m = 1; m <= 2; ++m) {
            const ModuleVector got = module_f_divided(tabloid_vector(Tabloid{std::nullopt, {c}}, s), i, m);
            const WedgeVector want = wedge_f_divided(c, i, m, kind);
            CHECK(got.terms.size() == want.terms.size());
            for (const auto& [col, coeff] : want.terms) CHECK(got.coeff(Tabloid{std::nullopt, {col}}) == coeff);
          }
        }
      }
    }
  }
}

TEST_CASE("divided-power recursion equals repeated single steps") {
  struct Case {
    AlgebraKind kind;
    const char* lambda;
    std::size_t count;
  };
  const std::vector<Case> cases = {
      {B(2), "2,0", 1000}, {B(2), "1,1", 1000}, {B(2), "1,2", 300}, {B(2), "0,3", 300}, {B(3), "1,1,0", 200},
      {B(3), "1,0,1", 200}, {D(3), "1,1,1", 200},  {D(3), "1,1,0", 200}, {D(3), "0,2,1", 200}, {D(4), "1,0,0,1", 100},
  };
  for (const auto& c : cases) {
    const Shape s = shape(c.lambda, c.kind);
    for (const Tabloid& t : sample(enumerate_tabloids(s), c.count, 7)) {
      const ModuleVector v = tabloid_vector(t, s);
      for (int i = 1; i <= c.kind.rank; ++i)
        for (int m = 1; m <= 3; ++m) CHECK(module_f_divided(v, i, m) == naive_divided(v, i, m));
    }
  }
}

TEST_CASE("recursion is associative across factor splits") {
  // Split C_3 ⊗ C_2 ⊗ C_1 as (C_3 ⊗ C_2) ⊗ C_1 instead of C_3 ⊗ (C_2 ⊗ C_1).
  struct Case {
    AlgebraKind kind;
    const char* whole;
    const char* head;
    const char* tail;
  };
  const std::vector<Case> cases = {{B(2), "2,2", "2,0", "0,2"}, {D(3), "2,1,1", "2,0,0", "0,1,1"}, {B(3), "3,0,0", "2,0,0", "1,0,0"}};
  for (const auto& c : cases) {
    const Shape whole = shape(c.whole, c.kind), head = shape(c.head, c.kind), tail = shape(c.tail, c.kind);
    REQUIRE(whole.heights.size() == 3);
    const int n = c.kind.rank;
    for (const Tabloid& t : sample(enumerate_tabloids(whole), 150, 11)) {
      const Tabloid x{std::nullopt, {t.columns[1], t.columns[2]}};
      const Column& y = t.columns[0];
      for (int i = 1; i <= n; ++i) {
        const int d = qi_exponent(c.kind, i);
        const int a = cartan_exponent(weight_of_tabloid(x, c.kind), i, c.kind);
        for (int m = 0; m <= 3; ++m) {
          ModuleVector want{whole, {}};
          for (int k = 0; k <= m; ++k) {
            const ModuleVector fx = module_f_divided(tabloid_vector(x, head), i, k);
            const ModuleVector fy = module_f_divided(tabloid_vector(Tabloid{std::nullopt, {y}}, tail), i, m - k);
            for (const auto& [tx, cx] : fx.terms)
              for (const auto& [ty, cy] : fy.terms)
                want.add(Tabloid{std::nullopt, {ty.columns[0], tx.columns[0], tx.columns[1]}},
                         cx * cy * q(d * (m - k) * (a - k)));
          }
          CHECK(module_f_divided(tabloid_vector(t, whole), i, m) == want);
        }
      }
    }
  }
}

TEST_CASE("divided powers are weight homogeneous") {
  for (const auto& [kind, lambda] : std::vector<std::pair<AlgebraKind, const char*>>{
           {B(3), "1,1,2"}, {B(2), "1,3"}, {D(4), "0,1,1,0"}, {D(3), "1,0,1"}}) {
    const Shape s = shape(lambda, kind);
    for (const Tabloid& t : sample(enumerate_tabloids(s), 150, 3)) {
      const Weight w = weight_of_tabloid(t, kind);
      for (int i = 1; i <= kind.rank; ++i) {
        for (int m = 1; m <= 3; ++m) {
          Weight target = w;
          for (int k = 0; k < m; ++k) target -= simple_root(kind, i);
          CHECK(homogeneous(module_f_divided(tabloid_vector(t, s), i, m), target));
        }
      }
    }
  }
}

TEST_CASE("monomials applied right to left") {
  const ModuleVector v = highest_vector(parse_dominant("2,0", 2), B(2));
  CHECK(apply_monomial(v, {}) == v);
  // f_2 f_1^{(2)}: the rightmost operator acts first.
  const ModuleVector got = apply_monomial(v, {{2, 1}, {1, 2}});
  CHECK(got == module_f_divided(module_f_divided(v, 1, 2), 2, 1));
  CHECK_FALSE(got == module_f_divided(module_f_divided(v, 2, 1), 1, 2));
}

TEST_CASE("highest vectors") {
  auto single = [](const ModuleVector& v) {
    REQUIRE(v.terms.size() == 1);
    CHECK(v.terms.begin()->second == LaurentPoly(1));
    return tabloid_to_string(v.terms.begin()->first);
  };
  CHECK(single(highest_vector(parse_dominant("1,1,2", 3), B(3))) == "1,2,3/1,2/1");
  CHECK(single(highest_vector(parse_dominant("1,0,2,0", 4), D(4))) == "1,2,3,-4/1");
  CHECK(single(highest_vector(parse_dominant("0,0,1", 3), B(3))) == "s:1,2,3");
  CHECK(single(highest_vector(parse_dominant("0,0,1,0", 4), D(4))) == "s:1,2,3,-4");
  CHECK(single(highest_vector(parse_dominant("1,0,0,1", 4), D(4))) == "s:1,2,3,4/1");
  for (const auto& [kind, lambda] : std::vector<std::pair<AlgebraKind, const char*>>{
           {B(3), "1,1,2"}, {B(3), "0,1,1"}, {D(4), "1,0,2,0"}, {D(4), "0,1,1,0"}}) {
    const ModuleVector v = highest_vector(parse_dominant(lambda, kind.rank), kind);
    CHECK(is_highest_weight(tabloid_reading(v.terms.begin()->first, kind)));
  }
}

TEST_CASE("monomial coordinates stay in Z[q,q^-1]") {
  // Exact division would throw otherwise.
  const Shape s = shape("1,1,2", B(3));
  const ModuleVector v = highest_vector(s.lambda, B(3));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(1, 3), pow(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    OperatorPath path;
    for (int k = 0; k < 6; ++k) path.push_back({idx(rng), pow(rng)});
    CHECK_NOTHROW(apply_monomial(v, path));
  }
}

TEST_CASE("shape mismatch") {
  const Shape s = shape("2,0", B(2));
  CHECK_THROWS_AS(tabloid_vector(tab("1,2", B(2)), s), Error);
}

TEST_CASE("spin module") {
  SUBCASE("examples") {
    const SpinColumn top = SpinColumn::highest(B(3));
    CHECK(spin_t_exponent(top, 3) == 1);
    CHECK(spin_t_exponent(top, 1) == 0);
    CHECK(spin_t_exponent(SpinColumn::parse("s:1,-2,3", B(3)), 1) == 1);
    const SpinVector f = spin_module_f(spin_basis_vector(top), 3);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms.begin()->first.to_string() == "s:1,2,-3");
    CHECK(f.terms.begin()->second == LaurentPoly(1));
    CHECK(spin_module_f(spin_basis_vector(top), 1).terms.empty());
  }
  SUBCASE("agrees with the crystal and preserves the class") {
    for (const auto& kind : {B(2), B(3), B(4), D(3), D(4), D(5)}) {
      for (const auto& s : enumerate_spin_columns(kind)) {
        for (int i = 1; i <= kind.rank; ++i) {
          const SpinVector f = spin_module_f(spin_basis_vector(s), i);
          const auto c = spin_apply(s, i, Dir::F);
          CHECK(f.terms.size() == (c ? 1u : 0u));
          if (c) {
            CHECK(f.terms.begin()->first == *c);
            CHECK(spin_class(*c) == spin_class(s));
          }
          CHECK(spin_module_f(f, i).terms.empty());
        }
      }
    }
  }
  SUBCASE("orbit of the highest column") {
    for (const auto& [kind, minus, size] : std::vector<std::tuple<AlgebraKind, bool, std::size_t>>{
             {B(2), false, 4}, {B(3), false, 8}, {B(4), false, 16}, {D(3), false, 4}, {D(3), true, 4}, {D(4), false, 8},
             {D(4), true, 8}, {D(5), true, 16}}) {
      std::set<SpinColumn> seen{SpinColumn::highest(kind, minus)};
      std::vector<SpinColumn> todo(seen.begin(), seen.end());
      while (!todo.empty()) {
        const SpinColumn s = todo.back();
        todo.pop_back();
        for (int i = 1; i <= kind.rank; ++i)
          for (const auto& [c, coeff] : spin_module_f(spin_basis_vector(s), i).terms)
            if (seen.insert(c).second) todo.push_back(c);
      }
      CHECK(seen.size() == size);
    }
  }
}
