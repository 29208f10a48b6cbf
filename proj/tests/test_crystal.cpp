#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "qcb/crystal.hpp"

using namespace qcb;

namespace {

AlgebraKind B(int n) { return AlgebraKind::make(Family::B, n); }
AlgebraKind D(int n) { return AlgebraKind::make(Family::D, n); }

Word W(const std::string& text, const AlgebraKind& kind) { return Word::parse(text, kind); }

// Oracle: fold the two-factor formulas matching the tensor rule in which f
// acts on the left factor when phi(u) > eps(v):
// eps(u⊗v) = eps(u) + max(0, eps(v) - phi(u)), phi(u⊗v) = phi(v) + max(0, phi(u) - eps(v)).
EpsPhi fold_eps_phi(const Word& w, int i) {
  std::vector<EpsPhi> factors;
  for (Letter x : w.letters) factors.push_back(letter_eps_phi(x, i, w.kind));
  if (w.spin) factors.push_back(spin_eps_phi(*w.spin, i));
  EpsPhi u{0, 0};
  for (const auto& v : factors) {
    EpsPhi r;
    r.eps = u.eps + std::max(0, v.eps - u.phi);
    r.phi = v.phi + std::max(0, u.phi - v.eps);
    u = r;
  }
  return u;
}

// Oracle: the two-factor tensor rule applied recursively, splitting off the
// last factor (the spin factor when present).
std::optional<Word> rule_apply(const Word& w, int i, Dir dir) {
  if (w.letters.empty() && !w.spin) return std::nullopt;
  Word u = w;
  EpsPhi pv;
  if (w.spin) {
    u.spin.reset();
    pv = spin_eps_phi(*w.spin, i);
  } else {
    u.letters.pop_back();
    pv = letter_eps_phi(w.letters.back(), i, w.kind);
  }
  const EpsPhi pu = fold_eps_phi(u, i);
  const bool left = dir == Dir::F ? pu.phi > pv.eps : pu.phi >= pv.eps;
  if (left) {
    auto r = rule_apply(u, i, dir);
    if (!r) return std::nullopt;
    if (w.spin) r->spin = w.spin;
    else r->letters.push_back(w.letters.back());
    return r;
  }
  Word r = w;
  if (w.spin) {
    auto s = spin_apply(*w.spin, i, dir);
    if (!s) return std::nullopt;
    r.spin = s;
  } else {
    auto y = vec_edge(w.letters.back(), i, dir, w.kind);
    if (!y) return std::nullopt;
    r.letters.back() = *y;
  }
  return r;
}

std::vector<Word> all_words(const AlgebraKind& kind, int length, bool with_spin) {
  std::vector<Word> out{Word{kind, std::nullopt, {}}};
  for (int k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (Letter x : alphabet(kind)) {
        Word v = w;
        v.letters.push_back(x);
        next.push_back(v);
      }
    out = std::move(next);
  }
  if (!with_spin) return out;
  std::vector<Word> spun;
  for (const auto& s : enumerate_spin_columns(kind))
    for (auto w : out) {
      w.spin = s;
      spun.push_back(w);
    }
  return spun;
}

}  // namespace

TEST_CASE("vector crystal edges") {
  CHECK(vec_edge(unbarred(2), 2, Dir::F, B(2)) == Letter{0});
  CHECK(vec_edge(Letter{0}, 2, Dir::F, B(2)) == barred_letter(2));
  CHECK(vec_edge(unbarred(2), 3, Dir::F, D(3)) == barred_letter(3));
  CHECK(vec_edge(unbarred(3), 3, Dir::F, D(3)) == barred_letter(2));
  CHECK(vec_edge(barred_letter(3), 2, Dir::F, D(3)) == barred_letter(2));
  CHECK_FALSE(vec_edge(unbarred(2), 1, Dir::F, B(2)));
  CHECK(letter_eps_phi(unbarred(2), 2, B(2)) == EpsPhi{0, 2});
  CHECK(letter_eps_phi(Letter{0}, 2, B(2)) == EpsPhi{1, 1});
}

TEST_CASE("signature rule examples") {
  CHECK(word_eps_phi(W("1", B(2)), 1) == EpsPhi{0, 1});
  CHECK(word_eps_phi(W("1,1", B(2)), 1).phi == 2);
  CHECK(word_eps_phi(W("0,0", B(2)), 2) == EpsPhi{1, 1});
  CHECK(word_apply(W("1,1", B(2)), 1, Dir::F)->to_string() == "2,1");
  CHECK(word_apply(W("0,0", B(2)), 2, Dir::E)->to_string() == "2,0");
  CHECK_FALSE(word_apply(W("1,2", B(2)), 1, Dir::E));
}

TEST_CASE("signature rule agrees with the recursive tensor rule") {
  for (auto kind : {B(2), D(3), B(3)}) {
    for (int len = 1; len <= (kind.rank == 2 ? 4 : 3); ++len) {
      for (const auto& w : all_words(kind, len, len <= 2)) {
        for (int i = 1; i <= kind.rank; ++i) {
          CHECK(word_eps_phi(w, i) == fold_eps_phi(w, i));
          for (Dir dir : {Dir::F, Dir::E}) CHECK(word_apply(w, i, dir) == rule_apply(w, i, dir));
        }
      }
    }
  }
}

TEST_CASE("edge symmetry and string lengths") {
  for (auto kind : {B(2), D(3)}) {
    for (const auto& w : all_words(kind, 3, true)) {
      for (int i = 1; i <= kind.rank; ++i) {
        auto ep = word_eps_phi(w, i);
        auto f = word_apply(w, i, Dir::F);
        if (f) CHECK(word_apply(*f, i, Dir::E) == w);
        auto e = word_apply(w, i, Dir::E);
        if (e) CHECK(word_apply(*e, i, Dir::F) == w);
        CHECK(word_apply(w, i, Dir::F, ep.phi).has_value());
        CHECK_FALSE(word_apply(w, i, Dir::F, ep.phi + 1).has_value());
        CHECK(word_apply(w, i, Dir::E, ep.eps).has_value());
        CHECK_FALSE(word_apply(w, i, Dir::E, ep.eps + 1).has_value());
      }
    }
  }
}

TEST_CASE("raising to highest weight") {
  auto r = raise_to_highest(W("1,2", B(2)));
  CHECK(r.top.to_string() == "1,2");
  CHECK(r.path.empty());

  r = raise_to_highest(W("0,0", B(2)));
  CHECK(r.top.to_string() == "1,2");
  int total = 0;
  for (auto [i, c] : r.path) total += c;
  CHECK(total == 3);

  r = raise_to_highest(W("-2", B(2)));
  CHECK(r.top.to_string() == "1");
  total = 0;
  for (auto [i, c] : r.path) total += c;
  CHECK(total == 3);
}

TEST_CASE("raising is schedule independent") {
  std::mt19937 rng(11);
  for (auto kind : {B(2), B(3), D(3)}) {
    auto letters = alphabet(kind);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> len(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      Word w{kind, std::nullopt, {}};
      for (int k = len(rng); k > 0; --k) w.letters.push_back(letters[pick(rng)]);
      Word target = raise_to_highest(w).top;
      Word cur = w;
      for (;;) {
        std::vector<int> open;
        for (int i = 1; i <= kind.rank; ++i)
          if (word_eps_phi(cur, i).eps > 0) open.push_back(i);
        if (open.empty()) break;
        std::uniform_int_distribution<std::size_t> choose(0, open.size() - 1);
        cur = *word_apply(cur, open[choose(rng)], Dir::E);
      }
      CHECK(cur == target);
    }
  }
}

TEST_CASE("component sizes") {
  CHECK(component_bfs(W("1", B(2))).size() == 5);
  CHECK(component_bfs(W("1", D(3))).size() == 6);
  CHECK(component_bfs(W("1,2", B(2))).size() == 10);
  for (int n = 2; n <= 5; ++n) {
    CHECK(component_bfs(W("1", B(n))).size() == static_cast<std::size_t>(2 * n + 1));
    if (n >= 3) CHECK(component_bfs(W("1", D(n))).size() == static_cast<std::size_t>(2 * n));
  }
  // The whole spin crystal is a single component.
  Word spin{B(3), SpinColumn::highest(B(3)), {}};
  CHECK(component_bfs(spin).size() == 8);
  Word minus{D(4), SpinColumn::highest(D(4), true), {}};
  CHECK(component_bfs(minus).size() == 8);
}

TEST_CASE("spin columns") {
  auto s = SpinColumn::highest(B(3));
  CHECK(spin_apply(s, 3, Dir::F)->to_string() == "s:1,2,-3");
  auto d = SpinColumn::highest(D(3));
  CHECK(spin_apply(d, 3, Dir::F)->to_string() == "s:1,-3,-2");
  for (auto kind : {B(3), D(3), D(4)}) {
    for (const auto& c : enumerate_spin_columns(kind)) {
      for (int i = 1; i <= kind.rank; ++i) {
        auto f = spin_apply(c, i, Dir::F);
        if (!f) continue;
        CHECK_FALSE(spin_apply(*f, i, Dir::F));
        CHECK(spin_apply(*f, i, Dir::E) == c);
        if (kind.is_D()) CHECK(f->is_plus() == c.is_plus());
      }
    }
  }
  CHECK(enumerate_spin_columns(B(4)).size() == 16);
  int plus = 0;
  for (const auto& c : enumerate_spin_columns(D(4))) plus += c.is_plus();
  CHECK(plus == 8);
  CHECK(SpinColumn::parse("s:1,-2", B(2)).to_string() == "s:1,-2");
  CHECK(W("1|s:1,-2", B(2)).to_string() == "1|s:1,-2");
}
