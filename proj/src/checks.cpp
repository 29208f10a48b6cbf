#include "qcb/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "qcb/canonical.hpp"
#include "qcb/error.hpp"
#include "qcb/spinmod.hpp"

namespace qcb {

namespace {

struct Recorder {
  CheckResult result;

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++result.cases;
    if (ok || !result.passed) return;
    result.passed = false;
    result.detail = what();
  }
};

// Runs body, turning any escaping error into a failure of the check.
CheckResult guarded(const std::string& name, const std::function<void(Recorder&)>& body) {
  Recorder rec(name);
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.result.passed = false;
    if (rec.result.detail.empty()) rec.result.detail = e.what();
  }
  return rec.result;
}

long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

std::vector<DominantWeight> dominant_sweep(int n, int level) {
  std::vector<DominantWeight> out;
  std::vector<int> c(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      if (left < level) out.push_back({c});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[k] = v;
      rec(k + 1, left - v);
    }
    c[k] = 0;
  };
  rec(0, level);
  return out;
}

std::vector<Word> words_of_length(const AlgebraKind& kind, int length) {
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
  return out;
}

std::string kind_text(const AlgebraKind& kind) { return kind.name(); }

}  // namespace

std::vector<AlgebraKind> check_kinds(const CheckBounds& bounds) {
  std::vector<AlgebraKind> out;
  for (int n = 2; n <= bounds.max_rank_b; ++n) out.push_back(AlgebraKind::make(Family::B, n));
  for (int n = bounds.experimental ? 2 : 3; n <= bounds.max_rank_d; ++n)
    out.push_back(AlgebraKind::make(Family::D, n, bounds.experimental));
  return out;
}

CheckResult check_laurent(const CheckBounds& bounds) {
  return guarded("laurent: bar, quantum integers, exact division", [&](Recorder& rec) {
    std::mt19937 rng(bounds.seed);
    std::uniform_int_distribution<int> len(0, 5), expo(-6, 6), coef(-4, 4);
    auto random_poly = [&] {
      std::vector<LaurentPoly::Term> terms;
      for (int k = len(rng); k > 0; --k) terms.push_back({expo(rng), coef(rng)});
      return LaurentPoly::from_terms(std::move(terms));
    };
    for (int t = 0; t < 300; ++t) {
      const LaurentPoly a = random_poly(), b = random_poly();
      rec.expect(a.bar().bar() == a, [&] { return "bar is not an involution on " + a.to_string(); });
      if (!b.is_zero())
        rec.expect(divide_exact(a * b, b) == a, [&] { return "divide_exact((" + a.to_string() + ")(" + b.to_string() + "))"; });
    }
    Integer fact = 1;
    for (int m = 1; m <= 8; ++m) {
      fact *= m;
      for (int d = 1; d <= 2; ++d) {
        rec.expect(quantum_int(m, d).is_bar_invariant(), [&] { return "[" + std::to_string(m) + "] not bar invariant"; });
        rec.expect(quantum_factorial(m, d).eval_at_one() == fact, [&] { return "[" + std::to_string(m) + "]! at q=1"; });
      }
    }
  });
}

CheckResult check_rootdata(const CheckBounds& bounds) {
  return guarded("rootdata: letter order, weights, pairings", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      const int n = kind.rank;
      const auto letters = alphabet(kind);
      Weight sum(n);
      for (std::size_t a = 0; a < letters.size(); ++a) {
        sum += letter_weight(letters[a], n);
        for (std::size_t b = 0; b < letters.size(); ++b)
          rec.expect(letter_leq_B(letters[a], letters[b], n) == (a <= b),
                     [&] { return kind_text(kind) + ": order disagrees with the alphabet listing"; });
        for (int i = 1; i <= n; ++i) {
          const int c = cartan_exponent(letter_weight(letters[a], n), i, kind);
          rec.expect(c >= -2 && c <= 2, [&] { return kind_text(kind) + ": pairing out of range"; });
        }
      }
      rec.expect(sum == Weight(n), [&] { return kind_text(kind) + ": letter weights do not sum to zero"; });
    }
  });
}

CheckResult check_crystal_edges(const CheckBounds& bounds) {
  return guarded("crystal: edge symmetry and string lengths", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      std::vector<Word> words;
      for (int len = 1; len <= 3; ++len)
        for (auto& w : words_of_length(kind, len)) words.push_back(std::move(w));
      for (const auto& s : enumerate_spin_columns(kind)) {
        words.push_back(Word{kind, s, {}});
        for (Letter x : alphabet(kind)) words.push_back(Word{kind, s, {x}});
      }
      for (const auto& w : words) {
        for (int i = 1; i <= kind.rank; ++i) {
          const EpsPhi ep = word_eps_phi(w, i);
          for (Dir dir : {Dir::F, Dir::E}) {
            const Dir back = dir == Dir::F ? Dir::E : Dir::F;
            if (auto v = word_apply(w, i, dir))
              rec.expect(word_apply(*v, i, back) == w, [&] { return "edge not reversible at " + w.to_string(); });
          }
          rec.expect(word_apply(w, i, Dir::F, ep.phi) && !word_apply(w, i, Dir::F, ep.phi + 1),
                     [&] { return "phi is not the f string length at " + w.to_string(); });
          rec.expect(word_apply(w, i, Dir::E, ep.eps) && !word_apply(w, i, Dir::E, ep.eps + 1),
                     [&] { return "eps is not the e string length at " + w.to_string(); });
        }
      }
      const long expect = kind.is_B() ? 2 * kind.rank + 1 : 2 * kind.rank;
      rec.expect(static_cast<long>(component_bfs(Word::parse("1", kind)).size()) == expect,
                 [&] { return kind_text(kind) + ": vector crystal size"; });
    }
  });
}

CheckResult check_crystal_paths(const CheckBounds& bounds) {
  return guarded("crystal: raising is path independent", [&](Recorder& rec) {
    std::mt19937 rng(bounds.seed);
    for (const auto& kind : check_kinds(bounds)) {
      const auto letters = alphabet(kind);
      std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
      std::uniform_int_distribution<int> len(1, 6);
      for (int t = 0; t < 300; ++t) {
        Word w{kind, std::nullopt, {}};
        for (int k = len(rng); k > 0; --k) w.letters.push_back(letters[pick(rng)]);
        const Word top = raise_to_highest(w).top;
        Word cur = w;
        for (int guard = 0; guard < 10000; ++guard) {
          std::vector<int> open;
          for (int i = 1; i <= kind.rank; ++i)
            if (word_eps_phi(cur, i).eps > 0) open.push_back(i);
          if (open.empty()) break;
          cur = *word_apply(cur, open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)], Dir::E);
        }
        rec.expect(cur == top, [&] { return "random raising of " + w.to_string() + " ends elsewhere"; });
      }
    }
  });
}

CheckResult check_spin_columns(const CheckBounds& bounds) {
  return guarded("crystal: spin columns", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      const auto all = enumerate_spin_columns(kind);
      const long n = kind.rank;
      rec.expect(static_cast<long>(all.size()) == (1L << n), [&] { return kind_text(kind) + ": |SP_n|"; });
      if (kind.is_D()) {
        long plus = 0;
        for (const auto& s : all) plus += s.is_plus();
        rec.expect(plus == (1L << (n - 1)), [&] { return kind_text(kind) + ": |SP_n^+|"; });
        for (const auto& s : all)
          for (int i = 1; i <= n; ++i)
            if (auto f = spin_apply(s, i, Dir::F))
              rec.expect(f->is_plus() == s.is_plus(), [&] { return "class changes at " + s.to_string(); });
      }
    }
  });
}

CheckResult check_counting(int max_n) {
  return guarded("shapes: column counts", [&](Recorder& rec) {
    for (int n = 2; n <= max_n; ++n) {
      const AlgebraKind kind = AlgebraKind::make(Family::B, n);
      for (int p = 1; p <= n; ++p) {
        long all_expect = 0;
        for (int k = 0; 2 * k <= p; ++k) all_expect += binom(2 * n + 1, p - 2 * k);
        const long all = static_cast<long>(enumerate_columns(kind, p, false).size());
        const long adm = static_cast<long>(enumerate_columns(kind, p, true).size());
        rec.expect(all == all_expect, [&] { return "|C^B(" + std::to_string(n) + "," + std::to_string(p) + ")|"; });
        rec.expect(adm == binom(2 * n + 1, p), [&] { return "|Ca^B(" + std::to_string(n) + "," + std::to_string(p) + ")|"; });
      }
      rec.expect(enumerate_spin_columns(kind).size() == (1UL << n), [&] { return "|SP_" + std::to_string(n) + "|"; });
      if (n >= 3) {
        const AlgebraKind d = AlgebraKind::make(Family::D, n);
        long plus = 0;
        for (const auto& s : enumerate_spin_columns(d)) plus += s.is_plus();
        rec.expect(plus == (1L << (n - 1)) && enumerate_spin_columns(d).size() == (1UL << n),
                   [&] { return "|SP_" + std::to_string(n) + "^±|"; });
      }
    }
  });
}

CheckResult check_tableaux(const CheckBounds& bounds) {
  return guarded("shapes: tableaux, membership and the order", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      for (const auto& lambda : dominant_sweep(kind.rank, bounds.max_level)) {
        const Shape shape = shape_for(lambda, kind);
        const auto bfs = enumerate_tableaux_bfs(shape);
        const auto sorted = enumerate_tableaux(shape);
        const std::string where = kind_text(kind) + " lambda " + lambda.to_string();
        rec.expect(bfs.size() == sorted.size(), [&] { return where + ": BFS and sorted enumeration differ"; });
        rec.expect(bfs.size() == component_bfs(tabloid_reading(highest_tableau(shape), kind)).size(),
                   [&] { return where + ": tableaux differ from the component"; });
        const TabloidLess less{kind.rank};
        for (std::size_t k = 1; k < sorted.size(); ++k)
          rec.expect(less(sorted[k - 1], sorted[k]), [&] { return where + ": tableaux not strictly ⊴-ascending"; });
        const std::set<Tabloid> members(sorted.begin(), sorted.end());
        const Weight mu = weight_of_tabloid(highest_tableau(shape), kind);
        for (int i = 1; i <= kind.rank; ++i) {
          // One weight below the top: every tabloid there is classified.
          Weight w = mu;
          w -= simple_root(kind, i);
          for (const auto& t : enumerate_tabloids(shape, w))
            rec.expect(is_orthogonal_tableau(t, shape) == (members.count(t) > 0),
                       [&] { return where + ": membership of " + tabloid_to_string(t); });
        }
      }
    }
  });
}

CheckResult check_wedge_oracle(const CheckBounds& bounds) {
  return guarded("wedge: f equals the coproduct lift", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      for (int p = 1; p <= kind.rank; ++p) {
        for (const Column& c : enumerate_columns(kind, p, false)) {
          for (int i = 1; i <= kind.rank; ++i) {
            rec.expect(wedge_f(c, i, kind) == tensor_lift_f(c, i, kind), [&] {
              return kind_text(kind) + ": f_" + std::to_string(i) + " on " + column_to_string(c);
            });
          }
        }
      }
    }
  });
}

CheckResult check_wedge_properties(const CheckBounds& bounds) {
  return guarded("wedge: integrality, congruence, weights, divided powers", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      const int n = kind.rank;
      for (int p = 1; p <= n; ++p) {
        // Straightening every monomial of length p lands in Z[q].
        std::vector<std::vector<Letter>> monomials{{}};
        for (int k = 0; k < p; ++k) {
          std::vector<std::vector<Letter>> next;
          for (const auto& m : monomials)
            for (Letter x : alphabet(kind)) {
              auto v = m;
              v.push_back(x);
              next.push_back(std::move(v));
            }
          monomials = std::move(next);
        }
        if (p <= 3)
          for (const auto& m : monomials)
            for (const auto& [c, coeff] : straighten(m, kind).terms)
              rec.expect(coeff.is_polynomial(), [&] { return kind_text(kind) + ": straightening leaves Z[q]"; });

        for (const Column& c : enumerate_columns(kind, p, false)) {
          const Word w = column_word(c, kind);
          for (int i = 1; i <= n; ++i) {
            const WedgeVector f = wedge_f(c, i, kind);
            Weight target = column_weight(c, n);
            target -= simple_root(kind, i);
            for (const auto& [x, coeff] : f.terms)
              rec.expect(column_weight(x, n) == target, [&] { return "weight of f_" + std::to_string(i) + " " + column_to_string(c); });
            const EpsPhi ep = word_eps_phi(w, i);
            if (ep.eps == 0 && ep.phi == 1) {
              const Column image = word_apply(w, i, Dir::F)->letters;
              bool ok = f.coeff(image) == LaurentPoly(1);
              for (const auto& [x, coeff] : f.terms)
                if (!(x == image)) ok = ok && coeff.is_polynomial() && coeff.min_exponent() >= 1;
              rec.expect(ok, [&] { return "f_" + std::to_string(i) + " " + column_to_string(c) + " is not its crystal image mod q"; });
            }
            for (int m = 2; m <= 4; ++m) (void)wedge_f_divided(c, i, m, kind);
            ++rec.result.cases;
          }
        }
      }
    }
  });
}

CheckResult check_spin_module(const CheckBounds& bounds) {
  return guarded("spin modules: action, classes, orbits", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      for (const bool minus : {false, true}) {
        if (minus && !kind.is_D()) continue;
        const SpinColumn top = SpinColumn::highest(kind, minus);
        std::set<SpinColumn> seen{top};
        std::vector<SpinColumn> todo{top};
        while (!todo.empty()) {
          const SpinColumn s = todo.back();
          todo.pop_back();
          for (int i = 1; i <= kind.rank; ++i) {
            const SpinVector f = spin_module_f(spin_basis_vector(s), i);
            const auto c = spin_apply(s, i, Dir::F);
            rec.expect(f.terms.size() == (c ? 1u : 0u) && (!c || (f.terms.begin()->first == *c &&
                                                                   f.terms.begin()->second == LaurentPoly(1))),
                       [&] { return "spin f_" + std::to_string(i) + " on " + s.to_string(); });
            if (c && seen.insert(*c).second) todo.push_back(*c);
          }
        }
        const std::size_t expect = kind.is_B() ? (1UL << kind.rank) : (1UL << (kind.rank - 1));
        rec.expect(seen.size() == expect, [&] { return kind_text(kind) + ": spin orbit size"; });
      }
    }
  });
}

CheckResult check_module_weights(const CheckBounds& bounds) {
  return guarded("modules: weight homogeneity and highest vectors", [&](Recorder& rec) {
    std::mt19937 rng(bounds.seed);
    for (const auto& kind : check_kinds(bounds)) {
      for (const auto& lambda : dominant_sweep(kind.rank, bounds.max_level)) {
        const Shape shape = shape_for(lambda, kind);
        const ModuleVector top = highest_vector(lambda, kind);
        rec.expect(is_highest_weight(tabloid_reading(top.terms.begin()->first, kind)),
                   [&] { return "T_lambda not highest for " + lambda.to_string(); });
        auto tabloids = enumerate_tabloids(shape);
        std::shuffle(tabloids.begin(), tabloids.end(), rng);
        tabloids.resize(std::min<std::size_t>(tabloids.size(), 40));
        for (const auto& t : tabloids) {
          for (int i = 1; i <= kind.rank; ++i) {
            for (int m = 1; m <= 3; ++m) {
              Weight target = weight_of_tabloid(t, kind);
              for (int k = 0; k < m; ++k) target -= simple_root(kind, i);
              for (const auto& [x, c] : module_f_divided(tabloid_vector(t, shape), i, m).terms)
                rec.expect(weight_of_tabloid(x, kind) == target, [&] { return "weight of f^(m) on " + tabloid_to_string(t); });
            }
          }
        }
      }
    }
  });
}

CheckResult check_marsh(const CheckBounds& bounds) {
  return guarded("canonical: Marsh congruence G(C) = v_C mod q", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      for (int p = 1; p <= kind.rank; ++p) {
        for (const Column& c : enumerate_columns(kind, p, true)) {
          const WedgeVector g = global_column(c, kind);
          bool ok = g.coeff(c) == LaurentPoly(1);
          for (const auto& [x, coeff] : g.terms)
            if (!(x == c)) ok = ok && coeff.is_polynomial() && coeff.min_exponent() >= 1;
          rec.expect(ok, [&] { return kind_text(kind) + ": G(" + column_to_string(c) + ")"; });
        }
      }
    }
  });
}

CheckResult check_canonical(const CheckBounds& bounds) {
  return guarded("canonical: congruence, triangularity, Z[q], bar-symmetric corrections", [&](Recorder& rec) {
    for (const auto& kind : check_kinds(bounds)) {
      const TabloidLess less{kind.rank};
      for (const auto& lambda : dominant_sweep(kind.rank, bounds.max_level)) {
        const CanonicalMatrix m = canonical_matrix(lambda, kind);
        const std::string where = kind_text(kind) + " lambda " + lambda.to_string();
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
          const Tabloid& t = m.cols[c];
          const Weight w = weight_of_tabloid(t, kind);
          const std::string at = where + " T " + tabloid_to_string(t);
          rec.expect(m.a[c].coeff(t) == LaurentPoly(1), [&] { return at + ": A(T) is not 1 on v_T"; });
          for (const auto& [tau, coeff] : m.a[c].terms)
            rec.expect(!less(t, tau) && weight_of_tabloid(tau, kind) == w, [&] { return at + ": A(T) support"; });
          rec.expect(m.g[c].coeff(t) == LaurentPoly(1), [&] { return at + ": d_TT != 1"; });
          for (const auto& [tau, coeff] : m.g[c].terms) {
            rec.expect(coeff.is_polynomial(), [&] { return at + ": entry outside Z[q] at " + tabloid_to_string(tau); });
            rec.expect(tau == t || coeff.min_exponent() >= 1, [&] { return at + ": G(T) != v_T mod q"; });
            rec.expect(!less(t, tau) && weight_of_tabloid(tau, kind) == w, [&] { return at + ": not triangular"; });
          }
          for (std::size_t j = 0; j < c; ++j)
            rec.expect(m.g[c].coeff(m.cols[j]).symmetrized_low_part().is_zero(), [&] { return at + ": correction not idempotent"; });
        }
        for (const auto& s : m.gamma_log)
          rec.expect(s.gamma.is_bar_invariant() && s.j < s.col, [&] { return where + ": gamma " + s.gamma.to_string(); });
      }
    }
  });
}

std::vector<CheckResult> run_checks(const CheckBounds& bounds) {
  return {check_laurent(bounds),        check_rootdata(bounds),         check_crystal_edges(bounds),
          check_crystal_paths(bounds),  check_spin_columns(bounds),     check_counting(std::max(4, bounds.max_rank_b)),
          check_tableaux(bounds),       check_wedge_oracle(bounds),     check_wedge_properties(bounds),
          check_spin_module(bounds),    check_module_weights(bounds),   check_marsh(bounds),
          check_canonical(bounds)};
}

}  // namespace qcb
