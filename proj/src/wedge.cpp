#include "qcb/wedge.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qcb/error.hpp"

namespace qcb {

namespace {

using Terms = std::map<Column, LaurentPoly>;

struct KindCache {
  std::map<std::vector<Letter>, Terms> straightened;
  std::map<std::pair<Column, int>, WedgeVector> f;
  std::map<std::tuple<Column, int, int>, WedgeVector> f_divided;
};

// Per-thread caches keep every public function pure and lock-free.
KindCache& cache_for(const AlgebraKind& kind) {
  thread_local std::map<std::pair<int, int>, KindCache> caches;
  return caches[{static_cast<int>(kind.family), kind.rank}];
}

LaurentPoly q(int e) { return LaurentPoly::q_power(e); }

void add_term(Terms& terms, const Column& c, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(c, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

bool violates(Letter a, Letter b, const AlgebraKind& kind) {
  const int n = kind.rank;
  if (kind.is_B()) return !(b_rank(a, n) < b_rank(b, n) || (a.is_zero() && b.is_zero()));
  const int la = d_level(a, n), lb = d_level(b, n);
  return !(la < lb || (la == n && lb == n && a != b));
}

// Right-hand side of the relation for the pair (ī, i).
std::vector<std::pair<LaurentPoly, std::pair<Letter, Letter>>> mirror_relation(int i, const AlgebraKind& kind) {
  const int n = kind.rank;
  std::vector<std::pair<LaurentPoly, std::pair<Letter, Letter>>> out;
  if (kind.is_B()) {
    out.push_back({-q(4), {unbarred(i), barred_letter(i)}});
    for (int k = 1; k <= n - i; ++k) {
      LaurentPoly c = (1 - q(4)) * q(2 * k);
      out.push_back({k % 2 ? -c : c, {unbarred(i + k), barred_letter(i + k)}});
    }
    LaurentPoly last = q(2 * (n - i) + 1);
    out.push_back({(n - i + 1) % 2 ? -last : last, {Letter{0}, Letter{0}}});
    return out;
  }
  out.push_back({-q(2), {unbarred(i), barred_letter(i)}});
  for (int k = 1; k <= n - i - 1; ++k) {
    LaurentPoly c = (1 - q(2)) * q(k);
    out.push_back({k % 2 ? -c : c, {unbarred(i + k), barred_letter(i + k)}});
  }
  LaurentPoly last = (n - i) % 2 ? -q(n - i) : q(n - i);
  out.push_back({last, {unbarred(n), barred_letter(n)}});
  out.push_back({last, {barred_letter(n), unbarred(n)}});
  return out;
}

const Terms& straighten_rec(const std::vector<Letter>& m, const AlgebraKind& kind, int depth, int fuel,
                            KindCache& cache) {
  if (auto it = cache.straightened.find(m); it != cache.straightened.end()) return it->second;
  if (depth > fuel)
    fail(ErrorKind::StepLimitExceeded, "straightening exceeded the fuel bound of " + std::to_string(fuel));
  Terms out;
  std::size_t k = 0;
  while (k + 1 < m.size() && !violates(m[k], m[k + 1], kind)) ++k;
  if (k + 1 >= m.size()) {
    out.emplace(m, LaurentPoly(1));
  } else {
    const Letter a = m[k], b = m[k + 1];
    if (a == b) {
      // v_x ∧ v_x = 0.
    } else if (a.is_barred() && b == a.bar()) {
      for (const auto& [coeff, pair] : mirror_relation(b.index(), kind)) {
        auto next = m;
        next[k] = pair.first;
        next[k + 1] = pair.second;
        for (const auto& [c, v] : straighten_rec(next, kind, depth + 1, fuel, cache)) add_term(out, c, coeff * v);
      }
    } else {
      auto next = m;
      std::swap(next[k], next[k + 1]);
      const LaurentPoly coeff = -q(kind.is_B() ? 2 : 1);
      for (const auto& [c, v] : straighten_rec(next, kind, depth + 1, fuel, cache)) add_term(out, c, coeff * v);
    }
  }
  return cache.straightened.emplace(m, std::move(out)).first->second;
}

// The table machinery: letters of C inside the subalphabet, and the column
// obtained by replacing them with another subword.
struct Split {
  Column sub;
  Column rest;
};

Split split_column(const Column& c, const std::vector<Letter>& alphabet) {
  Split s;
  for (Letter x : c) (std::find(alphabet.begin(), alphabet.end(), x) != alphabet.end() ? s.sub : s.rest).push_back(x);
  return s;
}

Column merge(const Column& rest, const Column& sub, const AlgebraKind& kind) {
  Column out = rest;
  out.insert(out.end(), sub.begin(), sub.end());
  const int n = kind.rank;
  auto key = [&](Letter x) { return kind.is_B() ? b_rank(x, n) : d_level(x, n); };
  std::stable_sort(out.begin(), out.end(), [&](Letter a, Letter b) { return key(a) < key(b); });
  return out;
}

Column repeat(std::initializer_list<Letter> unit, int times) {
  Column out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), unit);
  return out;
}

Column concat(std::initializer_list<Column> parts) {
  Column out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Terms crystal_term(const Column& c, int i, const AlgebraKind& kind) {
  Terms out;
  auto f = word_apply(column_word(c, kind), i, Dir::F);
  if (!f) fail(ErrorKind::InternalInvariant, "crystal operator expected to act on " + column_to_string(c));
  out.emplace(f->letters, LaurentPoly(1));
  return out;
}

int phi_of(const Column& c, int i, const AlgebraKind& kind) { return word_eps_phi(column_word(c, kind), i).phi; }

// f_i for i < n in type B and i <= n-2 in type D.
Terms f_short(const Column& c, int i, const AlgebraKind& kind) {
  const int d = qi_exponent(kind, i);
  const Letter a = unbarred(i), b = unbarred(i + 1), bb = barred_letter(i + 1), ab = barred_letter(i);
  const Split s = split_column(c, {a, b, bb, ab});
  Terms out;
  auto put = [&](const Column& sub, const LaurentPoly& coeff) { add_term(out, merge(s.rest, sub, kind), coeff); };
  if (s.sub == Column{b, bb}) {
    put({b, ab}, q(-d));
  } else if (s.sub == Column{a, ab}) {
    put({b, ab}, 1);
  } else if (s.sub == Column{a, bb}) {
    put({b, bb}, 1);
    put({a, ab}, q(d));
  } else if (phi_of(c, i, kind) == 1) {
    return crystal_term(c, i, kind);
  }
  return out;
}

Terms f_n_B(const Column& c, const AlgebraKind& kind) {
  const int n = kind.rank;
  const Letter N = unbarred(n), Z{0}, Nb = barred_letter(n);
  const Split s = split_column(c, {N, Z, Nb});
  const bool has_n = !s.sub.empty() && s.sub.front() == N;
  const bool has_nb = !s.sub.empty() && s.sub.back() == Nb;
  const int r = static_cast<int>(s.sub.size()) - has_n - has_nb;
  // 1 - (-q^2)^r
  const LaurentPoly one_minus = 1 - (r % 2 ? -q(2 * r) : q(2 * r));
  Terms out;
  auto put = [&](const Column& sub, const LaurentPoly& coeff) { add_term(out, merge(s.rest, sub, kind), coeff); };
  if (!has_n && !has_nb && r >= 1) {
    put(concat({repeat({Z}, r - 1), {Nb}}), one_minus * q(-1));
  } else if (has_n && !has_nb && r >= 1) {
    put(repeat({Z}, r + 1), 1);
    put(concat({{N}, repeat({Z}, r - 1), {Nb}}), q(1) * one_minus);
  } else if (has_n && !has_nb) {
    put({Z}, 1);
  } else if (has_n && has_nb) {
    put(concat({repeat({Z}, r + 1), {Nb}}), 1);
  }
  return out;
}

Terms f_n1_D(const Column& c, const AlgebraKind& kind) {
  const int n = kind.rank;
  const Letter m = unbarred(n - 1), N = unbarred(n), Nb = barred_letter(n), Mb = barred_letter(n - 1);
  const Split s = split_column(c, {m, N, Nb, Mb});
  Terms out;
  auto put = [&](const Column& sub, const LaurentPoly& coeff) { add_term(out, merge(s.rest, sub, kind), coeff); };

  // Decompose as m? block Mb? with block alternating in N, Nb.
  std::size_t lo = 0, hi = s.sub.size();
  const bool has_m = lo < hi && s.sub[lo] == m;
  if (has_m) ++lo;
  const bool has_mb = lo < hi && s.sub[hi - 1] == Mb;
  if (has_mb) --hi;
  const Column block(s.sub.begin() + static_cast<long>(lo), s.sub.begin() + static_cast<long>(hi));
  const int len = static_cast<int>(block.size());
  const bool nb_first = len > 0 && block.front() == Nb;
  const int r = len / 2;

  // Three rows missing from the printed table, recovered from the coproduct:
  // m x Mb -> N x Mb for x empty or starting with Nb, and the two cases
  // (N Nb)^r and m (N Nb)^r with r >= 2, where the last Nb becomes Mb.
  if (has_m && has_mb && (len == 0 || nb_first)) {
    put(concat({{N}, block, {Mb}}), 1);
    return out;
  }
  if (!has_mb && len >= 2 && len % 2 == 0 && !nb_first && (!has_m || r >= 2)) {
    put(concat({has_m ? Column{m} : Column{}, repeat({N, Nb}, r - 1), {N, Mb}}), has_m ? LaurentPoly(1) : q(-1));
    return out;
  }
  if (!has_mb && nb_first) {
    if (len % 2 == 0 && !has_m) {
      put(concat({{N}, repeat({Nb, N}, r - 1), {Mb}}), -q(2 * r - 1));
      return out;
    }
    if (len % 2 == 0 && has_m) {
      put(concat({{N}, repeat({Nb, N}, r)}), 1);
      put(concat({{m, N}, repeat({Nb, N}, r - 1), {Mb}}), -q(2 * r));
      return out;
    }
    if (len % 2 == 1 && r >= 1 && !has_m) {
      put(concat({repeat({Nb, N}, r), {Mb}}), 1);
      put(concat({repeat({N, Nb}, r), {Mb}}), q(2 * r));
      return out;
    }
    if (len % 2 == 1 && r >= 1 && has_m) {
      put(repeat({N, Nb}, r + 1), 1);
      put(concat({{m}, repeat({Nb, N}, r), {Mb}}), q(1));
      put(concat({{m}, repeat({N, Nb}, r), {Mb}}), q(2 * r + 1));
      return out;
    }
    if (len == 1 && has_m) {
      put({N, Nb}, 1);
      put({m, Mb}, q(1));
      return out;
    }
  }
  bool has_factor = false;
  for (std::size_t k = 0; k + 1 < s.sub.size(); ++k) has_factor |= s.sub[k] == Nb && s.sub[k + 1] == N;
  if (!has_factor && phi_of(c, n - 1, kind) == 1) return crystal_term(c, n - 1, kind);
  return out;
}

}  // namespace

void WedgeVector::add(const Column& c, const LaurentPoly& coeff) { add_term(terms, c, coeff); }

WedgeVector& WedgeVector::operator+=(const WedgeVector& other) {
  for (const auto& [c, v] : other.terms) add(c, v);
  return *this;
}

WedgeVector WedgeVector::scaled(const LaurentPoly& coeff) const {
  WedgeVector out{kind, p, {}};
  if (coeff.is_zero()) return out;
  for (const auto& [c, v] : terms) out.terms.emplace(c, v * coeff);
  return out;
}

LaurentPoly WedgeVector::coeff(const Column& c) const {
  auto it = terms.find(c);
  return it == terms.end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<Column, LaurentPoly>> WedgeVector::sorted() const {
  std::vector<std::pair<Column, LaurentPoly>> out(terms.begin(), terms.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return column_less(a.first, b.first, kind.rank); });
  return out;
}

WedgeVector basis_vector(const Column& c, const AlgebraKind& kind) {
  WedgeVector v{kind, static_cast<int>(c.size()), {}};
  v.terms.emplace(c, LaurentPoly(1));
  return v;
}

int straighten_fuel(int p) {
  static const int override_limit = [] {
    const char* env = std::getenv("QCB_STEP_LIMIT");
    if (!env || !*env) return 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    return (*end == '\0' && v > 0 && v < (1L << 30)) ? static_cast<int>(v) : 0;
  }();
  return override_limit > 0 ? override_limit : std::max(1, 10 * p * p);
}

WedgeVector straighten(const std::vector<Letter>& letters, const AlgebraKind& kind) {
  for (Letter x : letters)
    if (!is_valid_letter(x, kind)) fail(ErrorKind::InvalidArgument, "letter " + to_string(x) + " is not in the alphabet");
  const int p = static_cast<int>(letters.size());
  WedgeVector v{kind, p, {}};
  v.terms = straighten_rec(letters, kind, 0, straighten_fuel(p), cache_for(kind));
  return v;
}

Column phi_involution(const Column& c, int n) {
  Column out = c;
  for (Letter& x : out)
    if (x.index() == n) x = x.bar();
  return out;
}

int wedge_t_exponent(const Column& c, int i, const AlgebraKind& kind) {
  return cartan_exponent(column_weight(c, kind.rank), i, kind);
}

WedgeVector wedge_f(const Column& c, int i, const AlgebraKind& kind) {
  require(i >= 1 && i <= kind.rank, ErrorKind::InvalidArgument, "operator index out of range");
  KindCache& cache = cache_for(kind);
  if (auto it = cache.f.find({c, i}); it != cache.f.end()) return it->second;
  const int n = kind.rank;
  WedgeVector v{kind, static_cast<int>(c.size()), {}};
  if (kind.is_B()) {
    v.terms = i < n ? f_short(c, i, kind) : f_n_B(c, kind);
  } else if (i <= n - 2) {
    v.terms = f_short(c, i, kind);
  } else if (i == n - 1) {
    v.terms = f_n1_D(c, kind);
  } else {
    for (const auto& [col, coeff] : f_n1_D(phi_involution(c, n), kind)) v.add(phi_involution(col, n), coeff);
  }
  cache.f.emplace(std::pair{c, i}, v);
  return v;
}

WedgeVector wedge_f(const WedgeVector& v, int i) {
  WedgeVector out{v.kind, v.p, {}};
  for (const auto& [c, coeff] : v.terms) out += wedge_f(c, i, v.kind).scaled(coeff);
  return out;
}

WedgeVector wedge_f_divided(const Column& c, int i, int k, const AlgebraKind& kind) {
  require(k >= 0, ErrorKind::InvalidArgument, "divided power must be nonnegative");
  if (k == 0) return basis_vector(c, kind);
  if (k == 1) return wedge_f(c, i, kind);
  KindCache& cache = cache_for(kind);
  if (auto it = cache.f_divided.find({c, i, k}); it != cache.f_divided.end()) return it->second;
  // f^{(k)} = f f^{(k-1)} / [k]_i
  const LaurentPoly qk = quantum_int(k, qi_exponent(kind, i));
  WedgeVector v = wedge_f(wedge_f_divided(c, i, k - 1, kind), i);
  for (auto& [col, coeff] : v.terms) coeff = divide_exact(coeff, qk);
  cache.f_divided.emplace(std::tuple{c, i, k}, v);
  return v;
}

WedgeVector wedge_f_divided(const WedgeVector& v, int i, int k) {
  WedgeVector out{v.kind, v.p, {}};
  for (const auto& [c, coeff] : v.terms) out += wedge_f_divided(c, i, k, v.kind).scaled(coeff);
  return out;
}

WedgeVector tensor_lift_f(const Column& c, int i, const AlgebraKind& kind) {
  const int n = kind.rank, d = qi_exponent(kind, i);
  WedgeVector out{kind, static_cast<int>(c.size()), {}};
  int t = 0;  // accumulated exponent of t_i on the factors to the left
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (auto y = vec_edge(c[k], i, Dir::F, kind)) {
      LaurentPoly coeff = q(d * t);
      if (kind.is_B() && i == n && c[k].is_zero()) coeff *= q(1) + q(-1);
      auto m = c;
      m[k] = *y;
      out += straighten(m, kind).scaled(coeff);
    }
    t += cartan_exponent(letter_weight(c[k], n), i, kind);
  }
  return out;
}

}  // namespace qcb
