#include "qcb/crystal.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>

#include "qcb/error.hpp"

namespace qcb {

SpinColumn SpinColumn::highest(const AlgebraKind& kind, bool minus) {
  SpinColumn s{kind, 0};
  if (minus) {
    require(kind.is_D(), ErrorKind::InvalidArgument, "minus spin class exists only in type D");
    s.barred = 1u << (kind.rank - 1);
  }
  return s;
}

bool SpinColumn::has(Letter x) const {
  if (x.is_zero() || x.index() > kind.rank) return false;
  const bool bit = (barred >> (x.index() - 1)) & 1u;
  return bit == x.is_barred();
}

int SpinColumn::barred_count() const { return std::popcount(barred); }

std::vector<Letter> SpinColumn::letters() const {
  std::vector<Letter> out;
  for (int k = 1; k <= kind.rank; ++k)
    if (!((barred >> (k - 1)) & 1u)) out.push_back(unbarred(k));
  for (int k = kind.rank; k >= 1; --k)
    if ((barred >> (k - 1)) & 1u) out.push_back(barred_letter(k));
  return out;
}

Weight SpinColumn::weight() const {
  Weight w(kind.rank);
  for (int k = 1; k <= kind.rank; ++k) w.doubled[k - 1] = ((barred >> (k - 1)) & 1u) ? -1 : 1;
  return w;
}

std::string SpinColumn::to_string() const {
  std::string out = "s:";
  bool first = true;
  for (Letter x : letters()) {
    if (!first) out += ',';
    first = false;
    out += qcb::to_string(x);
  }
  return out;
}

SpinColumn SpinColumn::parse(const std::string& text, const AlgebraKind& kind) {
  std::string body = text;
  if (body.rfind("s:", 0) == 0) body = body.substr(2);
  SpinColumn s{kind, 0};
  std::uint32_t seen = 0;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    Letter x = parse_letter(tok);
    require(!x.is_zero() && x.index() <= kind.rank, ErrorKind::InvalidArgument,
            "bad spin letter '" + tok + "'");
    const std::uint32_t bit = 1u << (x.index() - 1);
    require(!(seen & bit), ErrorKind::InvalidArgument, "spin column repeats index " + std::to_string(x.index()));
    seen |= bit;
    if (x.is_barred()) s.barred |= bit;
  }
  require(std::popcount(seen) == kind.rank, ErrorKind::InvalidArgument,
          "spin column '" + text + "' must choose one letter per index");
  return s;
}

std::vector<SpinColumn> enumerate_spin_columns(const AlgebraKind& kind) {
  std::vector<SpinColumn> out;
  for (std::uint32_t m = 0; m < (1u << kind.rank); ++m) out.push_back(SpinColumn{kind, m});
  return out;
}

std::optional<Letter> vec_edge(Letter x, int i, Dir dir, const AlgebraKind& kind) {
  const int n = kind.rank;
  require(1 <= i && i <= n, ErrorKind::InvalidArgument, "Chevalley index out of range");
  // Edges as (source, target) pairs of the f-direction.
  Letter edges[2][2];
  int count = 2;
  if (i < n) {
    edges[0][0] = unbarred(i);
    edges[0][1] = unbarred(i + 1);
    edges[1][0] = barred_letter(i + 1);
    edges[1][1] = barred_letter(i);
  } else if (kind.is_B()) {
    edges[0][0] = unbarred(n);
    edges[0][1] = Letter{0};
    edges[1][0] = Letter{0};
    edges[1][1] = barred_letter(n);
  } else {
    edges[0][0] = unbarred(n - 1);
    edges[0][1] = barred_letter(n);
    edges[1][0] = unbarred(n);
    edges[1][1] = barred_letter(n - 1);
  }
  for (int k = 0; k < count; ++k) {
    const Letter from = dir == Dir::F ? edges[k][0] : edges[k][1];
    const Letter to = dir == Dir::F ? edges[k][1] : edges[k][0];
    if (from == x) return to;
  }
  return std::nullopt;
}

EpsPhi letter_eps_phi(Letter x, int i, const AlgebraKind& kind) {
  EpsPhi r;
  for (auto y = vec_edge(x, i, Dir::E, kind); y; y = vec_edge(*y, i, Dir::E, kind)) ++r.eps;
  for (auto y = vec_edge(x, i, Dir::F, kind); y; y = vec_edge(*y, i, Dir::F, kind)) ++r.phi;
  return r;
}

std::optional<SpinColumn> spin_apply(const SpinColumn& s, int i, Dir dir) {
  const int n = s.kind.rank;
  require(1 <= i && i <= n, ErrorKind::InvalidArgument, "Chevalley index out of range");
  // `from` lists the letters that must be present; `to` replaces them.
  std::vector<Letter> from, to;
  if (i < n) {
    from = {unbarred(i), barred_letter(i + 1)};
    to = {unbarred(i + 1), barred_letter(i)};
  } else if (s.kind.is_B()) {
    from = {unbarred(n)};
    to = {barred_letter(n)};
  } else {
    from = {unbarred(n - 1), unbarred(n)};
    to = {barred_letter(n - 1), barred_letter(n)};
  }
  if (dir == Dir::E) std::swap(from, to);
  for (Letter x : from)
    if (!s.has(x)) return std::nullopt;
  SpinColumn r = s;
  for (Letter x : to) {
    const std::uint32_t bit = 1u << (x.index() - 1);
    r.barred = x.is_barred() ? (r.barred | bit) : (r.barred & ~bit);
  }
  return r;
}

EpsPhi spin_eps_phi(const SpinColumn& s, int i) {
  return EpsPhi{spin_apply(s, i, Dir::E) ? 1 : 0, spin_apply(s, i, Dir::F) ? 1 : 0};
}

Weight Word::weight() const {
  Weight w = spin ? spin->weight() : Weight(kind.rank);
  for (Letter x : letters) w += letter_weight(x, kind.rank);
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ',';
    out += qcb::to_string(letters[k]);
  }
  if (spin) out += "|" + spin->to_string();
  return out;
}

Word Word::parse(const std::string& text, const AlgebraKind& kind) {
  Word w{kind, std::nullopt, {}};
  std::string body = text;
  if (auto bar = body.find('|'); bar != std::string::npos) {
    w.spin = SpinColumn::parse(body.substr(bar + 1), kind);
    body = body.substr(0, bar);
  }
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    Letter x = parse_letter(tok);
    require(is_valid_letter(x, kind), ErrorKind::InvalidArgument, "letter '" + tok + "' invalid for " + kind.name());
    w.letters.push_back(x);
  }
  return w;
}

bool operator<(const Word& a, const Word& b) {
  const int n = a.kind.rank;
  auto less = [n](Letter x, Letter y) { return b_rank(x, n) < b_rank(y, n); };
  if (a.letters != b.letters)
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end(), less);
  return a.spin != b.spin && (!a.spin || (b.spin && *a.spin < *b.spin));
}

namespace {

// Signature rule: each factor contributes eps minus signs then phi plus signs;
// a plus cancels the nearest later minus. f acts at the leftmost surviving
// plus, e at the rightmost surviving minus. Factor -1 is the spin factor, read last.
struct Signature {
  int eps = 0;
  int phi = 0;
  int f_factor = -2;
  int e_factor = -2;
};

Signature signature(const Word& w, int i) {
  struct Pending {
    int factor;
    int count;
  };
  std::vector<Pending> pluses;
  Signature sig;
  auto feed = [&](int factor, EpsPhi ep) {
    int minus = ep.eps;
    while (minus > 0 && !pluses.empty()) {
      int take = std::min(minus, pluses.back().count);
      minus -= take;
      if ((pluses.back().count -= take) == 0) pluses.pop_back();
    }
    if (minus > 0) {
      sig.eps += minus;
      sig.e_factor = factor;
    }
    if (ep.phi > 0) pluses.push_back({factor, ep.phi});
  };
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    feed(static_cast<int>(k), letter_eps_phi(w.letters[k], i, w.kind));
  if (w.spin) feed(-1, spin_eps_phi(*w.spin, i));
  for (const auto& p : pluses) sig.phi += p.count;
  if (!pluses.empty()) sig.f_factor = pluses.front().factor;
  return sig;
}

}  // namespace

EpsPhi word_eps_phi(const Word& w, int i) {
  auto sig = signature(w, i);
  return {sig.eps, sig.phi};
}

std::optional<Word> word_apply(const Word& w, int i, Dir dir) {
  auto sig = signature(w, i);
  const int factor = dir == Dir::F ? sig.f_factor : sig.e_factor;
  if (factor == -2) return std::nullopt;
  Word r = w;
  if (factor == -1) {
    r.spin = spin_apply(*w.spin, i, dir);
  } else {
    r.letters[factor] = *vec_edge(w.letters[factor], i, dir, w.kind);
  }
  return r;
}

std::optional<Word> word_apply(const Word& w, int i, Dir dir, int times) {
  std::optional<Word> cur = w;
  for (int k = 0; k < times && cur; ++k) cur = word_apply(*cur, i, dir);
  return cur;
}

bool is_highest_weight(const Word& w) {
  for (int i = 1; i <= w.kind.rank; ++i)
    if (word_eps_phi(w, i).eps > 0) return false;
  return true;
}

RaiseResult raise_to_highest(const Word& w) {
  RaiseResult r{w, {}};
  for (;;) {
    int i = 1;
    while (i <= w.kind.rank && word_eps_phi(r.top, i).eps == 0) ++i;
    if (i > w.kind.rank) return r;
    r.top = *word_apply(r.top, i, Dir::E);
    if (!r.path.empty() && r.path.back().first == i) {
      ++r.path.back().second;
    } else {
      r.path.emplace_back(i, 1);
    }
  }
}

std::vector<Word> component_bfs(const Word& w0) {
  std::set<Word> seen{w0};
  std::deque<Word> frontier{w0};
  while (!frontier.empty()) {
    Word w = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= w.kind.rank; ++i) {
      auto next = word_apply(w, i, Dir::F);
      if (next && seen.insert(*next).second) frontier.push_back(std::move(*next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace qcb
