#include "qcb/shapes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "qcb/error.hpp"

namespace qcb {

namespace {

bool valid_pair(Letter a, Letter b, const AlgebraKind& kind) {
  const int n = kind.rank;
  if (kind.is_B()) return b_rank(a, n) < b_rank(b, n) || (a.is_zero() && b.is_zero());
  const int la = d_level(a, n), lb = d_level(b, n);
  return la < lb || (la == n && lb == n && a != b);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

int lex_compare(const std::vector<Letter>& a, const std::vector<Letter>& b, int n) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < m; ++k) {
    const int ra = b_rank(a[k], n), rb = b_rank(b[k], n);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool spin_allowed(const SpinColumn& s, SpinSlot slot) {
  switch (slot) {
    case SpinSlot::None: return false;
    case SpinSlot::B: return true;
    case SpinSlot::DPlus: return s.is_plus();
    case SpinSlot::DMinus: return !s.is_plus();
  }
  return false;
}

}  // namespace

bool is_valid_column(const Column& c, const AlgebraKind& kind) {
  for (Letter x : c)
    if (!is_valid_letter(x, kind)) return false;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (!valid_pair(c[k - 1], c[k], kind)) return false;
  return true;
}

std::string column_to_string(const Column& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ',';
    out += to_string(c[k]);
  }
  return out;
}

Column parse_column(const std::string& text, const AlgebraKind& kind) {
  Column c;
  for (const auto& tok : split(text, ',')) c.push_back(parse_letter(tok));
  if (!is_valid_column(c, kind))
    fail(ErrorKind::InvalidArgument, "'" + text + "' is not a column of type " + kind.name());
  return c;
}

Word column_word(const Column& c, const AlgebraKind& kind) { return Word{kind, std::nullopt, c}; }

Weight column_weight(const Column& c, int n) {
  Weight w(n);
  for (Letter x : c)
    if (!x.is_zero()) w.doubled[x.index() - 1] += x.is_barred() ? -2 : 2;
  return w;
}

bool column_less(const Column& a, const Column& b, int n) { return lex_compare(a, b, n) < 0; }

Column highest_column(const AlgebraKind& kind, int p, bool minus) {
  Column c;
  for (int k = 1; k <= p; ++k) c.push_back(unbarred(k));
  if (minus) {
    require(kind.is_D() && p == kind.rank, ErrorKind::InvalidArgument, "minus column needs type D and height n");
    c.back() = barred_letter(kind.rank);
  }
  return c;
}

bool is_admissible(const Column& c, const AlgebraKind& kind) {
  if (c.empty()) return true;
  const int p = static_cast<int>(c.size());
  if (p > kind.rank) return false;
  const Word top = raise_to_highest(column_word(c, kind)).top;
  if (top.letters == highest_column(kind, p)) return true;
  return kind.is_D() && p == kind.rank && top.letters == highest_column(kind, p, true);
}

std::vector<Column> enumerate_columns(const AlgebraKind& kind, int p, bool admissible_only) {
  require(p >= 0, ErrorKind::InvalidArgument, "column height must be nonnegative");
  const auto letters = alphabet(kind);
  std::vector<Column> out;
  Column cur;
  auto grow = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == p) {
      if (!admissible_only || is_admissible(cur, kind)) out.push_back(cur);
      return;
    }
    for (Letter x : letters) {
      if (!cur.empty() && !valid_pair(cur.back(), x, kind)) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  std::sort(out.begin(), out.end(), [&](const Column& a, const Column& b) { return column_less(a, b, kind.rank); });
  return out;
}

Decomposition decompose_lambda(const DominantWeight& lambda, const AlgebraKind& kind) {
  const int n = kind.rank;
  require(lambda.rank() == n, ErrorKind::InvalidArgument, "lambda rank mismatch");
  Decomposition d{SpinSlot::None, lambda};
  if (kind.is_B()) {
    if (lambda.coeffs[n - 1] % 2 != 0) {
      d.spin = SpinSlot::B;
      d.rest.coeffs[n - 1] -= 1;
    }
    return d;
  }
  const int diff = lambda.coeffs[n - 1] - lambda.coeffs[n - 2];
  if (diff % 2 != 0) {
    if (diff > 0) {
      d.spin = SpinSlot::DPlus;
      d.rest.coeffs[n - 1] -= 1;
    } else {
      d.spin = SpinSlot::DMinus;
      d.rest.coeffs[n - 2] -= 1;
    }
  }
  return d;
}

int Shape::boxes() const {
  int total = 0;
  for (int h : heights) total += h;
  return total;
}

Shape shape_of(const DominantWeight& lambda_prime, SpinSlot spin, const AlgebraKind& kind) {
  const int n = kind.rank;
  require(lambda_prime.rank() == n, ErrorKind::InvalidArgument, "lambda rank mismatch");
  const auto& c = lambda_prime.coeffs;
  Shape s{kind, lambda_prime, spin, {}, DSign::Zero};
  std::vector<int> count(n + 1, 0);
  if (kind.is_B()) {
    require(c[n - 1] % 2 == 0, ErrorKind::NotInOmegaPlus, "lambda_n must be even in Omega_+ of type B");
    for (int p = 1; p < n; ++p) count[p] = c[p - 1];
    count[n] = c[n - 1] / 2;
  } else {
    const int diff = c[n - 1] - c[n - 2];
    require(diff % 2 == 0, ErrorKind::NotInOmegaPlus, "lambda_n - lambda_{n-1} must be even in Omega_+ of type D");
    for (int p = 1; p <= n - 2; ++p) count[p] = c[p - 1];
    count[n - 1] = std::min(c[n - 1], c[n - 2]);
    count[n] = std::abs(diff) / 2;
    s.sign = diff > 0 ? DSign::Plus : (diff < 0 ? DSign::Minus : DSign::Zero);
  }
  for (int p = n; p >= 1; --p)
    for (int k = 0; k < count[p]; ++k) s.heights.push_back(p);
  // Record the full weight, spin part included.
  if (spin == SpinSlot::B || spin == SpinSlot::DPlus) s.lambda.coeffs[n - 1] += 1;
  if (spin == SpinSlot::DMinus) s.lambda.coeffs[n - 2] += 1;
  return s;
}

Shape shape_for(const DominantWeight& lambda, const AlgebraKind& kind) {
  auto d = decompose_lambda(lambda, kind);
  return shape_of(d.rest, d.spin, kind);
}

bool TabloidLess::operator()(const Tabloid& a, const Tabloid& b) const {
  if (a.columns.size() != b.columns.size()) return a.columns.size() < b.columns.size();
  for (std::size_t k = a.columns.size(); k-- > 0;) {
    int c = lex_compare(a.columns[k], b.columns[k], n);
    if (c != 0) return c < 0;
  }
  if (a.spin && b.spin) return lex_compare(a.spin->letters(), b.spin->letters(), n) < 0;
  return !a.spin && b.spin;
}

bool tabloid_leq(const Tabloid& a, const Tabloid& b, const Shape& shape) {
  require(fits_shape(a, shape) && fits_shape(b, shape), ErrorKind::ShapeMismatch,
          "tabloids compared under ⊴ must share the shape");
  return !TabloidLess{shape.kind.rank}(b, a);
}

Word tabloid_reading(const Tabloid& t, const AlgebraKind& kind) {
  Word w{kind, t.spin, {}};
  for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it) w.letters.insert(w.letters.end(), it->begin(), it->end());
  return w;
}

bool fits_shape(const Tabloid& t, const Shape& shape) {
  if (t.spin.has_value() != (shape.spin != SpinSlot::None)) return false;
  if (t.spin && !spin_allowed(*t.spin, shape.spin)) return false;
  if (t.columns.size() != shape.heights.size()) return false;
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    if (static_cast<int>(t.columns[k].size()) != shape.heights[k]) return false;
    if (!is_valid_column(t.columns[k], shape.kind)) return false;
  }
  return true;
}

Tabloid word_to_tabloid(const Word& w, const Shape& shape) {
  if (static_cast<int>(w.letters.size()) != shape.boxes())
    fail(ErrorKind::MalformedWord, "word '" + w.to_string() + "' has the wrong length for the shape");
  if (w.spin.has_value() != (shape.spin != SpinSlot::None))
    fail(ErrorKind::MalformedWord, "word '" + w.to_string() + "' does not match the spin slot of the shape");
  Tabloid t{w.spin, std::vector<Column>(shape.heights.size())};
  std::size_t pos = 0;
  for (std::size_t k = shape.heights.size(); k-- > 0;) {
    const auto h = static_cast<std::size_t>(shape.heights[k]);
    t.columns[k].assign(w.letters.begin() + static_cast<long>(pos), w.letters.begin() + static_cast<long>(pos + h));
    pos += h;
  }
  if (!fits_shape(t, shape)) fail(ErrorKind::MalformedWord, "word '" + w.to_string() + "' does not split into columns");
  return t;
}

Weight weight_of_tabloid(const Tabloid& t, const AlgebraKind& kind) {
  Weight w = t.spin ? t.spin->weight() : Weight(kind.rank);
  for (const auto& c : t.columns) w += column_weight(c, kind.rank);
  return w;
}

Tabloid highest_tableau(const Shape& shape) {
  const AlgebraKind& kind = shape.kind;
  Tabloid t;
  if (shape.spin != SpinSlot::None) t.spin = SpinColumn::highest(kind, shape.spin == SpinSlot::DMinus);
  for (int h : shape.heights)
    t.columns.push_back(highest_column(kind, h, kind.is_D() && h == kind.rank && shape.sign == DSign::Minus));
  return t;
}

bool is_orthogonal_tableau(const Tabloid& t, const Shape& shape) {
  if (!fits_shape(t, shape)) return false;
  return raise_to_highest(tabloid_reading(t, shape.kind)).top == tabloid_reading(highest_tableau(shape), shape.kind);
}

std::string tabloid_to_string(const Tabloid& t) {
  std::string out;
  if (t.spin) out = t.spin->to_string();
  for (const auto& c : t.columns) {
    if (!out.empty()) out += '/';
    out += column_to_string(c);
  }
  return out;
}

Tabloid parse_tabloid(const std::string& text, const AlgebraKind& kind) {
  Tabloid t;
  if (text.empty()) return t;
  auto parts = split(text, '/');
  std::size_t start = 0;
  if (parts[0].rfind("s:", 0) == 0) {
    t.spin = SpinColumn::parse(parts[0], kind);
    start = 1;
  }
  for (std::size_t k = start; k < parts.size(); ++k) t.columns.push_back(parse_column(parts[k], kind));
  for (std::size_t k = 1; k < t.columns.size(); ++k)
    require(t.columns[k].size() <= t.columns[k - 1].size(), ErrorKind::InvalidArgument,
            "column heights must weakly decrease in '" + text + "'");
  return t;
}

std::vector<Tabloid> enumerate_tabloids(const Shape& shape, const std::optional<Weight>& mu) {
  const AlgebraKind& kind = shape.kind;
  const int n = kind.rank;
  const std::size_t r = shape.heights.size();

  struct Candidate {
    Column column;
    Weight weight;
  };
  std::map<int, std::vector<Candidate>> by_height;
  for (int h : shape.heights)
    if (!by_height.count(h))
      for (auto& c : enumerate_columns(kind, h, false)) by_height[h].push_back({c, column_weight(c, n)});

  // Boxes still to fill after slot k; each box moves one doubled coordinate by 2.
  std::vector<int> rest(r + 1, 0);
  for (std::size_t k = r; k-- > 0;) rest[k] = rest[k + 1] + shape.heights[k];

  std::vector<Tabloid> out;
  Tabloid cur;
  cur.columns.resize(r);
  Weight acc(n);
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (mu) {
      int gap = 0;
      for (int j = 0; j < n; ++j) gap += std::abs(mu->doubled[j] - acc.doubled[j]);
      if (gap > 2 * rest[k]) return;
    }
    if (k == r) {
      if (!mu || acc == *mu) out.push_back(cur);
      return;
    }
    for (const auto& cand : by_height[shape.heights[k]]) {
      cur.columns[k] = cand.column;
      acc += cand.weight;
      self(self, k + 1);
      acc -= cand.weight;
    }
  };

  if (shape.spin == SpinSlot::None) {
    fill(fill, 0);
  } else {
    for (const auto& s : enumerate_spin_columns(kind)) {
      if (!spin_allowed(s, shape.spin)) continue;
      cur.spin = s;
      acc = s.weight();
      fill(fill, 0);
    }
  }
  std::sort(out.begin(), out.end(), TabloidLess{n});
  return out;
}

std::vector<Tabloid> enumerate_tableaux(const Shape& shape, const std::optional<Weight>& mu) {
  if (!mu) return enumerate_tableaux_bfs(shape);
  std::vector<Tabloid> out;
  for (auto& t : enumerate_tabloids(shape, mu))
    if (is_orthogonal_tableau(t, shape)) out.push_back(std::move(t));
  return out;
}

std::vector<Tabloid> enumerate_tableaux_bfs(const Shape& shape) {
  std::vector<Tabloid> out;
  for (const auto& w : component_bfs(tabloid_reading(highest_tableau(shape), shape.kind)))
    out.push_back(word_to_tabloid(w, shape));
  std::sort(out.begin(), out.end(), TabloidLess{shape.kind.rank});
  return out;
}

}  // namespace qcb
