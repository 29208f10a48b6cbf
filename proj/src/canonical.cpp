#include "qcb/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "qcb/error.hpp"

namespace qcb {

namespace {

constexpr int kIterationLimit = 100000;

bool contains(const Column& c, Letter x) { return std::find(c.begin(), c.end(), x) != c.end(); }

// Letters of C among n-1, n, n̄, (n-1)bar, in order.
Column tail_subword(const Column& c, int n) {
  Column s;
  for (Letter x : c)
    if (x.index() >= n - 1) s.push_back(x);
  return s;
}

// Whether s = (a b)^r c with r >= 0.
bool is_alternating_then(const Column& s, Letter a, Letter b, Letter last) {
  if (s.empty() || s.back() != last || s.size() % 2 == 0) return false;
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    if (s[k] != (k % 2 == 0 ? a : b)) return false;
  return true;
}

bool column_highest(const Column& c, const AlgebraKind& kind) { return is_highest_weight(column_word(c, kind)); }

Column raise_column(const Column& c, int i, int times, const AlgebraKind& kind) {
  auto w = word_apply(column_word(c, kind), i, Dir::E, times);
  if (!w) fail(ErrorKind::InternalInvariant, "cannot raise " + column_to_string(c));
  return w->letters;
}

int column_eps(const Column& c, int i, const AlgebraKind& kind) { return word_eps_phi(column_word(c, kind), i).eps; }

struct Block {
  std::vector<Tabloid> rows, cols;
  std::vector<ModuleVector> a, g;
  std::vector<GammaStep> gamma_log;
};

Block compute_block(const Shape& shape, const Weight& mu) {
  Block b;
  b.rows = enumerate_tabloids(shape, mu);
  b.cols = enumerate_tableaux(shape, mu);
  for (std::size_t c = 0; c < b.cols.size(); ++c) {
    b.a.push_back(a_vector(b.cols[c], shape));
    ModuleVector g = b.a.back();
    for (std::size_t j = c; j-- > 0;) {
      const LaurentPoly gamma = g.coeff(b.cols[j]).symmetrized_low_part();
      if (gamma.is_zero()) continue;
      g -= b.g[j].scaled(gamma);
      const LaurentPoly rest = g.coeff(b.cols[j]);
      if (!rest.is_zero() && rest.min_exponent() < 1)
        fail(ErrorKind::InternalInvariant, "correction left a non-positive power on " + tabloid_to_string(b.cols[j]));
      b.gamma_log.push_back({c, j, gamma});
    }
    b.g.push_back(std::move(g));
  }
  return b;
}

}  // namespace

int marsh_index(const Column& c, const AlgebraKind& kind) {
  const int n = kind.rank;
  for (Letter z : c) {
    std::vector<int> raising;
    bool movable = false;
    for (int i = 1; i <= n; ++i) {
      if (auto y = vec_edge(z, i, Dir::E, kind)) {
        raising.push_back(i);
        movable |= !contains(c, *y);
      }
    }
    if (!movable) continue;
    if (kind.is_D()) {
      const Letter N = unbarred(n), Nb = barred_letter(n), Mb = barred_letter(n - 1);
      const Column s = tail_subword(c, n);
      if (z == Mb) return n - 1;
      if (z == Nb) return is_alternating_then(s, Nb, N, Mb) ? n - 1 : n;
      if (z == N) return is_alternating_then(s, N, Nb, Mb) ? n : n - 1;
    }
    if (raising.size() != 1) fail(ErrorKind::InternalInvariant, "letter " + to_string(z) + " has several raising edges");
    return raising.front();
  }
  fail(ErrorKind::InternalInvariant, "column " + column_to_string(c) + " has no movable letter");
}

OperatorPath marsh_path(const Column& c, const AlgebraKind& kind) {
  if (!is_admissible(c, kind)) fail(ErrorKind::NotAdmissible, "column " + column_to_string(c) + " is not admissible");
  OperatorPath path;
  Column cur = c;
  for (int guard = 0; !column_highest(cur, kind); ++guard) {
    if (guard > kIterationLimit) fail(ErrorKind::IterationLimit, "Marsh path did not terminate");
    const int i = marsh_index(cur, kind);
    const int p = column_eps(cur, i, kind);
    if (p < 1) fail(ErrorKind::InternalInvariant, "Marsh index does not raise " + column_to_string(cur));
    cur = raise_column(cur, i, p, kind);
    path.push_back({i, p});
  }
  return path;
}

WedgeVector global_column(const Column& c, const AlgebraKind& kind) {
  const OperatorPath path = marsh_path(c, kind);
  const Column top = raise_to_highest(column_word(c, kind)).top.letters;
  WedgeVector v = basis_vector(top, kind);
  for (auto it = path.rbegin(); it != path.rend(); ++it) v = wedge_f_divided(v, it->first, it->second);
  return v;
}

APath a_path(const Tabloid& t, const Shape& shape) {
  if (!is_orthogonal_tableau(t, shape))
    fail(ErrorKind::NotOrthogonalTableau, tabloid_to_string(t) + " is not an orthogonal tableau of the shape");
  const AlgebraKind& kind = shape.kind;
  const Tabloid top = highest_tableau(shape);
  APath out;
  Tabloid cur = t;
  out.tableaux.push_back(cur);
  for (int guard = 0; !(cur == top); ++guard) {
    if (guard > kIterationLimit) fail(ErrorKind::IterationLimit, "A(T) path did not terminate");
    const std::size_t r = cur.columns.size();
    std::size_t k = r;  // 1-based index of the rightmost non-highest column, 0 if none
    while (k > 0 && column_highest(cur.columns[k - 1], kind)) --k;

    if (k == 0) {
      // Only the spin column differs from T_lambda: v_T is already global.
      if (!cur.spin) fail(ErrorKind::InternalInvariant, "no raising step for " + tabloid_to_string(cur));
      out.direct = true;
      break;
    }

    auto col = [&](std::size_t j) -> Column& { return cur.columns[j - 1]; };
    const int i1 = marsh_index(col(k), kind);
    auto f_kills = [&](std::size_t j) { return wedge_f(col(j), i1, kind).is_zero(); };
    auto raisable = [&](std::size_t j) { return column_eps(col(j), i1, kind) > 0; };

    std::size_t l = k;
    if (k == 1) {
      l = 1;
    } else if (!f_kills(k) || !raisable(k - 1)) {
      l = k;
    } else {
      // Smallest l with f v_{C_j} = 0 for j in (l, k] and every C_j, j in [l, k], raisable.
      if (!raisable(k)) fail(ErrorKind::InternalInvariant, "rightmost column is not raisable");
      l = k;
      while (l > 1 && f_kills(l) && raisable(l - 1)) --l;
    }

    int total = 0;
    for (std::size_t j = l; j <= k; ++j) {
      const int e = column_eps(col(j), i1, kind);
      if (e > 0) col(j) = raise_column(col(j), i1, e, kind);
      total += e;
    }
    if (l == 1 && cur.spin && wedge_f(out.tableaux.back().columns[0], i1, kind).is_zero() &&
        spin_eps_phi(*cur.spin, i1).eps == 1) {
      cur.spin = spin_apply(*cur.spin, i1, Dir::E);
      ++total;
    }
    if (total == 0) fail(ErrorKind::InternalInvariant, "A(T) step made no progress at " + tabloid_to_string(cur));
    if (!is_orthogonal_tableau(cur, shape))
      fail(ErrorKind::InternalInvariant, "A(T) step left the orthogonal tableaux at " + tabloid_to_string(cur));
    out.steps.push_back({i1, total});
    out.tableaux.push_back(cur);
  }
  return out;
}

ModuleVector a_vector(const Tabloid& t, const Shape& shape) {
  const APath path = a_path(t, shape);
  return apply_monomial(tabloid_vector(path.tableaux.back(), shape), path.steps);
}

CanonicalMatrix canonical_matrix(const DominantWeight& lambda, const AlgebraKind& kind, const std::optional<Weight>& mu,
                                 int jobs) {
  const Shape shape = shape_for(lambda, kind);
  CanonicalMatrix m{shape, mu, {}, {}, {}, {}, {}};

  std::vector<Weight> weights;
  if (mu) {
    weights.push_back(*mu);
  } else {
    std::set<Weight> seen;
    for (const auto& t : enumerate_tableaux_bfs(shape)) seen.insert(weight_of_tabloid(t, kind));
    weights.assign(seen.begin(), seen.end());
  }

  std::vector<Block> blocks(weights.size());
  std::vector<std::exception_ptr> errors(weights.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w; (w = next++) < weights.size();) {
      try {
        blocks[w] = compute_block(shape, weights[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(1, weights.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (blocks.size() == 1) {
    Block& b = blocks.front();
    m.rows = std::move(b.rows);
    m.cols = std::move(b.cols);
    m.a = std::move(b.a);
    m.g = std::move(b.g);
    m.gamma_log = std::move(b.gamma_log);
    return m;
  }

  // Merge the weight blocks, keeping rows and columns ⊴-ascending.
  const TabloidLess less{kind.rank};
  struct Col {
    Tabloid t;
    std::size_t block, index;
  };
  std::vector<Col> cols;
  for (std::size_t w = 0; w < blocks.size(); ++w) {
    for (std::size_t c = 0; c < blocks[w].cols.size(); ++c) cols.push_back({blocks[w].cols[c], w, c});
    m.rows.insert(m.rows.end(), blocks[w].rows.begin(), blocks[w].rows.end());
  }
  std::sort(m.rows.begin(), m.rows.end(), less);
  std::sort(cols.begin(), cols.end(), [&](const Col& x, const Col& y) { return less(x.t, y.t); });
  std::vector<std::vector<std::size_t>> where(blocks.size());
  for (std::size_t w = 0; w < blocks.size(); ++w) where[w].resize(blocks[w].cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    where[cols[c].block][cols[c].index] = c;
    m.cols.push_back(cols[c].t);
    m.a.push_back(std::move(blocks[cols[c].block].a[cols[c].index]));
    m.g.push_back(std::move(blocks[cols[c].block].g[cols[c].index]));
  }
  for (std::size_t w = 0; w < blocks.size(); ++w)
    for (const auto& s : blocks[w].gamma_log) m.gamma_log.push_back({where[w][s.col], where[w][s.j], s.gamma});
  std::sort(m.gamma_log.begin(), m.gamma_log.end(), [](const GammaStep& x, const GammaStep& y) {
    return x.col != y.col ? x.col < y.col : x.j > y.j;
  });
  return m;
}

}  // namespace qcb
