#pragma once

// Kashiwara operators on letters, spin columns and words.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcb/rootdata.hpp"

namespace qcb {

enum class Dir { F, E };

struct EpsPhi {
  int eps = 0;
  int phi = 0;
  friend bool operator==(const EpsPhi&, const EpsPhi&) = default;
};

// One letter from each pair {k, k̄}; bit k-1 of `barred` set means k̄ is chosen.
struct SpinColumn {
  AlgebraKind kind;
  std::uint32_t barred = 0;

  // The highest spin column: all unbarred, or for D with minus set, only n̄ barred.
  static SpinColumn highest(const AlgebraKind& kind, bool minus = false);

  bool has(Letter x) const;
  int barred_count() const;
  // SP+ (even number of barred letters) versus SP-.
  bool is_plus() const { return barred_count() % 2 == 0; }
  // Ascending in the B order.
  std::vector<Letter> letters() const;
  Weight weight() const;

  std::string to_string() const;  // "s:1,-2"
  static SpinColumn parse(const std::string& text, const AlgebraKind& kind);

  friend bool operator==(const SpinColumn& a, const SpinColumn& b) { return a.barred == b.barred; }
  friend auto operator<=>(const SpinColumn& a, const SpinColumn& b) { return a.barred <=> b.barred; }
};

std::vector<SpinColumn> enumerate_spin_columns(const AlgebraKind& kind);

std::optional<Letter> vec_edge(Letter x, int i, Dir dir, const AlgebraKind& kind);
EpsPhi letter_eps_phi(Letter x, int i, const AlgebraKind& kind);

std::optional<SpinColumn> spin_apply(const SpinColumn& s, int i, Dir dir);
EpsPhi spin_eps_phi(const SpinColumn& s, int i);

// Vertex of the tensor power of the vector crystal, optionally followed by a
// spin factor. Letters run from the first tensor factor to the last.
struct Word {
  AlgebraKind kind;
  std::optional<SpinColumn> spin;
  std::vector<Letter> letters;

  Weight weight() const;
  // "2,0,-3", or "2,0,-3|s:1,-2" with a spin factor.
  std::string to_string() const;
  static Word parse(const std::string& text, const AlgebraKind& kind);

  friend bool operator==(const Word& a, const Word& b) {
    return a.spin == b.spin && a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b);
};

EpsPhi word_eps_phi(const Word& w, int i);
std::optional<Word> word_apply(const Word& w, int i, Dir dir);
// Applies the operator `times` times; none as soon as one step fails.
std::optional<Word> word_apply(const Word& w, int i, Dir dir, int times);
bool is_highest_weight(const Word& w);

struct RaiseResult {
  Word top;
  std::vector<std::pair<int, int>> path;  // (i, count), in application order
};

// Raises with the smallest applicable i first until every eps vanishes.
RaiseResult raise_to_highest(const Word& w);

// All words reachable from w0 by lowering operators, sorted.
std::vector<Word> component_bfs(const Word& w0);

}  // namespace qcb
