#pragma once

// Algebra type, alphabets, weights and Cartan pairings for so(2n+1) and so(2n).

#include <compare>
#include <string>
#include <vector>

namespace qcb {

enum class Family { B, D };

struct AlgebraKind {
  Family family = Family::B;
  int rank = 2;

  // Validates rank bounds. D_2 is only accepted with allow_experimental set;
  // there is no correctness promise for it.
  static AlgebraKind make(Family family, int rank, bool allow_experimental = false);

  bool is_B() const noexcept { return family == Family::B; }
  bool is_D() const noexcept { return family == Family::D; }
  std::string name() const;
  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

// Signed letter: k > 0 is the unbarred letter k, k < 0 is the barred letter |k|,
// 0 is the B-only letter 0.
struct Letter {
  int value = 0;

  constexpr int index() const noexcept { return value < 0 ? -value : value; }
  constexpr bool is_barred() const noexcept { return value < 0; }
  constexpr bool is_zero() const noexcept { return value == 0; }
  constexpr Letter bar() const noexcept { return Letter{-value}; }

  // Raw order on the signed value; only used for container keys.
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter unbarred(int i) { return Letter{i}; }
constexpr Letter barred_letter(int i) { return Letter{-i}; }

bool is_valid_letter(Letter x, const AlgebraKind& kind);

// Position in the total order 1 < 2 < ... < n < 0 < n̄ < ... < 1̄. Used for
// both families; D letters are compared as B letters.
constexpr int b_rank(Letter x, int n) noexcept {
  if (x.value > 0) return x.value;
  if (x.value == 0) return n + 1;
  return 2 * n + 2 + x.value;
}

// Level in the partial order of D_n, where n and n̄ are incomparable and share
// level n.
constexpr int d_level(Letter x, int n) noexcept {
  if (x.value > 0) return x.value < n ? x.value : n;
  return x.index() < n ? 2 * n - x.index() : n;
}

inline bool letter_leq_B(Letter x, Letter y, int n) { return b_rank(x, n) <= b_rank(y, n); }

// Letters of the alphabet in ascending B order (no 0 for D).
std::vector<Letter> alphabet(const AlgebraKind& kind);

std::string to_string(Letter x);
Letter parse_letter(const std::string& token);

// Twice the weight in the epsilon basis, so that spin weights stay integral.
struct Weight {
  std::vector<int> doubled;

  Weight() = default;
  explicit Weight(int n) : doubled(n, 0) {}
  explicit Weight(std::vector<int> d) : doubled(std::move(d)) {}

  int size() const noexcept { return static_cast<int>(doubled.size()); }
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight w);
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "0,2,-1" with halves written as "1/2".
  std::string to_string() const;
};

Weight parse_weight(const std::string& text, int n);

// Coefficients on the fundamental weights Lambda_1..Lambda_n.
struct DominantWeight {
  std::vector<int> coeffs;

  int rank() const noexcept { return static_cast<int>(coeffs.size()); }
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
  std::string to_string() const;
};

DominantWeight parse_dominant(const std::string& text, int n);

Weight letter_weight(Letter x, int n);
Weight fundamental_weight(const AlgebraKind& kind, int i);
Weight to_weight(const AlgebraKind& kind, const DominantWeight& lambda);
Weight simple_root(const AlgebraKind& kind, int i);

// <w, alpha_i^vee>; throws NonIntegralPairing on inconsistent parity.
int cartan_exponent(const Weight& w, int i, const AlgebraKind& kind);

// d with q_i = q^d: B gives 2 for i < n and 1 for i = n; D gives 1.
int qi_exponent(const AlgebraKind& kind, int i);

}  // namespace qcb
