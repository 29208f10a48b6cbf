#pragma once

// Exact arithmetic in Z[q, q^-1].

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qcb {

using Integer = mpz_class;

class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor): 0, 1, -1 read naturally
  LaurentPoly(std::initializer_list<std::pair<int, long>> terms);

  static LaurentPoly monomial(Integer coeff, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }
  // Terms need not be sorted or unique; zeros are dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  int min_exponent() const;
  int max_exponent() const;
  Integer coeff(int exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiplication by q^e.
  LaurentPoly shifted(int e) const;

  // q -> q^-1.
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return *this == bar(); }
  // True when no exponent is negative.
  bool is_polynomial() const { return terms_.empty() || terms_.front().exponent >= 0; }
  // Value at q = 0; throws NegativePower when the polynomial is not regular there.
  Integer eval_at_zero() const;
  // Value at q = 1 (sum of coefficients).
  Integer eval_at_one() const;

  // Non-positive part plus its mirror image into positive exponents. For
  // c = sum a_j q^j this is sum_{j<=0} a_j q^j + sum_{j>=1} a_{-j} q^j, which is
  // bar-invariant and makes c - symmetrized() a multiple of q.
  LaurentPoly symmetrized_low_part() const;

  // Ascending textual form, e.g. "q^-1+2+q^3", "q^5-q^9", "0".
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& other, int sign);
  std::vector<Term> terms_;  // strictly ascending exponents, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// [m]_d = sum_{j=0}^{m-1} q^{d(m-1-2j)}, the quantum integer for q_i = q^d.
LaurentPoly quantum_int(int m, int d);
// [m]_d! = [m]_d [m-1]_d ... [1]_d.
LaurentPoly quantum_factorial(int m, int d);
// Returns r with r * den == num; throws InexactDivision otherwise.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace qcb
