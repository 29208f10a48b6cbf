#include "qcb/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qcb/error.hpp"

namespace qcb {

namespace {

void normalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    int e = terms[i].exponent;
    Integer c = terms[i].coeff;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exponent == e; ++j) c += terms[j].coeff;
    if (c != 0) terms[out++] = {e, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({0, Integer(constant)});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [e, c] : terms) terms_.push_back({e, Integer(c)});
  normalize(terms_);
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exponent, std::move(coeff)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  normalize(p.terms_);
  return p;
}

int LaurentPoly::min_exponent() const {
  require(!terms_.empty(), ErrorKind::InvalidArgument, "min_exponent of zero polynomial");
  return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
  require(!terms_.empty(), ErrorKind::InvalidArgument, "max_exponent of zero polynomial");
  return terms_.back().exponent;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back({b->exponent, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->coeff + b->coeff) : Integer(a->coeff - b->coeff);
      if (c != 0) merged.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) {
      t.exponent += b.terms_[0].exponent;
      t.coeff *= b.terms_[0].coeff;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<LaurentPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) products.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(products));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exponent += e;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exponent, it->coeff});
  return r;
}

Integer LaurentPoly::eval_at_zero() const {
  require(is_polynomial(), ErrorKind::NegativePower, to_string() + " is not regular at q=0");
  return coeff(0);
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

LaurentPoly LaurentPoly::symmetrized_low_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponent > 0) break;
    out.push_back(t);
    if (t.exponent < 0) out.push_back({-t.exponent, t.coeff});
  }
  return from_terms(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly quantum_int(int m, int d) {
  require(m >= 0, ErrorKind::InvalidArgument, "quantum_int needs m >= 0");
  std::vector<LaurentPoly::Term> terms;
  for (int j = 0; j < m; ++j) terms.push_back({d * (m - 1 - 2 * j), 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int m, int d) {
  require(m >= 0, ErrorKind::InvalidArgument, "quantum_factorial needs m >= 0");
  LaurentPoly r = 1;
  for (int k = 2; k <= m; ++k) r *= quantum_int(k, d);
  return r;
}

// Long division from the lowest term. The quotient cannot have a term above
// max(num) - max(den), which bounds the loop.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  require(!den.is_zero(), ErrorKind::InvalidArgument, "division by zero polynomial");
  if (num.is_zero()) return {};
  const auto& lead = den.terms().front();
  const int quotient_top = num.max_exponent() - den.max_exponent();
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly rest = num;
  while (!rest.is_zero()) {
    const auto& low = rest.terms().front();
    const int e = low.exponent - lead.exponent;
    if (e > quotient_top || !mpz_divisible_p(low.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
      fail(ErrorKind::InexactDivision, "(" + num.to_string() + ") / (" + den.to_string() + ")");
    Integer c = low.coeff / lead.coeff;
    rest -= den * LaurentPoly::monomial(c, e);
    quotient.push_back({e, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace qcb
