#include "qcb/rootdata.hpp"

#include <sstream>

#include "qcb/error.hpp"

namespace qcb {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int parse_int(const std::string& token) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(token, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "not an integer: '" + token + "'");
  }
  while (pos < token.size() && token[pos] == ' ') ++pos;
  require(pos == token.size(), ErrorKind::InvalidArgument, "not an integer: '" + token + "'");
  return v;
}

}  // namespace

AlgebraKind AlgebraKind::make(Family family, int rank, bool allow_experimental) {
  if (family == Family::B) {
    require(rank >= 2, ErrorKind::InvalidArgument, "type B needs rank >= 2");
  } else {
    require(rank >= 3 || (rank == 2 && allow_experimental), ErrorKind::InvalidArgument,
            "type D needs rank >= 3 (rank 2 only with the experimental flag)");
  }
  return AlgebraKind{family, rank};
}

std::string AlgebraKind::name() const { return std::string(is_B() ? "B" : "D") + std::to_string(rank); }

bool is_valid_letter(Letter x, const AlgebraKind& kind) {
  if (x.is_zero()) return kind.is_B();
  return x.index() <= kind.rank;
}

std::vector<Letter> alphabet(const AlgebraKind& kind) {
  std::vector<Letter> out;
  for (int i = 1; i <= kind.rank; ++i) out.push_back(unbarred(i));
  if (kind.is_B()) out.push_back(Letter{0});
  for (int i = kind.rank; i >= 1; --i) out.push_back(barred_letter(i));
  return out;
}

std::string to_string(Letter x) { return std::to_string(x.value); }

Letter parse_letter(const std::string& token) { return Letter{parse_int(token)}; }

Weight& Weight::operator+=(const Weight& other) {
  require(size() == other.size(), ErrorKind::InvalidArgument, "weight rank mismatch");
  for (int i = 0; i < size(); ++i) doubled[i] += other.doubled[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require(size() == other.size(), ErrorKind::InvalidArgument, "weight rank mismatch");
  for (int i = 0; i < size(); ++i) doubled[i] -= other.doubled[i];
  return *this;
}

Weight operator*(int k, Weight w) {
  for (auto& c : w.doubled) c *= k;
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    if (doubled[i] % 2 == 0) {
      os << doubled[i] / 2;
    } else {
      os << doubled[i] << "/2";
    }
  }
  return os.str();
}

Weight parse_weight(const std::string& text, int n) {
  auto parts = split(text, ',');
  require(static_cast<int>(parts.size()) == n, ErrorKind::InvalidArgument,
          "weight '" + text + "' needs " + std::to_string(n) + " coordinates");
  Weight w(n);
  for (int i = 0; i < n; ++i) {
    const auto& tok = parts[i];
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
      w.doubled[i] = 2 * parse_int(tok);
    } else {
      require(parse_int(tok.substr(slash + 1)) == 2, ErrorKind::InvalidArgument,
              "only halves are allowed in weights: '" + tok + "'");
      w.doubled[i] = parse_int(tok.substr(0, slash));
    }
  }
  return w;
}

std::string DominantWeight::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  return os.str();
}

DominantWeight parse_dominant(const std::string& text, int n) {
  auto parts = split(text, ',');
  require(static_cast<int>(parts.size()) == n, ErrorKind::InvalidArgument,
          "lambda '" + text + "' needs " + std::to_string(n) + " coefficients");
  DominantWeight lambda;
  for (const auto& p : parts) {
    int c = parse_int(p);
    require(c >= 0, ErrorKind::InvalidArgument, "lambda coefficients must be nonnegative");
    lambda.coeffs.push_back(c);
  }
  return lambda;
}

Weight letter_weight(Letter x, int n) {
  Weight w(n);
  if (!x.is_zero()) w.doubled[x.index() - 1] = x.is_barred() ? -2 : 2;
  return w;
}

Weight fundamental_weight(const AlgebraKind& kind, int i) {
  const int n = kind.rank;
  require(1 <= i && i <= n, ErrorKind::InvalidArgument, "fundamental weight index out of range");
  Weight w(n);
  const bool spin = (kind.is_B() && i == n) || (kind.is_D() && i >= n - 1);
  if (!spin) {
    for (int k = 0; k < i; ++k) w.doubled[k] = 2;
    return w;
  }
  for (int k = 0; k < n; ++k) w.doubled[k] = 1;
  if (kind.is_D() && i == n - 1) w.doubled[n - 1] = -1;
  return w;
}

Weight to_weight(const AlgebraKind& kind, const DominantWeight& lambda) {
  require(lambda.rank() == kind.rank, ErrorKind::InvalidArgument, "lambda rank mismatch");
  Weight w(kind.rank);
  for (int i = 1; i <= kind.rank; ++i) w += lambda.coeffs[i - 1] * fundamental_weight(kind, i);
  return w;
}

Weight simple_root(const AlgebraKind& kind, int i) {
  const int n = kind.rank;
  Weight w(n);
  if (i < n) {
    w.doubled[i - 1] = 2;
    w.doubled[i] = -2;
  } else if (kind.is_B()) {
    w.doubled[n - 1] = 2;
  } else {
    w.doubled[n - 2] = 2;
    w.doubled[n - 1] = 2;
  }
  return w;
}

int cartan_exponent(const Weight& w, int i, const AlgebraKind& kind) {
  const int n = kind.rank;
  require(1 <= i && i <= n, ErrorKind::InvalidArgument, "Chevalley index out of range");
  require(w.size() == n, ErrorKind::InvalidArgument, "weight rank mismatch");
  const auto& d = w.doubled;
  int twice;
  if (i < n) {
    twice = d[i - 1] - d[i];
  } else if (kind.is_B()) {
    return d[n - 1];
  } else {
    twice = d[n - 2] + d[n - 1];
  }
  if (twice % 2 != 0)
    fail(ErrorKind::NonIntegralPairing,
         "weight " + w.to_string() + " pairs non-integrally with alpha_" + std::to_string(i));
  return twice / 2;
}

int qi_exponent(const AlgebraKind& kind, int i) {
  require(1 <= i && i <= kind.rank, ErrorKind::InvalidArgument, "Chevalley index out of range");
  if (kind.is_B()) return i == kind.rank ? 1 : 2;
  return 1;
}

}  // namespace qcb
