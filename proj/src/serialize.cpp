#include "qcb/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace qcb {

namespace {

Json integer_json(const Integer& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

std::string tex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return ".";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const Integer mag = abs(c);
    out += c < 0 ? "-" : (first ? "" : "+");
    first = false;
    if (e == 0 || mag != 1) out += mag.get_str();
    if (e == 1) out += "q";
    if (e != 0 && e != 1) out += "q^{" + std::to_string(e) + "}";
  }
  return "$" + out + "$";
}

std::string tex_letters(const std::vector<Letter>& letters) {
  std::string out;
  for (Letter x : letters) out += x.value < 0 ? "\\bar{" + std::to_string(-x.value) + "}" : std::to_string(x.value);
  return out;
}

// Columns left to right as in the textual form, letters run together.
std::string tex_tabloid(const Tabloid& t) {
  std::vector<std::string> parts;
  if (t.spin) parts.push_back("s:" + tex_letters(t.spin->letters()));
  for (const auto& c : t.columns) parts.push_back(tex_letters(c));
  std::string out = "$";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "/" : "") + parts[k];
  return out + "$";
}

}  // namespace

Json poly_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.exponent, integer_json(t.coeff)}));
  return out;
}

Json path_json(const OperatorPath& path) {
  Json out = Json::array();
  for (auto [i, r] : path) out.push_back(Json::array({i, r}));
  return out;
}

Json weight_json(const Weight& w) { return w.doubled; }

Json wedge_json(const WedgeVector& v) {
  Json terms = Json::array();
  for (const auto& [c, coeff] : v.sorted()) terms.push_back({{"column", column_to_string(c)}, {"coeff", poly_json(coeff)}});
  return {{"p", v.p}, {"kind", v.kind.is_B() ? "B" : "D"}, {"terms", terms}};
}

Json module_json(const ModuleVector& v) {
  Json terms = Json::array();
  for (const auto& [t, coeff] : v.sorted()) terms.push_back({{"tabloid", tabloid_to_string(t)}, {"coeff", poly_json(coeff)}});
  return {{"kind", v.shape.kind.is_B() ? "B" : "D"}, {"lambda", v.shape.lambda.coeffs}, {"terms", terms}};
}

Json matrix_json(const CanonicalMatrix& m) {
  Json rows = Json::array(), cols = Json::array(), entries = Json::array(), gamma = Json::array();
  for (const auto& t : m.rows) rows.push_back(tabloid_to_string(t));
  for (const auto& t : m.cols) cols.push_back(tabloid_to_string(t));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols.size(); ++c)
      if (auto e = m.entry(r, c); !e.is_zero()) entries.push_back(Json::array({r, c, poly_json(e)}));
  for (const auto& s : m.gamma_log) gamma.push_back(Json::array({s.col, s.j, poly_json(s.gamma)}));
  Json out = {{"kind", m.shape.kind.is_B() ? "B" : "D"},
              {"rank", m.shape.kind.rank},
              {"lambda", m.shape.lambda.coeffs},
              {"rows", rows},
              {"cols", cols},
              {"entries", entries},
              {"gamma", gamma}};
  out["weight2"] = m.weight ? weight_json(*m.weight) : Json(nullptr);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) out += (k ? "," : "") + csv_field(fields[k]);
  return out + "\n";
}

std::string matrix_csv(const CanonicalMatrix& m) {
  std::vector<std::string> header{"tabloid"};
  for (const auto& t : m.cols) header.push_back(tabloid_to_string(t));
  std::string out = csv_line(header);
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::vector<std::string> line{tabloid_to_string(m.rows[r])};
    for (std::size_t c = 0; c < m.cols.size(); ++c) line.push_back(m.entry(r, c).to_string());
    out += csv_line(line);
  }
  return out;
}

std::string matrix_tex(const CanonicalMatrix& m) {
  std::ostringstream os;
  os << "\\begin{tabular}{l|" << std::string(m.cols.size(), 'c') << "}\n";
  os << " ";
  for (const auto& t : m.cols) os << " & " << tex_tabloid(t);
  os << " \\\\\n\\hline\n";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const bool bold = std::find(m.cols.begin(), m.cols.end(), m.rows[r]) != m.cols.end();
    os << (bold ? "\\textbf{" + tex_tabloid(m.rows[r]) + "}" : tex_tabloid(m.rows[r]));
    for (std::size_t c = 0; c < m.cols.size(); ++c) os << " & " << tex_poly(m.entry(r, c));
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace qcb
