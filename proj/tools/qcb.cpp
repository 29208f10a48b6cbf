// qcb: command-line front end for the canonical basis library.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcb/canonical.hpp"
#include "qcb/checks.hpp"
#include "qcb/error.hpp"
#include "qcb/serialize.hpp"

namespace {

using namespace qcb;

constexpr int kExitDomain = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string type = "B";
  int rank = 2;
  std::string format = "json";
  std::string output;
  bool experimental = false;
  int jobs = 1;

  int height = 1;
  bool admissible_only = false;
  std::string lambda, weight, column, tableau;
  CheckBounds bounds;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Json json;
  Table table;
  std::string csv, tex;  // override the generic table renderings when set
  bool ok = true;
};

std::string tex_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '^') out += "\\textasciicircum{}";
    else if (ch == '_' || ch == '&' || ch == '%' || ch == '#') out += std::string("\\") + ch;
    else out += ch;
  }
  return "\\texttt{" + out + "}";
}

std::string table_csv(const Table& t) {
  std::string out = csv_line(t.header);
  for (const auto& r : t.rows) out += csv_line(r);
  return out;
}

std::string table_tex(const Table& t) {
  std::ostringstream os;
  os << "\\begin{tabular}{" << std::string(t.header.size(), 'l') << "}\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? " & " : "") << tex_cell(cells[k]);
    os << " \\\\\n";
  };
  line(t.header);
  os << "\\hline\n";
  for (const auto& r : t.rows) line(r);
  os << "\\end{tabular}\n";
  return os.str();
}

AlgebraKind kind_of(const Options& o) {
  if (o.type != "B" && o.type != "D") fail(ErrorKind::InvalidArgument, "type must be B or D");
  return AlgebraKind::make(o.type == "B" ? Family::B : Family::D, o.rank, o.experimental);
}

Json kind_json(const AlgebraKind& kind) { return {{"type", kind.is_B() ? "B" : "D"}, {"rank", kind.rank}}; }

Output run_columns(const Options& o) {
  const AlgebraKind kind = kind_of(o);
  if (o.height < 1 || o.height > kind.rank) fail(ErrorKind::InvalidArgument, "height must lie in 1..rank");
  Output out;
  out.table.header = {"column", "admissible"};
  Json list = Json::array();
  long admissible = 0;
  for (const Column& c : enumerate_columns(kind, o.height, o.admissible_only)) {
    const bool adm = is_admissible(c, kind);
    admissible += adm;
    list.push_back({{"column", column_to_string(c)}, {"admissible", adm}});
    out.table.rows.push_back({column_to_string(c), adm ? "1" : "0"});
  }
  out.json = {{"kind", kind_json(kind)}, {"height", o.height}, {"columns", list},
              {"count", list.size()}, {"admissible", admissible}};
  return out;
}

Output run_crystal(const Options& o) {
  const AlgebraKind kind = kind_of(o);
  const Shape shape = shape_for(parse_dominant(o.lambda, kind.rank), kind);
  const auto tableaux = enumerate_tableaux(shape);
  Output out;
  out.table.header = {"source", "i", "target"};
  Json vertices = Json::array(), edges = Json::array();
  for (const auto& t : tableaux) {
    const Word w = tabloid_reading(t, kind);
    vertices.push_back({{"tableau", tabloid_to_string(t)}, {"reading", w.to_string()},
                        {"weight2", weight_json(weight_of_tabloid(t, kind))}});
    for (int i = 1; i <= kind.rank; ++i) {
      if (auto v = word_apply(w, i, Dir::F)) {
        edges.push_back({w.to_string(), i, v->to_string()});
        out.table.rows.push_back({w.to_string(), std::to_string(i), v->to_string()});
      }
    }
  }
  out.json = {{"kind", kind_json(kind)}, {"lambda", shape.lambda.coeffs}, {"vertices", vertices}, {"edges", edges}};
  return out;
}

Output run_marsh(const Options& o) {
  const AlgebraKind kind = kind_of(o);
  const Column c = parse_column(o.column, kind);
  const OperatorPath path = marsh_path(c, kind);
  const WedgeVector g = global_column(c, kind);
  Output out;
  out.table.header = {"column", "coeff"};
  for (const auto& [x, coeff] : g.sorted()) out.table.rows.push_back({column_to_string(x), coeff.to_string()});
  out.json = {{"kind", kind_json(kind)}, {"column", column_to_string(c)}, {"path", path_json(path)},
              {"global", wedge_json(g)}};
  return out;
}

Output run_apath(const Options& o) {
  const AlgebraKind kind = kind_of(o);
  const Shape shape = shape_for(parse_dominant(o.lambda, kind.rank), kind);
  const Tabloid t = parse_tabloid(o.tableau, kind);
  const APath path = a_path(t, shape);
  const ModuleVector a = apply_monomial(tabloid_vector(path.tableaux.back(), shape), path.steps);
  Output out;
  out.table.header = {"tabloid", "coeff"};
  for (const auto& [x, coeff] : a.sorted()) out.table.rows.push_back({tabloid_to_string(x), coeff.to_string()});
  Json tableaux = Json::array();
  for (const auto& x : path.tableaux) tableaux.push_back(tabloid_to_string(x));
  out.json = {{"kind", kind_json(kind)}, {"tableau", tabloid_to_string(t)}, {"path", path_json(path.steps)},
              {"direct", path.direct}, {"tableaux", tableaux}, {"a", module_json(a)}};
  return out;
}

Output run_canonical(const Options& o) {
  const AlgebraKind kind = kind_of(o);
  std::optional<Weight> mu;
  if (!o.weight.empty()) mu = parse_weight(o.weight, kind.rank);
  const CanonicalMatrix m = canonical_matrix(parse_dominant(o.lambda, kind.rank), kind, mu, o.jobs);
  Output out;
  out.json = matrix_json(m);
  out.csv = matrix_csv(m);
  out.tex = matrix_tex(m);
  return out;
}

Output run_check(const Options& o) {
  CheckBounds b = o.bounds;
  b.experimental = o.experimental;
  Output out;
  out.table.header = {"check", "result", "cases", "detail"};
  Json results = Json::array();
  for (const auto& r : run_checks(b)) {
    out.ok = out.ok && r.passed;
    results.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    out.table.rows.push_back({r.name, r.passed ? "PASS" : "FAIL", std::to_string(r.cases), r.detail});
  }
  out.json = {{"bounds",
               {{"max_rank_b", b.max_rank_b}, {"max_rank_d", b.max_rank_d}, {"max_level", b.max_level},
                {"experimental", b.experimental}, {"seed", b.seed}}},
              {"results", results},
              {"passed", out.ok}};
  return out;
}

std::string render(const Output& out, const std::string& format) {
  if (format == "json") return out.json.dump(2) + "\n";
  if (format == "tex") return out.tex.empty() ? table_tex(out.table) : out.tex;
  return out.csv.empty() ? table_csv(out.table) : out.csv;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Canonical bases of U_q(so_{2n+1}) and U_q(so_{2n}) modules"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--type", o.type, "Algebra family")->check(CLI::IsMember({"B", "D"}));
  app.add_option("--rank", o.rank, "Rank n");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "tex"}));
  app.add_option("--output", o.output, "Write to this file instead of stdout");
  app.add_flag("--experimental", o.experimental, "Allow D_2");

  auto* columns = app.add_subcommand("columns", "List the columns of one height");
  columns->add_option("--height", o.height, "Column height")->required();
  columns->add_flag("--admissible-only", o.admissible_only, "Only admissible columns");

  auto* crystal = app.add_subcommand("crystal", "Crystal graph of V(lambda) as an edge list of readings");
  crystal->add_option("--lambda", o.lambda, "Coefficients on the fundamental weights")->required();

  auto* marsh = app.add_subcommand("marsh", "Global basis vector of one admissible column");
  marsh->add_option("--column", o.column, "Letters top to bottom, e.g. 0,0,-3")->required();

  auto* apath = app.add_subcommand("apath", "Operator path and A(T) for one orthogonal tableau");
  apath->add_option("--lambda", o.lambda, "Coefficients on the fundamental weights")->required();
  apath->add_option("--tableau", o.tableau, "Tableau, columns separated by '/'")->required();

  auto* canonical = app.add_subcommand("canonical", "Canonical basis matrix of V(lambda)");
  canonical->add_option("--lambda", o.lambda, "Coefficients on the fundamental weights")->required();
  canonical->add_option("--weight", o.weight, "Restrict to one weight, e.g. 0,2,-1 or 1/2,1/2");
  canonical->add_option("--jobs", o.jobs, "Worker threads across weight spaces")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--max-rank-b", o.bounds.max_rank_b, "Largest B rank")->check(CLI::Range(2, 6));
  check->add_option("--max-rank-d", o.bounds.max_rank_d, "Largest D rank")->check(CLI::Range(2, 6));
  check->add_option("--max-level", o.bounds.max_level, "Largest sum of lambda coefficients")->check(CLI::Range(1, 4));
  check->add_option("--seed", o.bounds.seed, "Seed for the randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Output out;
    if (*columns) out = run_columns(o);
    else if (*crystal) out = run_crystal(o);
    else if (*marsh) out = run_marsh(o);
    else if (*apath) out = run_apath(o);
    else if (*canonical) out = run_canonical(o);
    else out = run_check(o);

    const std::string text = render(out, o.format);
    if (o.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file || !(file << text)) {
        std::cerr << "error: cannot write " << o.output << "\n";
        return kExitDomain;
      }
    }
    return out.ok ? 0 : kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_internal(e.kind()) ? kExitInternal : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
