#pragma once

// JSON, CSV and LaTeX renderings. JSON objects keep sorted keys, so output is
// byte-stable for a fixed input.

#include <string>
#include <vector>

#include "json.hpp"
#include "qcb/canonical.hpp"

namespace qcb {

using Json = nlohmann::json;

// [[e, c], ...] ascending; c is a JSON integer, or a decimal string when it
// does not fit in 64 bits.
Json poly_json(const LaurentPoly& p);
Json path_json(const OperatorPath& path);
Json weight_json(const Weight& w);  // doubled coordinates

Json wedge_json(const WedgeVector& v);
Json module_json(const ModuleVector& v);
Json matrix_json(const CanonicalMatrix& m);

// Rows are tabloids, columns tableaux; zero entries print as "0".
std::string matrix_csv(const CanonicalMatrix& m);
// A tabular with "." for zero entries.
std::string matrix_tex(const CanonicalMatrix& m);

// Quotes a CSV field when it contains a comma or a quote.
std::string csv_field(const std::string& s);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace qcb
