#pragma once

// The invariant suite behind `qcb check`, shared with the acceptance binary.

#include <string>
#include <vector>

#include "qcb/rootdata.hpp"

namespace qcb {

struct CheckBounds {
  int max_rank_b = 3;
  int max_rank_d = 3;
  int max_level = 2;      // dominant weights with sum of Lambda coefficients <= this
  bool experimental = false;  // include D_2
  unsigned seed = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string detail;  // first failure
};

std::vector<AlgebraKind> check_kinds(const CheckBounds& bounds);

CheckResult check_laurent(const CheckBounds& bounds);
CheckResult check_rootdata(const CheckBounds& bounds);
CheckResult check_crystal_edges(const CheckBounds& bounds);
CheckResult check_crystal_paths(const CheckBounds& bounds);
CheckResult check_spin_columns(const CheckBounds& bounds);
// Column counts for type B up to max_n, and the spin column counts.
CheckResult check_counting(int max_n);
CheckResult check_tableaux(const CheckBounds& bounds);
// wedge_f against the coproduct lift for every column of height <= n.
CheckResult check_wedge_oracle(const CheckBounds& bounds);
CheckResult check_wedge_properties(const CheckBounds& bounds);
CheckResult check_spin_module(const CheckBounds& bounds);
CheckResult check_module_weights(const CheckBounds& bounds);
CheckResult check_marsh(const CheckBounds& bounds);
// Canonical matrices over the sweep: congruence, triangularity, Z[q], bar
// symmetric corrections, idempotence, A(T) support.
CheckResult check_canonical(const CheckBounds& bounds);

std::vector<CheckResult> run_checks(const CheckBounds& bounds);

}  // namespace qcb
