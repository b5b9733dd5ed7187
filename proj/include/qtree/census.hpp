#pragma once

#include <string>
#include <vector>

#include "qtree/group_expr.hpp"

namespace qtree {

struct CensusRow {
  int n = 0;
  long total = 0;
  long quantum = 0;
  long classical = 0;
  long trivial_aut = 0;
  long distinct_exprs = 0;

  double quantum_fraction() const { return total ? static_cast<double>(quantum) / total : 0.0; }
};

struct CensusDetail {
  int n = 0;
  std::string key;  // canonical free-tree key
  std::string expr;
  std::string aut_order;
  bool quantum_symmetry = false;
};

struct CensusTable {
  std::vector<CensusRow> rows;
  std::vector<CensusDetail> details;  // ordered by (n, key); empty unless requested
  std::vector<std::string> warnings;
};

struct CensusOptions {
  int workers = 1;
  bool keep_details = false;
};

// Every free tree on 1..max_n vertices. Output is identical for any worker
// count. Throws OutOfRange unless 1 <= max_n <= 18.
CensusTable run_census(int max_n, const CensusOptions& options = {});

// Columns: n, total, quantum, classical, trivial_aut, distinct_exprs.
std::string to_tsv(const CensusTable& table);
// Columns: n, key, expr, aut_order, quantum_symmetry.
std::string details_tsv(const CensusTable& table);

}  // namespace qtree
