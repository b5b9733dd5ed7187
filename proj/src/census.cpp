#include "qtree/census.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "qtree/canon.hpp"
#include "qtree/decompose.hpp"
#include "qtree/oracle.hpp"

namespace qtree {

namespace {

void analyze_range(const std::vector<Graph>& trees, std::size_t begin, std::size_t end,
                   std::vector<CensusDetail>& out) {
  for (std::size_t i = begin; i < end; ++i) {
    const Graph& t = trees[i];
    GroupExpr qut = qut_tree(t);
    out[i] = CensusDetail{t.vertex_count(), free_tree_key(t).to_string(), qut.text(),
                          classical_order(qut).str(), !is_classical(qut)};
  }
}

}  // namespace

CensusTable run_census(int max_n, const CensusOptions& options) {
  if (max_n < 1 || max_n > 18)
    throw Error(ErrorCode::OutOfRange, "max_n must be in 1..18, got " + std::to_string(max_n));
  int workers = std::max(1, options.workers);
  CensusTable table;
  for (int n = 1; n <= max_n; ++n) {
    auto trees = all_free_trees(n);
    std::vector<CensusDetail> details(trees.size());
    std::size_t chunk = (trees.size() + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::size_t begin = std::min(trees.size(), w * chunk);
      std::size_t end = std::min(trees.size(), begin + chunk);
      if (begin < end) pool.emplace_back(analyze_range, std::cref(trees), begin, end, std::ref(details));
    }
    for (auto& t : pool) t.join();
    std::sort(details.begin(), details.end(),
              [](const CensusDetail& a, const CensusDetail& b) { return a.key < b.key; });

    CensusRow row;
    row.n = n;
    std::set<std::string> exprs;
    for (const auto& d : details) {
      ++row.total;
      if (d.quantum_symmetry)
        ++row.quantum;
      else
        ++row.classical;
      if (d.aut_order == "1") ++row.trivial_aut;
      exprs.insert(d.expr);
    }
    row.distinct_exprs = static_cast<long>(exprs.size());
    table.rows.push_back(row);
    if (options.keep_details)
      table.details.insert(table.details.end(), details.begin(), details.end());
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const auto& prev = table.rows[i - 1];
    const auto& cur = table.rows[i];
    if (prev.n >= 8 && cur.quantum_fraction() < prev.quantum_fraction()) {
      std::ostringstream msg;
      msg << "quantum-symmetry fraction decreased from n=" << prev.n << " ("
          << prev.quantum_fraction() << ") to n=" << cur.n << " (" << cur.quantum_fraction() << ")";
      table.warnings.push_back(msg.str());
    }
  }
  return table;
}

std::string to_tsv(const CensusTable& table) {
  std::ostringstream out;
  out << "n\ttotal\tquantum\tclassical\ttrivial_aut\tdistinct_exprs\n";
  for (const auto& r : table.rows)
    out << r.n << '\t' << r.total << '\t' << r.quantum << '\t' << r.classical << '\t'
        << r.trivial_aut << '\t' << r.distinct_exprs << '\n';
  return out.str();
}

std::string details_tsv(const CensusTable& table) {
  std::ostringstream out;
  out << "n\tkey\texpr\taut_order\tquantum_symmetry\n";
  for (const auto& d : table.details)
    out << d.n << '\t' << d.key << '\t' << d.expr << '\t' << d.aut_order << '\t'
        << (d.quantum_symmetry ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace qtree
