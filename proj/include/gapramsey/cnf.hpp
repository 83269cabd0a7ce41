#pragma once

// DIMACS export of "a counterexample colouring exists" for (n, c, m, <*).
// Variable x(e, d) = e c + d + 1 says pair slot e has colour d. Clauses, in
// output order:
//   per slot e: x(e,0) v ... v x(e,c-1), then -x(e,d1) v -x(e,d2) for d1 < d2;
//   per candidate tuple (lexicographic) and colour d: the disjunction of
//   -x(e,d) over the tuple's C(n,2) slots.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"
#include "gapramsey/threshold.hpp"

namespace gapramsey {

struct CnfMap {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // slot e -> {i, j}
  std::size_t vars_per_pair = 0;
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;

  std::size_t var(std::size_t slot, std::size_t colour) const { return slot * vars_per_pair + colour + 1; }

  /// Sidecar JSON, same spacing conventions as the colouring format.
  std::string to_json() const {
    std::string out = "{\"pairs\": [";
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (e) out += ", ";
      out += "[" + std::to_string(pairs[e].first) + ", " + std::to_string(pairs[e].second) + "]";
    }
    out += "], \"vars_per_pair\": " + std::to_string(vars_per_pair) + "}";
    return out;
  }
};

inline CnfMap export_cnf(std::size_t n, std::size_t c, std::size_t m, const GapOrder& ord, std::ostream& sink) {
  if (m < 2 || c < 1) throw DomainError("export_cnf: need m >= 2, c >= 1");
  if (ord.n() != n) throw DomainError("export_cnf: order size differs from n");
  CnfMap map;
  map.vars_per_pair = c;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) map.pairs.emplace_back(i, j);
  }
  const std::size_t slots = map.pairs.size();
  const auto tuples = candidate_tuples(n, m, ord);
  map.num_vars = slots * c;
  map.num_clauses = slots + slots * (c * (c - 1) / 2) + tuples.size() * c;

  sink << "p cnf " << map.num_vars << ' ' << map.num_clauses << '\n';
  for (std::size_t e = 0; e < slots; ++e) {
    for (std::size_t d = 0; d < c; ++d) sink << map.var(e, d) << ' ';
    sink << "0\n";
    for (std::size_t d1 = 0; d1 < c; ++d1) {
      for (std::size_t d2 = d1 + 1; d2 < c; ++d2) {
        sink << '-' << map.var(e, d1) << " -" << map.var(e, d2) << " 0\n";
      }
    }
  }
  for (const auto& t : tuples) {
    for (std::size_t d = 0; d < c; ++d) {
      for (std::size_t e : t.slots) sink << '-' << map.var(e, d) << ' ';
      sink << "0\n";
    }
  }
  sink.flush();
  if (!sink) throw IoError("export_cnf: write to sink failed");
  return map;
}

}  // namespace gapramsey
