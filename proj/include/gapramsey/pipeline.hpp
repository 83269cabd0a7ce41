#pragma once

// Integer <-> sequence pipeline: realise the gap order as a meet pattern, find
// a pattern-homogeneous tuple for the induced colouring of length-l sequences
// over [0, m), and read the tuple back as integers in [0, (2m-1)^l) through
// the doubling embedding. Only certified witnesses are returned.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"
#include "gapramsey/pattern.hpp"
#include "gapramsey/seq.hpp"

namespace gapramsey {

struct PipelineReport {
  BuiltPattern built;
  std::optional<std::vector<Seq>> tuple;  // in pattern order
  std::vector<Seq> sorted;
  std::vector<Seq> embedded;
  std::vector<std::size_t> points;
  std::optional<VerifyReport> verify;
  std::optional<Witness> witness;
  std::string failed_stage;  // empty on success
};

inline PipelineReport pipeline_solve(const PairColouring& f, std::size_t n, const GapOrder& ord, std::size_t length,
                                     std::uint32_t m) {
  if (n < 2) throw DomainError("pipeline_solve: need n >= 2");
  if (ord.n() != n) throw DomainError("pipeline_solve: order size differs from n");
  const auto fp = induced_colouring(f, length, m);

  PipelineReport rep;
  rep.built = build_pattern(ord);
  rep.tuple = find_pattern_homogeneous(fp, rep.built.pattern, length, m);
  if (!rep.tuple) {
    rep.failed_stage = "homogeneous_search";
    return rep;
  }
  rep.sorted = *rep.tuple;
  std::sort(rep.sorted.begin(), rep.sorted.end());
  for (const auto& s : rep.sorted) {
    rep.embedded.push_back(double_embed(s));
    rep.points.push_back(lex_rank(rep.embedded.back(), 2 * static_cast<std::uint64_t>(m) - 1));
  }
  Witness a(rep.points);
  rep.verify = verify_witness(f, a, ord);
  if (!rep.verify->overall) {
    rep.failed_stage = "verify";
    return rep;
  }
  rep.witness = std::move(a);
  return rep;
}

}  // namespace gapramsey
