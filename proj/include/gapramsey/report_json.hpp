#pragma once

// JSON encodings of the report objects. Keys keep insertion order so that
// output is stable; big integers are written as decimal strings.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gapramsey/bignat.hpp"
#include "gapramsey/core.hpp"
#include "gapramsey/pipeline.hpp"
#include "gapramsey/rank_gaps.hpp"
#include "gapramsey/seq.hpp"
#include "gapramsey/subtree_sampling.hpp"

namespace gapramsey {

using Json = nlohmann::ordered_json;

inline Json to_json(const GapOrder& ord) {
  return Json(std::vector<std::size_t>(ord.perm().begin(), ord.perm().end()));
}

inline Json to_json(const Witness& a) {
  return Json(std::vector<std::size_t>(a.points().begin(), a.points().end()));
}

inline Json to_json(const VerifyReport& r) {
  Json j;
  j["monochromatic"] = r.monochromatic;
  j["colour"] = r.colour ? Json(static_cast<unsigned>(*r.colour)) : Json(nullptr);
  j["gaps_distinct"] = r.gaps_distinct;
  j["order_respected"] = r.order_respected;
  j["overall"] = r.overall;
  return j;
}

inline Json to_json(const PowerForm& p) {
  Json j;
  j["base"] = p.base.str();
  j["exponent"] = p.exponent.str();
  if (is_power_of_two(p.base)) j["log2"] = p.log2().str();
  return j;
}

/// Search result: found, witness, gaps, colour.
inline Json search_json(const PairColouring& f, const std::optional<Witness>& w) {
  Json j;
  j["found"] = w.has_value();
  j["witness"] = w ? to_json(*w) : Json(nullptr);
  j["gaps"] = w ? Json(w->gaps()) : Json(nullptr);
  if (w && w->n() >= 2) {
    j["colour"] = static_cast<unsigned>(f((*w)[0], (*w)[1]));
  } else {
    j["colour"] = nullptr;
  }
  return j;
}

inline Json to_json(const MeetPattern& p) {
  Json j;
  j["n"] = p.n;
  j["rhos"] = p.rhos;
  j["pred"] = p.pred;
  return j;
}

inline Json to_json(const PipelineReport& r) {
  Json j;
  j["found"] = r.witness.has_value();
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["failed_stage"] = r.failed_stage.empty() ? Json(nullptr) : Json(r.failed_stage);
  j["pattern"] = to_json(r.built.pattern);
  j["sigma"] = r.built.sigma;
  j["tuple"] = r.tuple ? Json(*r.tuple) : Json(nullptr);
  j["sorted"] = r.sorted;
  j["embedded"] = r.embedded;
  j["points"] = r.points;
  j["verify"] = r.verify ? to_json(*r.verify) : Json(nullptr);
  return j;
}

inline Json to_json(const RankGapReport& r) {
  Json j;
  j["m"] = r.m;
  j["l"] = r.length;
  j["points"] = r.points;
  j["pairs_checked"] = r.pairs_checked;
  j["order_violations"] = r.order_violations;
  j["bounds_violations"] = r.bounds_violations;
  j["monotone_violations"] = r.monotone_violations;
  Json ex = Json::array();
  for (const auto& p : r.examples) ex.push_back({{"i", p.i}, {"j", p.j}, {"meet", p.meet}});
  j["examples"] = ex;
  return j;
}

inline Json to_json(const GoodSubtreeResult& r) {
  Json j;
  j["found"] = r.tree.has_value();
  j["attempts"] = r.attempts;
  j["exhausted"] = r.exhausted;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(x.tuple);
  j["violations"] = v;
  if (r.tree) {
    Json a = Json::array();
    for (const auto& [eta, set] : r.tree->a_sets) a.push_back({{"node", eta}, {"a", set}});
    j["a_sets"] = a;
  }
  return j;
}

}  // namespace gapramsey
