#pragma once

// Canonical colouring JSON: {"m": 4, "c": 2, "colours": [0, 1, 0, 0, 1, 1]}
// Colours are in pair_index order. Writers put exactly one space after each
// ':' and ',' and nothing else; readers accept any JSON whitespace.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gapramsey/core.hpp"

namespace gapramsey {

inline std::string to_canonical_json(const PairColouring& f) {
  std::string out = "{\"m\": " + std::to_string(f.m()) + ", \"c\": " + std::to_string(f.c()) +
                    ", \"colours\": [";
  bool first = true;
  for (Colour x : f.table()) {
    if (!first) out += ", ";
    out += std::to_string(static_cast<unsigned>(x));
    first = false;
  }
  out += "]}";
  return out;
}

inline PairColouring colouring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("c") || !j.contains("colours")) {
    throw DomainError("colouring JSON: expected object with m, c, colours");
  }
  const auto m = j.at("m").get<std::size_t>();
  const auto c = j.at("c").get<std::size_t>();
  std::vector<Colour> t;
  t.reserve(j.at("colours").size());
  for (const auto& v : j.at("colours")) {
    auto x = v.get<long long>();
    if (x < 0 || static_cast<unsigned long long>(x) >= c) throw DomainError("colouring JSON: colour out of range");
    t.push_back(static_cast<Colour>(x));
  }
  return PairColouring(m, c, std::move(t));
}

inline PairColouring parse_colouring(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("colouring JSON: ") + e.what());
  }
  return colouring_from_json(j);
}

inline PairColouring read_colouring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return parse_colouring(buf.str());
}

inline void write_colouring_file(const PairColouring& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << to_canonical_json(f) << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace gapramsey
