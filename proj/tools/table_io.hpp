#pragma once

// JSON/CSV serialization of coefficient tables, the on-disk table cache and
// custom genus files. Exact values are always {"num": "...", "den": "..."}.

#include "hirzebruch/genus.hpp"
#include "hirzebruch/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirzebruch::io {

using nlohmann::json;

inline constexpr int kCacheVersion = 1;

inline json rational_json(const Rational& q) {
  return {{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

/// Accepts {"num": "..", "den": ".."} or a "p/q" string.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string())
    throw std::invalid_argument("rational must be {\"num\": string, \"den\": string} or \"p/q\"");
  return parse_rational(j["num"].get<std::string>() + "/" + j["den"].get<std::string>());
}

inline json terms_json(const CoefficientTable& t) {
  json terms = json::array();
  for (const auto& [J, c] : t.entries) terms.push_back({{"partition", J.parts()}, {"coefficient", rational_json(c)}});
  return terms;
}

inline CoefficientTable table_from_terms(unsigned k, const json& terms) {
  CoefficientTable t;
  t.degree = k;
  for (const auto& term : terms.at("terms")) {
    IntegerPartition J(term.at("partition").get<std::vector<unsigned>>());
    if (J.weight() != k) throw std::invalid_argument("partition weight does not match degree");
    t.entries.emplace(std::move(J), rational_from_json(term.at("coefficient")));
  }
  return t;
}

inline json polynomial_json(const std::string& genus, const CoefficientTable& t) {
  return {{"genus", genus}, {"k", t.degree}, {"terms", terms_json(t)}};
}

inline json tables_json(const std::string& genus, const std::vector<CoefficientTable>& tables) {
  json polys = json::array();
  for (const auto& t : tables) polys.push_back(polynomial_json(genus, t));
  return {{"genus", genus}, {"max_k", tables.empty() ? 0u : tables.back().degree}, {"polynomials", polys}};
}

inline std::vector<CoefficientTable> tables_from_json(const json& j) {
  std::vector<CoefficientTable> out;
  for (const auto& p : j.at("polynomials")) out.push_back(table_from_terms(p.at("k").get<unsigned>(), p));
  return out;
}

inline std::string sign_word(const Rational& c) {
  const int s = sign(c);
  return s > 0 ? "+" : s < 0 ? "-" : "0";
}

/// k,partition,coefficient_num,coefficient_den,sign,r
inline std::string tables_csv(const std::vector<CoefficientTable>& tables) {
  std::string out = "k,partition,coefficient_num,coefficient_den,sign,r\n";
  for (const auto& t : tables)
    for (const auto& [J, c] : t.entries)
      out += std::to_string(t.degree) + "," + J.to_string('+') + "," + numerator(c).str() + "," +
             denominator(c).str() + "," + sign_word(c) + "," + std::to_string(J.length()) + "\n";
  return out;
}

inline std::vector<CoefficientTable> tables_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (line != "k,partition,coefficient_num,coefficient_den,sign,r") throw std::invalid_argument("bad CSV header");
  std::map<unsigned, CoefficientTable> by_k;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 6) throw std::invalid_argument("bad CSV row: " + line);
    const unsigned k = static_cast<unsigned>(std::stoul(f[0]));
    auto& t = by_k[k];
    t.degree = k;
    t.entries.emplace(IntegerPartition::parse(f[1]), parse_rational(f[2] + "/" + f[3]));
  }
  std::vector<CoefficientTable> out;
  for (auto& [k, t] : by_k) out.push_back(std::move(t));
  return out;
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json b_coeffs_json(const GenusSpec& g) {
  json b = json::array();
  for (const auto& c : g.b.coefficients()) b.push_back(rational_json(c));
  return b;
}

inline json cache_json(const GenusSpec& g, const std::vector<CoefficientTable>& tables) {
  const json b = b_coeffs_json(g);
  json t = json::object();
  for (const auto& table : tables) t[std::to_string(table.degree)] = {{"terms", terms_json(table)}};
  return {{"version", kCacheVersion}, {"genus", g.name}, {"b_coeffs", b}, {"checksum", fnv1a_hex(b.dump())},
          {"tables", t}};
}

enum class CacheStatus { Missing, Hit, Stale, Corrupt };

struct CacheLoad {
  CacheStatus status = CacheStatus::Missing;
  std::map<unsigned, CoefficientTable> tables;  // degrees safe to reuse
  std::string reason;
};

/// Loads cached tables for genus g. Degree k is reused only when the cached
/// b_0..b_k match g. Parse or checksum failures report Corrupt.
inline CacheLoad load_cache(const std::string& path, const GenusSpec& g) {
  CacheLoad out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  try {
    const json j = json::parse(in);
    const json& b = j.at("b_coeffs");
    if (j.at("checksum").get<std::string>() != fnv1a_hex(b.dump())) {
      out.status = CacheStatus::Corrupt;
      out.reason = "checksum mismatch";
      return out;
    }
    if (j.at("version").get<int>() != kCacheVersion || j.at("genus").get<std::string>() != g.name) {
      out.status = CacheStatus::Stale;
      out.reason = "version or genus mismatch";
      return out;
    }
    std::size_t agree = 0;  // number of leading b coefficients that match
    while (agree < b.size() && agree <= g.order() && rational_from_json(b[agree]) == g.b[agree]) ++agree;
    for (const auto& [key, value] : j.at("tables").items()) {
      const unsigned k = static_cast<unsigned>(std::stoul(key));
      if (k < agree) out.tables.emplace(k, table_from_terms(k, value));
    }
    out.status = CacheStatus::Hit;
  } catch (const std::exception& e) {
    out.status = CacheStatus::Corrupt;
    out.reason = e.what();
    out.tables.clear();
  }
  return out;
}

/// Reads {"name": "...", "b": [b_0, b_1, ...]} with b_0 = 1.
inline GenusSpec genus_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open genus file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("genus file '" + path + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("b") || !j["b"].is_array() || j["b"].empty())
    throw std::invalid_argument("genus file must contain a non-empty array \"b\"");
  std::vector<Rational> b;
  for (const auto& c : j["b"]) b.push_back(rational_from_json(c));
  const std::string name = j.value("name", std::string("custom"));
  const std::size_t order = b.size() - 1;
  return GenusSpec{name, PowerSeries(order, std::move(b))};
}

}  // namespace hirzebruch::io
