#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sct/enumerate.hpp"
#include "sct/errors.hpp"
#include "sct/partition.hpp"
#include "sct/version.hpp"

namespace sct {

inline nlohmann::json partition_to_json(const Partition& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["blocks"] = p.blocks;
  return j;
}

inline Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
    throw MalformedPartitionError(
        "expected an object with \"n\" and \"blocks\"");
  if (!j["n"].is_number_integer())
    throw MalformedPartitionError("\"n\" must be an integer");
  int n = j["n"].get<int>();
  if (!j["blocks"].is_array())
    throw MalformedPartitionError("\"blocks\" must be an array");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_array()) throw MalformedPartitionError("block must be an array");
    std::vector<int> block;
    for (const auto& e : b) {
      if (!e.is_number_integer())
        throw MalformedPartitionError("residue must be an integer");
      block.push_back(e.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  return canonical_partition(n, std::move(blocks));
}

inline Partition partition_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedPartitionError(std::string("invalid JSON in ") + path +
                                  ": " + e.what());
  }
  return partition_from_json(j);
}

inline SCTheory theory_from_file(const std::string& path) {
  auto r = validate(partition_from_file(path));
  if (std::holds_alternative<Rejection>(r))
    throw MalformedPartitionError(path + " is not a supercharacter theory: " +
                                  std::get<Rejection>(r).to_string());
  return std::get<SCTheory>(std::move(r));
}

// Enumeration cache.  One file per group order; stale versions are ignored.
inline std::filesystem::path cache_path(const std::string& dir, int n) {
  return std::filesystem::path(dir) / ("sup-" + std::to_string(n) + ".json");
}

inline void save_theory_set(const TheorySet& ts, const std::string& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["n"] = ts.n;
  j["complete"] = true;
  auto& arr = j["theories"] = nlohmann::json::array();
  for (const auto& t : ts.theories) arr.push_back(t.superclasses.blocks);
  std::ofstream out(cache_path(dir, ts.n));
  if (!out) throw Error("cannot write cache in " + dir);
  out << j.dump(1) << '\n';
}

inline std::optional<TheorySet> load_theory_set(const std::string& dir,
                                                int n) {
  std::ifstream in(cache_path(dir, n));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || j.value("version", "") != kCacheVersion ||
      j.value("n", -1) != n || !j.value("complete", false) ||
      !j.contains("theories") || !j["theories"].is_array())
    return std::nullopt;
  TheorySet ts;
  ts.n = n;
  for (const auto& blocks : j["theories"]) {
    nlohmann::json one;
    one["n"] = n;
    one["blocks"] = blocks;
    ts.theories.push_back(
        validate_or_throw(partition_from_json(one), "cached partition"));
  }
  for (int i = 0; i + 1 < ts.size(); ++i)
    if (!theory_set_less(ts.theories[i].superclasses,
                         ts.theories[i + 1].superclasses))
      return std::nullopt;
  return ts;
}

}  // namespace sct
