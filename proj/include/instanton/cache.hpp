#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "instanton/record.hpp"

namespace instanton {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Content-addressed store of records, one JSON file per key. Cache problems
/// are reported on `warn` and never fail a computation.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Hash of (schema version, command, canonical inputs).
  static std::string key(std::string_view command, std::string_view canonical_inputs);

  std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }

  /// nullopt on a miss or an unreadable entry.
  std::optional<InvariantRecord> lookup(const std::string& key, std::ostream& warn) const;
  /// Writes a temporary file and renames it over the entry.
  void store(const std::string& key, const InvariantRecord& record, std::ostream& warn) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace instanton
