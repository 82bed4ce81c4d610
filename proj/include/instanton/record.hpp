#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace instanton {

inline constexpr int kSchemaVersion = 1;

/// One row of output: bundle numbers, plus curve invariants for curves.
struct InvariantRecord {
  std::string command;  // "curve", "bundle" or "embed"
  std::string input;
  int j = 0;
  std::string canonical_p;
  std::optional<int> delta;
  std::optional<int> milnor;
  std::optional<int> tjurina;
  int width = 0;
  int height = 0;
  int charge = 0;
  std::optional<int> multiplicity;
  std::optional<int> branches;
  std::optional<bool> milnor_consistent;
  std::optional<bool> splits_second_neighborhood;  // embed only
  int schema_version = kSchemaVersion;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

enum class OutputFormat { kText, kJson, kCsv };

OutputFormat parse_format(std::string_view name);

nlohmann::ordered_json to_json(const InvariantRecord& r);
/// Throws std::invalid_argument on a missing or mistyped field.
InvariantRecord record_from_json(const nlohmann::json& j);

inline constexpr std::string_view kCsvHeader =
    "input,j,canonical_p,delta,milnor,tjurina,width,height,charge,multiplicity,branches";

std::string to_csv_row(const InvariantRecord& r);
/// Parses the header line and one data row.
InvariantRecord record_from_csv(std::string_view text);

/// Aligned two-line table: input, j, p, delta, mu, tau, w, h, k.
std::string to_text(const InvariantRecord& r);

std::string format_record(const InvariantRecord& r, OutputFormat format);

}  // namespace instanton
