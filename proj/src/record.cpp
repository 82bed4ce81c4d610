#include "instanton/record.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>


namespace instanton {

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

namespace {

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <class T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string csv_optional(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV row");
  return fields;
}

std::optional<int> csv_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer in CSV row: " + s);
  return v;
}

}  // namespace

nlohmann::ordered_json to_json(const InvariantRecord& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["j"] = r.j;
  j["delta"] = optional_json(r.delta);
  j["milnor"] = optional_json(r.milnor);
  j["tjurina"] = optional_json(r.tjurina);
  j["width"] = r.width;
  j["height"] = r.height;
  j["charge"] = r.charge;
  j["canonical_p"] = r.canonical_p;
  j["multiplicity"] = optional_json(r.multiplicity);
  j["branches"] = optional_json(r.branches);
  j["milnor_consistent"] = optional_json(r.milnor_consistent);
  if (r.splits_second_neighborhood) j["splits_second_neighborhood"] = *r.splits_second_neighborhood;
  j["command"] = r.command;
  j["schema_version"] = r.schema_version;
  return j;
}

InvariantRecord record_from_json(const nlohmann::json& j) {
  try {
    InvariantRecord r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.j = j.at("j").get<int>();
    r.canonical_p = j.at("canonical_p").get<std::string>();
    r.delta = optional_field<int>(j, "delta");
    r.milnor = optional_field<int>(j, "milnor");
    r.tjurina = optional_field<int>(j, "tjurina");
    r.width = j.at("width").get<int>();
    r.height = j.at("height").get<int>();
    r.charge = j.at("charge").get<int>();
    r.multiplicity = optional_field<int>(j, "multiplicity");
    r.branches = optional_field<int>(j, "branches");
    r.milnor_consistent = optional_field<bool>(j, "milnor_consistent");
    r.splits_second_neighborhood = optional_field<bool>(j, "splits_second_neighborhood");
    r.schema_version = j.at("schema_version").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string to_csv_row(const InvariantRecord& r) {
  std::ostringstream out;
  out << csv_field(r.input) << ',' << r.j << ',' << csv_field(r.canonical_p) << ',' << csv_optional(r.delta)
      << ',' << csv_optional(r.milnor) << ',' << csv_optional(r.tjurina) << ',' << r.width << ','
      << r.height << ',' << r.charge << ',' << csv_optional(r.multiplicity) << ','
      << csv_optional(r.branches);
  return out.str();
}

InvariantRecord record_from_csv(std::string_view text) {
  const std::size_t nl = text.find('\n');
  if (nl == std::string_view::npos) throw std::invalid_argument("CSV needs a header and a data row");
  if (text.substr(0, nl) != kCsvHeader) throw std::invalid_argument("unexpected CSV header");
  std::string_view row = text.substr(nl + 1);
  while (!row.empty() && (row.back() == '\n' || row.back() == '\r')) row.remove_suffix(1);
  const std::vector<std::string> f = split_csv_line(row);
  if (f.size() != 11) throw std::invalid_argument("CSV row must have 11 fields");
  InvariantRecord r;
  r.input = f[0];
  r.j = *csv_int(f[1]);
  r.canonical_p = f[2];
  r.delta = csv_int(f[3]);
  r.milnor = csv_int(f[4]);
  r.tjurina = csv_int(f[5]);
  r.width = *csv_int(f[6]);
  r.height = *csv_int(f[7]);
  r.charge = *csv_int(f[8]);
  r.multiplicity = csv_int(f[9]);
  r.branches = csv_int(f[10]);
  r.command = r.delta ? "curve" : "bundle";
  if (r.delta && r.milnor && r.branches) {
    r.milnor_consistent = 2 * *r.delta == *r.milnor + *r.branches - 1;
  }
  return r;
}

std::string to_text(const InvariantRecord& r) {
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  const std::vector<std::string> head{"input", "j", "p", "delta", "mu", "tau", "w", "h", "k"};
  const std::vector<std::string> row{r.input,
                                     std::to_string(r.j),
                                     r.canonical_p,
                                     cell(r.delta),
                                     cell(r.milnor),
                                     cell(r.tjurina),
                                     std::to_string(r.width),
                                     std::to_string(r.height),
                                     std::to_string(r.charge)};
  std::string top, bottom;
  for (std::size_t i = 0; i < head.size(); ++i) {
    const std::size_t w = std::max(head[i].size(), row[i].size());
    const bool left = i == 0 || i == 2;
    auto pad = [&](const std::string& s) {
      const std::string fill(w - s.size(), ' ');
      return left ? s + fill : fill + s;
    };
    if (i) {
      top += "  ";
      bottom += "  ";
    }
    top += pad(head[i]);
    bottom += pad(row[i]);
  }
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  return rstrip(top) + "\n" + rstrip(bottom) + "\n";
}

std::string format_record(const InvariantRecord& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return to_json(r).dump() + "\n";
    case OutputFormat::kCsv:
      return std::string(kCsvHeader) + "\n" + to_csv_row(r) + "\n";
    case OutputFormat::kText:
      return to_text(r);
  }
  throw std::logic_error("bad output format");
}

}  // namespace instanton
