#include "instanton/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "instanton/bundle.hpp"
#include "instanton/cache.hpp"
#include "instanton/census.hpp"
#include "instanton/curve.hpp"
#include "instanton/direct_image.hpp"
#include "instanton/errors.hpp"
#include "instanton/parse.hpp"
#include "instanton/record.hpp"

namespace instanton::cli {

Environment Environment::from_process() {
  Environment env;
  if (const char* v = std::getenv("INSTANTON_MAX_DEGREE")) env.max_degree = v;
  if (const char* v = std::getenv("INSTANTON_CACHE_DIR")) env.cache_dir = v;
  return env;
}

namespace {

struct Settings {
  OutputFormat format = OutputFormat::kText;
  std::optional<int> max_degree;
  std::optional<std::string> cache_dir;
};

DirectImageBounds bounds_for(int j, const Settings& s) {
  return s.max_degree ? DirectImageBounds::from_max_degree(j, *s.max_degree) : DirectImageBounds::defaults(j);
}

void require_positive_j(int j) {
  if (j < 1) throw ValidationError("splitting type j must be positive");
}

InvariantRecord curve_record(const std::string& input, int j, const Settings& s) {
  require_positive_j(j);
  const PlanePoly g = parse_curve(input);
  multiplicity(g);
  const CanonicalBundle b = from_curve(g, j);
  const CurveInvariants inv = curve_invariants(g);
  const InstantonNumbers n = charge_report(j, b.p(), bounds_for(j, s));
  InvariantRecord r;
  r.command = "curve";
  r.input = input;
  r.j = j;
  r.canonical_p = b.p().to_string();
  r.delta = inv.delta;
  r.milnor = inv.milnor;
  r.tjurina = inv.tjurina;
  r.width = n.width;
  r.height = n.height;
  r.charge = n.charge();
  r.multiplicity = inv.multiplicity;
  r.branches = inv.branches;
  r.milnor_consistent = inv.milnor_consistent;
  return r;
}

CanonicalBundle bundle_input(const std::string& text, int j) {
  require_positive_j(j);
  const LaurentZU p = parse_extension(text);
  validate_extension_class(j, p);
  return canonicalize(RawExtensionData{j, p});
}

InvariantRecord bundle_record(const std::string& input, const CanonicalBundle& b, const Settings& s) {
  const InstantonNumbers n = charge_report(b.j(), b.p(), bounds_for(b.j(), s));
  InvariantRecord r;
  r.command = "bundle";
  r.input = input;
  r.j = b.j();
  r.canonical_p = b.p().to_string();
  r.width = n.width;
  r.height = n.height;
  r.charge = n.charge();
  return r;
}

template <class Compute>
InvariantRecord cached(const Settings& s, const std::string& command, const std::string& canonical_inputs,
                       const std::string& input, std::ostream& err, Compute compute) {
  if (!s.cache_dir) return compute();
  const ResultCache cache(*s.cache_dir);
  const std::string key = ResultCache::key(command, canonical_inputs);
  if (auto hit = cache.lookup(key, err)) {
    if (hit->command == command) {
      err << "cache hit " << key << "\n";
      hit->input = input;
      return *hit;
    }
    err << "warning: cache entry " << key << " has the wrong command; recomputing\n";
  }
  InvariantRecord r = compute();
  cache.store(key, r, err);
  return r;
}

struct TableRow {
  const char* table;
  const char* input;
  int delta, milnor, tjurina, width, height;
};

constexpr TableRow kTables[] = {
    {"I", "x^5*y - y^4", 9, 17, 17, 10, 6},
    {"I", "x^8 - x^5*y^2 - x^3*y^2 + y^4", 9, 17, 15, 8, 6},
    {"II", "x^2 - y^7", 3, 6, 6, 3, 5},
    {"II", "x^3 - y^4", 3, 6, 6, 6, 6},
};

int run_tables(const Settings& s, std::ostream& out) {
  struct Cell {
    const TableRow* row;
    const char* name;
    int expected;
    int computed;
  };
  std::vector<Cell> cells;
  for (const auto& row : kTables) {
    const InvariantRecord r = curve_record(row.input, 4, s);
    cells.push_back({&row, "delta", row.delta, *r.delta});
    cells.push_back({&row, "milnor", row.milnor, *r.milnor});
    cells.push_back({&row, "tjurina", row.tjurina, *r.tjurina});
    cells.push_back({&row, "width", row.width, r.width});
    cells.push_back({&row, "height", row.height, r.height});
  }
  bool ok = true;
  for (const auto& c : cells) ok = ok && c.expected == c.computed;

  if (s.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["j"] = 4;
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : cells) {
      j["cells"].push_back({{"table", c.row->table},
                            {"input", c.row->input},
                            {"cell", c.name},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"ok", c.expected == c.computed}});
    }
    j["ok"] = ok;
    out << j.dump() << "\n";
  } else if (s.format == OutputFormat::kCsv) {
    out << "table,input,cell,expected,computed,status\n";
    for (const auto& c : cells) {
      out << c.row->table << ',' << c.row->input << ',' << c.name << ',' << c.expected << ',' << c.computed
          << ',' << (c.expected == c.computed ? "ok" : "MISMATCH") << "\n";
    }
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %-32s %-8s %8s %8s  %s\n", "table", "input", "cell", "expected",
                  "computed", "status");
    out << line;
    for (const auto& c : cells) {
      std::snprintf(line, sizeof line, "%-6s %-32s %-8s %8d %8d  %s\n", c.row->table, c.row->input, c.name,
                    c.expected, c.computed, c.expected == c.computed ? "ok" : "MISMATCH");
      out << line;
    }
    out << (ok ? "all cells match\n" : "table mismatch\n");
  }
  return ok ? 0 : static_cast<int>(ExitCode::kCertification);
}

nlohmann::ordered_json numbers_json(const InstantonNumbers& n) {
  return {{"width", n.width}, {"height", n.height}, {"charge", n.charge()}};
}

int run_census(const CensusOptions& options, const Settings& s, std::ostream& out) {
  const CensusReport r = census(options);
  const bool ok = verify_stratification_bounds(r);
  if (s.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["j"] = r.j;
    j["samples"] = r.samples;
    j["range"] = r.range;
    j["seed"] = r.seed;
    j["exhaustive"] = r.exhaustive;
    j["histogram"] = nlohmann::ordered_json::array();
    for (const auto& [key, count] : r.histogram) {
      j["histogram"].push_back({{"width", key.first}, {"height", key.second}, {"count", count}});
    }
    j["split_probe"] = numbers_json(r.split_probe);
    j["embedding_probe"] = r.phi_probe ? numbers_json(*r.phi_probe) : nlohmann::ordered_json(nullptr);
    j["nonsplit_max_charge"] = r.nonsplit_max_charge;
    j["violations"] = r.violations;
    j["verified"] = ok;
    out << j.dump() << "\n";
  } else if (s.format == OutputFormat::kCsv) {
    out << "width,height,count\n";
    for (const auto& [key, count] : r.histogram) out << key.first << ',' << key.second << ',' << count << "\n";
  } else {
    out << "census j=" << r.j << " samples=" << r.samples << " range=" << r.range;
    if (r.exhaustive) out << " exhaustive";
    else out << " seed=" << r.seed;
    out << "\n   w    h  count\n";
    char line[64];
    for (const auto& [key, count] : r.histogram) {
      std::snprintf(line, sizeof line, "%4d %4d %6zu\n", key.first, key.second, count);
      out << line;
    }
    out << "split probe: w=" << r.split_probe.width << " h=" << r.split_probe.height
        << " k=" << r.split_probe.charge() << "\n";
    if (r.phi_probe) {
      out << "embedding probe: w=" << r.phi_probe->width << " h=" << r.phi_probe->height
          << " k=" << r.phi_probe->charge() << "\n";
    }
    for (const auto& v : r.violations) out << "violation: " << v << "\n";
    out << (ok ? "bounds verified\n" : "bounds FAILED\n");
  }
  return ok ? 0 : static_cast<int>(ExitCode::kCertification);
}

std::optional<int> parse_max_degree(const std::string& text) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 0) return std::nullopt;
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Instanton numbers of bundles on the blown-up plane and plane-curve invariants", "instanton"};
  app.require_subcommand(1);

  std::string format = "text";
  std::optional<int> max_degree;
  std::string cache_dir;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-degree", max_degree, "Generator search degree for the direct image")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", cache_dir, "Directory of cached results");

  int curve_j = 4;
  std::string curve_expr;
  auto* curve_cmd = app.add_subcommand("curve", "Singularity invariants and instanton numbers of a curve");
  curve_cmd->add_option("-j", curve_j, "Splitting type")->capture_default_str();
  curve_cmd->add_option("expr", curve_expr, "Polynomial in x, y")->required();

  int bundle_j = 0;
  std::string bundle_p;
  auto* bundle_cmd = app.add_subcommand("bundle", "Instanton numbers of E(j, p)");
  bundle_cmd->add_option("-j", bundle_j, "Splitting type")->required();
  bundle_cmd->add_option("-p", bundle_p, "Extension class in z, u")->required();

  int embed_j = 0;
  std::string embed_p;
  auto* embed_cmd = app.add_subcommand("embed", "Apply (j, p) -> (j + 1, z u^2 p) and report the image");
  embed_cmd->add_option("-j", embed_j, "Splitting type")->required();
  embed_cmd->add_option("-p", embed_p, "Extension class in z, u")->required();

  auto* tables_cmd = app.add_subcommand("tables", "Recompute the two reference tables at j = 4");

  CensusOptions census_opts;
  auto* census_cmd = app.add_subcommand("census", "Sample extension classes and tabulate (w, h)");
  census_cmd->add_option("-j", census_opts.j, "Splitting type")->required();
  census_cmd->add_option("--samples", census_opts.samples, "Number of samples")->capture_default_str();
  census_cmd->add_option("--seed", census_opts.seed, "Random seed")->capture_default_str();
  census_cmd->add_option("--range", census_opts.range, "Coefficient bound")->capture_default_str();
  census_cmd->add_flag("--exhaustive", census_opts.exhaustive, "Sweep every coefficient vector in range");
  census_cmd->add_option("--threads", census_opts.threads, "Worker threads, 0 for all cores");

  for (auto* sub : {curve_cmd, bundle_cmd, embed_cmd, tables_cmd, census_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  }

  Settings s;
  s.format = parse_format(format);
  if (max_degree) {
    s.max_degree = max_degree;
  } else if (env.max_degree) {
    s.max_degree = parse_max_degree(*env.max_degree);
    if (!s.max_degree) {
      err << "error: INSTANTON_MAX_DEGREE must be a nonnegative integer\n";
      return static_cast<int>(ExitCode::kUsage);
    }
  }
  if (!cache_dir.empty()) s.cache_dir = cache_dir;
  else if (env.cache_dir && !env.cache_dir->empty()) s.cache_dir = env.cache_dir;

  try {
    if (*curve_cmd) {
      require_positive_j(curve_j);
      const std::string canonical = "j=" + std::to_string(curve_j) + ";curve=" + parse_curve(curve_expr).to_string();
      const InvariantRecord r = cached(s, "curve", canonical, curve_expr, err,
                                       [&] { return curve_record(curve_expr, curve_j, s); });
      out << format_record(r, s.format);
    } else if (*bundle_cmd) {
      const CanonicalBundle b = bundle_input(bundle_p, bundle_j);
      const std::string canonical = "j=" + std::to_string(b.j()) + ";p=" + b.p().to_string();
      const InvariantRecord r =
          cached(s, "bundle", canonical, bundle_p, err, [&] { return bundle_record(bundle_p, b, s); });
      out << format_record(r, s.format);
    } else if (*embed_cmd) {
      const CanonicalBundle image = embed_next(bundle_input(embed_p, embed_j));
      const std::string canonical = "j=" + std::to_string(image.j()) + ";p=" + image.p().to_string();
      const InvariantRecord r = cached(s, "embed", canonical, embed_p, err, [&] {
        InvariantRecord rec = bundle_record(embed_p, image, s);
        rec.command = "embed";
        rec.splits_second_neighborhood = splits_on_neighborhood(image, 2);
        return rec;
      });
      out << format_record(r, s.format);
    } else if (*tables_cmd) {
      return run_tables(s, out);
    } else if (*census_cmd) {
      census_opts.max_degree = s.max_degree;
      return run_census(census_opts, s, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kUsage);
  }
  return 0;
}

}  // namespace instanton::cli
