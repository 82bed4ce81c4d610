#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "instanton/cache.hpp"
#include "instanton/cli.hpp"
#include "instanton/errors.hpp"
#include "instanton/parse.hpp"
#include "instanton/record.hpp"

using namespace instanton;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, cli::Environment env = {}) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() /
             (std::string("instanton-test-") + name + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("parser accepts the grammar") {
  const PolyExpr e = parse_polynomial("x^5*y - y^4", ParseContext::kCurve);
  CHECK(e.kind == PolyExpr::Kind::kSum);
  CHECK(e.children.size() == 2);
  CHECK(e.signs == std::vector<int>{1, -1});
  const PolyExpr m = parse_polynomial("z^2*u^5", ParseContext::kBundle);
  REQUIRE(m.children.size() == 1);
  CHECK(m.children[0].children.size() == 2);
  CHECK(parse_extension("z^(-2)*u + 3/2*u^2") ==
        LaurentZU::monomial(Rat(1), -2, 1) + LaurentZU::monomial(Rat(3, 2), 0, 2));
  CHECK(parse_curve("  -x ^ 2+ (y - x)*y ") == parse_curve("-2*x^2 + y^2 - x*y + x^2"));
  CHECK(parse_curve("x^0") == PlanePoly::constant(Rat(1)));
}

TEST_CASE("parser errors carry positions") {
  auto position_of = [](const char* text, ParseContext ctx) -> long {
    try {
      parse_polynomial(text, ctx);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("x*(-1)", ParseContext::kCurve) == 3);
  CHECK(position_of("2x", ParseContext::kCurve) == 1);
  CHECK(position_of("x + ", ParseContext::kCurve) == 4);
  CHECK(position_of("z*u", ParseContext::kCurve) == 0);
  CHECK(position_of("x", ParseContext::kBundle) == 0);
  CHECK(position_of("u^(-1)", ParseContext::kBundle) == 2);
  CHECK(position_of("x^(-1)", ParseContext::kCurve) == 2);
  CHECK(position_of("(x + y", ParseContext::kCurve) == 6);
  CHECK(position_of("1/0", ParseContext::kCurve) == 2);
  CHECK(position_of("x^", ParseContext::kCurve) == 2);
}

TEST_CASE("records round trip") {
  InvariantRecord r;
  r.command = "curve";
  r.input = "x^2 - y^7";
  r.j = 4;
  r.canonical_p = "u^2";
  r.delta = 3;
  r.milnor = 6;
  r.tjurina = 6;
  r.width = 3;
  r.height = 5;
  r.charge = 8;
  r.multiplicity = 2;
  r.branches = 1;
  r.milnor_consistent = true;
  CHECK(record_from_csv(format_record(r, OutputFormat::kCsv)) == r);
  CHECK(record_from_json(nlohmann::json::parse(format_record(r, OutputFormat::kJson))) == r);
  const std::string json = to_json(r).dump();
  CHECK(json.rfind(R"({"input":"x^2 - y^7","j":4,"delta":3,"milnor":6,"tjurina":6,"width":3,"height":5,"charge":8,)", 0) == 0);
  CHECK(nlohmann::ordered_json::parse(json).dump() == json);

  InvariantRecord b;
  b.command = "bundle";
  b.input = "u, with a comma \"quoted\"";
  b.j = 2;
  b.canonical_p = "u";
  b.width = 1;
  b.height = 1;
  b.charge = 2;
  CHECK(record_from_csv(format_record(b, OutputFormat::kCsv)) == b);
  CHECK_THROWS_AS(record_from_csv("wrong,header\n1,2"), std::invalid_argument);
}

TEST_CASE("curve subcommand") {
  const Result r = run({"curve", "-j", "4", "x^2 - y^7", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["delta"] == 3);
  CHECK(j["milnor"] == 6);
  CHECK(j["tjurina"] == 6);
  CHECK(j["width"] == 3);
  CHECK(j["height"] == 5);
  CHECK(j["charge"] == 8);
  CHECK(j["canonical_p"] == "u^2");
  CHECK(j["schema_version"] == kSchemaVersion);
  const Result d = run({"curve", "x^3 - y^4", "--format", "csv"});
  CHECK(d.out == std::string(kCsvHeader) + "\nx^3 - y^4,4,u^3,3,6,6,6,6,12,3,1\n");
}

TEST_CASE("bundle and embed subcommands") {
  const Result t = run({"bundle", "-j", "4", "-p", "0"});
  CHECK(t.code == 0);
  CHECK(t.out.find("10  6  16") != std::string::npos);
  const Result b = run({"--format", "json", "bundle", "-j", "4", "-p", "u^8 - z^2*u^7 - z^2*u^5 + z^4*u^4"});
  CHECK(nlohmann::json::parse(b.out)["canonical_p"] == "-z^2*u^5");
  CHECK(nlohmann::json::parse(b.out)["width"] == 8);
  const Result e = run({"embed", "-j", "2", "-p", "z*u^2", "--format", "json"});
  CHECK(e.code == 0);
  const auto ej = nlohmann::json::parse(e.out);
  CHECK(ej["j"] == 3);
  CHECK(ej["canonical_p"] == "z^2*u^4");
  CHECK(ej["splits_second_neighborhood"] == true);
}

TEST_CASE("tables subcommand") {
  const Result r = run({"tables", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["cells"].size() == 20);
}

TEST_CASE("census subcommand") {
  const Result r = run({"census", "-j", "2", "--range", "2", "--exhaustive", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["histogram"].size() == 3);
  CHECK(j["verified"] == true);
  const Result a = run({"census", "-j", "3", "--samples", "8", "--seed", "3"});
  const Result b = run({"census", "-j", "3", "--samples", "8", "--seed", "3", "--threads", "1"});
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"curve", "x", "--format", "xml"}).code == 1);
  CHECK(run({"curve", "x*(-1)"}).code == 2);
  CHECK(run({"curve", "x + 1"}).code == 2);
  CHECK(run({"curve", "-j", "0", "x^2 - y^3"}).code == 2);
  CHECK(run({"bundle", "-j", "3", "-p", "u + 2"}).code == 2);
  CHECK(run({"bundle", "-j", "3", "-p", "x"}).code == 2);
  CHECK(run({"curve", "x^4 - 2*x^2*y^3 + y^6"}).code == 4);
  CHECK(run({"curve", "--max-degree", "1", "x^5*y - y^4"}).code == 5);
  cli::Environment env;
  env.max_degree = "1";
  CHECK(run({"bundle", "-j", "4", "-p", "0"}, env).code == 5);
  env.max_degree = "lots";
  CHECK(run({"bundle", "-j", "4", "-p", "0"}, env).code == 1);
  const Result r = run({"curve", "x*(-1)"});
  CHECK(r.err.find("position 3") != std::string::npos);
}

TEST_CASE("max-degree only changes certification") {
  const Result a = run({"bundle", "-j", "3", "-p", "u^2 + z*u", "--format", "json"});
  const Result b = run({"bundle", "-j", "3", "-p", "u^2 + z*u", "--format", "json", "--max-degree", "16"});
  CHECK(a.out == b.out);
  CHECK(ResultCache::key("bundle", "j=3;p=u") == ResultCache::key("bundle", "j=3;p=u"));
  CHECK_FALSE(ResultCache::key("bundle", "j=3;p=u") == ResultCache::key("curve", "j=3;p=u"));
}

TEST_CASE("result cache") {
  const auto dir = fresh_dir("cache");
  const std::vector<std::string> args{"--cache-dir", dir.string(), "curve", "x^3 - y^4", "--format", "json"};
  const Result first = run(args);
  CHECK(first.code == 0);
  CHECK(first.err.find("cache hit") == std::string::npos);
  const Result second = run(args);
  CHECK(second.err.find("cache hit") != std::string::npos);
  CHECK(second.out == first.out);

  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files.push_back(e.path());
  REQUIRE(files.size() == 1);
  CHECK(files[0].filename().string().size() == 64 + 5);
  std::ofstream(files[0]) << "{not json";
  const Result third = run(args);
  CHECK(third.code == 0);
  CHECK(third.err.find("warning") != std::string::npos);
  CHECK(third.out == first.out);
  const Result fourth = run(args);
  CHECK(fourth.err.find("cache hit") != std::string::npos);

  // same key under a different --max-degree
  std::vector<std::string> more = args;
  more.insert(more.begin(), {"--max-degree", "12"});
  CHECK(run(more).err.find("cache hit") != std::string::npos);

  cli::Environment env;
  env.cache_dir = dir.string();
  CHECK(run({"curve", "x^3 - y^4"}, env).err.find("cache hit") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
