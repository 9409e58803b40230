#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "coxlat/cli/cli.hpp"

namespace coxlat::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "coxlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParseType, Accepts) {
  EXPECT_EQ(parse_type("A3"), make_type(Family::A, 3));
  EXPECT_EQ(parse_type("a3"), make_type(Family::A, 3));
  EXPECT_EQ(parse_type("I2(7)"), dihedral_type(7));
  EXPECT_EQ(parse_type("C4"), make_type(Family::B, 4));
  const auto p = parse_type("A2xB2");
  ASSERT_EQ(p.factors.size(), 2u);
  EXPECT_EQ(p.name(), "A2xB2");
  EXPECT_EQ(parse_type("e6").name(), "E6");
}

TEST(ParseType, Rejects) {
  for (const char* s : {"E9", "D3", "H5", "I2(2)", "", "X3", "A", "A0", "B1", "A2x", "xA2", "I2(", "I2(7", "A3 ", "F5", "G3"})
    EXPECT_THROW(parse_type(s), std::invalid_argument) << s;
}

TEST(ParseIdentities, ExpandsAllInCanonicalOrder) {
  EXPECT_EQ(parse_identities("all"), identity_names());
  EXPECT_EQ(parse_identities("cosets,theorem1"), (std::vector<std::string>{"theorem1", "cosets"}));
  EXPECT_THROW(parse_identities("theorem9"), std::invalid_argument);
}

TEST(ExitCodes, Contract) {
  EXPECT_EQ(invoke({"verify", "--type", "B2", "--identities", "all", "--output", "json"}).code, kExitOk);
  const auto e8 = invoke({"verify", "--type", "E8"});
  EXPECT_EQ(e8.code, kExitUsage);
  EXPECT_NE(e8.err.find("E8 exceeds supported scale"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--type", "E7"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--type", "D3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--type", "A3", "--identities", "bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--type", "A3", "--output", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate", "--type", "A3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--type", "A6", "--cap", "100"}).code, kExitUsage);
  EXPECT_EQ(invoke({"charpoly", "--type", "A3", "--subset", "9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(ExitCodes, MismatchMapsToOne) {
  IdentityReport good, bad;
  good.holds = true;
  bad.holds = false;
  EXPECT_EQ(exit_code({good}), kExitOk);
  EXPECT_EQ(exit_code({good, bad}), kExitMismatch);
  EXPECT_EQ(exit_code({}), kExitOk);
}

TEST(Json, MatchesGoldenFile) {
  const auto r = invoke({"verify", "--type", "B2", "--identities", "all", "--output", "json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, read_file(std::string(COXLAT_GOLDEN_DIR) + "/verify_B2.json"));
}

TEST(Json, SchemaFields) {
  const auto r = invoke({"verify", "--type", "D4", "--identities", "theorem1,degrees", "--output", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["type"], "D4");
  EXPECT_EQ(j["command"], "verify");
  EXPECT_TRUE(j["timing_ms"].is_null());
  EXPECT_TRUE(j["holds"].get<bool>());
  ASSERT_EQ(j["identities"].size(), 2u);
  const auto& t1 = j["identities"][0];
  EXPECT_EQ(t1["name"], "theorem1");
  for (const char* key : {"name", "holds", "lhs", "rhs", "rows", "flags", "mismatches", "note", "timing_ms"})
    EXPECT_TRUE(t1.contains(key)) << key;
  for (const auto& row : t1["rows"]) {
    for (const char* key : {"representative", "type_label", "lambda_size", "rhs_value", "normalizer_index", "chi_fix", "match"})
      EXPECT_TRUE(row.contains(key)) << key;
    EXPECT_TRUE(row["chi_fix"].is_array());
    EXPECT_EQ(row["chi_fix"].back(), 1);
  }
  const auto& deg = j["identities"][1];
  EXPECT_EQ(deg["lhs"], deg["rhs"]);
  EXPECT_FALSE(deg["flags"]["equals_t^n"].get<bool>());
}

TEST(Json, TimingIsReportedOnlyWhenRequested) {
  const auto r = invoke({"verify", "--type", "A2", "--output", "json", "--timing"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["timing_ms"].is_number());
}

TEST(Determinism, RepeatedAndParallelRunsAreByteIdentical) {
  for (const char* type : {"B3", "H3", "A2xA1"}) {
    const auto a = invoke({"verify", "--type", type, "--output", "json"});
    const auto b = invoke({"verify", "--type", type, "--output", "json"});
    const auto c = invoke({"verify", "--type", type, "--output", "json", "--threads", "4"});
    EXPECT_EQ(a.out, b.out) << type;
    EXPECT_EQ(a.out, c.out) << type;
    const auto t1 = invoke({"verify", "--type", type, "--output", "table", "--threads", "3"});
    const auto t2 = invoke({"verify", "--type", type, "--output", "table"});
    EXPECT_EQ(t1.out, t2.out) << type;
  }
}

TEST(Csv, Quoting) {
  EXPECT_EQ(csv_quote("plain"), "plain");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_quote("{1,2}"), "\"{1,2}\"");
}

TEST(Csv, OrbitsHasOneRowPerOrbit) {
  const auto r = invoke({"orbits", "--type", "E6", "--output", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  EXPECT_EQ(lines, 1u + 17u);
}

TEST(Charpoly, PrintsFactoredPolynomial) {
  const auto r = invoke({"charpoly", "--type", "A3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("(t-1)(t-2)(t-3)"), std::string::npos);
  const auto k = invoke({"charpoly", "--type", "B3", "--subset", "3", "--output", "json"});
  const auto j = nlohmann::json::parse(k.out);
  EXPECT_EQ(j["chi"], nlohmann::json::parse("[3,-4,1]"));
}

TEST(Lattice, ReportsNodeCountsAndExponents) {
  const auto r = invoke({"lattice", "--type", "H3", "--output", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["exponents"], nlohmann::json::parse("[1,5,9]"));
}

}  // namespace
}  // namespace coxlat::cli
