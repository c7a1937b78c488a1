#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"

namespace latext::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kHexagonal =
    R"({"ambient_dim": 2, "columns": [[1, 0], ["1/2", {"a": "0", "b": "1/2", "d": 3}]]})";

TEST(CliTest, CoverExample) {
  Result r = invoke({"cover"}, kHexagonal);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"mu\":0.5773502691896258,\"mu_squared\":\"1/3\"}\n");
}

TEST(CliTest, OrderExample) {
  Result r = invoke({"order"}, R"({"gram": [[1, "1/2"], ["1/2", "13/4"]]})");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"order\":48}\n");
  r = invoke({"order"}, R"({"gram": [[1, {"a": "0", "b": "1/4", "d": 2}], [{"a": "0", "b": "1/4", "d": 2}, 1]]})");
  EXPECT_EQ(r.out, "{\"order\":\"infinite\"}\n");
}

TEST(CliTest, ExtendDetExample) {
  Result r = invoke({"extend-det"}, R"({"ambient_dim": 2, "columns": [[2, 4]]})");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("det"), "2");
  EXPECT_EQ(j.at("basis"), Json::parse("[[2,0],[4,1]]"));
  EXPECT_TRUE(j.at("verified").get<bool>());
  EXPECT_EQ(j.begin().key(), "det");
}

TEST(CliTest, OptionsAfterSubcommand) {
  Result a = invoke({"numfield", "--D", "-2"}, "");
  Result b = invoke({"--D", "-2", "numfield"}, "");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_TRUE(j.at("extension").get<bool>());
  EXPECT_EQ(j.at("mu_squared"), "3/4");
}

TEST(CliTest, AlphaIsExact) {
  Result r = invoke({"extend-cover", "--alpha", "0.3"}, "{}");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("alpha"), "3/10");
  EXPECT_EQ(j.at("mu_squared"), "1/4");
}

TEST(CliTest, TextFormat) {
  Result r = invoke({"cover", "--format", "text"}, kHexagonal);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mu_squared: 1/3\n"), std::string::npos);
}

TEST(CliTest, InvalidInputExitsTwo) {
  Result r = invoke({"cover"}, R"({"ambient_dim": 2, "columns": [[1, 0], [0.5, 1.0]]})");
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_TRUE(r.out.empty());
  Json e = Json::parse(r.err);
  EXPECT_EQ(e.at("code"), 2);
  EXPECT_NE(e.at("message").get<std::string>().find("mixes"), std::string::npos);

  EXPECT_EQ(invoke({"cover"}, "{not json").code, kExitInvalid);
  EXPECT_EQ(invoke({"bogus"}, "{}").code, kExitInvalid);
  EXPECT_EQ(invoke({"cover", "--format", "svg"}, kHexagonal).code, kExitInvalid);
  EXPECT_EQ(invoke({"cover", "--tol", "-1"}, kHexagonal).code, kExitInvalid);
  EXPECT_EQ(invoke({"extend-det"}, R"({"columns": [["1/2", 1]]})").code, kExitInvalid);
  EXPECT_EQ(invoke({"deepholes"}, R"({"gram": [[1, 0], [0, 1]]})").code, kExitInvalid);
  EXPECT_EQ(invoke({"numfield", "--D", "12"}, "").code, kExitInvalid);
  EXPECT_EQ(invoke({"cover"}, R"({"columns": [["1/0", 1], [0, 1]]})").code, kExitInvalid);
}

TEST(CliTest, EnumerationLimitExitsThree) {
  Result r = invoke({"minima"}, R"({"gram": [[1,0,0,0,0,0,0],[0,1,0,0,0,0,0],[0,0,1,0,0,0,0],
      [0,0,0,1,0,0,0],[0,0,0,0,1,0,0],[0,0,0,0,0,1,0],[0,0,0,0,0,0,1]]})");
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_EQ(Json::parse(r.err).at("code"), 3);
}

TEST(CliTest, PlotDomainSvg) {
  Result r = invoke({"plot-domain"},
                    R"({"lattices": [{"gram": [[1, 0], [0, 1]]}, {"gram": [[1, "1/2"], ["1/2", 1]]}]})");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_NE(r.out.find("viewBox=\"0 0 600 600\""), std::string::npos);
  std::size_t circles = 0;
  for (auto p = r.out.find("<circle"); p != std::string::npos; p = r.out.find("<circle", p + 1)) ++circles;
  EXPECT_EQ(circles, 2u);
  Result j = invoke({"plot-domain", "--format", "json"}, R"({"gram": [[1, "1/2"], ["1/2", 1]]})");
  Json pts = Json::parse(j.out).at("points");
  EXPECT_DOUBLE_EQ(pts[0].at("a").get<double>(), 0.5);
  EXPECT_NEAR(pts[0].at("b").get<double>(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(JsonIoTest, Decimal) {
  EXPECT_EQ(parse_decimal("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_decimal("-3"), Rational(-3));
  EXPECT_EQ(parse_decimal("1e-2"), Rational(1, 100));
  EXPECT_EQ(parse_decimal("2.5E1"), Rational(25));
  EXPECT_EQ(parse_decimal(".5"), Rational(1, 2));
  EXPECT_EQ(parse_decimal("2/6"), Rational(1, 3));
  EXPECT_EQ(parse_decimal("010"), Rational(10));
  EXPECT_EQ(parse_rational("010/012"), Rational(5, 6));
  EXPECT_THROW(parse_decimal("abc"), LatticeError);
  EXPECT_THROW(parse_decimal("."), LatticeError);
  EXPECT_THROW(parse_rational("1/0"), LatticeError);
  EXPECT_THROW(parse_rational("0.5"), LatticeError);
}

TEST(JsonIoTest, LatticeRoundTrip) {
  const std::vector<std::string> docs = {
      R"({"ambient_dim":2,"columns":[[1,0],["1/2",{"a":"0","b":"1/2","d":3}]]})",
      R"({"ambient_dim":3,"columns":[[1,-2,3],["7/5","-1/3",0]]})",
      R"({"ambient_dim":2,"columns":[[{"a":"1/2","b":"-3/4","d":5},"123456789012345678901234567890"]]})",
      R"({"ambient_dim":2,"columns":[[0.1,1e-300],[-2.5,3.141592653589793]]})",
      R"({"gram":[[1,"1/2"],["1/2","13/4"]]})",
      R"({"gram":[[2.0,0.5],[0.5,1.0]]})",
  };
  for (const auto& text : docs) {
    Json doc = Json::parse(text);
    LatticeDoc parsed = parse_lattice(doc);
    Json again = lattice_json(parsed);
    EXPECT_EQ(again, doc) << text;
    EXPECT_EQ(again.dump(), doc.dump());
    LatticeDoc reparsed = parse_lattice(again);
    EXPECT_EQ(reparsed.is_gram, parsed.is_gram);
    EXPECT_TRUE(reparsed.matrix == parsed.matrix);
  }
}

TEST(JsonIoTest, EntriesAreCanonical) {
  EXPECT_EQ(entry_json(QuadScalar(Rational(4, 2))), Json(2));
  EXPECT_EQ(scalar_json(QuadScalar(Rational(4, 2))), Json("2"));
  EXPECT_EQ(parse_exact_entry(Json("6/4")), QuadScalar(Rational(3, 2)));
  // sqrt(12) normalizes to 2 sqrt(3)
  QuadScalar s = parse_exact_entry(Json::parse(R"({"a": 0, "b": 1, "d": 12})"));
  EXPECT_EQ(scalar_json(s), Json::parse(R"({"a":"0","b":"2","d":3})"));
}

TEST(CliTest, CorpusRunsCleanAndRepeats) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(LATEXT_CORPUS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  ASSERT_GE(files.size(), 15u);
  std::set<std::string> seen;
  for (const auto& f : files) {
    std::string name = f.filename().string();
    std::string command = name.substr(0, name.find('.'));
    seen.insert(command);
    std::ifstream in(f);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Result a = invoke({command}, text);
    Result b = invoke({command}, text);
    EXPECT_EQ(a.code, 0) << name << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << name;
  }
  EXPECT_EQ(seen.size(), commands().size());
}

}  // namespace
}  // namespace latext::cli
