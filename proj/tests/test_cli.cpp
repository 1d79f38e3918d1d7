#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kslice/cli.hpp"
#include "kslice/errors.hpp"
#include "kslice/report_io.hpp"

using namespace kslice;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KSLICE_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("kslice_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST(SeifertJson, ParsesNamedAndEmptyMatrices) {
  auto k1 = parse_seifert_json(R"({"name":"K1","matrix":[[0,2],[1,0]]})");
  EXPECT_EQ(k1.matrix(), (IntegerMatrix{{0, 2}, {1, 0}}));
  EXPECT_EQ(k1.name(), std::optional<std::string>("K1"));
  EXPECT_EQ(parse_seifert_json(R"({"matrix":[]})").size(), 0u);
}

TEST(SeifertJson, Errors) {
  try {
    parse_seifert_json(R"({"matrix":[[1,0],[0,1]]})");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("not a Seifert matrix"), std::string::npos);
  }
  try {
    parse_seifert_json(R"({"matrix":[[1,0],)");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("at byte"), std::string::npos);
  }
  EXPECT_THROW(parse_seifert_json(R"({"matrix":[[0,2],[1,0]],"extra":1})"), InvalidInput);
  EXPECT_THROW(parse_seifert_json(R"({"matrix":[[0,2.5],[1,0]]})"), InvalidInput);
  EXPECT_THROW(parse_seifert_json(R"({"matrix":[[0,2],[1]]})"), InvalidInput);
  EXPECT_THROW(parse_seifert_json(R"([1,2])"), InvalidInput);
  EXPECT_THROW(parse_seifert_file("/nonexistent/kslice.json"), InvalidInput);
}

TEST(SeifertJson, FileLookupAddsExtension) {
  EXPECT_EQ(parse_seifert_file(data("k1")).matrix(), (IntegerMatrix{{0, 2}, {1, 0}}));
}

TEST(Cli, ExitCodesAndMessages) {
  auto bad = run({"alex", temp_file("bad.json", R"({"matrix":[[1,0],[0,1]]})")});
  EXPECT_EQ(bad.code, cli::kInvalidInput);
  EXPECT_NE(bad.err.find("kslice alex: not a Seifert matrix: det(V-V^T)"), std::string::npos);

  auto broken = run({"alex", temp_file("broken.json", R"({"matrix":[[1,0])")});
  EXPECT_EQ(broken.code, cli::kInvalidInput);
  EXPECT_NE(broken.err.find("at byte"), std::string::npos);

  auto unknown = run({"frobnicate", data("k1.json")});
  EXPECT_EQ(unknown.code, cli::kInvalidInput);
  EXPECT_NE(unknown.err.find("unknown verb"), std::string::npos);

  EXPECT_EQ(run({"cover", data("k1.json"), "--r", "0"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"cover", data("k1.json"), "--r", "x"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"cover", data("k1.json")}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"alex", data("k1.json"), "--m", "2"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"alex"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"alex", data("k1.json"), "--format", "xml"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"report", "--m", "1", "--r", "4"}).code, cli::kInvalidInput);

  auto infinite = run({"cover", data("trefoil.json"), "--r", "6"});
  EXPECT_EQ(infinite.code, cli::kUnsupported);
  EXPECT_NE(infinite.err.find("infinite"), std::string::npos);

  auto noncyclic = run({"metab", temp_file("sum.json", R"({"matrix":[[0,2,0,0],[1,0,0,0],[0,0,0,2],[0,0,1,0]]})")});
  EXPECT_EQ(noncyclic.code, cli::kUnsupported);

  auto none = run({"metab", data("k1.json"), "--element", "(1, 1)"});
  EXPECT_EQ(none.code, cli::kUnsupported);
  EXPECT_NE(none.err.find("no metaboliser contains x"), std::string::npos);
}

TEST(Cli, VerbOutputs) {
  auto tre = run({"alex", data("trefoil.json")});
  EXPECT_EQ(tre.code, 0);
  EXPECT_EQ(tre.out, "t^2 - t + 1\n");
  EXPECT_EQ(run({"alex", data("unknot.json")}).out, "1\n");
  EXPECT_EQ(run({"alex", "--m", "1"}).out, "2t^2 - 5t + 2\n");

  auto inv = run({"invariants", data("figure_eight.json")});
  EXPECT_NE(inv.out.find("determinant: 5"), std::string::npos);
  EXPECT_NE(inv.out.find("signature: 0"), std::string::npos);

  auto bl = run({"blanchfield", data("k1.json")});
  EXPECT_EQ(bl.code, 0);
  EXPECT_NE(bl.out.find("Bl(alpha1, alpha2): (1)/(t - 2)"), std::string::npos);

  auto metab = run({"metab", data("k1.json"), "--element", "alpha1"});
  EXPECT_EQ(metab.code, 0);
  EXPECT_NE(metab.out.find("label: <alpha1>"), std::string::npos);

  auto cover = run({"cover", data("k1.json"), "--r", "2,3"});
  EXPECT_EQ(cover.code, 0);
  EXPECT_NE(cover.out.find("group: Z/3 + Z/3"), std::string::npos);
  EXPECT_NE(cover.out.find("group: Z/7 + Z/7"), std::string::npos);

  auto lf = run({"linkform", data("k1.json")});
  EXPECT_EQ(lf.code, 0);
  EXPECT_NE(lf.out.find("gram: (0, 1/3), (1/3, 0)"), std::string::npos);

  auto fam = run({"family", "--m", "3", "--r", "2", "--format", "machine"});
  EXPECT_EQ(fam.code, 0);
  auto j = Json::parse(fam.out);
  EXPECT_EQ(j["covers"][0]["N_r"], "7");

  EXPECT_EQ(run({"alex", "--seed", "3", "--genus", "2"}).code, 0);
  EXPECT_EQ(run({"alex", "--genus", "2"}).code, cli::kInvalidInput);
}

TEST(Cli, ReportRoundTripsThroughMachineFormat) {
  auto res = run({"report", "--m", "1", "--r", "2,3,5", "--format", "machine"});
  ASSERT_EQ(res.code, 0);
  auto parsed = report_from_json(Json::parse(res.out));
  EXPECT_EQ(parsed, obstruction_report(1, {2, 3, 5}));
  EXPECT_EQ(render_machine(report_to_json(parsed)), res.out);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const char* fmt : {"text", "machine"}) {
    auto a = run({"report", "--m", "3", "--r", "2,3,5,7", "--format", fmt});
    auto b = run({"report", "--m", "3", "--r", "2,3,5,7", "--format", fmt});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0);
  }
}

TEST(Cli, DegreeListParsing) {
  EXPECT_EQ(cli::parse_degree_list("2,3,5"), (std::vector<long>{2, 3, 5}));
  EXPECT_THROW(cli::parse_degree_list(""), InvalidInput);
  EXPECT_THROW(cli::parse_degree_list("2,,3"), InvalidInput);
  EXPECT_THROW(cli::parse_degree_list("-1"), InvalidInput);
}

TEST(ReportIo, GroupRoundTrip) {
  AbelianGroup g{{Integer(3), Integer(9), Integer("123456789012345678901234567890")}, 2};
  EXPECT_EQ(group_from_json(group_to_json(g)), g);
  EXPECT_EQ(group_to_json(AbelianGroup{}).dump(), R"({"invariant_factors":[],"free_rank":0})");
  EXPECT_THROW(group_from_json(Json::parse(R"({"invariant_factors":["x"],"free_rank":0})")), InvalidInput);
}

TEST(ReportIo, EvenParameterReportRoundTrip) {
  auto r = obstruction_report(2, {2, 3});
  EXPECT_EQ(report_from_json(report_to_json(r)), r);
  EXPECT_NE(render_report_text(r).find("even"), std::string::npos);
}
