#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using listcomb::cli::dispatch;

const std::string kData = LISTCOMB_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, DimensionsOfFullClass) {
  EXPECT_EQ(run({"dim", "ds", kData + "/full-2x3.json", "--k", "1"}).out, "3\n");
  EXPECT_EQ(run({"dim", "vc-graph", kData + "/full-2x3.json"}).code, 0);
  EXPECT_EQ(run({"dim", "littlestone", kData + "/thresholds.json"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"dim", "bogus", kData + "/full-2x3.json"}).code, 2);
  EXPECT_EQ(run({"dim", "ds", kData + "/missing.json"}).code, 2);
  EXPECT_EQ(run({"verify", "nope"}).code, 2);
  EXPECT_EQ(run({"cover", kData + "/full-2x3.json", "--k", "1", "--exact", "--greedy"}).code, 2);
}

TEST(Cli, CapacityExit) {
  EXPECT_EQ(run({"--exact-cover-cap", "2", "cover", kData + "/full-2x3.json", "--k", "1"}).code, 3);
}

TEST(Cli, CoverAndDisambiguation) {
  const Result c = run({"cover", kData + "/partial-constants.json", "--k", "1"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\"size\""), std::string::npos);
  const Result d = run({"disambiguate", "minimal", kData + "/partial-constants.json"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("y⋆"), std::string::npos);
}

TEST(Cli, ValidateShippedScheme) {
  const Result r = run({"compress", "validate", kData + "/subsample-scheme", kData + "/thresholds.json"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, BoostThenOutDir) {
  const fs::path dir = fs::temp_directory_path() / "listcomb-cli-test";
  fs::remove_all(dir);
  const Result r = run({"--out", dir.string(), "compress", "boost", kData + "/thresholds.json",
                     kData + "/thresholds-sample.json", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST(Cli, VerifyIsDeterministic) {
  const Result a = run({"verify", "coding", "--trials", "5", "--seed", "7"});
  const Result b = run({"verify", "coding", "--trials", "5", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

}  // namespace
