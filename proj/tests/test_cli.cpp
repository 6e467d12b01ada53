#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <regex>
#include <string>
#include <sys/wait.h>

#ifndef SEPCL_CLI_PATH
#error "SEPCL_CLI_PATH must point at the sepcl binary"
#endif

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(SEPCL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  Run r = run(args);
  EXPECT_EQ(r.code, expect_code) << args;
  return json::parse(r.out);
}

bool no_floats(const json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& v : j) {
      if (!no_floats(v)) return false;
    }
  return true;
}

const std::regex kFraction("-?[0-9]+(/[0-9]+)?");

}  // namespace

TEST(Cli, HStarAllAgrees) {
  auto j = run_json("hstar --signature 1,1,1 --method all");
  EXPECT_EQ(j["verdict"], "OK");
  ASSERT_EQ(j["result"]["rows"].size(), 3u);
  for (const auto& row : j["result"]["rows"]) EXPECT_EQ(row["hstar"], json({"1", "4", "1"}));
  EXPECT_EQ(j["result"]["rows"][2]["method"], "oracle");
  EXPECT_TRUE(no_floats(j));
}

TEST(Cli, HStarFormats) {
  auto plain = run("hstar --signature 2,2 --method formula --format plain");
  EXPECT_EQ(plain.code, 0);
  EXPECT_EQ(plain.out, "formula: 1,5,5,1\nverdict: OK\n");
  auto csv = run("hstar --signature 1,1 --method triangulation --format csv");
  EXPECT_EQ(csv.out, "method,degree,coefficient\ntriangulation,0,1\ntriangulation,1,1\n");
}

TEST(Cli, HStarNoClosedFormSkipped) {
  auto j = run_json("hstar --signature 1,1,2,2 --method all");
  EXPECT_EQ(j["result"]["rows"].size(), 2u);
  EXPECT_EQ(j["result"]["not_applicable"], json({"formula"}));
  EXPECT_EQ(run("hstar --signature 1,1,2,2 --method formula").code, 1);
}

TEST(Cli, LatticePoints) {
  auto j = run_json("hstar --signature 1,1 --method oracle --max-dilation 3");
  EXPECT_EQ(j["result"]["rows"][0]["lattice_points"], json({"1", "3", "5", "7"}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("hstar --signature 9,9 --method oracle").code, 2);
  EXPECT_EQ(run("hstar --signature 4,4 --method triangulation").code, 2);
  EXPECT_EQ(run("hstar --signature 1,1,x").code, 1);
  EXPECT_EQ(run("hstar --signature 3").code, 1);
  EXPECT_EQ(run("hstar --signature 1,1 --method magic").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Interlace) {
  auto j = run_json("interlace --a 1,4 --b 1,5");
  EXPECT_TRUE(j["result"]["interlaces"].get<bool>());
  auto k = run_json("interlace --a 1,5 --b 1,4", 3);
  EXPECT_FALSE(k["result"]["interlaces"].get<bool>());
  EXPECT_EQ(k["verdict"], "FAIL");
}

TEST(Cli, RootsCsv) {
  auto r = run("roots --signature 1,3");
  ASSERT_EQ(r.code, 0);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    auto nl = r.out.find('\n', pos);
    lines.push_back(r.out.substr(pos, nl - pos));
    pos = nl + 1;
  }
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "re,im_interval_lo,im_interval_hi");
  EXPECT_EQ(lines[2], "-1/2,0,0");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto a = lines[i].find(','), b = lines[i].rfind(',');
    EXPECT_EQ(lines[i].substr(0, a), "-1/2");
    EXPECT_TRUE(std::regex_match(lines[i].substr(a + 1, b - a - 1), kFraction)) << lines[i];
    EXPECT_TRUE(std::regex_match(lines[i].substr(b + 1), kFraction)) << lines[i];
  }
}

TEST(Cli, RootsJson) {
  auto j = run_json("roots --signature 2,2,2 --format json");
  EXPECT_TRUE(j["result"]["on_cl"].get<bool>());
  EXPECT_TRUE(no_floats(j));
  for (const auto& r : j["result"]["w_roots"])
    for (const auto& x : r["w_interval"]) EXPECT_TRUE(std::regex_match(x.get<std::string>(), kFraction));
}

TEST(Cli, Gb) {
  auto j = run_json("gb --signature 2,2,2 --checks reduced,lead,k222");
  EXPECT_EQ(j["verdict"], "OK");
  EXPECT_EQ(j["result"]["size"], 132);
  EXPECT_EQ(j["result"]["checks"]["k222"]["counterexamples"], 0);
  EXPECT_EQ(j["result"]["checks"]["k222"]["orders"], 101);
  auto e = run_json("gb --signature 1,1 --checks buchberger,membership --export");
  EXPECT_EQ(e["result"]["basis"], json({"x(1,2)*x(2,1) - z^2"}));
  EXPECT_EQ(run("gb --signature 2,2,2 --checks buchberger").code, 2);
  EXPECT_EQ(run("gb --signature 1,1,1 --checks k222").code, 1);
  EXPECT_EQ(run("gb --signature 1,1,1 --checks nonsense").code, 1);
}

TEST(Cli, Recursion) {
  auto j = run_json("recursion a 5");
  const auto& row = j["result"]["rows"][0];
  EXPECT_EQ(row["solution"]["alpha"], "7/12");
  EXPECT_EQ(row["solution"]["alphas"], json({"5/12"}));
  EXPECT_TRUE(row["verified"].get<bool>());
  auto neg = run_json("recursion j 3", 3);
  EXPECT_EQ(neg["result"]["rows"][0]["solution"]["alphas"][1], "-1/135");
  EXPECT_EQ(run("recursion zz 3").code, 1);
  EXPECT_EQ(run("recursion a 1").code, 1);
  EXPECT_EQ(run_json("recursion all 4", 3)["result"]["rows"].size(), 13u);
}

TEST(Cli, ConjectureScanReportsBothReadings) {
  auto j = run_json("scan --kind conjecture --max-total 6", 3);
  EXPECT_EQ(j["result"]["readings"]["literal"]["violations"], 50);
  EXPECT_EQ(j["result"]["readings"]["largest-part-excluded"]["violations"], 0);
  auto k = run_json("scan --kind conjecture --max-total 6 --reading largest-part-excluded");
  EXPECT_EQ(k["verdict"], "OK");
}

TEST(Cli, CorollaryScan) {
  auto j = run_json("scan --kind corollary --max-m 4 --max-n 6");
  int alpha2 = 0;
  for (const auto& r : j["result"]["rows"])
    if (r.contains("alpha2_matches")) {
      EXPECT_TRUE(r["alpha2_matches"].get<bool>());
      ++alpha2;
    }
  EXPECT_EQ(alpha2, 3);
}

TEST(Cli, Deterministic) {
  for (std::string args : {"scan --kind k222 --orders 5 --seed 3", "scan --kind corollary --max-m 3 --max-n 5 --jobs 3",
                           "hstar --signature 2,2,1 --method all --jobs 2", "roots --signature 1,1,3"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  // thread count does not change the payload
  EXPECT_EQ(run_json("scan --kind corollary --max-m 3 --max-n 5 --jobs 3")["result"],
            run_json("scan --kind corollary --max-m 3 --max-n 5")["result"]);
  EXPECT_NE(run("scan --kind k222 --orders 5 --seed 3").out, run("scan --kind k222 --orders 5 --seed 4").out);
}

TEST(Cli, Timing) {
  auto j = run_json("hstar --signature 1,1 --method formula --timing");
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_FALSE(run_json("hstar --signature 1,1 --method formula").contains("timing_ms"));
}
