#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ORE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 512> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
  auto r = run("--json " + args);
  EXPECT_EQ(r.code, 0) << r.out;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, LlcmOverF4) {
  auto j = run_json("--field f4 --twist frobenius llcm 1 w");
  EXPECT_EQ(j["polynomial"], "t^2 + 1");
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["independent"], true);
  EXPECT_EQ(j["viete"], true);
}

TEST(Cli, LlcmQuaternions) {
  auto j = run_json("--quaternion llcm i j");
  EXPECT_EQ(j["polynomial"], "t^2 + 1");
}

TEST(Cli, LlcmRepeatedPointWarns) {
  auto r = run("llcm w w");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
  EXPECT_NE(r.out.find("degree: 1"), std::string::npos);
  EXPECT_EQ(run("--strict llcm w w").code, 1);
}

TEST(Cli, FactorReport) {
  auto j = run_json("--field f4 --twist frobenius factor \"t^2+(1)\"");
  EXPECT_EQ(j["is_wedderburn"], true);
  EXPECT_EQ(j["weight"], 2);
  EXPECT_EQ(j["flag_count"], 3);
  ASSERT_EQ(j["factorizations"].size(), 3u);
  EXPECT_EQ(j["factorizations"][0], nlohmann::json({"1", "1"}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"classes", "factorizations", "flag_count", "is_wedderburn", "polynomial",
                                            "weight"}));
  auto parallel = run_json("--field f4 --twist frobenius --jobs 2 factor \"t^2+(1)\"");
  EXPECT_EQ(parallel, j);
}

TEST(Cli, FactorVerdicts) {
  auto lin = run_json("factor \"t-(w)\"");
  EXPECT_EQ(lin["flag_count"], 1);
  auto sq = run_json("factor \"t^2\"");
  EXPECT_EQ(sq["is_wedderburn"], false);
  EXPECT_EQ(run("--strict factor \"t^2\"").code, 1);
  EXPECT_EQ(run("factor \"(w)*t\"").code, 2);
  EXPECT_EQ(run("--quaternion factor \"t^2+1\"").code, 2);
  auto q = run_json("--quaternion --candidates \"i;j;1\" factor \"t^2+1\"");
  EXPECT_EQ(q["roots"].size(), 2u);
}

TEST(Cli, PindepAndVandermonde) {
  auto p = run_json("--twist frobenius pindep 1 w");
  EXPECT_EQ(p["independent"], true);
  EXPECT_EQ(p["u"][1][1], "w+1");
  EXPECT_EQ(run("--strict pindep w w").code, 1);
  auto v = run_json("--twist frobenius vdm 1 w");
  EXPECT_EQ(v["V"], nlohmann::json::parse(R"([["1", "1"], ["1", "w"]])"));
  EXPECT_EQ(v["diag"], nlohmann::json({"w+1", "w+1"}));
  EXPECT_EQ(v["lu"]["pivots"], nlohmann::json({"1", "w+1"}));
  auto dep = run_json("vdm w w");
  EXPECT_EQ(dep["independent"], false);
  EXPECT_TRUE(dep["inverse"].is_null());
}

TEST(Cli, DuoReports) {
  auto j = run_json("duo m2q \"[[1,1],[0,1]]\" \"[[0,0],[0,1]]\"");
  EXPECT_EQ(j["exists"], false);
  EXPECT_FALSE(j["certificate"].get<std::string>().empty());
  EXPECT_EQ(run("--strict duo m2q \"[[1,1],[0,1]]\" \"[[0,0],[0,1]]\"").code, 1);
  auto f2 = run_json("duo m2f2 \"[[1,1],[0,1]]\" \"[[0,0],[0,1]]\"");
  EXPECT_EQ(f2["condition3"]["universal"], false);
  EXPECT_FALSE(f2["condition3"]["counterexample"].is_null());
  auto z = run_json("duo zmod8 2 4");
  EXPECT_EQ(z["exists"], true);
  EXPECT_EQ(z["condition3"]["left_duo"], true);
  auto tri = run_json("duo tri \"[[x^2,x^2],[0,x]]\" \"[[x^2,0],[0,x]]\"");
  EXPECT_EQ(tri["exists"], false);
  EXPECT_EQ(run("duo m3q 1 2").code, 2);
}

TEST(Cli, ContextsAndErrors) {
  EXPECT_EQ(run("--field \"custom(3,w^2+1)\" --twist frobenius llcm 1 w").code, 0);
  EXPECT_EQ(run("--field \"custom(2,w^2+1)\" llcm 1").code, 2);
  EXPECT_EQ(run("--field f5 llcm 1").code, 2);
  EXPECT_EQ(run("llcm \"w+\"").code, 2);
  EXPECT_EQ(run("--quaternion --ratfunc llcm 1").code, 2);
  EXPECT_EQ(run("--field f8 --derivation ddx llcm 1").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, RandomChecks) {
  for (const char* ctx : {"--field f8 --twist frobenius --derivation inner:w", "--ratfunc --derivation ddx",
                          "--quaternion --twist inner:1+i", "--ratfunc --twist subst:x^2 --derivation inner:x"}) {
    auto j = run_json(std::string(ctx) + " --seed 5 check --samples 20");
    for (auto& [law, failures] : j["failures"].items()) EXPECT_EQ(failures, 0) << ctx << " " << law;
  }
}
