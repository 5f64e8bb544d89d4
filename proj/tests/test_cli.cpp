#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr is folded into the captured output.
Run cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(HYPERID_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Cli, EvalPfq) {
  auto r = cli("eval pfq --upper 1,1 --lower 3 --z 1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("value: 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("algebraic"), std::string::npos) << r.out;
}

TEST(Cli, EvalZeroArgument) {
  auto r = cli("eval pfq --upper 0.5,2 --lower 1.5 --z 0");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("value: 1\n"), std::string::npos) << r.out;
}

TEST(Cli, EvalHseriesAndPhi) {
  auto h = cli("eval hseries --upper 0.5,0.5 --lower 1.5,1.5 --z 1 --digits 20");
  EXPECT_EQ(h.status, 0) << h.out;
  EXPECT_NE(h.out.find("value: 2.4674011002723"), std::string::npos) << h.out;
  auto p = cli("eval phi --upper 0 --lower \"\" --z 0.5 --q 0.5");
  EXPECT_EQ(p.status, 0) << p.out;
}

TEST(Cli, OutOfDomainPsiIsDomainError) {
  auto r = cli("eval psi --upper 1,-1,1.25,1.25,1.25,1.25 --lower 2,-2,1.6,1.6,1.6,1.6 --z 3.2768 --q 0.5");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("DomainError"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("verify --identity nope").status, 2);
  EXPECT_EQ(cli("eval phi --upper 1 --z 0.5").status, 2);  // missing --q
  EXPECT_EQ(cli("eval pfq --upper x --lower 2 --z 0.5").status, 2);
  EXPECT_EQ(cli("verify --identity gauss-2f1 --digits 5").status, 2);
  EXPECT_EQ(cli("").status, 2);
}

TEST(Cli, VerifyJson) {
  auto r = cli("verify --identity gauss-2f1 --samples 5 --seed 3 --json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"].size(), 5u);
  EXPECT_EQ(j["summary"]["passed"], 5);
  EXPECT_EQ(j["suite"]["seed"], 3);
}

TEST(Cli, VerifyTextAndSerialAgree) {
  auto a = cli("verify --identity phi65,dixon --samples 3 --seed 1 --json");
  auto b = cli("verify --identity phi65,dixon --samples 3 --seed 1 --json --serial");
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  for (auto* j : {&ja, &jb}) {
    (*j)["suite"].erase("started_at");
    (*j)["summary"].erase("wall_time");
    for (auto& x : (*j)["results"]) x.erase("wall_time");
  }
  EXPECT_EQ(ja, jb);
}

TEST(Cli, ListShowsCatalog) {
  auto r = cli("list");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Re(c+d-a-b)>1"), std::string::npos);
  auto j = cli("list --json");
  ASSERT_EQ(j.status, 0);
  auto doc = nlohmann::json::parse(j.out);
  ASSERT_EQ(doc.size(), 17u);
  EXPECT_EQ(doc[0]["id"], "saalschuetz");
}

TEST(Cli, DigitsFromEnvironment) {
  auto r = cli("eval pfq --upper 1,1 --lower 3 --z 0.5", "HYPERID_DIGITS=12");
  ASSERT_EQ(r.status, 0) << r.out;
  auto line = r.out.substr(0, r.out.find('\n'));
  // "value: " plus at most 12 significant digits and a decimal point.
  EXPECT_LE(line.size(), std::string("value: ").size() + 13) << line;
  EXPECT_EQ(cli("list", "HYPERID_DIGITS=abc").status, 2);
}
