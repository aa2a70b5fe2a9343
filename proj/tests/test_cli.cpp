#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <regex>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(FUNDREG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const nlohmann::json& expectation(const nlohmann::json& doc, const std::string& property) {
  for (const auto& e : doc["expectations"])
    if (e["property"] == property) return e;
  throw std::runtime_error("missing " + property);
}

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), {}));
}

}  // namespace

TEST(Cli, VerifyFree2House) {
  const CliRun r = run("verify free2house --depth 4 --radius 8");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["overall"], "pass");
  EXPECT_EQ(expectation(doc, "finitely-self-adjacent")["actual"], "refuted");
  EXPECT_EQ(expectation(doc, "finitely-self-adjacent")["exit_code"], 1);
  for (const char* p : {"disjointness", "coverage", "boundary-containment", "local-finiteness"})
    EXPECT_EQ(expectation(doc, p)["exit_code"], 0) << p;
}

TEST(Cli, VerifyLinesAndCylinders) {
  for (const char* args : {"verify line-standard", "verify cylinder --c 1", "verify cylinder --c 3/2",
                           "verify cylinder --c 3/2 --noncompact-factor", "verify line-pathological --N 50",
                           "verify plane-pathological"}) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    EXPECT_EQ(nlohmann::json::parse(r.out)["overall"], "pass") << args;
  }
  const auto path = nlohmann::json::parse(run("verify line-pathological --N 50").out);
  EXPECT_EQ(expectation(path, "local-finiteness")["actual"], "refuted");
  EXPECT_EQ(expectation(path, "disjointness")["actual"], "verified-at-truncation");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify bogus").code, 64);
  EXPECT_EQ(run("verify line-standard --schedule 3,2").code, 64);
  EXPECT_EQ(run("verify line-standard --schedule 0..4").code, 64);
  EXPECT_EQ(run("verify cylinder --c 0").code, 64);
  EXPECT_EQ(run("verify cylinder --c abc").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("conformal --s 0").code, 64);
}

TEST(Cli, Conformal) {
  const CliRun ok = run("conformal --s 0.7 --grid 64 --K 6");
  ASSERT_EQ(ok.code, 0);
  const auto doc = nlohmann::json::parse(ok.out);
  EXPECT_EQ(doc["verdict"], "verified-at-truncation");
  EXPECT_EQ(doc["reports"].size(), 3u);
  EXPECT_EQ(run("conformal --s 0.3 --null-rescaling").code, 1);
  const CliRun csv = run("conformal --s 0.7 --grid 16 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "t,f,shift_difference");
}

TEST(Cli, RenderViews) {
  const CliRun nbhd = run("render free2house --view nbhd --center rU");
  ASSERT_EQ(nbhd.code, 0);
  std::set<std::string> fills;
  const std::regex fill_re("<polygon[^>]*fill=\"(#[0-9a-f]{6})\"");
  for (auto it = std::sregex_iterator(nbhd.out.begin(), nbhd.out.end(), fill_re); it != std::sregex_iterator(); ++it)
    fills.insert((*it)[1]);
  EXPECT_EQ(fills.size(), 6u);

  const CliRun spine = run("render free2house --view spine --radius 3");
  ASSERT_EQ(spine.code, 0);
  EXPECT_EQ(count(spine.out, std::regex("<polygon")), 7u);

  const CliRun quotient = run("render free2house --view quotient");
  ASSERT_EQ(quotient.code, 0);
  EXPECT_GT(count(quotient.out, std::regex("<polyline")), 0u);
  EXPECT_EQ(run("render line-standard").code, 64);
}

TEST(Cli, Quotient) {
  const CliRun r = run("quotient free2house --radius 3");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["gluings"].size(), 6u);
  EXPECT_EQ(run("quotient line-pathological").code, 64);
}

TEST(Cli, ByteIdenticalOutput) {
  for (const char* args : {"verify free2house --depth 3 --radius 6", "render free2house --view nbhd",
                           "conformal --s 0.7", "quotient cylinder --c 3/2"}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
