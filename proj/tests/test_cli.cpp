#include "cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

using namespace zf::cli;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zetaforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = run_cli(int(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

// runs the installed binary through the shell so the environment can be set
Run shell(const std::string& env, const std::string& args) {
  std::string cmd = env + " " + ZF_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out, {}};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

size_t digits(const std::string& v) {
  size_t d = 0;
  bool lead = true;
  for (char c : v) {
    if (c == 'e' || c == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (lead && c == '0') continue;
    lead = false;
    ++d;
  }
  return d;
}

}  // namespace

TEST(Eval, ZetaThreeAtDefaultPrecision) {
  // 128 bits print 36 correctly rounded significant digits
  auto r = run({"eval", "zeta", "3"});
  EXPECT_EQ(r.rc, 0);
  std::string v = first_line(r.out);
  EXPECT_EQ(v.rfind("1.20205690315959428539973816151144999", 0), 0u) << v;
  EXPECT_EQ(digits(v), 36u);
}

TEST(Eval, DigitCountFollowsBits) {
  for (long bits : {16L, 64L, 200L, 333L}) {
    auto r = run({"eval", "zeta", "3", "--bits", std::to_string(bits)});
    ASSERT_EQ(r.rc, 0) << r.err;
    EXPECT_EQ(long(digits(first_line(r.out))), zf::display_digits(bits)) << bits;
  }
}

TEST(Eval, ConstantLiteralsAndRationals) {
  auto r = run({"eval", "clausen", "2", "pi/2"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(first_line(r.out).rfind("0.91596559417721901505460351493238411", 0), 0u) << r.out;
  r = run({"eval", "log_gamma", "1/2"});
  EXPECT_EQ(first_line(r.out).rfind("0.572364942924700087071713675676529356", 0), 0u);
  r = run({"eval", "polylog", "2", "-1"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(first_line(r.out).rfind("-0.822467033424113218236207583323012595", 0), 0u);
  r = run({"eval", "zeta_alt", "log2"});
  EXPECT_EQ(r.rc, 0);
  r = run({"eval", "sin_integral", "2pi"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(first_line(r.out).rfind("1.41815157613262", 0), 0u) << r.out;
  r = run({"eval", "hurwitz_zeta", "2", "e"});
  EXPECT_EQ(r.rc, 0);
}

TEST(Eval, ExactOutputs) {
  EXPECT_EQ(run({"eval", "harmonic", "10", "1"}).out, "7381/2520\n");
  EXPECT_EQ(run({"eval", "harmonic", "4", "2"}).out, "205/144\n");
  EXPECT_EQ(run({"eval", "bernoulli", "12"}).out, "-691/2730\n");
  EXPECT_EQ(run({"eval", "binomial", "10", "3"}).out, "120\n");
}

TEST(Eval, Errors) {
  EXPECT_EQ(run({"eval", "nope", "1"}).rc, 2);
  EXPECT_EQ(run({"eval", "zeta"}).rc, 2);
  EXPECT_EQ(run({"eval", "zeta", "abc"}).rc, 2);
  EXPECT_EQ(run({"eval", "zeta", "1/0"}).rc, 2);
  auto r = run({"eval", "zeta", "1"});
  EXPECT_EQ(r.rc, 2);
  EXPECT_NE(r.err.find("pole"), std::string::npos) << r.err;
  EXPECT_EQ(run({"eval", "zeta", "3", "--bits", "15"}).rc, 2);
  EXPECT_EQ(run({"eval", "zeta", "3", "--bits", "x"}).rc, 2);
  EXPECT_EQ(run({}).rc, 2);
  EXPECT_EQ(run({"frobnicate"}).rc, 2);
}

TEST(Verify, SingleIdAndUnknownId) {
  auto r = run({"verify", "EQ-4.4.167"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("EQ-4.4.167  pass"), std::string::npos);
  EXPECT_EQ(run({"verify", "NO-SUCH-ID"}).rc, 2);
  EXPECT_EQ(run({"verify"}).rc, 2);
  EXPECT_EQ(run({"verify", "--all", "EQ-4.4.167"}).rc, 2);
}

TEST(Verify, FailureGivesExitOne) {
  EXPECT_EQ(run({"verify", "EQ-4.4.168i"}).rc, 1);
  EXPECT_EQ(run({"verify", "ADV-4.4.252a"}).rc, 0);
}

TEST(Verify, TolFlag) {
  EXPECT_EQ(run({"verify", "EQ-4.4.168i", "--tol", "1"}).rc, 0);
  EXPECT_EQ(run({"verify", "EQ-4.4.163", "--tol", "1e-200"}).rc, 1);
  EXPECT_EQ(run({"verify", "EQ-4.4.163", "--tol", "-1"}).rc, 2);
  EXPECT_EQ(run({"verify", "EQ-4.4.163", "--tol", "0"}).rc, 2);
  EXPECT_EQ(run({"verify", "EQ-4.4.163", "--tol", "abc"}).rc, 2);
}

TEST(Verify, JsonFormatMatchesSchema) {
  auto r = run({"verify", "--all", "--tag", "exact", "--format", "json"});
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["run"]["precision_bits"], 128);
  EXPECT_EQ(j["run"]["guard_bits"], 32);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_GE(j["results"].size(), 15u);
  for (const auto& e : j["results"]) {
    EXPECT_EQ(e.size(), 5u);
    EXPECT_TRUE(e["residual"].is_string());
  }
}

TEST(Verify, RepeatableTagAndOutFile) {
  auto path = std::filesystem::temp_directory_path() / "zf_cli_report.json";
  std::filesystem::remove(path);
  auto r = run({"verify", "--all", "--tag", "combinatoric", "--tag", "clausen", "--format",
                "json", "--out", path.string()});
  EXPECT_EQ(r.rc, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  bool saw_clausen = false, saw_exact = false;
  for (const auto& e : j["results"]) {
    std::string id = e["id"];
    if (id.find("228r") != std::string::npos) saw_clausen = true;
    if (id == "EQ-4.4.123") saw_exact = true;
  }
  EXPECT_TRUE(saw_clausen && saw_exact);
  std::filesystem::remove(path);
}

TEST(List, CountsAndFilters) {
  auto r = run({"list"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 60);
  auto ri = run({"list", "--tag", "integral"});
  std::istringstream in(ri.out);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    EXPECT_TRUE(line.rfind("INT-I", 0) == 0 || line.rfind("FIX-INT-I", 0) == 0) << line;
  }
  EXPECT_GE(n, 30);
  auto re = run({"list", "--tag", "exact"});
  std::istringstream ie(re.out);
  while (std::getline(ie, line)) EXPECT_NE(line.find("\texact\t"), std::string::npos) << line;
  auto rj = run({"list", "--format", "json", "--tag", "clausen"});
  auto j = nlohmann::json::parse(rj.out);
  EXPECT_GE(j.size(), 5u);
}

TEST(Report, CatalogExport) {
  auto r = run({"report", "--catalog"});
  EXPECT_EQ(r.rc, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), zf::catalog().size());
}

TEST(Report, DefaultsToJson) {
  auto r = run({"report", "--tag", "combinatoric"});
  EXPECT_EQ(r.rc, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("summary"));
}

TEST(Binary, EnvironmentOverridesDefaultBits) {
  auto r = shell("ZETAFORGE_BITS=64", "eval zeta 3");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "1.2020569031595943\n");
  auto flag = shell("ZETAFORGE_BITS=64", "eval zeta 3 --bits 128");
  EXPECT_EQ(digits(first_line(flag.out)), 36u);
  EXPECT_EQ(shell("ZETAFORGE_BITS=8", "eval zeta 3").rc, 2);
  EXPECT_EQ(shell("ZETAFORGE_BITS=lots", "eval zeta 3").rc, 2);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(shell("", "verify NO-SUCH-ID").rc, 2);
  EXPECT_EQ(shell("", "verify EQ-4.4.167").rc, 0);
  EXPECT_EQ(shell("", "verify EQ-4.4.241").rc, 1);
  EXPECT_EQ(shell("", "--help").rc, 0);
}

TEST(Binary, LocaleIndependentOutput) {
  auto r = shell("LC_ALL=de_DE.UTF-8 LANG=de_DE.UTF-8", "eval zeta 3 --bits 64");
  EXPECT_EQ(r.out, "1.2020569031595943\n");
  auto j = shell("LC_ALL=de_DE.UTF-8", "verify EQ-4.4.163 --format json");
  auto parsed = nlohmann::json::parse(j.out);
  EXPECT_TRUE(parsed["results"][0]["seconds"].is_number());
}
