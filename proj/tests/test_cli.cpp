#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "artin/certificate_json.hpp"
#include "artin/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = artin::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("artin_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(Cli, TableCyclic3) {
  auto r = run({"table", "Cyc(3)"});
  ASSERT_EQ(r.code, 0) << r.err;
  int rows = 0;
  for (auto& l : lines(r.out))
    if (l.rfind("X.", 0) == 0) ++rows;
  EXPECT_EQ(rows, 3);
  auto j = run({"table", "Sym(3)", "--json"});
  ASSERT_EQ(j.code, 0);
  auto doc = artin::Json::parse(j.out);
  EXPECT_EQ(doc["degrees"].size(), 3u);
}

TEST(Cli, CEpsilon) {
  auto r = run({"bounds", "--which", "c_eps", "--eps", "1", "--degK", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.0243829924547085"), std::string::npos) << r.out;
}

TEST(Cli, GateNameIsReported) {
  auto r = run({"bounds", "--which", "trivial_53", "--H", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("gate violated: H>=1"), std::string::npos) << r.err;
}

TEST(Cli, BadInputExitsOne) {
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"table", "Sym(x)"}).code, 1);
  EXPECT_EQ(run({"table", "Nope(3)"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, VerifyThm13Sym3) {
  fs::path dir = fresh_dir("thm13");
  auto r = run({"verify-thm13", "Sym(3)", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  int certs = 0;
  for (auto& e : fs::directory_iterator(dir)) {
    std::string name = e.path().filename().string();
    EXPECT_EQ(name.find(".tmp"), std::string::npos);
    if (name.rfind("cert_", 0) == 0) {
      ++certs;
      auto check = artin::verify_certificate_json(artin::Json::parse(slurp(e.path())));
      EXPECT_TRUE(check.ok) << check.reason;
    }
  }
  EXPECT_EQ(certs, 1);  // only the 2-dim irreducible is faithful
  fs::remove_all(dir);
}

TEST(Cli, CertifyIsDeterministic) {
  fs::path a = fresh_dir("cert_a"), b = fresh_dir("cert_b");
  ASSERT_EQ(run({"certify", "Q8", "--out", a.string()}).code, 0);
  ASSERT_EQ(run({"certify", "Q8", "--out", b.string()}).code, 0);
  std::size_t n = 0;
  for (auto& e : fs::directory_iterator(a)) {
    ++n;
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path();
  }
  EXPECT_GE(n, 2u);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Cli, CertifyRejectsNonNormal) {
  auto r = run({"certify", "Sym(3)", "--normal", "(1 2)"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, ScanBadCsv) {
  fs::path dir = fresh_dir("scan");
  fs::create_directories(dir);
  fs::path csv = dir / "scan.csv";
  auto r = run({"scan-bad", "--grid", "gate:1e4:x2", "--csv", csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(slurp(csv));
  ASSERT_GE(ls.size(), 3u);
  EXPECT_EQ(ls[0], "H,lhs,rhs,ratio,verdict");
  auto syn = run({"scan-bad", "--grid", "100:1000:100", "--synthetic-pi"});
  EXPECT_EQ(syn.code, 2);
  auto low = run({"scan-bad", "--grid", "2:10:1"});
  EXPECT_EQ(low.code, 1);
  fs::remove_all(dir);
}

TEST(Cli, BilinearAndTgnAndMackey) {
  auto b = run({"bilinear", "--mods", "3,4,5", "--H", "1000"});
  EXPECT_EQ(b.code, 0) << b.err;
  auto t = run({"verify-tgn", "Dih(4)"});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("holds"), std::string::npos);
  EXPECT_EQ(t.out.find("fails"), std::string::npos);
  auto m = run({"mackey", "Sym(3)", "--list"});
  EXPECT_EQ(m.code, 0) << m.err;
}

TEST(Cli, FileStem) {
  EXPECT_EQ(artin::cli::file_stem("Sym(3)"), "Sym3");
  EXPECT_EQ(artin::cli::file_stem("Cyc(3)xSym(3)"), "Cyc3xSym3");
}
