#include "doctest.h"
#include "simploid/cli.hpp"
#include "simploid/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace simploid;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("simploid_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("k-groupoid check of an exported nerve") {
  TempDir t;
  auto z2 = t.file("nerve_z2.sobj.json");
  REQUIRE(run({"export", "nerve", "--category", "z2", "--depth", "4", "--out", z2}).code == kExitTrue);
  auto r = run({"check", "kgroupoid", "--input", z2, "--k", "1"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.starts_with("check kgroupoid [Definition k-groupoid]: true"));
  auto idem = t.file("idem.json");
  REQUIRE(run({"export", "nerve", "--category", "idem", "--depth", "4", "--out", idem}).code == kExitTrue);
  CHECK(run({"check", "kgroupoid", "--input", idem, "--k", "1"}).code == kExitFalse);
  CHECK(run({"check", "kcategory", "--input", idem, "--k", "1"}).code == kExitTrue);
}

TEST_CASE("reports are byte-stable and embed the config") {
  TempDir t;
  auto m2 = t.file("m2.dga.json");
  REQUIRE(run({"export", "dga", "--algebra", "m2", "--out", m2}).code == kExitTrue);
  std::vector<std::string> args{"nerve", "fill", "--dga", m2, "--n", "2", "--i", "1", "--x", "0", "--format", "json",
                                "--seed", "7"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == kExitTrue);
  CHECK(a.out == b.out);
  auto j = io::Json::parse(a.out);
  CHECK(j["lemma"] == "Theorem Smooth Part 1");
  CHECK(j["config"]["seed"] == 7);
  CHECK(j["config"]["depth"] == 4);  // k + 3
  CHECK(j["verdict"] == true);
  // f02 = f01 f12 in M2
  auto A = io::dga_from_json(io::read_file(m2));
  auto p = io::nerve_from_json(A, j["output"]);
  auto f = [&](Word w) { return A.add(A.unit, component(p, w)); };
  CHECK(f({0, 2}) == A.mul(f({0, 1}), f({1, 2})));
  auto other = args;
  other.back() = "8";
  CHECK(run(other).out != a.out);
  auto s1 = run({"suite", "nerve", "--format", "json"}), s2 = run({"suite", "nerve", "--format", "json"});
  CHECK(s1.code == kExitTrue);
  CHECK(s1.out == s2.out);
}

TEST_CASE("distinct exit codes") {
  TempDir t;
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"check", "frobnicate"}).code == kExitInvalidInput);
  CHECK(run({"check", "kgroupoid", "--input", t.file("missing.json")}).code == kExitInvalidInput);
  io::write_file(t.file("junk.json"), io::Json{{"schema", "sobj.v1"}});
  CHECK(run({"check", "kgroupoid", "--input", t.file("junk.json")}).code == kExitInvalidInput);
  CHECK(run({"check", "kgroupoid", "--format", "yaml", "--input", t.file("junk.json")}).code == kExitInvalidInput);

  // a depth-2 nerve that does not declare itself coskeletal
  auto x = t.file("short.json");
  REQUIRE(run({"export", "nerve", "--category", "z2", "--depth", "2", "--out", x}).code == kExitTrue);
  auto j = io::read_file(x);
  j["coskeletal_from"] = -1;
  io::write_file(x, j);
  CHECK(run({"check", "kgroupoid", "--input", x, "--depth", "2"}).code == kExitTrue);
  auto r = run({"check", "kgroupoid", "--input", x, "--depth", "4"});
  CHECK(r.code == kExitInsufficientTruncation);
  CHECK(r.err.find("insufficient truncation") != std::string::npos);

  CHECK(run({"suite", "expansions", "--budget-ms", "1"}).code == kExitTimeout);
  ::setenv("SIMPLOID_BUDGET_MS", "1", 1);
  CHECK(run({"suite", "expansions"}).code == kExitTimeout);
  ::setenv("SIMPLOID_BUDGET_MS", "soon", 1);
  CHECK(run({"suite", "nerve"}).code == kExitInvalidInput);
  ::unsetenv("SIMPLOID_BUDGET_MS");
}

TEST_CASE("expansion certify, verify and search") {
  TempDir t;
  auto c = t.file("ti.cert.json");
  auto r = run({"expansion", "certify", "--kind", "thick-inner", "--n", "2", "--i", "1", "--trunc", "3", "--out", c,
                "--format", "json"});
  REQUIRE(r.code == kExitTrue);
  auto j = io::Json::parse(r.out);
  CHECK(j["lemma"] == "Lemma lambda");
  CHECK(j["output"]["batches"][0]["words"] == io::Json::array({"210"}));
  CHECK(run({"expansion", "verify", "--input", c}).code == kExitTrue);
  CHECK(run({"expansion", "search", "--input", c}).code == kExitTrue);
  auto cert = io::read_file(c);
  std::swap(cert["steps"][2], cert["steps"][3]);
  io::write_file(c, cert);
  CHECK(run({"expansion", "verify", "--input", c}).code == kExitFalse);
  CHECK(run({"expansion", "certify", "--kind", "nonsense"}).code == kExitInvalidInput);
}

TEST_CASE("set-model checks on morphisms") {
  TempDir t;
  auto f = t.file("q.json");
  REQUIRE(run({"export", "functor", "--category", "z4", "--target", "z2", "--arrows", "0,1,0,1", "--depth", "4", "--out",
               f})
              .code == kExitTrue);
  CHECK(run({"check", "fibration", "--input", f}).code == kExitTrue);
  CHECK(run({"check", "hypercover", "--input", f}).code == kExitFalse);
  for (std::string via : {"path", "direct", "cat"}) CHECK(run({"check", "we", "--via", via, "--input", f}).code == kExitFalse);
  CHECK(run({"check", "we", "--via", "sideways", "--input", f}).code == kExitInvalidInput);
  CHECK(run({"export", "functor", "--category", "z4", "--target", "z2", "--arrows", "0,1"}).code == kExitInvalidInput);
}
