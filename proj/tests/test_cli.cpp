#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "alglen/cli.hpp"
#include "alglen/families.hpp"

using namespace alglen;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// temp files living under the build tree working dir
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents = "") : path(name) {
    if (!contents.empty()) {
      std::ofstream f(path);
      f << contents;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("example command round-trips through info") {
  TempFile file("cli_r4.json");
  auto w = run_cli({"example", "vinberg_R4", "-o", file.path});
  CHECK(w.code == cli::kExitOk);

  auto info = run_cli({"info", file.path});
  CHECK(info.code == cli::kExitOk);
  CHECK(info.out.find("R4: dim 4 over Q, not unital") != std::string::npos);
  CHECK(info.out.find("e3*e2 = e4") != std::string::npos);

  // emitted files reload to the identical fingerprint and products
  auto j1 = run_cli({"--json", "info", file.path});
  TempFile file2("cli_r4_b.json");
  {
    Algebra a = Algebra::load_file(file.path);
    std::ofstream f(file2.path);
    f << a.to_json().dump(2) << "\n";
  }
  auto j2 = run_cli({"--json", "info", file2.path});
  CHECK(j1.out == j2.out);
}

TEST_CASE("length command") {
  TempFile file("cli_r4_len.json");
  run_cli({"example", "vinberg_R4", "-o", file.path});

  auto res = run_cli({"length", file.path, "--set", "@e1"});
  CHECK(res.code == cli::kExitOk);
  CHECK(res.out.find("length 5") != std::string::npos);
  CHECK(res.out.find("char seq 1,2,3,5") != std::string::npos);
  // witness words carry explicit brackets
  CHECK(res.out.find("(e1*e1)") != std::string::npos);

  auto bad = run_cli({"length", file.path, "--set", "@e2"});
  CHECK(bad.code == cli::kExitRefuted);
  CHECK(bad.out.find("not generating") != std::string::npos);
}

TEST_CASE("check command exit codes") {
  TempFile v6("cli_v6.json");
  run_cli({"example", "valya_V6", "-o", v6.path});

  CHECK(run_cli({"check", v6.path, "--identity", "valya"}).code == cli::kExitOk);
  CHECK(run_cli({"check", v6.path, "--identity", "leibniz"}).code == cli::kExitRefuted);
  CHECK(run_cli({"check", v6.path, "--identity", "frobnitz"}).code == cli::kExitInput);
  CHECK(run_cli({"check", v6.path}).code == cli::kExitInput);

  TempFile e53("cli_e53.json");
  run_cli({"example", "r_ended_E", "--d", "5", "--r", "3", "-o", e53.path});
  CHECK(run_cli({"check", e53.path, "--r-ended", "3"}).code == cli::kExitOk);
  CHECK(run_cli({"check", e53.path, "--r-ended", "2"}).code == cli::kExitRefuted);

  // budget exhaustion is its own exit code
  CHECK(run_cli({"--budget", "10", "check", v6.path, "--identity", "valya"}).code ==
        cli::kExitBudget);
}

TEST_CASE("malformed files exit with the input error code") {
  TempFile bad("cli_bad.json", "{ not json");
  CHECK(run_cli({"check", bad.path, "--identity", "associative"}).code == cli::kExitInput);
  CHECK(run_cli({"info", "no_such_file.json"}).code == cli::kExitInput);

  TempFile dup("cli_dup.json", R"({
    "name": "dup", "field": {"type": "rational"}, "dim": 3,
    "products": [
      {"left": 1, "right": 1, "out": {"2": "1"}},
      {"left": 1, "right": 1, "out": {"3": "1"}}
    ]})");
  CHECK(run_cli({"info", dup.path}).code == cli::kExitInput);
}

TEST_CASE("classify command") {
  TempFile c4("cli_c4.json");
  run_cli({"example", "novikov_C4", "-o", c4.path});
  auto res = run_cli({"classify", c4.path});
  CHECK(res.code == cli::kExitOk);
  CHECK(res.out.find("is_mixing: certified") != std::string::npos);
  CHECK(res.out.find("is_sliding: refuted") != std::string::npos);
  CHECK(res.out.find("length upper bound 4 (mixing)") != std::string::npos);
}

TEST_CASE("search command with candidates file") {
  TempFile b5("cli_b5.json");
  run_cli({"example", "leibniz_B", "--d", "5", "-o", b5.path});
  TempFile cands("cli_cands.txt", "@x1\n# a comment\n\n1,1,0,0,0; 0,0,1,0,0\n");
  auto res = run_cli({"search", b5.path, "--max-subset", "1", "--candidates", cands.path,
                      "--with-bounds"});
  CHECK(res.code == cli::kExitOk);
  CHECK(res.out.find("best length 5") != std::string::npos);
  CHECK(res.out.find("exact: yes") != std::string::npos);
}

TEST_CASE("oracle command") {
  TempFile r4("cli_r4_oracle.json");
  run_cli({"example", "vinberg_R4", "-o", r4.path});
  auto res = run_cli({"oracle", r4.path, "--set", "@e1", "--kmax", "5"});
  CHECK(res.code == cli::kExitOk);
  CHECK(res.out.find("agree") != std::string::npos);

  // guard: full basis words at depth 12 explode
  TempFile b5("cli_b5_oracle.json");
  run_cli({"example", "leibniz_B", "--d", "5", "-o", b5.path});
  auto guard = run_cli({"oracle", b5.path, "--set", "@basis", "--kmax", "12"});
  CHECK(guard.code == cli::kExitBudget);
}

TEST_CASE("json reports are byte-identical across runs") {
  TempFile z5("cli_z5.json");
  run_cli({"example", "zinbiel_Z5", "-o", z5.path});
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--json", "classify", z5.path, "--seed", "7"},
        std::vector<std::string>{"--json", "length", z5.path, "--set", "@x1,x2"},
        std::vector<std::string>{"--json", "search", z5.path, "--random", "10", "--seed", "7",
                                 "--with-bounds"}}) {
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.code == r2.code);
    CHECK(r1.out == r2.out);
    CHECK_FALSE(r1.out.empty());
  }
}

TEST_CASE("prime field example files") {
  TempFile z4p("cli_z4p.json");
  auto made = run_cli({"example", "zinbiel_Z", "--d", "4", "--field", "7", "-o", z4p.path});
  CHECK(made.code == cli::kExitOk);
  auto res = run_cli({"check", z4p.path, "--identity", "zinbiel"});
  CHECK(res.code == cli::kExitOk);
  // p <= d collides with a vanishing denominator
  CHECK(run_cli({"example", "zinbiel_Z", "--d", "4", "--field", "3"}).code == cli::kExitInput);
  CHECK(run_cli({"example", "zinbiel_Z", "--d", "4", "--field", "6"}).code == cli::kExitInput);
}

TEST_CASE("custom identity files") {
  TempFile z4("cli_z4_idfile.json");
  run_cli({"example", "zinbiel_Z", "--d", "4", "-o", z4.path});
  TempFile id("cli_leftcomm.json", R"({
    "name": "left-commutativity", "arity": 3,
    "terms": [
      {"coeff": "1",  "monomial": [1, [2, 3]]},
      {"coeff": "-1", "monomial": [2, [1, 3]]}
    ]})");
  CHECK(run_cli({"check", z4.path, "--identity-file", id.path}).code == cli::kExitOk);

  TempFile bad("cli_bad_id.json", R"({"name": "x", "arity": 2,
    "terms": [{"coeff": "1", "monomial": [1, 1]}]})");
  CHECK(run_cli({"check", z4.path, "--identity-file", bad.path}).code == cli::kExitInput);
}

TEST_CASE("budget environment variable") {
  TempFile v6("cli_v6_env.json");
  run_cli({"example", "valya_V6", "-o", v6.path});
  setenv("ALGLEN_BUDGET", "10", 1);
  CHECK(run_cli({"check", v6.path, "--identity", "valya"}).code == cli::kExitBudget);
  // an explicit flag overrides the environment
  CHECK(run_cli({"--budget", "100000", "check", v6.path, "--identity", "valya"}).code ==
        cli::kExitOk);
  unsetenv("ALGLEN_BUDGET");
  CHECK(run_cli({"check", v6.path, "--identity", "valya"}).code == cli::kExitOk);
}
