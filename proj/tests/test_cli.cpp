// Exercises the installed command-line binary end to end. The binary path
// arrives as the first program argument (wired up by the build).
#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lllhnf/corpus.hpp"
#include "lllhnf/linalg.hpp"
#include "lllhnf/matrix_io.hpp"

using namespace lllhnf;

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run_cmd(const std::string& args, bool keep_stderr = false) {
  std::string full = "'" + g_cli + "' " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(full.c_str(), "r");
  REQUIRE(p != nullptr);
  CmdResult r;
  char buf[4096];
  size_t nread;
  while ((nread = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, nread);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_tmp(const std::string& name, const std::string& text) {
  std::filesystem::path path = g_tmp / name;
  std::ofstream out(path);
  out << text;
  REQUIRE(out.good());
  return path.string();
}

}  // namespace

TEST_CASE("hnf prints the normal form of the gcd example") {
  std::string path = write_tmp("g.txt", "2 1\n4\n6\n");
  CmdResult r = run_cmd("hnf '" + path + "'");
  CHECK(r.code == 0);
  CHECK(r.out == "2 1\n0\n2\n");
}

TEST_CASE("hnf reads stdin when asked") {
  std::string path = write_tmp("gin.txt", "2 1\n4\n6\n");
  CmdResult r = run_cmd("hnf - < '" + path + "'");
  CHECK(r.code == 0);
  CHECK(r.out == "2 1\n0\n2\n");
}

TEST_CASE("hnf --print-transform emits a verifiable pair") {
  IntMat G = generate({GenKind::random, 5, 4, 9, 0, 9100});
  std::string path = write_tmp("t.txt", matrix_to_string(G));
  CmdResult r = run_cmd("hnf --print-transform '" + path + "'");
  REQUIRE(r.code == 0);
  std::size_t marker = r.out.find("# transform\n");
  REQUIRE(marker != std::string::npos);
  std::istringstream a_in(r.out.substr(0, marker));
  std::istringstream b_in(r.out.substr(marker));  // leading comment line is skipped by the parser
  IntMat A = read_matrix(a_in);
  IntMat b = read_matrix(b_in);
  CHECK(b * G == A);
  BigInt det = det_exact(b);
  CHECK((det == 1 || det == -1));
}

TEST_CASE("round trip: hnf output feeds verify") {
  IntMat G = generate({GenKind::duplicate_rows, 5, 3, 10, 2, 9200});
  std::string path = write_tmp("rt.txt", matrix_to_string(G));
  CmdResult r = run_cmd("hnf '" + path + "'");
  REQUIRE(r.code == 0);
  std::string again = write_tmp("rt2.txt", r.out);
  CmdResult v = run_cmd("verify '" + again + "'");
  CHECK(v.code == 0);
}

TEST_CASE("verify accepts engine output and reports summary") {
  IntMat G = generate({GenKind::rank_deficient, 5, 5, 0, 2, 9300});
  std::string path = write_tmp("v.txt", matrix_to_string(G));
  CmdResult r = run_cmd("verify '" + path + "'");
  CHECK(r.code == 0);
  CHECK(r.out.find("ok\n") != std::string::npos);
}

TEST_CASE("alpha validation at the flag boundary") {
  std::string path = write_tmp("a.txt", "2 1\n4\n6\n");
  CHECK(run_cmd("hnf --alpha 5/4 '" + path + "'").code == 2);
  CHECK(run_cmd("hnf --alpha 1/4 '" + path + "'").code == 2);
  CHECK(run_cmd("hnf --alpha 0/1 '" + path + "'").code == 2);
  CHECK(run_cmd("hnf --alpha nonsense '" + path + "'").code == 2);
  CHECK(run_cmd("hnf --alpha 1/1 '" + path + "'").code == 0);
  CHECK(run_cmd("hnf --alpha 1 '" + path + "'").code == 0);
  CHECK(run_cmd("hnf --alpha 26/100 '" + path + "'").code == 0);
}

TEST_CASE("malformed input exits 2") {
  std::string bad = write_tmp("bad.txt", "2 2\n1 2\n3\n");
  CHECK(run_cmd("hnf '" + bad + "'").code == 2);
  CHECK(run_cmd("hnf '" + (g_tmp / "missing.txt").string() + "'").code == 2);
  CHECK(run_cmd("hnf --check bogus '" + bad + "'").code == 2);
  CHECK(run_cmd("nosuchcommand").code == 2);
  CHECK(run_cmd("hnf").code == 2);  // missing file argument
}

TEST_CASE("check levels agree on output") {
  IntMat G = generate({GenKind::random, 6, 5, 12, 0, 9400});
  std::string path = write_tmp("lvl.txt", matrix_to_string(G));
  CmdResult none = run_cmd("hnf --check none '" + path + "'");
  CmdResult cp = run_cmd("hnf --check checkpoints '" + path + "'");
  CmdResult full = run_cmd("hnf --check full '" + path + "'");
  CHECK(none.code == 0);
  CHECK(none.out == cp.out);
  CHECK(none.out == full.out);
}

TEST_CASE("run report is written and machine readable") {
  std::string path = write_tmp("rep_in.txt", "2 2\n2 4\n1 2\n");
  std::string rep = (g_tmp / "report.json").string();
  CmdResult r = run_cmd("hnf --report '" + rep + "' '" + path + "'");
  REQUIRE(r.code == 0);
  std::ifstream in(rep);
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["schema_version"] == "1");
  CHECK(j["input"]["m"] == "2");
  CHECK(j["rank"] == "1");
  CHECK(j["isodim"] == "1");
  CHECK(j["ok"] == true);
  CHECK(j["hnf"].is_array());
  CHECK(j["metrics"]["total_ops"].is_string());
  CHECK(j["checkpoints"].is_array());
  CHECK(j["phases"].size() == 1);
  CHECK(j["phases"][0]["r_log"][0] == "2");
}

TEST_CASE("gen is deterministic and chains into the pipeline") {
  CmdResult g1 = run_cmd("gen random --m 4 --n 3 --bound 9 --seed 55");
  CmdResult g2 = run_cmd("gen random --m 4 --n 3 --bound 9 --seed 55");
  REQUIRE(g1.code == 0);
  CHECK(g1.out == g2.out);
  std::istringstream in(g1.out);
  CHECK(read_matrix(in) == generate({GenKind::random, 4, 3, 9, 0, 55}));

  std::string out_path = (g_tmp / "gen.mat").string();
  CHECK(run_cmd("gen gcd_vector --m 5 --n 1 --bound 30 --seed 77 -o '" + out_path + "'").code ==
        0);
  CHECK(run_cmd("verify '" + out_path + "'").code == 0);
  CHECK(run_cmd("gen bogus_kind --m 2 --n 2 --bound 5 --seed 1").code == 2);
}

TEST_CASE("bench runs a small materialized corpus") {
  std::filesystem::path dir = g_tmp / "mini";
  std::filesystem::create_directory(dir);
  std::vector<CorpusEntry> entries;
  entries.push_back({"mini_a", {GenKind::random, 4, 4, 9, 0, 9500}});
  entries.push_back({"mini_b", {GenKind::rank_deficient, 5, 4, 0, 2, 9501}});
  entries.push_back({"mini_c", {GenKind::gcd_vector, 3, 1, 30, 0, 9502}});
  {
    std::ofstream man(dir / "manifest.tsv");
    write_manifest(man, entries);
  }
  for (const auto& e : entries)
    write_matrix_file((dir / (e.name + ".mat")).string(), generate(e.spec));

  std::string rep = (g_tmp / "bench.json").string();
  CmdResult r = run_cmd("bench --corpus '" + dir.string() + "' --report '" + rep + "' --jobs 1");
  CHECK(r.code == 0);
  std::ifstream in(rep);
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["total"] == "3");
  CHECK(j["failed"] == "0");
  CHECK(j["hard_violations"] == "0");
  CHECK(j["runs"].size() == 3);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli> [doctest options]\n");
    return 1;
  }
  g_cli = argv[1];
  char tmpl[] = "/tmp/lllhnf_cli_XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::perror("mkdtemp");
    return 1;
  }
  g_tmp = tmpl;

  doctest::Context ctx;
  std::vector<char*> args;
  args.push_back(argv[0]);
  for (int i = 2; i < argc; ++i) args.push_back(argv[i]);
  ctx.applyCommandLine(int(args.size()), args.data());
  int rc = ctx.run();
  std::error_code ec;
  std::filesystem::remove_all(g_tmp, ec);
  return rc;
}
