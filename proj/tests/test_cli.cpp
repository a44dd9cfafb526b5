#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "ppfree/involution.hpp"

// PPFREE_CLI_BIN is injected by the build and points at the ppfree binary.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PPFREE_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli generate prints exact prefixes") {
  CHECK(run_cli("generate --builtin leech_l --len 13").out == "0121021201210\n");
  CHECK(run_cli("generate --builtin dekking_d3 --len 4").out == "0012\n");
  CHECK(run_cli("generate --builtin tm_sep_t --len 1").out == "0\n");
  CHECK(run_cli("generate --builtin thue_morse --len 6").out == "011010\n");
  CHECK(run_cli("generate --builtin leech_l --len 13").exit_code == 0);
  CHECK(run_cli("generate --builtin no_such --len 5").exit_code == 2);
  CHECK(run_cli("generate --builtin leech_l --len 0").exit_code == 2);
}

TEST_CASE("cli test reports hits with exit code 1") {
  RunResult hit = run_cli(
      "test --alphabet ACGT --involution '(A,T),(C,G).mir' --k 2 --word ACGCGT");
  CHECK(hit.exit_code == 1);
  CHECK(contains(hit.out, "hit"));

  RunResult json_hits = run_cli(
      "test --alphabet ACGT --involution '(A,T),(C,G).mir' --k 2 --word ACGCGT "
      "--algorithm naive --all --output json");
  CHECK(json_hits.exit_code == 1);
  auto doc = nlohmann::json::parse(json_hits.out);
  CHECK(doc["verdict"] == "hit");
  REQUIRE(doc["hits"].size() == 5);
  CHECK(doc["hits"][0]["start"] == 1);
  CHECK(doc["hits"][0]["block_len"] == 3);
  CHECK(doc["hits"][0]["pattern"] == nlohmann::json::array({"same", "phi"}));
}

TEST_CASE("cli test reports freeness with exit code 0") {
  RunResult free_word =
      run_cli("test --alphabet 012 --involution '(0,1).mir' --k 2 --word 0212021");
  CHECK(free_word.exit_code == 0);
  CHECK(contains(free_word.out, "free"));

  RunResult builtin = run_cli(
      "test --builtin leech_l --len 500 --involution mir --k 2 --output json");
  CHECK(builtin.exit_code == 0);
  CHECK(nlohmann::json::parse(builtin.out)["verdict"] == "free");
}

TEST_CASE("cli test rejects unusable flag combinations") {
  CHECK(run_cli("test --alphabet 01 --word 01 --k 1").exit_code == 2);
  CHECK(run_cli("test --alphabet 01 --word 01 --k 3 --algorithm linear").exit_code == 2);
  CHECK(run_cli("test --alphabet 01 --word 01 --k 2 --algorithm linear --all").exit_code == 2);
  CHECK(run_cli("test --alphabet 01 --word 012 --k 2").exit_code == 2);
  CHECK(run_cli("test --alphabet 01 --word 01 --k 2 --involution '(0,2).mir'").exit_code == 2);
  CHECK(run_cli("test --alphabet 01 --k 2").exit_code == 2);
  CHECK(run_cli("test --alphabet 01 --word 0 --word-file /dev/null --k 2").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli test reads words from files") {
  const auto path = std::filesystem::temp_directory_path() / "ppfree_cli_words.txt";
  {
    std::ofstream out(path);
    out << "0 2 1 2\n0 2 1\n";
  }
  RunResult r = run_cli("test --alphabet 012 --involution '(0,1).mir' --k 2 "
                        "--word-file " + path.string());
  CHECK(r.exit_code == 0);
  std::filesystem::remove(path);
  CHECK(run_cli("test --alphabet 012 --k 2 --word-file /no/such/file").exit_code == 2);
}

TEST_CASE("cli profile emits the three vectors with nulls for infinity") {
  RunResult r = run_cli("profile --alphabet 01 --word 01001010");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["length"] == 8);
  CHECK(doc["rmp"] == nlohmann::json::parse("[3,null,1,2,2,null,null,null]"));
  CHECK(doc["lmp"] == nlohmann::json::parse("[null,null,null,1,null,3,2,2]"));
  CHECK(doc["cmp"] == nlohmann::json::parse("[0,0,0,3,0,0,0,0,0]"));

  RunResult text = run_cli("profile --alphabet 01 --word 01001010 --output text");
  CHECK(contains(text.out, "rmp: 3 inf 1 2 2 inf inf inf"));
}

TEST_CASE("cli search reproduces the published trees") {
  RunResult ternary = run_cli("search --alphabet 012 --involution '(0,1).mir' --k 2");
  CHECK(ternary.exit_code == 0);
  auto doc = nlohmann::json::parse(ternary.out);
  CHECK(doc["nodes"] == 91);
  CHECK(doc["leaves"] == 61);
  CHECK(doc["depth"] == 8);
  CHECK(doc["exhausted"] == true);
  bool found = false;
  for (const auto& w : doc["longest"]) found |= w == "0212021";
  CHECK(found);

  RunResult binary = run_cli("search --alphabet 01 --involution '(0,1).mir' --k 3");
  auto doc2 = nlohmann::json::parse(binary.out);
  CHECK(doc2["nodes"] == 15);
  CHECK(doc2["leaves"] == 8);
  CHECK(doc2["depth"] == 3);
  bool has00 = false;
  for (const auto& w : doc2["longest"]) has00 |= w == "00";
  CHECK(has00);
}

TEST_CASE("cli search exits 3 when the budget cuts the walk short") {
  RunResult r = run_cli(
      "search --alphabet 012 --involution '(0,1).mir' --k 2 --max-nodes 10");
  CHECK(r.exit_code == 3);
  CHECK(nlohmann::json::parse(r.out)["exhausted"] == false);

  RunResult jobs = run_cli(
      "search --alphabet 01 --involution mir --k 3 --jobs 4 --output text");
  CHECK(jobs.exit_code == 0);
  CHECK(contains(jobs.out, "nodes: 171"));
}

TEST_CASE("cli decompose output is round-trip parseable") {
  RunResult wc = run_cli("decompose --alphabet ACGT --involution '(A,T),(C,G).mir'");
  CHECK(wc.exit_code == 0);
  CHECK(contains(wc.out, "(A,T),(C,G).mir  Idt={} Trn={A,C}"));

  RunResult mir = run_cli("decompose --alphabet 012 --involution mir");
  CHECK(contains(mir.out, "mir  Idt={0,1,2} Trn={}"));

  RunResult swapped = run_cli("decompose --alphabet 012 --involution '(1,0).mir'");
  CHECK(contains(swapped.out, "(0,1).mir  Idt={2} Trn={0}"));

  // The first token of the text output must parse back to the same map.
  const std::string token = swapped.out.substr(0, swapped.out.find(' '));
  ppfree::Alphabet a = ppfree::Alphabet::digits(3);
  CHECK(ppfree::parse_involution(a, token) == ppfree::parse_involution(a, "(0,1).mir"));

  auto doc = nlohmann::json::parse(
      run_cli("decompose --alphabet ACGT --involution '(A,T),(C,G).mir' "
              "--output json").out);
  CHECK(doc["letter_count_identity"] == true);
  CHECK(doc["idt"].empty());
  CHECK(doc["trn"] == nlohmann::json::array({"A", "C"}));
}
