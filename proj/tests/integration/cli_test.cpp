#include "process.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using bidual::testing::quote;
using bidual::testing::run_command;

namespace {

bidual::testing::ProcessResult cli(const std::string& args) {
  return run_command(quote(BIDUAL_CLI) + " " + args + " 2>/dev/null");
}

nlohmann::json cli_json(const std::string& args, int expected_status = 0) {
  auto r = cli(args + " --json");
  REQUIRE(r.status == expected_status);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("extend renders one extension") {
  auto r = cli("extend --template \"a b* c\" --perm 3");
  CHECK(r.status == 0);
  CHECK(r.out == "(m ◊ n*) □ p\n");
  CHECK(cli("extend --template \"a b* c\" --perm 3 --ascii").out == "(m <> n*) [] p\n");
}

TEST_CASE("extend under commutativity separates all six") {
  auto j = cli_json("extend --template \"a b* c\" --all --relations commutative");
  CHECK(j["schema"] == "bidual.extend/1");
  CHECK(j["extensions"].size() == 6);
  CHECK(j["classes"].size() == 6);
  CHECK(j["regular"] == false);
}

TEST_CASE("the pairing template has six identical extensions") {
  auto j = cli_json("extend --template \"<phi,a><psi,b> c\" --all");
  for (const auto& e : j["extensions"]) CHECK(e["term"] == "⟨m,φ⟩ ⟨n,ψ⟩ p");
  CHECK(j["regular"] == true);
}

TEST_CASE("mixed levels") {
  auto j = cli_json("extend --template \"a b* c\" --all --levels E,E**,E**");
  CHECK(j["classes"] == nlohmann::json::parse("[[0,3,5],[1,2,4]]"));
}

TEST_CASE("normalize") {
  CHECK(cli("normalize --term \"(m [] n)*\"").out == "n* ◊ m*\n");
  CHECK(cli("normalize --term \"m <> n\" --relations commutative").out == "n □ m\n");
}

TEST_CASE("centers") {
  auto j = cli_json("centers --template \"a b c\" --center 1 --triple 0,2,3");
  CHECK(j["centers"].size() == 1);
  CHECK(j["centers"][0]["equations"].size() == 3);
  CHECK(cli("centers --template \"a b c\" --center 1 --triple 0,1,2").status == 2);
}

TEST_CASE("jordan numeric suite") {
  auto r = cli("jordan --system cstar:3 --trials 100 --tol 1e-10");
  CHECK(r.status == 0);
  auto j = cli_json("jordan --system cstar:3 --trials 20");
  CHECK(j["pass"] == true);
  CHECK(j["systems"][0]["checks"].size() == 6);
}

TEST_CASE("jordan symbolic mode") {
  CHECK(cli("jordan --template \"phi(a b*) c + phi(c b*) a\" --perm 1 --relations commutative,trace:phi").status == 0);
  CHECK(cli("jordan --template \"a b* c\" --perm 0 --relations commutative").status == 1);
}

TEST_CASE("peirce with a tripotent file") {
  auto j = cli_json("peirce --system cstar:2 --tripotent " + quote(BIDUAL_DATA_DIR "/e11.json"));
  CHECK(j["tripotents"][0]["ranks"] == nlohmann::json::parse("[1,2,1]"));
  CHECK(j["pass"] == true);
  CHECK(cli("peirce --system cstar:2 --tripotent e11").out.find("1/2/1") != std::string::npos);
}

TEST_CASE("peirce rejects a non-tripotent") {
  auto dir = std::filesystem::temp_directory_path() / "bidual_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "twice.json";
  std::ofstream(path) << "[[[2,0],[0,0]],[[0,0],[0,0]]]";
  CHECK(cli("peirce --system cstar:2 --tripotent " + quote(path.string())).status == 2);
}

TEST_CASE("witness") {
  auto j = cli_json("witness --space l1z --functional heaviside --N 100");
  CHECK(j["schema"] == "bidual.witness/1");
  CHECK(j["bilinear"]["orders"][0]["value"] == "0");
  CHECK(j["bilinear"]["orders"][1]["value"] == "1");
  CHECK(j["bilinear"]["gap"] == 1.0);
  CHECK(j["triple"]["gap"] == 1.0);
  auto n = cli_json("witness --space l1n --functional heaviside --N 100");
  CHECK(n["all_orders"]["gap"] == 0.0);
  auto custom = cli_json("witness --space l1z --families n,0 --functional parity --N 20", 1);
  CHECK(custom["report"]["all_converged"] == false);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(cli("").status == 2);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("extend").status == 2);
  CHECK(cli("extend --template \"a b\"").status == 2);
  CHECK(cli("extend --template \"a b c\" --perm 7").status == 2);
  CHECK(cli("extend --template \"a b c\" --bogus").status == 2);
  CHECK(cli("jordan --system spin:3").status == 2);
  CHECK(cli("witness --space l2").status == 2);
  CHECK(cli("extend --template \"a [] b c\"").status == 2);
}

TEST_CASE("selftest and golden file") {
  auto r = cli("selftest --seed 42 --golden " + quote(BIDUAL_GOLDEN_DIR "/extensions.json"));
  CHECK(r.status == 0);
  auto golden = nlohmann::json::parse(std::ifstream(BIDUAL_GOLDEN_DIR "/extensions.json"));
  golden["cases"][3]["expected"] = "m [] n* [] p";
  auto dir = std::filesystem::temp_directory_path() / "bidual_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "broken_golden.json";
  std::ofstream(path) << golden.dump();
  CHECK(cli("selftest --golden " + quote(path.string())).status == 1);
}

TEST_CASE("output file") {
  auto dir = std::filesystem::temp_directory_path() / "bidual_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "out.json";
  CHECK(cli("extend --template \"a b c\" --perm 0 --json --out " + quote(path.string())).status == 0);
  auto j = nlohmann::json::parse(std::ifstream(path));
  CHECK(j["extensions"][0]["term"] == "m □ n □ p");
}
