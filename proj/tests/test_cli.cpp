#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "nichols/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  Result r;
  r.code = nichols::run_cli(args, r.out, r.err);
  return r;
}

}  // namespace

TEST_CASE("screen verb emits the worked verdict") {
  auto r = run({"screen", "--group", "An:6", "--class", "(1 2)(3 4 5 6)", "--rep", "chi:2",
                "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["group"] == "An:6");
  CHECK(j["class_size"] == 90);
  CHECK(j["centralizer"] == "Z4");
  CHECK(j["verdict"] == "Undetermined");
  CHECK(j["negative_braiding"] == true);
  CHECK(j["q_ss"] == "zeta(2)^1");
}

TEST_CASE("json output round-trips byte for byte") {
  for (auto args : {std::vector<std::string>{"table-dn", "--n", "5", "--format", "json"},
                    std::vector<std::string>{"scan-an", "--n", "4", "--format", "json"},
                    std::vector<std::string>{"screen", "--group", "Dn:6", "--class", "y^1",
                                             "--rep", "chi:3", "--format", "json"}}) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("csv columns are fixed") {
  auto r = run({"scan-an", "--n", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("group,class_rep,class_size,centralizer,rep,q_ss,verdict,dimension,"
                    "reasons,witness,negative_braiding\n",
                    0) == 0);
  // every data row reports InfiniteDim
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(line.find("InfiniteDim") != std::string::npos);
  }
  CHECK(rows >= 5);
}

TEST_CASE("comma lists of n") {
  auto r = run({"table-dn", "--n", "3,4", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  bool saw3 = false, saw4 = false;
  for (const auto& row : j) {
    if (row["group"] == "Dn:3") saw3 = true;
    if (row["group"] == "Dn:4") saw4 = true;
  }
  CHECK(saw3);
  CHECK(saw4);
}

TEST_CASE("tensor-sign aliases accepted for rep specs") {
  for (const std::string rep : {"sgn⊗ε", "sgn⊗eps", "sgn*eps"}) {
    auto r = run({"screen", "--group", "Dn:6", "--class", "x", "--rep", rep, "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["rep"] == "sgn⊗eps");
    CHECK(j["verdict"] == "Undetermined");
    CHECK(j["negative_braiding"] == true);
  }
}

TEST_CASE("finite screens can be confirmed with the degree cap") {
  auto r = run({"screen", "--group", "Dn:6", "--class", "y^1", "--rep", "chi:3", "--format",
                "json", "--max-degree", "4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["verdict"] == "FiniteDim");
  CHECK(j["dimension"] == 4);
  CHECK(j["hilbert_total"] == 4);
  CHECK(j["hilbert_terminated"] == true);
}

TEST_CASE("rack decomposition verb") {
  auto r = run({"rack-decompose", "--n", "15", "--d", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["blocks"].size() == 5);
  for (const auto& b : j["blocks"]) CHECK(b.size() == 3);
}

TEST_CASE("reality verb") {
  auto r = run({"reality", "--group", "An:5", "--class", "(1 2 3 4 5)", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["is_real"] == true);
  CHECK(j["is_absolutely_real"] == true);
  auto r2 = run({"reality", "--group", "An:4", "--class", "(1 2 3)", "--format", "json"});
  auto j2 = nlohmann::ordered_json::parse(r2.out);
  CHECK(j2["is_real"] == false);
}

TEST_CASE("error exits") {
  CHECK(run({"screen", "--group", "Qn:3", "--class", "e", "--rep", "eps"}).code == 2);
  CHECK(run({"screen", "--group", "An:5", "--class", "(1 2)", "--rep", "eps"}).code == 2);
  CHECK(run({"screen", "--group", "An:5", "--class", "(1 2 3)", "--rep", "zeta:9"}).code == 2);
  CHECK(run({"scan-an", "--n", "9"}).code == 2);
  CHECK(run({"table-dn", "--n", "x"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  // enumeration bound exceeded
  CHECK(run({"classes", "--group", "Sn:13"}).code == 3);
}

TEST_CASE("symmetrizer budget controls") {
  // the confirmation pass trips the theta^cap bound
  auto r = run({"screen", "--group", "Dn:6", "--class", "y^1", "--rep", "chi:3", "--max-degree",
                "12", "--budget", "4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);
  // same through the environment variable
  setenv("NICHOLS_BUDGET", "4", 1);
  auto r2 = run({"screen", "--group", "Dn:6", "--class", "y^1", "--rep", "chi:3",
                 "--max-degree", "12"});
  unsetenv("NICHOLS_BUDGET");
  CHECK(r2.code == 3);
}

TEST_CASE("the 4-letter scan matches the frozen numeration byte for byte") {
  std::ifstream f(std::string(NICHOLS_GOLDEN_DIR) + "/scan_an4.json");
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  auto r = run({"scan-an", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.out == buf.str());
}

TEST_CASE("text format prints one row per pair") {
  auto r = run({"table-dn", "--n", "5"});
  REQUIRE(r.code == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 2 + 13);  // header + rule + rows
}
