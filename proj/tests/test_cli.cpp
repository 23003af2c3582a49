#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "burniat/cli.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Run {
  int code = 0;
  std::string out, err;

  Json json() const { return Json::parse(out); }
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = burniat::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/burniat_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("h of K") {
  const Run r = run({"--json", "h", "K"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["h"] == Json::array({0, 0, 1}));
  const Run text = run({"h", "K"});
  CHECK(text.code == 0);
  CHECK(text.out.find("0 0 1") != std::string::npos);
}

TEST_CASE("effectiveness witness") {
  const Run r = run({"--json", "effective", "[7; 1:10, 2:01, 2:11]"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["effective"] == true);
  CHECK(j["witness"]["combo"] == "A0+C3+A1+B1+B3");
  CHECK(run({"--json", "effective", "K"}).json()["witness"].is_null());
}

TEST_CASE("e-number") {
  const Run r = run({"--json", "enumber", "7", "0", "1", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["brute"] == 64);
  CHECK(r.json()["criterion"]["summary"] == "64");
  const Run neg = run({"--json", "enumber", "3", "-1", "0", "1"});
  REQUIRE(neg.code == 0);
  CHECK(neg.json()["num_class"] == Json::array({3, -1, 0, 1}));
  CHECK(run({"enumber", "4", "0", "0", "0"}).code == 1);
}

TEST_CASE("JSON keys are stable") {
  const Json j = run({"--json", "--trace", "h", "2*(A0+B3)+C0"}).json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"input", "coords", "num_class", "chi", "h", "effective", "witness", "trace"});
  CHECK(j["coords"]["slots"].size() == 6);
  CHECK(j["coords"]["slots"][0].size() == 2);
  CHECK_FALSE(j["trace"].empty());
  CHECK(run({"--json", "h", "2*(A0+B3)+C0"}).json()["trace"].empty());
}

TEST_CASE("reduce and show") {
  const Json red = run({"--json", "reduce", "A0+B0-C0"}).json();
  CHECK(red.contains("trims"));
  CHECK(red.contains("reduced"));
  const Json show = run({"--json", "show", "K"}).json();
  CHECK(show["nef"] == true);
  CHECK(show["ample"] == true);
  CHECK(show["self_intersection"] == 6);
  CHECK(show["table"] == "(6 | 1 00, 1 00, 1 00 | 1 00, 1 00, 1 00)");
}

TEST_CASE("batch output is line aligned") {
  std::vector<std::string> inputs;
  for (int i = -6; i <= 12; ++i) {
    inputs.push_back(std::to_string(i) + "*A0 + " + std::to_string(12 - i) + "*B3 - C1");
    inputs.push_back("K + (" + std::string(i % 2 ? "100000" : "001011") + ")");
  }
  inputs.push_back("A0 +");
  inputs.push_back("");
  inputs.push_back("[8; 0:00, 0:00, 0:00]");
  std::string content;
  for (const auto& s : inputs) content += s + "\n";
  const Run r = run({"h", "--batch", temp_file("h.txt", content)});
  CHECK(r.code == 1);
  const auto lines = r.lines();
  REQUIRE(lines.size() == inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Json j = Json::parse(lines[i]);
    CHECK(j["input"] == inputs[i]);
    const Run single = run({"--json", "h", inputs[i]});
    if (single.code == 0) {
      CHECK(j == single.json());
    } else {
      CHECK(j["error"]["kind"] == "domain");
    }
  }
}

TEST_CASE("batch e-numbers") {
  const Run r = run({"enumber", "--batch", temp_file("e.txt", "7 0 1 1\n8 0 0 1\n6 0 0 0\n")});
  CHECK(r.code == 0);
  const auto lines = r.lines();
  REQUIRE(lines.size() == 3);
  CHECK(Json::parse(lines[0])["input"] == "7 0 1 1");
  CHECK(Json::parse(lines[1])["brute"] == 64);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"table", "nope"}).code == 2);
  CHECK(run({"h"}).code == 2);
  CHECK(run({"h", "K", "--batch", temp_file("k.txt", "K\n")}).code == 2);
  CHECK(run({"table", "generators", "--batch", temp_file("k.txt", "K\n")}).code == 2);
  CHECK(run({"h", "--batch", "/nonexistent/burniat"}).code == 2);
  const Run parse = run({"h", "A0 + D1"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("position 5") != std::string::npos);
  CHECK(run({"h", "[8; 0:00, 0:00, 0:00]"}).code == 1);
  CHECK(run({"h", "[10; 0:01, 1:11, 4:01; 0:01, 1:11, 4:01]"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"h", "--help"}).code == 0);
}

TEST_CASE("tables") {
  for (const char* name : {"generators", "flexible-torsions", "reduced-621"}) {
    const Run r = run({"--json", "table", name});
    CHECK(r.code == 0);
    CHECK(r.json()["match"] == true);
  }
  CHECK(run({"--json", "table", "generators"}).json()["rows"].size() == 13);
  CHECK(run({"--json", "table", "reduced-621"}).json()["rows"].size() == 8);
  CHECK(run({"--json", "table", "flexible-torsions"}).json()["summary"] == "3 flexible");
}

TEST_CASE("Ulrich search and rank-2 data") {
  const Run u = run({"--json", "ulrich-search"});
  REQUIRE(u.code == 0);
  CHECK(u.json()["hits"].empty());
  CHECK(u.json()["window"] == Json::array({-6, 24}));
  const Run k = run({"--json", "ulrich-search", "-H", "K", "--lo", "-2", "--hi", "8"});
  REQUIRE(k.code == 0);
  CHECK_FALSE(k.json()["hits"].empty());
  const Run rank2 = run({"--json", "verify-rank2"});
  CHECK(rank2.code == 0);
  CHECK(rank2.json()["pass"] == true);
  CHECK(run({"verify-rank2", "--d1", "K"}).code == 1);
}

TEST_CASE("selftest and bench") {
  const Run r = run({"--json", "selftest", "--only", "1", "--only", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["criteria"].size() == 2);
  CHECK(run({"selftest", "--only", "13"}).code == 2);
  const Run b = run({"--json", "bench", "--max-exp", "3", "--random", "50"});
  CHECK(b.code == 0);
  CHECK(b.json()["chain"].size() == 2);
}
