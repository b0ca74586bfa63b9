// Runs the wreal executable and inspects exit codes and output.
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(WREAL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string example(const std::string& name) { return std::string(WREAL_EXAMPLES) + "/" + name; }

void collect_witnesses(const json& v, std::vector<std::string>& out) {
  if (v.is_object()) {
    if (v.contains("witnesses"))
      for (const auto& w : v["witnesses"]) out.push_back(w["text"].get<std::string>());
    for (const auto& [key, child] : v.items())
      if (key != "witnesses") collect_witnesses(child, out);
  } else if (v.is_array()) {
    for (const auto& child : v) collect_witnesses(child, out);
  }
}

void check_parity(const std::string& args) {
  CAPTURE(args);
  Run human = run(args);
  Run machine = run(args + " --json");
  CHECK(human.code == machine.code);
  auto doc = json::parse(machine.out);
  std::vector<std::string> texts;
  collect_witnesses(doc, texts);
  for (const auto& t : texts) {
    CAPTURE(t);
    CHECK(human.out.find("witness: " + t) != std::string::npos);
  }
  std::size_t printed = 0;
  for (std::size_t p = human.out.find("witness: "); p != std::string::npos;
       p = human.out.find("witness: ", p + 1))
    ++printed;
  CHECK(printed == texts.size());
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("forms E8").code == 0);
  CHECK(run("forms Z9").code == 2);
  CHECK(run("check " + example("A3-fiber-product.json") + " --form 'su(2,2)'").code == 0);
  CHECK(run("check " + example("A3-fiber-product.json") + " --form split").code == 0);
  CHECK(run("check " + example("broken.json") + " --form split").code == 2);
  CHECK(run("check " + example("missing.json") + " --form split").code == 2);
  CHECK(run("check --fixture E6-000100 --form nonsense").code == 2);
  CHECK(run("check --fixture no-such-fixture --form split").code == 2);
  CHECK(run("check --fixture E6-000100").code == 2);
  CHECK(run("check --form split").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("forms E8 --catalog /nonexistent.json").code == 2);
  CHECK(run("orbits " + example("A3-fiber-product.json") + " --form 'su(2,2)'").code == 3);
  CHECK(run("orbits --fixture A2-monoid-line-bundle --form split").code == 2);
  CHECK(run("scan 3").code == 0);
  CHECK(run("scan 9").code == 2);
  CHECK(run("fixtures").code == 0);
}

TEST_CASE("the environment variable selects the catalog") {
  Run r = run("forms A1 --json");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["catalog"]["source"] == "builtin");
  setenv("WREAL_CATALOG", WREAL_CATALOG_FILE, 1);
  r = run("forms A1 --json");
  unsetenv("WREAL_CATALOG");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["catalog"]["source"] == WREAL_CATALOG_FILE);
  CHECK(json::parse(r.out)["forms"].size() == 2);
  setenv("WREAL_CATALOG", "/nonexistent.json", 1);
  CHECK(run("forms A1").code == 2);
  unsetenv("WREAL_CATALOG");
}

TEST_CASE("JSON output is canonical") {
  for (const char* args : {"forms D4 --json", "scan 2 --json", "fixtures --json",
                           "orbits --fixture E6-000100 --form EIII --json",
                           "check --fixture A2-monoid-line-bundle --form compact --json"}) {
    CAPTURE(args);
    Run r = run(args);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
    CHECK(run(args).out == r.out);
  }
}

TEST_CASE("human output carries every witness") {
  check_parity("check " + example("A3-fiber-product.json") + " --form 'su(2,2)'");
  check_parity("check --fixture A2-monoid-line-bundle --form compact");
  check_parity("check --fixture A3-single-color --form 'su(2,2)'");
  check_parity("orbits --fixture E6-000100 --form EIII");
  check_parity("orbits --fixture E7-EVI-nilpotent --form EVI");
  check_parity("orbits --fixture E8-00000010 --form compact");
  check_parity("scan 3");
}

TEST_CASE("reports") {
  auto e8 = json::parse(run("forms E8 --json").out);
  REQUIRE(e8["forms"].size() == 3);
  for (const auto& f : e8["forms"]) CHECK(f["epsilon"]["cycles"] == "id");
  CHECK(json::parse(run("forms A1 --json").out)["forms"].size() == 2);

  auto e6 = json::parse(run("check --fixture E6-000100 --form EIV --json").out);
  CHECK(e6["verdict"]["answer"] == "yes");
  CHECK(e6["verdict"]["uniqueness_note"].is_string());

  auto e7 = json::parse(run("orbits " + example("E7-EVI-nilpotent.json") + " --form evi --json").out);
  CHECK(e7["obstruction"]["answer"] == "no");
  CHECK(e7["obstruction"]["reasons"][0]["witnesses"][0]["to"] == json::array({-1}));

  auto e6o = json::parse(run("orbits --fixture E6-000100 --form EIII --json").out);
  CHECK(e6o["orbits"][0]["candidate"] == true);
  CHECK(e6o["caveat"].is_string());
  CHECK(e6o["guaranteed"]["answer"] == "no");

  Run exported = run("fixtures --export E7-EVI-nilpotent");
  REQUIRE(exported.code == 0);
  Run stored = run("orbits " + example("E7-EVI-nilpotent.json") + " --form EVI --json");
  Run direct = run("orbits --fixture E7-EVI-nilpotent --form EVI --json");
  auto a = json::parse(stored.out), b = json::parse(direct.out);
  a["input"].erase("source");
  b["input"].erase("source");
  CHECK(a == b);
}
