#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;  // stdout and stderr combined
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string outfile = "cli_out.tmp";
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(TCPLEX_BIN) + " " + args + " > " + outfile + " 2>&1";
  int rc = std::system(cmd.c_str());
  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(outfile);
  std::ostringstream text;
  text << in.rdbuf();
  return {code, text.str()};
}

std::string data(const std::string& name) {
  return std::string(TCPLEX_DATA_DIR) + "/" + name;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("tc on the bundled intro pair reports 1") {
  auto r = run("tc --pair " + data("intro.pair") +
               " --certificate cli_intro.cert.json");
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(has(r.out, "= 1"));
  CHECK(fs::exists("cli_intro.cert.json"));
}

TEST_CASE("the default certificate path sits next to the input") {
  fs::copy_file(data("intro.pair"), "intro_copy.pair",
                fs::copy_options::overwrite_existing);
  auto r = run("tc --pair intro_copy.pair");
  CHECK(r.code == 0);
  CHECK(fs::exists("intro_copy.cert.json"));
}

TEST_CASE("verify accepts the solver's certificate and rejects tampering") {
  auto made = run("tctarget " + data("intro.pair") +
                  " --certificate cli_v.cert.json");
  REQUIRE(made.code == 0);

  auto ok = run("verify cli_v.cert.json");
  CAPTURE(ok.out);
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "verifies"));

  // Bend one chain label and expect exit code 3.
  std::ifstream in("cli_v.cert.json");
  nlohmann::json j = nlohmann::json::parse(in);
  bool bent = false;
  for (auto& p : j["pieces"]) {
    if (!p.contains("chain") || p["chain"].empty()) continue;
    auto& mid = p["chain"][p["chain"].size() / 2];
    auto cur = mid[0][0].get<std::string>();
    mid[0][0] = (cur == "a") ? "b" : "a";
    bent = true;
    break;
  }
  REQUIRE(bent);
  {
    std::ofstream out("cli_tampered.cert.json");
    out << j.dump(2);
  }
  auto bad = run("verify cli_tampered.cert.json");
  CAPTURE(bad.out);
  if (bad.code == 0) {
    // The nudge still verified; drop a whole piece instead, which must
    // leave part of the product uncovered.
    j["pieces"].erase(0);
    std::ofstream out("cli_tampered.cert.json");
    out << j.dump(2);
    bad = run("verify cli_tampered.cert.json");
  }
  CHECK(bad.code == 3);
  CHECK(has(bad.out, "FAILED"));
}

TEST_CASE("input errors exit 1") {
  CHECK(run("tc --pair definitely_missing.pair").code == 1);
  CHECK(run("tc --pair " + data("intro.pair") + " --budget horses").code == 1);
  {
    std::ofstream out("cli_bad.pair");
    out << "subcomplex L\nz\n";
  }
  CHECK(run("scat cli_bad.pair").code == 1);
  CHECK(run("gen trefoil 3").code == 1);
  CHECK(run("plan missing.json a b").code == 1);
}

TEST_CASE("budget exhaustion exits 2, from flag or environment") {
  // Small inputs resolve through fast paths no matter the budget, so the
  // starved run uses a product of two circles, whose cover search needs
  // genuine contiguity scans.
  auto g = run("gen boundary 2 -o cli_b2.pair");
  REQUIRE(g.code == 0);
  auto p = run("product cli_b2.pair");
  REQUIRE(p.code == 0);
  {
    std::ofstream out("cli_prod.pair");
    out << p.out;
  }
  auto starved = run("scat cli_prod.pair --budget 1");
  CAPTURE(starved.out);
  CHECK(starved.code == 2);
  auto env = run("scat cli_prod.pair", "TCPLEX_BUDGET=1");
  CHECK(env.code == 2);
  // A real budget through the environment still succeeds, and the flag
  // takes precedence over the environment.
  auto fine = run("scat cli_prod.pair", "TCPLEX_BUDGET=50000000");
  CHECK(fine.code == 0);
  CHECK(has(fine.out, "scat"));
  auto flag_wins = run("scat cli_prod.pair --budget 50000000", "TCPLEX_BUDGET=1");
  CHECK(flag_wins.code == 0);
}

TEST_CASE("gen -> tc pipeline on the wedge from the worked example") {
  auto g = run("gen wedge 3 4 --with-sub 3 -o cli_w.pair");
  REQUIRE(g.code == 0);
  std::ifstream in("cli_w.pair");
  std::ostringstream text;
  text << in.rdbuf();
  CHECK(has(text.str(), "complex wedge3_4"));
  CHECK(has(text.str(), "subcomplex"));

  auto r = run("tc --pair cli_w.pair --certificate cli_w.cert.json");
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(has(r.out, "= 2"));
  CHECK(run("verify cli_w.cert.json").code == 0);
}

TEST_CASE("plan prints a path from the certificate") {
  auto made = run("tc --pair " + data("intro.pair") +
                  " --certificate cli_p.cert.json");
  REQUIRE(made.code == 0);
  auto r = run("plan cli_p.cert.json b c");
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(has(r.out, "points:"));
  CHECK(has(r.out, "tail_start:"));

  auto rj = run("plan cli_p.cert.json b c --format json");
  CHECK(rj.code == 0);
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["format"] == "tcplex-plan/1");
  CHECK(j["x"] == "b");
  CHECK(j["y"] == "c");
}

TEST_CASE("json output modes parse") {
  auto s = run("scat " + data("intro.pair") + " --format json --certificate cli_s.cert.json");
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["format"] == "tcplex-cover/1");

  auto b = run("bounds " + data("intro.pair") + " --format json");
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["ok"] == true);

  auto c = run("collapsible " + data("intro.pair") + " --format json");
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["strongly_collapsible"] == false);

  auto p = run("product " + data("intro.pair") + " --format json");
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["vertices"] == 9);

  auto k = run("core " + data("intro.pair") + " --format json");
  REQUIRE(k.code == 0);
  CHECK(nlohmann::json::parse(k.out)["format"] == "tcplex-core/1");

  auto cat = run("categorical " + data("intro.pair") + " --format json");
  REQUIRE(cat.code == 0);
  CHECK(nlohmann::json::parse(cat.out)["categorical"] == true);
}
