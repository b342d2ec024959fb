#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "covertower/enumerate.hpp"
#include "io.hpp"

using namespace covertower;

namespace {

std::string data(const std::string& name) { return std::string(COVERTOWER_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "covertower_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("enumerate prints one cover document per line") {
  const auto r = cli::run("enumerate --genus 2 --degree 2");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 15);
  std::vector<CoverSpec> seen;
  for (const auto& l : ls) seen.push_back(io::parse_cover(io::Json::parse(l)));
  CHECK(seen == enumerate_covers(Surface(2), 2));
  CHECK(cli::run("enumerate --genus 2 --degree 2").out == r.out);
}

TEST_CASE("genus and lift-cycle") {
  const auto trivial = scratch("trivial.json");
  write(trivial, io::render(io::document("cover", io::cover_json(CoverSpec::trivial(Surface(2))))));
  auto r = cli::run("genus --cover " + trivial.string());
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  const auto swap = scratch("swap.json");
  write(swap, io::render(io::document("cover", io::cover_json(enumerate_covers(Surface(2), 2).front()))));
  CHECK(cli::run("genus --cover " + swap.string()).out == "3\n");
  r = cli::run("lift-cycle --cover " + swap.string() + " --class 1,0,0,0");
  CHECK(r.code == 0);
  const auto z = io::parse_cycle(io::Json::parse(r.out));
  CHECK(z.complex()->cover() == enumerate_covers(Surface(2), 2).front());
  CHECK(cli::run("lift-cycle --cover " + swap.string() + " --class 1,0,0,0").out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(cli::run("--help").code == 0);
  CHECK(cli::run("no-such-command").code == 2);
  CHECK(cli::run("enumerate --genus 1 --degree 2").code == 2);
  CHECK(cli::run("genus --cover /nonexistent.json").code == 2);
  const auto junk = scratch("junk.json");
  write(junk, "{\"schema\": \"covertower/1\", \"type\": \"cover\"");
  CHECK(cli::run("genus --cover " + junk.string()).code == 2);

  const auto swap = scratch("swap.json");
  write(swap, io::render(io::document("cover", io::cover_json(enumerate_covers(Surface(2), 2).front()))));
  // The characteristic refinement of an index-2 cover has degree 16.
  CHECK(cli::run("char-refine --cover " + swap.string() + " --budget 8").code == 3);
  CHECK(cli::run("char-refine --cover " + swap.string(), "COVERTOWER_BUDGET=8").code == 3);
  CHECK(cli::run("char-refine --cover " + swap.string(), "COVERTOWER_BUDGET=16").code == 0);
  // Unparseable values fall back to the default.
  CHECK(cli::run("char-refine --cover " + swap.string(), "COVERTOWER_BUDGET=nonsense").code == 0);

  const auto r = cli::run("is-char --cover " + swap.string() + " --auts " + data("genus2_auts.json"));
  CHECK(r.code == 1);
  const auto doc = io::Json::parse(r.out);
  CHECK(doc.at("schema") == "covertower/1");
  CHECK(doc.at("type") == "counterexample");
}

TEST_CASE("verify suites and replay") {
  for (const char* suite : {"riemann-hurwitz", "transfer-scaling", "pairing-invariance", "vaut-laws", "theorem3"}) {
    const auto r = cli::run(std::string("verify --suite ") + suite + " --max-degree 2 --jobs 2");
    CHECK_MESSAGE(r.code == 0, suite);
    CHECK(cli::run(std::string("verify --suite ") + suite + " --max-degree 2 --jobs 1").out == r.out);
  }
  const auto ce = scratch("ce.json");
  io::Json doc = io::document("counterexample", {{"suite", "riemann-hurwitz"},
                                                 {"case", {{"cover", io::cover_json(enumerate_covers(Surface(2), 2)[3])}}},
                                                 {"failure", "synthetic"}});
  write(ce, io::render(doc));
  const auto r = cli::run("verify --replay " + ce.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("passes") != std::string::npos);
}

TEST_CASE("orbit output is deterministic") {
  const auto a = cli::run("orbit --steps 64 --targets 50 --seed 3");
  REQUIRE(a.code == 0);
  CHECK(a.out == cli::run("orbit --steps 64 --targets 50 --seed 3").out);
  const auto ls = lines(a.out);
  REQUIRE(ls.size() > 5);
  CHECK(ls[0] == "# genus\t2");
  CHECK(ls[1] == "# seed\t3");
}
