#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qbcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

const std::string fx(const std::string& name) { return qbtest::fixture(name); }

}  // namespace

TEST_CASE("check") {
  CHECK(run({"check", fx("gal_sqrt2.json")}).code == 0);
  Run bad = run({"check", fx("invalid/perturbed_antipode.json")});
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "antipode"));
  Run malformed = run({"check", fx("malformed/zero_denominator.json")});
  CHECK(malformed.code == 2);
  CHECK(has(malformed.err, "zero_denominator.json:33:"));
  CHECK(run({"check", "/no/such/file.json"}).code == 2);
}

TEST_CASE("galois verdicts") {
  Run g = run({"galois", fx("gal_sqrt2.json")});
  CHECK(g.code == 0);
  CHECK(has(g.out, "GALOIS"));
  Run d = run({"galois", fx("z2_graded_dual_numbers.json")});
  CHECK(d.code == 1);
  CHECK(has(d.out, "NOT GALOIS (rank 3/4)"));
  Run t = run({"galois", fx("trivial_2.json")});
  CHECK(t.code == 1);
  CHECK(has(t.out, "NOT GALOIS"));
  CHECK(run({"galois", fx("invalid/perturbed_antipode.json")}).code == 2);
}

TEST_CASE("galois json reports the can matrix as reduced strings") {
  Run r = run({"--json", "galois", fx("z2_graded_dual_numbers.json")});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "NOT GALOIS (rank 3/4)");
  CHECK(j["exit"] == 1);
  auto rows = j["can"].get<std::vector<std::vector<std::string>>>();
  CHECK(qbtest::bareiss_rank(rows) == j["can_rank"].get<std::size_t>());
}

TEST_CASE("oracle subcommands") {
  for (const auto& entry : std::filesystem::directory_iterator(QB_FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    CHECK(run({"prop2", entry.path().string()}).code == 0);
  }
  Run p3 = run({"prop3", fx("gal_sqrt2.json")});
  CHECK(p3.code == 0);
  CHECK(has(p3.out, "dim N_P = 0, dim V = 0"));
  CHECK(run({"prop3", fx("kz2_regular.json")}).code == 0);
  CHECK(run({"prop3", fx("z2_graded_dual_numbers.json")}).code == 0);
  CHECK(run({"prop4", fx("kz2_regular.json")}).code == 0);

  Run p4 = run({"prop4", fx("z2_graded_dual_numbers.json")});
  CHECK(p4.code == 2);
  CHECK(has(p4.err, "hypothesis: can surjective fails"));
}

TEST_CASE("zoo and snake subcommands") {
  Run list = run({"zoo", "list"});
  CHECK(list.code == 0);
  CHECK(has(list.out, "sweedler_h4"));
  CHECK(run({"zoo", "run", "gal_sqrt2"}).code == 0);
  CHECK(run({"zoo", "run", "unknown_name"}).code == 2);
  CHECK(run({"zoo", "run"}).code == 2);
  CHECK(run({"snake", "selftest", "--count", "20", "--seed", "42"}).code == 0);
}

TEST_CASE("json output is deterministic") {
  Run a = run({"--json", "snake", "selftest", "--count", "30", "--seed", "5"});
  Run b = run({"snake", "selftest", "--json", "--count", "30", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run c = run({"--json", "snake", "selftest", "--count", "30", "--seed", "6"});
  CHECK(c.out != a.out);
  CHECK(run({"--json", "prop2", fx("sweedler_h4.json")}).out == run({"--json", "prop2", fx("sweedler_h4.json")}).out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
