#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qbundle/instance.hpp"
#include "qbundle/zoo.hpp"
#include "support.hpp"

using namespace qb;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_failure(const std::string& fixture) {
  try {
    load_instance(qbtest::fixture(fixture));
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << fixture);
  throw;
}

}  // namespace

TEST_CASE("dump and parse round-trip every zoo entry") {
  for (const ZooEntry& e : zoo()) {
    CAPTURE(e.name);
    InstanceFile inst = e.instance();
    std::string text = dump_instance(inst);
    InstanceFile back = parse_instance(text);
    CHECK(back.name == inst.name);
    CHECK(back.comodule.coaction() == inst.comodule.coaction());
    CHECK(back.comodule.algebra().mult() == inst.comodule.algebra().mult());
    CHECK(back.comodule.hopf().antipode() == inst.comodule.hopf().antipode());
    CHECK(back.n_p_generators == inst.n_p_generators);
    CHECK(back.v_generators == inst.v_generators);
    CHECK(dump_instance(back) == text);
  }
}

TEST_CASE("checked-in fixtures match the zoo") {
  for (const ZooEntry& e : zoo()) {
    CAPTURE(e.name);
    CHECK(slurp(qbtest::fixture(e.name + ".json")) == dump_instance(e.instance()));
  }
}

TEST_CASE("diagnostics carry the line and pointer of the bad value") {
  struct Case {
    const char* file;
    std::size_t line;
    const char* pointer;
    const char* text;
  };
  for (const Case& c : {Case{"malformed/zero_denominator.json", 33, "/comodule/coaction/0/0", "\"1/0\""},
                        Case{"malformed/missing_comma.json", 19, "", "syntax error"},
                        Case{"malformed/row_too_long.json", 20, "/hopf/antipode/0", "expected 2 entries"},
                        Case{"malformed/bare_number.json", 7, "/hopf/unit/0", "must be a string"},
                        Case{"malformed/not_a_number.json", 7, "/hopf/unit/0", "\"abc\""},
                        Case{"malformed/unknown_key.json", 3, "/color", "unknown key"},
                        Case{"malformed/v_outside_hplus.json", 43, "/v_generators/0", "counit"}}) {
    CAPTURE(c.file);
    ParseError e = parse_failure(c.file);
    CHECK(e.line() == c.line);
    CHECK(e.pointer() == c.pointer);
    CHECK(std::string(e.what()).find(c.text) != std::string::npos);
    CHECK(std::string(e.what()).find(":" + std::to_string(c.line) + ":") != std::string::npos);
  }
}

TEST_CASE("structural errors in inline documents") {
  CHECK_THROWS_AS(parse_instance("[]"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"field": "RR"})"), ParseError);
  try {
    parse_instance("{\n  \"field\": \"QQ\",\n  \"hopf\": {\"dim\": 0}\n}");
    FAIL("accepted dim 0");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.pointer() == "/hopf/dim");
  }
  try {
    parse_instance("{\n  \"field\": \"QQ\"\n}");
    FAIL("accepted a missing block");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing key 'hopf'") != std::string::npos);
  }
}

TEST_CASE("missing file is a parse error") {
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), ParseError);
}
