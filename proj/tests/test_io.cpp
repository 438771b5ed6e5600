#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "trisect/diagram_io.hpp"
#include "trisect/report.hpp"

using namespace trisect;

TEST_CASE("parse a diagram") {
  const TrisectionDiagram d =
      parse_diagram(R"({"genus": 1, "alpha": [[1, 0]], "beta": [[0, 1]], "gamma": [[1, 1]], "label": "CP2"})");
  CHECK(d == builtin("CP2"));
  const TrisectionDiagram s4 = parse_diagram(R"({"genus": 0, "alpha": [], "beta": [], "gamma": []})");
  CHECK(s4.genus == 0);
  CHECK(s4.label.empty());
  const TrisectionDiagram big = parse_diagram(
      R"({"genus": 1, "alpha": [["100000000000000000000000", 1]], "beta": [[0, 1]], "gamma": [[1, 1]]})");
  CHECK(big.alpha().curves[0][0] == Integer("100000000000000000000000"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_diagram("{\"genus\": 1,"), ParseError);
  try {
    parse_diagram("{\"genus\": 1 \"alpha\": []}");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte 19") != std::string::npos);
  }
  CHECK_THROWS_WITH(parse_diagram(R"({"genus": 1, "alpha": [[1, 0]], "beta": [[0, 1]], "gamma": [[1, 1]], "x": 1})"),
                    "diagram: unknown field 'x'");
  CHECK_THROWS_WITH(parse_diagram(R"({"genus": 1, "alpha": [[1, 0]], "beta": [[0, 1]]})"),
                    "diagram: missing field 'gamma'");
  CHECK_THROWS_WITH(parse_diagram(R"({"genus": 1, "alpha": [[1, 0, 0]], "beta": [[0, 1]], "gamma": [[1, 1]]})"),
                    "alpha[0]: expected 2 entries, found 3");
  CHECK_THROWS_WITH(parse_diagram(R"({"genus": 1, "alpha": [[1.5, 0]], "beta": [[0, 1]], "gamma": [[1, 1]]})"),
                    "alpha[0][0]: expected an integer");
  CHECK_THROWS_AS(parse_diagram(R"({"genus": -1, "alpha": [], "beta": [], "gamma": []})"), ParseError);
  CHECK_THROWS_AS(parse_diagram("[1, 2]"), ParseError);
  CHECK_THROWS_AS(load_diagram("/nonexistent/file.json"), ParseError);
}

TEST_CASE("diagram json round trip") {
  for (const auto& d : oracle::diagram_suite(20)) CHECK(parse_diagram(diagram_to_json(d)) == d);
}

TEST_CASE("rep files") {
  const auto r = parse_rep(R"({"a1": [0, 1], "a2": [0, 0], "a3": [1, -1]})", 1);
  CHECK(r[2] == IntVector{1, -1});
  CHECK_THROWS_AS(parse_rep(R"({"a1": [0, 1], "a2": [0, 0]})", 1), ParseError);
  CHECK_THROWS_AS(parse_rep(R"({"a1": [0, 1], "a2": [0, 0], "a3": [1]})", 1), ParseError);
  CHECK_THROWS_AS(parse_rep(R"({"a1": [0, 1], "a2": [0, 0], "a3": [1, 1], "a4": []})", 1), ParseError);
}

TEST_CASE("integers in json") {
  CHECK(to_json(Integer(-5)).is_number_integer());
  CHECK(to_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("reports are deterministic and carry the same values in both formats") {
  for (const char* name : {"CP2", "S1xS3", "CP2#CP2bar"}) {
    const Trisection t(builtin(name));
    const Report h = homology_report(t);
    CHECK(h.render(false) == homology_report(t).render(false));
    CHECK(h.render(true) == homology_report(t).render(true));
    const auto j = nlohmann::json::parse(h.render(true));
    CHECK(j["command"] == "homology");
    CHECK(j["diagram"] == name);
    CHECK(j["exit_code"] == 0);
    for (int k = 0; k < 5; ++k) {
      const std::string text = j["results"]["homology"][k]["text"];
      CHECK(h.render(false).find("H_" + std::to_string(k) + ": " + text + "\n") != std::string::npos);
    }
  }
  const Report f = form_report(Trisection(builtin("CP2")));
  const auto j = nlohmann::json::parse(f.render(true));
  CHECK(j["results"]["gram"] == nlohmann::json::parse("[[1]]"));
  CHECK(j["results"]["parity"] == "odd");
  CHECK(f.render(false).find("gram: [[1]]\n") != std::string::npos);
}

TEST_CASE("validate report for an invalid diagram") {
  const TrisectionDiagram d =
      parse_diagram(R"({"genus": 1, "alpha": [[1, 0]], "beta": [[0, 1]], "gamma": [[2, 1]]})");
  const Report r = validate_report(d);
  CHECK(r.exit_code == kExitInvalid);
  CHECK(r.results["failed_check"] == "beta+gamma torsion-free");
  CHECK(r.render(false).find("failed check: beta+gamma torsion-free\n") != std::string::npos);
}

TEST_CASE("spinc report rejects non-cycles") {
  const Trisection t(builtin("S1xS3"));
  CHECK_THROWS_WITH(spinc_report(t, std::array<IntVector, 3>{IntVector{1, 0}, IntVector{0, 0}, IntVector{0, 0}}),
                    "not a cycle: a1 - a2 != 0 in H1(Z_1)");
  CHECK(spinc_report(t, std::nullopt).exit_code == 0);
}
