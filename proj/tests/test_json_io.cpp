#include <doctest.h>

#include "toroidal/error.hpp"
#include "toroidal/json_io.hpp"

using namespace toroidal;

namespace {

std::string field_of(const std::string& text) {
  try {
    parse_scenario_text(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<accepted>";
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("exponents round trip, large ones as strings") {
  CHECK(exponent_to_json(Exponent(7)) == json(7));
  const Exponent big("123456789012345678901234567890");
  CHECK(exponent_to_json(big) == json("123456789012345678901234567890"));
  CHECK(exponent_from_json(exponent_to_json(big), "x") == big);
  CHECK(exponent_from_json(json("42"), "x") == 42);
  CHECK_THROWS_AS(exponent_from_json(json(-1), "x"), ValidationError);
  CHECK_THROWS_AS(exponent_from_json(json(1.5), "x"), ValidationError);
  CHECK_THROWS_AS(exponent_from_json(json("12a"), "x"), ValidationError);
  CHECK_THROWS_AS(exponent_from_json(json(""), "x"), ValidationError);
}

TEST_CASE("presentations round trip") {
  const std::vector<bool> q{true, false};
  const std::vector<MonomialPresentation> ps{
      MonomialPresentation::f1(3, {3, 1}, {1, 1}),
      MonomialPresentation::f2(3, {3, 3}, {1, 2}),
      MonomialPresentation::f3(3, {3, 1}, {1, 1}),
      MonomialPresentation::f4(3, {1, 2}, 2, 3),
      MonomialPresentation::f5(3, {1, 0, 2}, {0, 3, 0}),
      MonomialPresentation::f6(3, {2, false}),
      MonomialPresentation::f7(3, true, {2, false}),
      MonomialPresentation::f8(3, {2, false}),
  };
  for (const auto& p : ps) CHECK(presentation_from_json(presentation_to_json(p), 3, q, "p") == p);
}

TEST_CASE("templates and centers round trip") {
  for (const auto& t : {ToroidalTemplate::t1({2, 1}), ToroidalTemplate::t2({1, 2}, 3, 1),
                        ToroidalTemplate::t3({2, 0}, {1, 3})}) {
    CHECK(template_from_json(template_to_json(t), "t") == t);
  }
  for (const auto& c : {Center::var_var(1, 3), Center::var_free(2)}) {
    CHECK(center_from_json(center_to_json(c), "c") == c);
  }
}

TEST_CASE("a valid scenario") {
  const auto f = parse_scenario_text(R"({
    "version": 1, "n": 3, "m_charts": 2, "q_in_E": [true, false],
    "e_branches": ["u"],
    "presentations": [
      {"form": "F5", "chart": 1, "u": [2, 0], "v": [0, "3"]},
      {"form": "F6", "chart": 2}
    ],
    "y_blowups": ["v_origin"]
  })");
  CHECK(f.scenario.presentations.size() == 2);
  CHECK(f.scenario.e_branches == BaseBranches{true, true});
  CHECK(f.y_blowups == std::vector<TargetPoint>{TargetPoint::VChartOrigin});
  const auto again = parse_scenario(scenario_to_json(f));
  CHECK(scenario_to_json(again) == scenario_to_json(f));
}

TEST_CASE("schema errors name the offending field") {
  const std::string head = R"({"version": 1, "n": 3, "m_charts": 1, "q_in_E": [true], "presentations": )";
  CHECK(field_of(head + R"([{"form": "F5", "chart": 1, "u": [2, -1], "v": [0, 3]}]})") == "presentations[0].u[1]");
  CHECK(field_of(head + R"([{"form": "F9", "chart": 1}]})") == "presentations[0].form");
  CHECK(field_of(head + R"([{"form": "F5", "chart": 2, "u": [2, 0], "v": [0, 3]}]})") == "presentations[0].chart");
  CHECK(field_of(head + R"([{"form": "F5", "chart": 1, "u": [2, 0]}]})") == "presentations[0].v");
  CHECK(field_of(head + R"([{"form": "F5", "chart": 1, "u": [2, 4], "v": [1, 2]}]})") == "presentations[0]");
  CHECK(field_of(head + R"([{"form": "F5", "chart": 1, "u": [2, 0], "v": [0, 3], "w": 1}]})") ==
        "presentations[0].w");
  CHECK(field_of(head + R"([{"form": "F6", "chart": 1}]})") == "presentations[0]");
  CHECK(field_of(head + R"([]})") == "<accepted>");
  CHECK(field_of(R"({"version": 2, "n": 3, "m_charts": 1, "q_in_E": [true], "presentations": []})") == "version");
  CHECK(field_of(R"({"version": 1, "n": 3, "m_charts": 2, "q_in_E": [true], "presentations": []})") == "q_in_E");
  CHECK(field_of(R"({"version": 1, "n": 3, "m_charts": 1, "q_in_E": [true]})") == "presentations");
  CHECK(field_of(head + R"([], "y_blowups": ["generic"]})") == "y_blowups[0]");
  CHECK(field_of(head + R"([], "e_branches": ["w"]})") == "e_branches[0]");
}

TEST_CASE("charts may not mix 1-point and 2-point forms") {
  const std::string text = R"({"version": 1, "n": 3, "m_charts": 1, "q_in_E": [true], "presentations": [
      {"form": "F5", "chart": 1, "u": [2, 0], "v": [0, 3]},
      {"form": "F1", "chart": 1, "u": [2], "v": [1]}]})";
  CHECK(field_of(text) == "presentations[1].form");
}

TEST_CASE("syntax errors report line and column") {
  try {
    parse_scenario_text("{\n  \"version\": 1,\n  \"n\": 2\n  \"m_charts\": 1\n}");
    FAIL("expected a syntax error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

}
