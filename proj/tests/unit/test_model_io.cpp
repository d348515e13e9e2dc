#include <doctest.h>

#include "affinekit/error.hpp"
#include "affinekit/model_io.hpp"
#include "affinekit/parser.hpp"

using namespace affinekit;

namespace {

constexpr const char* kModel = R"({
  "sorts": {"S": 2},
  "atoms": {"p": {"args": ["S"], "table": ["pos", "und"]},
            "q": {"table": ["neg"]}}
})";

}  // namespace

TEST_SUITE("model_io") {
  TEST_CASE("interpretation documents") {
    const Interpretation m = parse_interpretation(kModel);
    CHECK(m.sort_size("S") == 2);
    CHECK(m.atom("p").values == std::vector<PairValue>{kProven, kUndetermined});
    CHECK(m.atom("q").arg_sorts.empty());
    CHECK(eval_pair(parse_affine("exists x:S. p(x) * ~q"), m) == kProven);
    const Interpretation back = parse_interpretation(interpretation_to_json(m));
    CHECK(back.atoms().size() == 2);
    CHECK(back.atom("p").values == m.atom("p").values);
  }

  TEST_CASE("malformed interpretations") {
    CHECK_THROWS_AS(parse_interpretation("{"), ParseError);
    CHECK_THROWS_AS(parse_interpretation(R"({"sorts": {"S": 0}, "atoms": {}})"), ParseError);
    CHECK_THROWS_AS(parse_interpretation(R"({"atoms": {"q": {"table": ["both"]}}})"), ParseError);
    CHECK_THROWS_AS(parse_interpretation(R"({"sorts": {"S": 2}, "atoms": {"p": {"args": ["S"], "table": ["pos"]}}})"),
                    Error);
    CHECK_THROWS_AS(parse_interpretation(R"({"atoms": {"p": {"args": ["T"], "table": ["pos"]}}})"),
                    Error);
    CHECK_THROWS_AS(load_interpretation("/nonexistent/model.json"), Error);
  }

  TEST_CASE("json syntax errors report a byte position") {
    try {
      parse_interpretation("{\"sorts\": [}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() > 1);
    }
  }

  TEST_CASE("topo tables") {
    const std::string doc = R"({
      "carrier": 1,
      "operators": [{"n": "n", "u": "n", "p": "p"}],
      "bases": [["p"], []],
      "filters": [{"n": "neg", "u": "und", "p": "pos"}],
      "subsets": ["u"]
    })";
    const TopoTables t = parse_topo_tables(doc);
    CHECK(t.carrier == 1);
    REQUIRE(t.operators.size() == 1);
    CHECK(operator_code(t.operators[0]) == "n.n.p");
    REQUIRE(t.bases.size() == 2);
    CHECK(t.bases[1].sets.empty());
    CHECK(t.filters[0] == Filter3{kRefuted, kUndetermined, kProven});
    CHECK(subset_code(t.subsets[0]) == "u");
    const TopoTables back = parse_topo_tables(topo_tables_to_json(t));
    CHECK(back.operators == t.operators);
    CHECK(back.filters == t.filters);
  }

  TEST_CASE("malformed topo tables") {
    CHECK_THROWS_AS(parse_topo_tables(R"({"operators": []})"), ParseError);
    CHECK_THROWS_AS(parse_topo_tables(R"({"carrier": 5})"), ParseError);
    CHECK_THROWS_AS(parse_topo_tables(R"({"carrier": 1, "operators": [{"n": "n", "p": "p"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_topo_tables(R"({"carrier": 1, "operators": [{"n": "n", "u": "uu", "p": "p"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_topo_tables(R"({"carrier": 1, "bases": [["x"]]})"), ParseError);
    CHECK_THROWS_AS(parse_topo_tables(R"({"carrier": 3, "filters": [{}]})"), ParseError);
  }
}
