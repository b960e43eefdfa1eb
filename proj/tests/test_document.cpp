#include <doctest.h>

#include "signedspec/document.hpp"

using namespace signedspec;

TEST_CASE("edge list round trip") {
  const FamilySpec spec = KmrSpec{8, 2, 3};
  const SignedGraph g = build_family(spec);
  const std::string text = write_edge_list(g, spec);
  CHECK(text.rfind("# family kmr 8 2 3\nn 8\n1 2 -1\n", 0) == 0);
  const EdgeListDocument doc = parse_edge_list(text);
  CHECK(doc.graph == g);
  REQUIRE(doc.family);
  CHECK(family_parameters(*doc.family) == "8 2 3");
  CHECK(write_edge_list(doc.graph, doc.family) == text);
  CHECK(write_edge_list(g) == text.substr(text.find('\n') + 1));
}

TEST_CASE("edge list parsing") {
  const EdgeListDocument doc = parse_edge_list("# a comment\n\nn 3\n1 2 +1\n  2 3 -1\n# trailing\n");
  CHECK(doc.graph.order() == 3);
  CHECK(doc.graph.sign(3, 2) == -1);
  CHECK_FALSE(doc.family);

  auto line_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 2 +1\n") == 1);
  CHECK(line_of("n 3\n1 2 +1\n2 3 1\n") == 3);
  CHECK(line_of("n 3\n1 2 +1\n2 3 -1 7\n") == 3);
  CHECK(line_of("n 3\n1 2 +1\n\n1 4 -1\n") == 4);
  CHECK(line_of("n 3\n1 2 +1\n2 1 -1\n") == 3);
  CHECK(line_of("n x\n") == 1);
  CHECK(line_of("# nothing\n") == 1);
  CHECK(line_of("# family kmr 3 2 3\nn 3\n") == 1);
}

TEST_CASE("parse_family") {
  CHECK(family_name(parse_family("cycle", "4 -1")) == "cycle");
  CHECK(std::get<PathSpec>(parse_family("path", "4 +1,-1,1")).signs == std::vector<int>{1, -1, 1});
  CHECK(std::get<MixedSpec>(parse_family("mixed", "3,1,2")).profile.orders() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(parse_family("kmr", "8 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("wheel", "5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("star", "3 2 5"), std::invalid_argument);
}

TEST_CASE("family analysis document") {
  const auto doc = analyze_family(CycleSpec{3, 1}, true);
  CHECK(doc["family"] == "cycle");
  CHECK(doc["charpoly"] == nlohmann::json::array({"2", "3", "0", "-1"}));
  CHECK(doc["determinant"] == "2");
  CHECK(doc["spectrum"][0]["value_kind"] == "exact_integer");
  CHECK(doc["spectrum"][0]["value"] == "2");
  CHECK(doc["spectrum"][1]["multiplicity"] == 2);
  CHECK(doc["balance"]["balanced"] == true);
  CHECK(doc["verification"]["oracle_checked"] == true);

  CHECK(analyze_family(PathSpec{4, {}}, false)["determinant"] == "1");
  CHECK(analyze_family(KmrSpec{6, 2, 3}, true)["verification"]["oracle_checked"] == true);

  const auto star = analyze_family(StarBlockSpec{2, 3, 0}, true);
  int total = 0;
  for (const auto& e : star["spectrum"]) total += e["multiplicity"].get<int>();
  CHECK(total == 4);
  CHECK(star["charpoly"].size() == 5);
}

TEST_CASE("generic analysis agrees with family analysis") {
  for (const FamilySpec& spec : {FamilySpec{KmrSpec{8, 2, 3}}, FamilySpec{StarBlockSpec{3, 4, 2}},
                                 FamilySpec{MixedSpec{CliqueProfile({1, 2, 3})}}, FamilySpec{CycleSpec{6, -1}}}) {
    const auto closed = analyze_family(spec, true);
    const auto generic = analyze_graph(build_family(spec), true);
    CHECK(closed["charpoly"] == generic["charpoly"]);
    CHECK(closed["determinant"] == generic["determinant"]);
    CHECK(closed["balance"] == generic["balance"]);
  }
}

TEST_CASE("document dispatch") {
  const FamilySpec spec = StarBlockSpec{3, 4, 2};
  const EdgeListDocument tagged = parse_edge_list(write_edge_list(build_family(spec), spec));
  CHECK(analyze_document(tagged, true) == analyze_family(spec, true));

  // A family tag that no longer matches the edges falls back to the generic path.
  const EdgeListDocument edited = parse_edge_list("# family cycle 3 1\nn 3\n1 2 +1\n2 3 +1\n1 3 -1\n");
  CHECK(analyze_document(edited, false)["family"] == "edge_list");
}
