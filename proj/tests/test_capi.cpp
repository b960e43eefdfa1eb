#include <doctest.h>

#include <cstring>
#include <string>

#include "signedspec.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  ssg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  const ssg_edge edges[] = {{1, 2, 1}, {2, 3, 1}, {1, 3, -1}};
  ssg_graph* g = nullptr;
  REQUIRE(ssg_graph_from_edges(3, edges, 3, &g) == SSG_OK);
  CHECK(ssg_graph_order(g) == 3);
  CHECK(ssg_graph_edge_count(g) == 3);
  CHECK(ssg_graph_sign(g, 3, 1) == -1);
  CHECK(ssg_graph_sign(g, 0, 1) == 0);

  ssg_graph* n = nullptr;
  REQUIRE(ssg_graph_negate(g, &n) == SSG_OK);
  CHECK(ssg_graph_sign(n, 1, 2) == -1);

  char* text = nullptr;
  REQUIRE(ssg_graph_to_edge_list(n, &text) == SSG_OK);
  CHECK(take(text) == "n 3\n1 2 -1\n1 3 +1\n2 3 -1\n");
  ssg_graph_free(n);
  ssg_graph_free(g);
  ssg_graph_free(nullptr);
}

TEST_CASE("errors are reported through status codes") {
  ssg_graph* g = nullptr;
  const ssg_edge dup[] = {{1, 2, 1}, {2, 1, 1}};
  CHECK(ssg_graph_from_edges(3, dup, 2, &g) == SSG_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(std::strstr(ssg_last_error(), "duplicate") != nullptr);

  CHECK(ssg_graph_from_family("kmr", "5 2 3", &g) == SSG_INVALID_ARGUMENT);
  CHECK(ssg_graph_from_family("wheel", "5", &g) == SSG_INVALID_ARGUMENT);
  CHECK(ssg_graph_from_edge_list("n 3\n1 2 +2\n", &g) == SSG_PARSE_ERROR);
  CHECK(std::strstr(ssg_last_error(), "line 2") != nullptr);
  CHECK(ssg_graph_from_edge_list(nullptr, &g) == SSG_INVALID_ARGUMENT);
  CHECK(ssg_graph_from_family("cycle", "3 1", nullptr) == SSG_INVALID_ARGUMENT);
  CHECK(std::string(ssg_status_string(SSG_VERIFICATION_FAILED)) == "verification failed");
}

TEST_CASE("family analysis through the C API") {
  ssg_graph* g = nullptr;
  REQUIRE(ssg_graph_from_family("kmr", "6 2 3", &g) == SSG_OK);
  char* json = nullptr;
  REQUIRE(ssg_graph_analyze(g, 1, &json) == SSG_OK);
  const std::string doc = take(json);
  CHECK(doc.find("\"oracle_checked\": true") != std::string::npos);
  CHECK(doc.find("\"determinant\": \"-5\"") != std::string::npos);

  char* text = nullptr;
  REQUIRE(ssg_graph_to_edge_list(g, &text) == SSG_OK);
  ssg_graph* parsed = nullptr;
  REQUIRE(ssg_graph_from_edge_list(text, &parsed) == SSG_OK);
  ssg_string_free(text);
  REQUIRE(ssg_graph_analyze(parsed, 1, &json) == SSG_OK);
  CHECK(take(json) == doc);
  ssg_graph_free(parsed);
  ssg_graph_free(g);
}

TEST_CASE("sweep through the C API") {
  int passed = 0;
  char* report = nullptr;
  REQUIRE(ssg_sweep(5, nullptr, &passed, &report) == SSG_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("FAIL") == std::string::npos);

  REQUIRE(ssg_sweep(5, "cycle", &passed, &report) == SSG_OK);
  CHECK(passed == 0);
  CHECK(take(report).find("FAIL cycle 3 1 closed_form_charpoly") != std::string::npos);
}
