#include <doctest.h>

#include "signedspec/balance.hpp"
#include "signedspec/families.hpp"

using namespace signedspec;

TEST_CASE("clique profile") {
  const CliqueProfile p({3, 1, 3, 2});
  CHECK(p.orders() == std::vector<int>{1, 2, 3, 3});
  CHECK(p.distinct() == std::vector<int>{1, 2, 3});
  CHECK(p.counts() == std::vector<int>{1, 1, 2});
  CHECK(p.vertex_count() == 9);
  CHECK_THROWS(CliqueProfile({}));
  CHECK_THROWS(CliqueProfile({2, 0}));
}

TEST_CASE("cycle and path builders") {
  const SignedGraph c = build_cycle(4, -1);
  CHECK(c.edge_count() == 4);
  CHECK(c.negative_edge_count() == 1);
  CHECK(c.sign(4, 1) == -1);
  CHECK_THROWS_AS(build_cycle(2, 1), GraphError);
  CHECK_THROWS_AS(build_cycle(5, 0), GraphError);

  const std::vector<int> signs{1, -1, 1};
  const SignedGraph p = build_path(4, signs);
  CHECK(p.edge_count() == 3);
  CHECK(p.sign(2, 3) == -1);
  CHECK(build_path(1).edge_count() == 0);
  const std::vector<int> short_signs{1};
  CHECK_THROWS_AS(build_path(4, short_signs), GraphError);
}

TEST_CASE("kmr builder") {
  const SignedGraph g = build_kmr(8, 2, 3);
  CHECK(g.edge_count() == 28);
  CHECK(g.negative_edge_count() == 6);
  for (int v = 1; v <= 8; ++v) CHECK(g.degree(v) == 7);
  CHECK(g.sign(1, 3) == -1);
  CHECK(g.sign(4, 6) == -1);
  CHECK(g.sign(3, 4) == 1);
  CHECK(g.sign(7, 8) == 1);
  CHECK_THROWS_AS(build_kmr(5, 2, 3), GraphError);
  CHECK_THROWS_AS(build_kmr(6, 2, 1), GraphError);
}

TEST_CASE("mixed clique builder") {
  const SignedGraph g = build_mixed_cliques(CliqueProfile({1, 2, 3}));
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 15);
  CHECK(g.negative_edge_count() == 1 + 3);
  CHECK(g.sign(2, 3) == -1);
  CHECK(g.sign(1, 2) == 1);
}

TEST_CASE("star block builder") {
  const SignedGraph g = build_star_block(3, 4, 2);
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(g.negative_edge_count() == 6);
  CHECK(g.degree(1) == 8);

  const SignedGraph star = build_star_block(2, 3, 0);
  CHECK(star.edge_count() == 3);
  CHECK(star.negative_edge_count() == 0);

  const SignedGraph single = build_star_block(4, 1, 0);
  CHECK(single.edge_count() == 6);
  CHECK_THROWS_AS(build_star_block(3, 2, 3), GraphError);
  CHECK_THROWS_AS(build_star_block(1, 2, 0), GraphError);
}

TEST_CASE("family names and parameters") {
  CHECK(family_name(KmrSpec{8, 2, 3}) == "kmr");
  CHECK(family_parameters(KmrSpec{8, 2, 3}) == "8 2 3");
  CHECK(family_parameters(MixedSpec{CliqueProfile({2, 1})}) == "1,2");
  CHECK(family_parameters(CycleSpec{5, -1}) == "5 -1");
  CHECK(family_order(StarBlockSpec{4, 4, 1}) == 13);
}

TEST_CASE("balance of cycles follows delta") {
  for (int n = 3; n <= 12; ++n)
    for (int delta : {1, -1}) {
      const SignedGraph g = build_cycle(n, delta);
      const BalanceCertificate cert = is_balanced(g);
      CHECK(cert.verdict == (delta == 1));
      if (cert.verdict) {
        REQUIRE(cert.partition);
        CHECK(partition_certifies(g, *cert.partition));
      } else {
        REQUIRE(cert.witness_cycle);
        CHECK(cycle_sign(g, *cert.witness_cycle) == -1);
      }
    }
}

TEST_CASE("balance witness on unbalanced triangle") {
  const std::vector<SignedEdge> tri{{1, 2, 1}, {2, 3, 1}, {1, 3, -1}};
  const SignedGraph g = build_graph(3, tri);
  const BalanceCertificate cert = is_balanced(g);
  CHECK_FALSE(cert.verdict);
  CHECK_FALSE(cert.partition);
  REQUIRE(cert.witness_cycle);
  CHECK(cert.witness_cycle->size() == 3);
  CHECK(cycle_sign(g, *cert.witness_cycle) == -1);
  CHECK_FALSE(is_weakly_balanced(g).verdict);
}

TEST_CASE("cycle_sign") {
  const SignedGraph c4 = build_cycle(4, -1);
  const std::vector<int> around{1, 2, 3, 4};
  CHECK(cycle_sign(c4, around) == -1);
  const std::vector<int> broken{1, 3, 2, 4};
  CHECK_THROWS_AS(cycle_sign(c4, broken), GraphError);
  const SignedGraph k3 = build_mixed_cliques(CliqueProfile({1, 1, 1}));
  const std::vector<int> tri{1, 2, 3};
  CHECK(cycle_sign(k3, tri) == 1);
}

TEST_CASE("negated complete families are weakly balanced") {
  const SignedGraph g = negate(build_kmr(6, 2, 3));
  const BalanceCertificate cert = is_weakly_balanced(g);
  CHECK(cert.verdict);
  REQUIRE(cert.partition);
  CHECK(cert.partition->size() == 2);
  CHECK(partition_certifies(g, *cert.partition));
  CHECK_FALSE(is_balanced(negate(build_kmr(9, 3, 3))).verdict);
  CHECK(is_weakly_balanced(negate(build_kmr(9, 3, 3))).verdict);
  CHECK(is_weakly_balanced(negate(build_star_block(3, 4, 2))).verdict);
}

TEST_CASE("negated cycle with one negative edge is not weakly balanced") {
  const std::vector<int> signs{1, -1, -1, -1, -1};
  const SignedGraph g = negate(build_signed_cycle(signs));
  CHECK(g.negative_edge_count() == 1);
  const BalanceCertificate cert = is_weakly_balanced(g);
  CHECK_FALSE(cert.verdict);
  REQUIRE(cert.witness_cycle);
  int negatives = 0;
  const auto& w = *cert.witness_cycle;
  for (std::size_t i = 0; i < w.size(); ++i) negatives += g.sign(w[i], w[(i + 1) % w.size()]) < 0;
  CHECK(negatives == 1);
}

TEST_CASE("partition_certifies rejects bad partitions") {
  const SignedGraph c4 = build_cycle(4, 1);
  CHECK(partition_certifies(c4, {{1, 2, 3, 4}, {}}));
  CHECK_FALSE(partition_certifies(c4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(partition_certifies(c4, {{1, 2, 3}}));
  CHECK_FALSE(partition_certifies(c4, {{1, 2, 3, 4}, {4}}));
}

TEST_CASE("disconnected graphs") {
  const std::vector<SignedEdge> edges{{1, 2, -1}, {3, 4, 1}};
  const SignedGraph g = build_graph(5, edges);
  const BalanceCertificate cert = is_balanced(g);
  CHECK(cert.verdict);
  CHECK(partition_certifies(g, *cert.partition));
  const BalanceCertificate weak = is_weakly_balanced(g);
  CHECK(weak.verdict);
  CHECK(partition_certifies(g, *weak.partition));
}
