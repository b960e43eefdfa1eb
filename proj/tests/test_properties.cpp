#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "signedspec/balance.hpp"
#include "signedspec/charpoly.hpp"
#include "signedspec/oracle.hpp"
#include "signedspec/spectra.hpp"
#include "signedspec/sweep.hpp"

using namespace signedspec;

namespace {

SignedGraph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution edge(density), positive(0.5);
  std::vector<SignedEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (edge(rng)) edges.push_back({u, v, positive(rng) ? 1 : -1});
  return build_graph(n, edges);
}

}  // namespace

TEST_CASE("charpoly is invariant under relabeling") {
  std::mt19937 rng(7);
  for (const FamilySpec& spec : family_sweep(8)) {
    const SignedGraph g = build_family(spec);
    const IntPolynomial reference = charpoly_exact(g);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(charpoly_exact(g.relabeled(perm)) == reference);
    }
  }
}

TEST_CASE("cycle charpoly does not depend on which edge is negative") {
  for (int n = 3; n <= 10; ++n) {
    const IntPolynomial closed = charpoly_cycle_closed(n, -1);
    for (int slot = 0; slot < n; ++slot) {
      std::vector<int> signs(static_cast<std::size_t>(n), 1);
      signs[static_cast<std::size_t>(slot)] = -1;
      const SignedGraph g = build_signed_cycle(signs);
      CHECK(charpoly_coates(g) == closed);
      CHECK(charpoly_exact(g) == closed);
    }
  }
}

TEST_CASE("path charpoly does not depend on edge signs") {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(0.5);
  for (int n = 2; n <= 10; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> signs;
      for (int i = 1; i < n; ++i) signs.push_back(coin(rng) ? 1 : -1);
      CHECK(charpoly_exact(build_path(n, signs)) == charpoly_path_closed(n));
    }
}

TEST_CASE("random graphs: engines agree and certificates verify") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 8;
    const SignedGraph g = random_graph(rng, n, 0.5);
    const IntPolynomial exact = charpoly_exact(g);
    CHECK(exact.degree() == n);
    CHECK(exact.leading() == (n % 2 == 0 ? 1 : -1));
    CHECK(exact.coeff(static_cast<std::size_t>(n - 1)) == 0);
    CHECK(charpoly_coates(g) == exact);
    CHECK(det_coates(g.adjacency()) == det_bareiss(g.adjacency()));

    CHECK(negate(negate(g)) == g);

    const BalanceCertificate strong = is_balanced(g);
    const BalanceCertificate weak = is_weakly_balanced(g);
    if (strong.verdict) CHECK(weak.verdict);
    for (const BalanceCertificate* c : {&strong, &weak}) {
      CHECK(c->partition.has_value() != c->witness_cycle.has_value());
      if (c->partition) CHECK(partition_certifies(g, *c->partition));
    }
    if (strong.witness_cycle) CHECK(cycle_sign(g, *strong.witness_cycle) == -1);
    if (weak.witness_cycle) {
      const auto& w = *weak.witness_cycle;
      int negatives = 0;
      for (std::size_t i = 0; i < w.size(); ++i) negatives += g.sign(w[i], w[(i + 1) % w.size()]) < 0;
      CHECK(negatives == 1);
    }
    const Spectrum s = adjacency_eigenvalues_numeric(g);
    CHECK_FALSE(spectrum_invariant_violation(s, n, g.edge_count()));
  }
}

TEST_CASE("closed-form spectra satisfy the spectrum invariants") {
  for (const FamilySpec& spec : family_sweep()) {
    const SignedGraph g = build_family(spec);
    const auto violation = spectrum_invariant_violation(eigenvalues_closed(spec), g.order(), g.edge_count());
    CHECK_MESSAGE(!violation, instance_label(spec));
  }
}

TEST_CASE("charpoly at zero is the determinant") {
  for (const FamilySpec& spec : family_sweep(10)) {
    const SignedGraph g = build_family(spec);
    CHECK(charpoly_closed(spec).coeff(0) == det_bareiss(g.adjacency()));
  }
}

TEST_CASE("equal-order profiles reproduce the kmr spectrum exactly") {
  for (int r = 2; r <= 5; ++r)
    for (int m = 1; m * r <= 12; ++m) {
      const Spectrum a = secular_solve(SecularProblem(CliqueProfile(std::vector<int>(static_cast<std::size_t>(m), r))));
      const Spectrum b = eigenvalues_kmr_full(m, r);
      REQUIRE(a.entries().size() == b.entries().size());
      for (std::size_t i = 0; i < a.entries().size(); ++i) {
        CHECK(a.entries()[i].value.kind() == Eigenvalue::Kind::Integer);
        CHECK(a.entries()[i].value.exactly_equals(b.entries()[i].value));
        CHECK(a.entries()[i].multiplicity == b.entries()[i].multiplicity);
      }
    }
}
