#include <doctest.h>

#include "signedspec/charpoly.hpp"
#include "signedspec/oracle.hpp"

using namespace signedspec;

// Expected coefficients below were computed independently with sympy.

TEST_CASE("exact engine on small graphs") {
  CHECK(charpoly_exact(build_mixed_cliques(CliqueProfile({1, 1, 1}))) == IntPolynomial{2, 3, 0, -1});
  CHECK(charpoly_exact(build_path(3)) == IntPolynomial{0, 2, 0, -1});
  CHECK(charpoly_exact(build_kmr(8, 2, 3)) == IntPolynomial{-55, 144, -44, -160, 126, 16, -28, 0, 1});
  CHECK(charpoly_exact(build_kmr(6, 3, 2)) == IntPolynomial{27, -72, 51, 8, -15, 0, 1});
  CHECK(charpoly_exact(build_cycle(5, -1)) == IntPolynomial{-2, -5, 0, 5, 0, -1});
  CHECK(charpoly_exact(build_cycle(6, 1)) == IntPolynomial{-4, 0, 9, 0, -6, 0, 1});
  CHECK(charpoly_exact(build_mixed_cliques(CliqueProfile({1, 2, 3}))) == IntPolynomial{19, -48, 27, 16, -15, 0, 1});
  CHECK(charpoly_exact(build_mixed_cliques(CliqueProfile({1, 1, 2}))) == IntPolynomial{5, 0, -6, 0, 1});
  CHECK(charpoly_exact(build_star_block(2, 3, 0)) == IntPolynomial{0, 0, -3, 0, 1});
  CHECK(charpoly_exact(build_path(5)) == IntPolynomial{0, -3, 0, 4, 0, -1});
}

TEST_CASE("clique polynomials") {
  // (−1−λ)^2 (2−λ) and (1−λ)^2 (−2−λ)
  CHECK(clique_charpoly(3, 1) == IntPolynomial{2, 3, 0, -1});
  CHECK(clique_charpoly(3, -1) == IntPolynomial{-2, 3, 0, -1});
  CHECK(clique_charpoly(1, 1) == IntPolynomial{0, -1});
}

TEST_CASE("closed forms: cycles and paths") {
  CHECK(charpoly_cycle_closed(3, 1) == IntPolynomial{2, 3, 0, -1});
  CHECK(charpoly_cycle_closed(5, -1) == IntPolynomial{-2, -5, 0, 5, 0, -1});
  CHECK(charpoly_cycle_closed(4, 1) == IntPolynomial{0, 0, -4, 0, 1});
  CHECK(charpoly_path_closed(3) == IntPolynomial{0, 2, 0, -1});
  CHECK(charpoly_path_closed(1) == IntPolynomial{0, -1});
}

TEST_CASE("closed forms: negative cliques") {
  CHECK(charpoly_kmr_full(2, 3) == IntPolynomial{-5, 24, -45, 40, -15, 0, 1});
  CHECK(charpoly_kmr_full(3, 2) == IntPolynomial{27, -72, 51, 8, -15, 0, 1});
  CHECK(charpoly_kmr_general(8, 2, 3) == IntPolynomial{-55, 144, -44, -160, 126, 16, -28, 0, 1});
  CHECK_THROWS(charpoly_kmr_general(6, 2, 3));
  CHECK(charpoly_mixed_cliques(CliqueProfile({1, 2, 3})) == IntPolynomial{19, -48, 27, 16, -15, 0, 1});
  CHECK(charpoly_mixed_cliques(CliqueProfile({3, 3})) == charpoly_kmr_full(2, 3));
}

TEST_CASE("closed forms: star blocks") {
  // −λ(λ−3)(λ−1)^3(λ+1)^3(λ+3)
  const IntPolynomial fig = IntPolynomial{0, -1} * IntPolynomial{-3, 1} * IntPolynomial{-1, 1}.pow(3) *
                            IntPolynomial{1, 1}.pow(3) * IntPolynomial{3, 1};
  CHECK(charpoly_star_block(3, 4, 2) == fig);
  CHECK(charpoly_star_block(2, 3, 0) == IntPolynomial{0, 0, -3, 0, 1});
  CHECK(charpoly_star_block(3, 1, 1) == clique_charpoly(3, -1));
  CHECK(charpoly_star_block(4, 1, 0) == clique_charpoly(4, 1));
}

TEST_CASE("determinant tables") {
  CHECK(determinant_closed(CycleSpec{3, 1}) == 2);
  CHECK(determinant_closed(CycleSpec{3, -1}) == -2);
  CHECK(determinant_closed(CycleSpec{4, 1}) == 0);
  CHECK(determinant_closed(CycleSpec{4, -1}) == 4);
  CHECK(determinant_closed(CycleSpec{6, 1}) == -4);
  CHECK(determinant_closed(CycleSpec{6, -1}) == 0);
  CHECK(determinant_closed(PathSpec{4, {}}) == 1);
  CHECK(determinant_closed(PathSpec{6, {}}) == -1);
  CHECK(determinant_closed(PathSpec{5, {}}) == 0);
  CHECK(determinant_closed(KmrSpec{6, 2, 3}) == -5);
  CHECK(determinant_closed(KmrSpec{8, 2, 3}) == -55);
  CHECK(determinant_closed(StarBlockSpec{3, 4, 2}) == 0);
}

TEST_CASE("quotient determinant") {
  // det(N - λI) for orders (1, 2): N = [[-1, 2], [1, -2]]
  CHECK(quotient_determinant(CliqueProfile({1, 2})) == IntPolynomial{0, 3, 1});
}

TEST_CASE("resolvent") {
  const RationalMatrix m = resolvent_kmr_full(2, 3, Rational(1, 2));
  CHECK(m(0, 0) == Rational(18, 11));
  CHECK(m(0, 3) == Rational(4, 11));
  CHECK(m * shifted_kmr_adjacency(2, 3, Rational(1, 2)) == RationalMatrix::identity(6));
  CHECK_THROWS(resolvent_kmr_full(2, 2, Rational(1)));
  CHECK_THROWS(resolvent_kmr_full(2, 2, Rational(-3)));
  CHECK_THROWS(resolvent_kmr_full(3, 2, Rational(3)));
}

TEST_CASE("Coates expansion") {
  IntMatrix a(2);
  a(0, 0) = 3;
  a(0, 1) = 5;
  a(1, 0) = 7;
  a(1, 1) = 11;
  CHECK(det_coates(a) == 3 * 11 - 5 * 7);
  CHECK(det_coates(IntMatrix::identity(3)) == 1);
  CHECK(det_coates(build_cycle(4, 1).adjacency()) == 0);
  CHECK(charpoly_coates(build_cycle(4, 1)) == IntPolynomial{0, 0, -4, 0, 1});
  CHECK_THROWS_AS(det_coates(IntMatrix(11)), std::invalid_argument);

  SquareMatrix<char> support(2, 1);
  int subdigraphs = 0;
  for_each_linear_subdigraph(support, [&](const LinearSubdigraph& l) {
    ++subdigraphs;
    CHECK((l.cycle_count() == 1 || l.cycle_count() == 2));
  });
  CHECK(subdigraphs == 2);
}

TEST_CASE("Bareiss determinant") {
  CHECK(det_bareiss(build_mixed_cliques(CliqueProfile({1, 1, 1})).adjacency()) == 2);
  CHECK(det_bareiss(build_path(3).adjacency()) == 0);
  CHECK(det_bareiss(build_kmr(6, 2, 3).adjacency()) == -5);
  IntMatrix swap(2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(det_bareiss(swap) == -1);
}

TEST_CASE("matchings") {
  CHECK(count_matchings(build_cycle(6, 1), 2) == 9);
  CHECK(count_matchings(build_path(5), 2) == 3);
  CHECK(count_matchings(build_kmr(8, 2, 3), 0) == 1);
  CHECK_THROWS(count_matchings(build_path(5), 3));
  CHECK(matching_count_formula(MatchingFamily::Cycle, 6, 3) == 2);
  CHECK(matching_count_formula(MatchingFamily::Path, 4, 2) == 1);
  CHECK(matching_count_formula(MatchingFamily::Path, 7, 0) == 1);
  CHECK(total_matchings(MatchingFamily::Cycle, 4) == 7);
  CHECK(total_matchings(MatchingFamily::Path, 3) == 3);
  CHECK(total_matchings(MatchingFamily::Cycle, 3) == 4);
}
