#pragma once

#include "signedspec/families.hpp"
#include "signedspec/polynomial.hpp"
#include "signedspec/signed_graph.hpp"

namespace signedspec {

// All characteristic polynomials use the det(A − λI) convention: the leading
// coefficient is (−1)^n.

/// Exact engine: det(A − xI) at x = 0, 1, −1, 2, −2, … by Bareiss elimination,
/// then exact interpolation.
IntPolynomial charpoly_exact(const SignedGraph& g);

/// φ(K_n) = (−1−λ)^{n−1}(n−1−λ) for sign = +1 and
/// φ(K̃_n) = (1−λ)^{n−1}(1−n−λ) for sign = −1.
IntPolynomial clique_charpoly(int order, int sign);

IntPolynomial charpoly_cycle_closed(int n, int delta);
IntPolynomial charpoly_path_closed(int n);
/// K^{m,r}_{mr}: (1−λ)^{m(r−1)}(1−2r−λ)^{m−1}(1+r(m−2)−λ).
IntPolynomial charpoly_kmr_full(int m, int r);
/// K^{m,r}_n with n > mr.
IntPolynomial charpoly_kmr_general(int n, int m, int r);
IntPolynomial charpoly_mixed_cliques(const CliqueProfile& profile);
IntPolynomial charpoly_star_block(int r, int k, int l);

/// Dispatch on the family; K^{m,r}_n with n = mr uses charpoly_kmr_full.
IntPolynomial charpoly_closed(const FamilySpec& spec);

/// Determinant from the per-family case tables; families without a table
/// (mixed cliques, star blocks) use φ(0) of the closed form.
BigInt determinant_closed(const FamilySpec& spec);

/// det(N − λI_k) for the k×k quotient matrix N with N_ii = −n_i, N_ij = n_j,
/// expanded as Π(−2n_i−λ) + Σ n_i Π_{j≠i}(−2n_j−λ).
IntPolynomial quotient_determinant(const CliqueProfile& profile);

/// (A(K^{m,r}_{mr}) − λI)^{-1} from the tensor-structured closed form.
/// Rejects λ ∈ {1, 1−2r, 1+r(m−2)}.
RationalMatrix resolvent_kmr_full(int m, int r, const Rational& lambda);

/// A(K^{m,r}_{mr}) − λI as an exact rational matrix.
RationalMatrix shifted_kmr_adjacency(int m, int r, const Rational& lambda);

}  // namespace signedspec
