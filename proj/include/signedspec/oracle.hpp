#pragma once

#include <functional>
#include <vector>

#include "signedspec/polynomial.hpp"
#include "signedspec/signed_graph.hpp"

namespace signedspec {

using PolyMatrix = SquareMatrix<IntPolynomial>;

// A spanning set of vertex-disjoint directed cycles in the Coates digraph,
// i.e. a permutation σ with every entry M(i, σ(i)) nonzero. Loops are
// 1-cycles. Vertices are 0-based here, matching matrix indices.
struct LinearSubdigraph {
  std::vector<int> successor;           // σ
  std::vector<std::vector<int>> cycles;  // cycle decomposition, each starting at its least vertex
  int cycle_count() const noexcept { return static_cast<int>(cycles.size()); }
};

/// Largest order the enumerating oracle accepts.
inline constexpr int kCoatesMaxOrder = 10;

/// Calls `visit` for every linear subdigraph supported by the nonzero pattern
/// `support(i, j)` (the digraph has an edge j → i when support(i, j)).
void for_each_linear_subdigraph(const SquareMatrix<char>& support,
                                const std::function<void(const LinearSubdigraph&)>& visit);

/// det M = (-1)^n Σ_L (-1)^{c(L)} w(L) over the linear subdigraphs L of D(M).
/// Throws std::invalid_argument for order > kCoatesMaxOrder.
BigInt det_coates(const IntMatrix& m);
IntPolynomial det_coates(const PolyMatrix& m);

/// det(A − λI) of the graph through the λ-loop Coates expansion.
IntPolynomial charpoly_coates(const SignedGraph& g);

/// Fraction-free Gaussian elimination.
BigInt det_bareiss(IntMatrix m);

/// Number of k-edge matchings of the underlying unsigned graph.
BigInt count_matchings(const SignedGraph& g, int k);

enum class MatchingFamily { Cycle, Path };

/// n/(n−k)·C(n−k, k) for cycles, C(n−k, k) for paths.
BigInt matching_count_formula(MatchingFamily family, int n, int k);
/// Σ_{k=0}^{⌊n/2⌋} of the above.
BigInt total_matchings(MatchingFamily family, int n);

}  // namespace signedspec
