#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signedspec/numeric.hpp"

namespace signedspec {

/// Edge between 1-based vertices u and v with sign ±1.
struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 0;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected signed graph on vertices 1..n. Immutable once built.
class SignedGraph {
 public:
  /// Validates and builds. Rejects out-of-range vertices, self-loops, signs
  /// other than ±1 and duplicate unordered pairs.
  static SignedGraph build(int n, std::span<const SignedEdge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges with u < v, sorted lexicographically.
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

  /// A(u, v) for 1-based u, v: -1, 0 or +1.
  int sign(int u, int v) const;
  int degree(int v) const;
  /// Neighbours of v in increasing order.
  std::vector<int> neighbors(int v) const;

  std::size_t negative_edge_count() const;

  /// Adjacency matrix, 0-based indexing.
  IntMatrix adjacency() const;

  /// Vertex i is renamed to perm[i-1]; perm must be a permutation of 1..n.
  SignedGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  SignedGraph() = default;
  std::size_t slot(int u, int v) const;

  int n_ = 0;
  std::vector<std::int8_t> adj_;
  std::vector<SignedEdge> edges_;
};

SignedGraph build_graph(int n, std::span<const SignedEdge> edges);

/// Same edges, every sign flipped.
SignedGraph negate(const SignedGraph& g);

/// Vertex sets in [1, n] that the checks below consider a valid cycle:
/// length ≥ 3, no repeats, every consecutive pair (and last→first) adjacent.
void validate_cycle(const SignedGraph& g, std::span<const int> cycle);

}  // namespace signedspec
