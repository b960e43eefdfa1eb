#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "signedspec/signed_graph.hpp"

namespace signedspec {

// Orders of vertex-disjoint negative cliques covering a complete graph.
// Stored ascending; distinct() and counts() give n̄_1 < … < n̄_t and m_1 … m_t.
class CliqueProfile {
 public:
  /// Sorts `orders` ascending. Rejects an empty list or a non-positive order.
  explicit CliqueProfile(std::vector<int> orders);

  const std::vector<int>& orders() const noexcept { return orders_; }
  int clique_count() const noexcept { return static_cast<int>(orders_.size()); }
  int vertex_count() const noexcept;
  std::vector<int> distinct() const;
  std::vector<int> counts() const;

  friend bool operator==(const CliqueProfile&, const CliqueProfile&) = default;

 private:
  std::vector<int> orders_;
};

struct CycleSpec {
  int n = 3;
  int delta = 1;
};

struct PathSpec {
  int n = 1;
  std::vector<int> signs;  // empty: all +1
};

struct KmrSpec {
  int n = 2;
  int m = 1;
  int r = 2;
};

struct MixedSpec {
  CliqueProfile profile{{1}};
};

struct StarBlockSpec {
  int r = 2;
  int k = 1;
  int l = 0;
};

using FamilySpec = std::variant<CycleSpec, PathSpec, KmrSpec, MixedSpec, StarBlockSpec>;

/// Throws GraphError naming the violated precondition.
void validate(const FamilySpec& spec);
/// Vertex count of the family graph (after validation).
int family_order(const FamilySpec& spec);
/// "cycle", "path", "kmr", "mixed" or "star".
std::string family_name(const FamilySpec& spec);
/// Parameters in command-line order, e.g. "8 2 3" or "1,2,3".
std::string family_parameters(const FamilySpec& spec);

SignedGraph build_family(const FamilySpec& spec);

/// Cycle 1-2-…-n-1. δ = +1: all edges positive; δ = -1: only edge (n, 1) negative.
SignedGraph build_cycle(int n, int delta);
/// Cycle 1-2-…-n-1 whose i-th edge (i, i+1), and finally (n, 1), carries signs[i-1].
SignedGraph build_signed_cycle(std::span<const int> signs);
/// Path 1-2-…-n; `signs` has n-1 entries or is empty for all positive.
SignedGraph build_path(int n, std::span<const int> signs = {});
/// K_n with m negative cliques of order r on blocks {(i-1)r+1, …, ir}.
SignedGraph build_kmr(int n, int m, int r);
/// K_n with negative cliques on consecutive blocks of the profile's orders.
SignedGraph build_mixed_cliques(const CliqueProfile& profile);
/// Vertex 1 shared by k cliques of order r; the first l cliques are negative.
SignedGraph build_star_block(int r, int k, int l);

}  // namespace signedspec
