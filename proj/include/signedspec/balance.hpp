#pragma once

#include <optional>
#include <vector>

#include "signedspec/signed_graph.hpp"

namespace signedspec {

// Verdict with a constructive certificate: a vertex partition when the verdict
// holds, otherwise a violating cycle. Exactly one of the two is set.
struct BalanceCertificate {
  bool verdict = false;
  std::optional<std::vector<std::vector<int>>> partition;
  std::optional<std::vector<int>> witness_cycle;
};

/// Harary balance via sign-constrained 2-colouring (BFS per component).
/// On success the partition has exactly two parts, one possibly empty; on
/// failure the witness cycle has an odd number of negative edges.
BalanceCertificate is_balanced(const SignedGraph& g);

/// Davis weak balance: the parts are the components of the positive-edge
/// subgraph. Fails iff some negative edge lies inside one component; the
/// witness is that edge closed by a positive path (exactly one negative edge).
BalanceCertificate is_weakly_balanced(const SignedGraph& g);

/// Product of edge signs around `cycle`. Throws GraphError when the sequence
/// is not a simple cycle of g.
int cycle_sign(const SignedGraph& g, std::span<const int> cycle);

/// Literal edge scan: every positive edge inside one part, every negative edge
/// across parts, and the parts cover every vertex exactly once.
bool partition_certifies(const SignedGraph& g, const std::vector<std::vector<int>>& parts);

}  // namespace signedspec
