#include "signedspec/signed_graph.hpp"

#include <algorithm>
#include <sstream>

namespace signedspec {

namespace {

std::string pair_name(int u, int v) {
  std::ostringstream os;
  os << '(' << u << ", " << v << ')';
  return os.str();
}

}  // namespace

SignedGraph SignedGraph::build(int n, std::span<const SignedEdge> edges) {
  if (n < 1) throw GraphError("graph needs at least one vertex, got n = " + std::to_string(n));
  SignedGraph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  g.edges_.reserve(edges.size());
  for (const SignedEdge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw GraphError("edge " + pair_name(e.u, e.v) + " references a vertex outside [1, " + std::to_string(n) + "]");
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1)
      throw GraphError("edge " + pair_name(e.u, e.v) + " has sign " + std::to_string(e.sign) + ", expected +1 or -1");
    const int a = std::min(e.u, e.v);
    const int b = std::max(e.u, e.v);
    if (g.adj_[g.slot(a, b)] != 0) throw GraphError("duplicate edge " + pair_name(a, b));
    g.adj_[g.slot(a, b)] = static_cast<std::int8_t>(e.sign);
    g.adj_[g.slot(b, a)] = static_cast<std::int8_t>(e.sign);
    g.edges_.push_back({a, b, e.sign});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const SignedEdge& x, const SignedEdge& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
  return g;
}

std::size_t SignedGraph::slot(int u, int v) const {
  return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
}

int SignedGraph::sign(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw GraphError("vertex out of range");
  return adj_[slot(u, v)];
}

int SignedGraph::degree(int v) const {
  int d = 0;
  for (int w = 1; w <= n_; ++w) d += sign(v, w) != 0;
  return d;
}

std::vector<int> SignedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= n_; ++w)
    if (sign(v, w) != 0) out.push_back(w);
  return out;
}

std::size_t SignedGraph::negative_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.sign < 0; }));
}

IntMatrix SignedGraph::adjacency() const {
  IntMatrix a(n_);
  for (const SignedEdge& e : edges_) {
    a(e.u - 1, e.v - 1) = e.sign;
    a(e.v - 1, e.u - 1) = e.sign;
  }
  return a;
}

SignedGraph SignedGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("relabeling must list every vertex once");
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n_ || seen[static_cast<std::size_t>(p)]) throw GraphError("relabeling is not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<SignedEdge> moved;
  moved.reserve(edges_.size());
  for (const SignedEdge& e : edges_)
    moved.push_back({perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)], e.sign});
  return build(n_, moved);
}

SignedGraph build_graph(int n, std::span<const SignedEdge> edges) { return SignedGraph::build(n, edges); }

SignedGraph negate(const SignedGraph& g) {
  std::vector<SignedEdge> flipped = g.edges();
  for (auto& e : flipped) e.sign = -e.sign;
  return SignedGraph::build(g.order(), flipped);
}

void validate_cycle(const SignedGraph& g, std::span<const int> cycle) {
  if (cycle.size() < 3) throw GraphError("a cycle needs at least three vertices");
  std::vector<bool> seen(static_cast<std::size_t>(g.order()) + 1, false);
  for (int v : cycle) {
    if (v < 1 || v > g.order()) throw GraphError("cycle vertex " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) throw GraphError("cycle repeats vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % cycle.size()];
    if (g.sign(a, b) == 0) throw GraphError("cycle uses missing edge " + pair_name(a, b));
  }
}

}  // namespace signedspec
