#include "signedspec/balance.hpp"

#include <algorithm>
#include <deque>

namespace signedspec {

namespace {

// Tree path from v up to the root of its BFS tree, v first.
std::vector<int> path_to_root(int v, const std::vector<int>& parent) {
  std::vector<int> path{v};
  while (parent[static_cast<std::size_t>(v)] != 0) {
    v = parent[static_cast<std::size_t>(v)];
    path.push_back(v);
  }
  return path;
}

// Simple cycle u → … → lca → … → w closed by the non-tree edge (w, u).
std::vector<int> close_through_tree(int u, int w, const std::vector<int>& parent) {
  const auto up = path_to_root(u, parent);
  const auto wp = path_to_root(w, parent);
  std::size_t i = up.size();
  std::size_t j = wp.size();
  while (i > 0 && j > 0 && up[i - 1] == wp[j - 1]) {
    --i;
    --j;
  }
  // up[i] == wp[j] is the lowest common ancestor.
  std::vector<int> cycle(up.begin(), up.begin() + static_cast<std::ptrdiff_t>(i + 1));
  for (std::size_t t = j; t-- > 0;) cycle.push_back(wp[t]);
  return cycle;
}

}  // namespace

BalanceCertificate is_balanced(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);

  for (int root = 1; root <= n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        const int want = color[static_cast<std::size_t>(u)] ^ (g.sign(u, w) < 0 ? 1 : 0);
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = want;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (cw != want) {
          return {false, std::nullopt, close_through_tree(u, w, parent)};
        }
      }
    }
  }

  std::vector<std::vector<int>> parts(2);
  for (int v = 1; v <= n; ++v) parts[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  return {true, std::move(parts), std::nullopt};
}

BalanceCertificate is_weakly_balanced(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> component(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> parts;

  for (int root = 1; root <= n; ++root) {
    if (component[static_cast<std::size_t>(root)] != -1) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    component[static_cast<std::size_t>(root)] = id;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      parts.back().push_back(u);
      for (int w : g.neighbors(u)) {
        if (g.sign(u, w) < 0 || component[static_cast<std::size_t>(w)] != -1) continue;
        component[static_cast<std::size_t>(w)] = id;
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
    std::sort(parts.back().begin(), parts.back().end());
  }

  for (const auto& e : g.edges()) {
    if (e.sign > 0 || component[static_cast<std::size_t>(e.u)] != component[static_cast<std::size_t>(e.v)]) continue;
    // The positive tree path between u and v plus the negative edge (v, u).
    return {false, std::nullopt, close_through_tree(e.u, e.v, parent)};
  }
  return {true, std::move(parts), std::nullopt};
}

int cycle_sign(const SignedGraph& g, std::span<const int> cycle) {
  validate_cycle(g, cycle);
  int product = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) product *= g.sign(cycle[i], cycle[(i + 1) % cycle.size()]);
  return product;
}

bool partition_certifies(const SignedGraph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()) + 1, -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) {
      if (v < 1 || v > g.order() || owner[static_cast<std::size_t>(v)] != -1) return false;
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  for (int v = 1; v <= g.order(); ++v)
    if (owner[static_cast<std::size_t>(v)] == -1) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const SignedEdge& e) {
    const bool same = owner[static_cast<std::size_t>(e.u)] == owner[static_cast<std::size_t>(e.v)];
    return e.sign > 0 ? same : !same;
  });
}

}  // namespace signedspec
