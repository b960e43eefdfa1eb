#include "signedspec/oracle.hpp"

#include <string>

namespace signedspec {

namespace {

void require_coates_order(int n) {
  if (n > kCoatesMaxOrder)
    throw std::invalid_argument("det_coates enumerates permutations and is limited to order " +
                                std::to_string(kCoatesMaxOrder) + "; use det_bareiss for order " +
                                std::to_string(n));
}

std::vector<std::vector<int>> decompose(const std::vector<int>& sigma) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = static_cast<int>(start); !seen[static_cast<std::size_t>(v)]; v = sigma[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Depth-first choice of σ(row) over unused columns with nonzero support;
// `partial[row]` holds the running product of the chosen entries.
template <class T>
T coates_sum(const SquareMatrix<T>& m) {
  const int n = m.order();
  require_coates_order(n);
  if (n == 0) return T{1};

  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<T> partial(static_cast<std::size_t>(n) + 1);
  partial[0] = T{1};
  T total{};

  std::function<void(int)> descend = [&](int row) {
    if (row == n) {
      const int c = static_cast<int>(decompose(sigma).size());
      // (-1)^n (-1)^{c(L)} w(L)
      if ((n + c) % 2 == 0)
        total += partial[static_cast<std::size_t>(n)];
      else
        total -= partial[static_cast<std::size_t>(n)];
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (used[static_cast<std::size_t>(col)] || m(row, col) == T{}) continue;
      used[static_cast<std::size_t>(col)] = true;
      sigma[static_cast<std::size_t>(row)] = col;
      partial[static_cast<std::size_t>(row) + 1] = partial[static_cast<std::size_t>(row)] * m(row, col);
      descend(row + 1);
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  descend(0);
  return total;
}

void matchings_from(const std::vector<SignedEdge>& edges, std::size_t next, int remaining, std::vector<bool>& covered,
                    BigInt& count) {
  if (remaining == 0) {
    ++count;
    return;
  }
  for (std::size_t i = next; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (covered[static_cast<std::size_t>(e.u)] || covered[static_cast<std::size_t>(e.v)]) continue;
    covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = true;
    matchings_from(edges, i + 1, remaining - 1, covered, count);
    covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = false;
  }
}

}  // namespace

void for_each_linear_subdigraph(const SquareMatrix<char>& support,
                                const std::function<void(const LinearSubdigraph&)>& visit) {
  const int n = support.order();
  require_coates_order(n);
  LinearSubdigraph current;
  current.successor.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  std::function<void(int)> descend = [&](int row) {
    if (row == n) {
      current.cycles = decompose(current.successor);
      visit(current);
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (used[static_cast<std::size_t>(col)] || !support(row, col)) continue;
      used[static_cast<std::size_t>(col)] = true;
      current.successor[static_cast<std::size_t>(row)] = col;
      descend(row + 1);
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  descend(0);
}

BigInt det_coates(const IntMatrix& m) { return coates_sum(m); }

IntPolynomial det_coates(const PolyMatrix& m) { return coates_sum(m); }

IntPolynomial charpoly_coates(const SignedGraph& g) {
  const int n = g.order();
  PolyMatrix m(n);
  for (const auto& e : g.edges()) {
    m(e.u - 1, e.v - 1) = IntPolynomial::constant(e.sign);
    m(e.v - 1, e.u - 1) = IntPolynomial::constant(e.sign);
  }
  for (int i = 0; i < n; ++i) m(i, i) = IntPolynomial::linear(0, -1);
  return det_coates(m);
}

BigInt det_bareiss(IntMatrix m) {
  const int n = m.order();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt count_matchings(const SignedGraph& g, int k) {
  if (k < 0 || k > g.order() / 2)
    throw std::invalid_argument("matching size " + std::to_string(k) + " outside [0, " +
                                std::to_string(g.order() / 2) + "]");
  BigInt count = 0;
  std::vector<bool> covered(static_cast<std::size_t>(g.order()) + 1, false);
  matchings_from(g.edges(), 0, k, covered, count);
  return count;
}

BigInt matching_count_formula(MatchingFamily family, int n, int k) {
  const int min_n = family == MatchingFamily::Cycle ? 3 : 1;
  if (n < min_n) throw std::invalid_argument("matching formula needs n >= " + std::to_string(min_n));
  if (k < 0 || k > n / 2)
    throw std::invalid_argument("matching size " + std::to_string(k) + " outside [0, " + std::to_string(n / 2) + "]");
  if (family == MatchingFamily::Path) return binomial(n - k, k);
  const BigInt scaled = BigInt(n) * binomial(n - k, k);
  if (scaled % (n - k) != 0) throw ConsistencyError("cycle matching count is not an integer");
  return scaled / (n - k);
}

BigInt total_matchings(MatchingFamily family, int n) {
  BigInt total = 0;
  for (int k = 0; k <= n / 2; ++k) total += matching_count_formula(family, n, k);
  return total;
}

}  // namespace signedspec
