#include "signedspec/charpoly.hpp"

#include <string>

#include "signedspec/oracle.hpp"

namespace signedspec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// c − λ
IntPolynomial shift(long long c) { return IntPolynomial::linear(c, -1); }

BigInt signed_power(int exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Σ_{k=0}^{upper} count(k)·(−1)^{n−k}·(−λ)^{n−2k}, the linear subdigraphs made
// of k directed 2-cycles and n−2k loops.
template <class Count>
IntPolynomial matching_terms(int n, int upper, Count count) {
  IntPolynomial sum;
  for (int k = 0; k <= upper; ++k) {
    const int loops = n - 2 * k;
    const BigInt coefficient = count(k) * signed_power(n - k) * signed_power(loops);
    sum += IntPolynomial::monomial(coefficient, static_cast<unsigned>(loops));
  }
  return sum;
}

}  // namespace

IntPolynomial charpoly_exact(const SignedGraph& g) {
  const int n = g.order();
  const IntMatrix a = g.adjacency();
  std::vector<BigInt> xs;
  std::vector<BigInt> ys;
  for (int step = 0; static_cast<int>(xs.size()) < n + 1; ++step) {
    const long long x = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    IntMatrix shifted = a;
    for (int i = 0; i < n; ++i) shifted(i, i) -= x;
    xs.emplace_back(x);
    ys.push_back(det_bareiss(std::move(shifted)));
  }
  return interpolate(xs, ys);
}

IntPolynomial clique_charpoly(int order, int sign) {
  require(order >= 1, "clique order must be positive");
  if (sign > 0) return shift(-1).pow(static_cast<unsigned>(order - 1)) * shift(order - 1);
  return shift(1).pow(static_cast<unsigned>(order - 1)) * shift(1 - order);
}

IntPolynomial charpoly_cycle_closed(int n, int delta) {
  validate(CycleSpec{n, delta});
  auto cycle_count = [n](int k) { return matching_count_formula(MatchingFamily::Cycle, n, k); };
  IntPolynomial inner;
  if (n % 2 == 0) {
    // The two perfect matchings contribute 2(−1)^{n/2}; sum runs to n/2 − 1.
    inner = matching_terms(n, n / 2 - 1, cycle_count);
    inner += IntPolynomial::constant(2 * signed_power(n / 2));
  } else {
    inner = matching_terms(n, n / 2, cycle_count);
  }
  // The two directed n-cycles of weight δ.
  inner -= IntPolynomial::constant(2 * delta);
  return inner * signed_power(n);
}

IntPolynomial charpoly_path_closed(int n) {
  validate(PathSpec{n, {}});
  auto path_count = [n](int k) { return matching_count_formula(MatchingFamily::Path, n, k); };
  IntPolynomial inner;
  if (n % 2 == 0) {
    inner = matching_terms(n, n / 2 - 1, path_count);
    inner += IntPolynomial::constant(signed_power(n / 2));
  } else {
    inner = matching_terms(n, n / 2, path_count);
  }
  return inner * signed_power(n);
}

IntPolynomial charpoly_kmr_full(int m, int r) {
  validate(KmrSpec{m * r, m, r});
  return shift(1).pow(static_cast<unsigned>(m * (r - 1))) * shift(1 - 2 * r).pow(static_cast<unsigned>(m - 1)) *
         shift(1 + r * (m - 2));
}

IntPolynomial charpoly_kmr_general(int n, int m, int r) {
  validate(KmrSpec{n, m, r});
  require(n > m * r, "charpoly_kmr_general needs n > m*r; use charpoly_kmr_full for n = m*r");

  // (−λ² − r(2 + λ(2−m) − m) + 1) / (λ + r(2−m) − 1), resolved exactly.
  const IntPolynomial numerator{1 - 2 * r + r * m, -r * (2 - m), -1};
  const IntPolynomial denominator{r * (2 - m) - 1, 1};
  const IntPolynomial ratio = divide_exact(numerator, denominator, "K^{m,r}_n rational factor");

  // n(1−2r−λ) + 2r(1 + m(r−1) + λ) − 1 + λ²
  const IntPolynomial quadratic{n * (1 - 2 * r) + 2 * r * (1 + m * (r - 1)) - 1, 2 * r - n, 1};

  return shift(1).pow(static_cast<unsigned>(m * (r - 1))) * shift(1 - 2 * r).pow(static_cast<unsigned>(m - 1)) *
         ratio.pow(static_cast<unsigned>(n - m * r - 1)) * quadratic;
}

IntPolynomial quotient_determinant(const CliqueProfile& profile) {
  const auto& orders = profile.orders();
  IntPolynomial all = IntPolynomial::constant(1);
  for (int o : orders) all *= shift(-2 * o);
  IntPolynomial sum = all;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    IntPolynomial others = IntPolynomial::constant(orders[i]);
    for (std::size_t j = 0; j < orders.size(); ++j)
      if (j != i) others *= shift(-2 * orders[j]);
    sum += others;
  }
  return sum;
}

IntPolynomial charpoly_mixed_cliques(const CliqueProfile& profile) {
  const int n = profile.vertex_count();
  const int k = profile.clique_count();
  // det(N_μ) at μ = λ − 1: substitute by composing coefficients.
  const IntPolynomial det_n = quotient_determinant(profile);
  const IntPolynomial mu = IntPolynomial::linear(-1, 1);
  IntPolynomial shifted;
  IntPolynomial power = IntPolynomial::constant(1);
  for (const auto& c : det_n.coeffs()) {
    shifted += power * c;
    power *= mu;
  }
  return shift(1).pow(static_cast<unsigned>(n - k)) * shifted;
}

IntPolynomial charpoly_star_block(int r, int k, int l) {
  validate(StarBlockSpec{r, k, l});
  const IntPolynomial neg_r = clique_charpoly(r, -1);
  const IntPolynomial pos_r = clique_charpoly(r, 1);
  const IntPolynomial neg_rm1 = clique_charpoly(r - 1, -1);
  const IntPolynomial pos_rm1 = clique_charpoly(r - 1, 1);

  IntPolynomial phi;
  if (l >= 1)
    phi += BigInt(l) * neg_r * neg_rm1.pow(static_cast<unsigned>(l - 1)) * pos_rm1.pow(static_cast<unsigned>(k - l));
  if (k - l >= 1)
    phi += BigInt(k - l) * pos_r * neg_rm1.pow(static_cast<unsigned>(l)) * pos_rm1.pow(static_cast<unsigned>(k - l - 1));
  // Cut vertex in no block: weight (k−1)·λ (coalescence of k blocks at one vertex).
  phi += IntPolynomial::monomial(k - 1, 1) * neg_rm1.pow(static_cast<unsigned>(l)) *
         pos_rm1.pow(static_cast<unsigned>(k - l));
  return phi;
}

IntPolynomial charpoly_closed(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const CycleSpec& s) { return charpoly_cycle_closed(s.n, s.delta); },
                        [](const PathSpec& s) { return charpoly_path_closed(s.n); },
                        [](const KmrSpec& s) {
                          return s.n == s.m * s.r ? charpoly_kmr_full(s.m, s.r) : charpoly_kmr_general(s.n, s.m, s.r);
                        },
                        [](const MixedSpec& s) { return charpoly_mixed_cliques(s.profile); },
                        [](const StarBlockSpec& s) { return charpoly_star_block(s.r, s.k, s.l); },
                    },
                    spec);
}

BigInt determinant_closed(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const CycleSpec& s) -> BigInt {
                          if (s.n % 2 == 1) return 2 * s.delta;
                          return s.n % 4 == 0 ? 2 - 2 * s.delta : -2 - 2 * s.delta;
                        },
                        [](const PathSpec& s) -> BigInt {
                          if (s.n % 2 == 1) return 0;
                          return s.n % 4 == 0 ? 1 : -1;
                        },
                        [](const KmrSpec& s) -> BigInt {
                          const BigInt head = boost::multiprecision::pow(BigInt(1 - 2 * s.r), s.m - 1);
                          if (s.n == s.m * s.r) return head * (1 + s.r * (s.m - 2));
                          return head * signed_power(s.n - s.m * s.r - 1) *
                                 (s.n * (1 - 2 * s.r) + 2 * s.r * (1 + s.m * (s.r - 1)) - 1);
                        },
                        [](const MixedSpec& s) { return charpoly_mixed_cliques(s.profile).coeff(0); },
                        [](const StarBlockSpec& s) { return charpoly_star_block(s.r, s.k, s.l).coeff(0); },
                    },
                    spec);
}

RationalMatrix shifted_kmr_adjacency(int m, int r, const Rational& lambda) {
  const SignedGraph g = build_kmr(m * r, m, r);
  RationalMatrix a(m * r);
  for (const auto& e : g.edges()) {
    a(e.u - 1, e.v - 1) = e.sign;
    a(e.v - 1, e.u - 1) = e.sign;
  }
  for (int i = 0; i < m * r; ++i) a(i, i) -= lambda;
  return a;
}

RationalMatrix resolvent_kmr_full(int m, int r, const Rational& lambda) {
  validate(KmrSpec{m * r, m, r});
  if (lambda == 1) throw std::invalid_argument("resolvent undefined at λ = 1 (eigenvalue of K^{m,r}_{mr})");
  if (lambda == 1 - 2 * r)
    throw std::invalid_argument("resolvent undefined at λ = 1−2r = " + std::to_string(1 - 2 * r));
  if (lambda == 1 + r * (m - 2))
    throw std::invalid_argument("resolvent undefined at λ = 1+r(m−2) = " + std::to_string(1 + r * (m - 2)));

  const Rational outer = 1 / (lambda + 2 * r - 1);
  const Rational block_scale = 1 / (lambda - 1);
  const Rational all_ones = 1 / (lambda + r * (2 - m) - 1);
  const int n = m * r;
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational entry = -all_ones;
      if (i / r == j / r) {
        // 2A(K_r) − (λ + 2r − 3)I_r on the diagonal blocks.
        const Rational block = i == j ? -(lambda + 2 * r - 3) : Rational(2);
        entry += block_scale * block;
      }
      out(i, j) = outer * entry;
    }
  return out;
}

}  // namespace signedspec
