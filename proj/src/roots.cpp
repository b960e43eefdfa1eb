#include "signedspec/roots.hpp"

#include <algorithm>

namespace signedspec {

namespace {

// Dense rational polynomial used only for gcd / Sturm computations.
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly from_int(const IntPolynomial& p) { return RPoly(p.coeffs().begin(), p.coeffs().end()); }

RPoly derivative(const RPoly& p) {
  RPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long long>(i));
  trim(out);
  return out;
}

RPoly monic(RPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

std::pair<RPoly, RPoly> divmod(const RPoly& a, const RPoly& b) {
  RPoly rem = a;
  trim(rem);
  if (deg(rem) < deg(b)) return {RPoly{}, rem};
  RPoly quot(static_cast<std::size_t>(deg(rem) - deg(b) + 1));
  for (int p = deg(rem); p >= deg(b); --p) {
    const Rational f = rem[static_cast<std::size_t>(p)] / b.back();
    quot[static_cast<std::size_t>(p - deg(b))] = f;
    for (int j = 0; j <= deg(b); ++j) rem[static_cast<std::size_t>(p - deg(b) + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(deg(b)));
  trim(rem);
  trim(quot);
  return {quot, rem};
}

RPoly gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

RPoly subtract(RPoly a, const RPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

bool is_constant(const RPoly& p) { return deg(p) <= 0; }

// Yun's algorithm: p = c·Π a_i^i with the a_i square-free and pairwise coprime.
std::vector<std::pair<RPoly, int>> squarefree_factors(const RPoly& p) {
  std::vector<std::pair<RPoly, int>> out;
  const RPoly dp = derivative(p);
  const RPoly a0 = gcd(p, dp);
  RPoly b = divmod(p, a0).first;
  RPoly c = divmod(dp, a0).first;
  RPoly d = subtract(c, derivative(b));
  for (int i = 1; !is_constant(b); ++i) {
    const RPoly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = subtract(c, derivative(b));
    if (!is_constant(a)) out.emplace_back(monic(a), i);
  }
  return out;
}

Rational eval(const RPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p, derivative(p)};
  while (!chain.back().empty() && deg(chain.back()) > 0) {
    RPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<RPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const Rational v = eval(q, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_in(const std::vector<RPoly>& chain, const Rational& lo, const Rational& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

// Roots of a square-free monic polynomial, each as an interval (lo, hi].
void isolate(const std::vector<RPoly>& chain, const Rational& lo, const Rational& hi, int count,
             std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int left = count_in(chain, lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, count - left, out);
}

}  // namespace

double RealRoot::approx() const {
  if (exact) return exact->convert_to<double>();
  return Rational((lower + upper) / 2).convert_to<double>();
}

Rational default_root_width() { return Rational(1, 1000000000000LL); }

int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  return count_in(sturm_chain(from_int(p)), lo, hi);
}

std::vector<RealRoot> real_roots(const IntPolynomial& p, const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("real_roots of the zero polynomial");
  std::vector<RealRoot> roots;
  for (const auto& [factor, multiplicity] : squarefree_factors(from_int(p))) {
    // Cauchy bound for a monic polynomial.
    Rational bound = 1;
    for (std::size_t i = 0; i + 1 < factor.size(); ++i) bound = std::max(bound, Rational(1 + abs(factor[i])));
    const auto chain = sturm_chain(factor);
    const Rational lo = -bound;
    const Rational hi = bound;
    std::vector<std::pair<Rational, Rational>> cells;
    isolate(chain, lo, hi, count_in(chain, lo, hi), cells);

    for (auto [a, b] : cells) {
      RealRoot root;
      root.multiplicity = multiplicity;
      if (eval(factor, b) == 0) {
        root.lower = root.upper = b;
      } else {
        while (b - a > width) {
          const Rational mid = (a + b) / 2;
          if (eval(factor, mid) == 0) {
            a = b = mid;
            break;
          }
          if (count_in(chain, a, mid) == 1)
            b = mid;
          else
            a = mid;
        }
        root.lower = a;
        root.upper = b;
      }
      // Integer candidates inside the final enclosure.
      const BigInt first = numerator(root.lower) / denominator(root.lower) - 1;
      for (BigInt c = first; Rational(c) <= root.upper; ++c)
        if (Rational(c) >= root.lower && eval(factor, Rational(c)) == 0) {
          root.exact = c;
          root.lower = root.upper = Rational(c);
          break;
        }
      roots.push_back(std::move(root));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& x, const RealRoot& y) { return x.approx() > y.approx(); });
  return roots;
}

}  // namespace signedspec
