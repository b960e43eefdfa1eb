#pragma once

#include <optional>
#include <vector>

#include "signedspec/polynomial.hpp"

namespace signedspec {

// A real root isolated in [lower, upper]; integer roots are reported exactly
// with lower == upper == *exact.
struct RealRoot {
  std::optional<BigInt> exact;
  Rational lower;
  Rational upper;
  int multiplicity = 1;

  double approx() const;
};

/// Default enclosure width for certified numeric roots.
Rational default_root_width();

/// Number of distinct real roots of a square-free p in (lo, hi], by Sturm's theorem.
int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// All real roots of p (nonzero) with multiplicities, in decreasing order.
/// Square-free decomposition over Q, Sturm isolation, then bisection down to
/// `width`; an integer inside a final interval is tested exactly.
std::vector<RealRoot> real_roots(const IntPolynomial& p, const Rational& width = default_root_width());

}  // namespace signedspec
