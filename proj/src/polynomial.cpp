#include "signedspec/polynomial.hpp"

#include <sstream>

namespace signedspec {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, unsigned power) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear(const BigInt& c0, const BigInt& c1) {
  return IntPolynomial(std::vector<BigInt>{c0, c1});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPolynomial::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || p == 0) os << mag;
    if (p >= 1) os << "λ";
    if (p >= 2) os << '^' << p;
    first = false;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

namespace {

std::vector<Rational> to_rational(const IntPolynomial& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

IntPolynomial to_integer(std::vector<Rational> coeffs, const char* what) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (denominator(c) != 1) throw ConsistencyError(std::string(what) + ": non-integer coefficient");
    out.push_back(numerator(c));
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

PolynomialDivision divide(const IntPolynomial& numerator_poly, const IntPolynomial& denominator_poly) {
  if (denominator_poly.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = to_rational(numerator_poly);
  const std::vector<Rational> den = to_rational(denominator_poly);
  const int dd = denominator_poly.degree();
  if (numerator_poly.degree() < dd) return {IntPolynomial{}, numerator_poly};

  std::vector<Rational> quot(static_cast<std::size_t>(numerator_poly.degree() - dd + 1));
  for (int p = numerator_poly.degree(); p >= dd; --p) {
    const Rational factor = rem[static_cast<std::size_t>(p)] / den.back();
    quot[static_cast<std::size_t>(p - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(p - dd + j)] -= factor * den[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {to_integer(std::move(quot), "polynomial division quotient"),
          to_integer(std::move(rem), "polynomial division remainder")};
}

IntPolynomial divide_exact(const IntPolynomial& numerator_poly, const IntPolynomial& denominator_poly,
                           const char* what) {
  auto [q, r] = divide(numerator_poly, denominator_poly);
  if (!r.is_zero()) throw ConsistencyError(std::string(what) + ": nonzero remainder " + r.to_string());
  return q;
}

IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate: mismatched or empty samples");
  const std::size_t count = xs.size();

  // Newton divided differences, then expansion of the nested form.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i) {
      const BigInt span = xs[i] - xs[i - level];
      if (span == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / Rational(span);
    }

  std::vector<Rational> coeffs{dd[count - 1]};
  for (std::size_t i = count - 1; i-- > 0;) {
    // coeffs := coeffs·(λ − xs[i]) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * Rational(xs[i]);
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return to_integer(std::move(coeffs), "interpolation");
}

}  // namespace signedspec
