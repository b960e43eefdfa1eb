#pragma once

#include <string>
#include <vector>

#include "signedspec/numeric.hpp"

namespace signedspec {

// Polynomial in λ with exact integer coefficients; coeffs()[i] multiplies λ^i.
// The highest stored coefficient is never zero; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, unsigned power);
  /// c0 + c1·λ
  static IntPolynomial linear(const BigInt& c0, const BigInt& c1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t power) const;
  BigInt leading() const;

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  IntPolynomial derivative() const;
  IntPolynomial pow(unsigned exponent) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& b) { return a *= b; }
  friend IntPolynomial operator*(const BigInt& b, IntPolynomial a) { return a *= b; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Human-readable form in λ, highest power first, e.g. "-λ^3 + 3λ + 2".
  std::string to_string() const;
  /// Decimal coefficient strings, ascending powers.
  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division over the rationals. Throws ConsistencyError when the quotient
/// or remainder would have non-integer coefficients, and std::invalid_argument
/// on division by the zero polynomial.
PolynomialDivision divide(const IntPolynomial& numerator, const IntPolynomial& denominator);

/// Quotient of a division that must be exact; a nonzero remainder is a
/// ConsistencyError carrying `what`.
IntPolynomial divide_exact(const IntPolynomial& numerator, const IntPolynomial& denominator,
                           const char* what);

/// Unique polynomial of degree ≤ xs.size()-1 through the points (xs[i], ys[i]),
/// required to have integer coefficients.
IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

}  // namespace signedspec
