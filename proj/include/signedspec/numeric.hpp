#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace signedspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an algebraic identity that must hold by construction fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense row-major square matrix, indices 0-based.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int order, const T& fill = T{})
      : order_(order), data_(static_cast<std::size_t>(order) * order, fill) {
    if (order < 0) throw std::invalid_argument("matrix order must be nonnegative");
  }

  int order() const noexcept { return order_; }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  static SquareMatrix identity(int order) {
    SquareMatrix m(order);
    for (int i = 0; i < order; ++i) m(i, i) = T{1};
    return m;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.order_ == b.order_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }

  int order_ = 0;
  std::vector<T> data_;
};

template <class T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix order mismatch");
  const int n = a.order();
  SquareMatrix<T> out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k) == T{0}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

using IntMatrix = SquareMatrix<BigInt>;
using RationalMatrix = SquareMatrix<Rational>;

BigInt binomial(int n, int k);

}  // namespace signedspec
