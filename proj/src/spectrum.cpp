#include "signedspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

namespace signedspec {

Eigenvalue Eigenvalue::integer(const BigInt& v) {
  Eigenvalue e;
  e.kind_ = Kind::Integer;
  e.a_ = v;
  return e;
}

Eigenvalue Eigenvalue::cosine(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("cosine eigenvalue needs a positive angle denominator");
  // Reduce the angle num/den (mod 2) into [0, 1]; cos is even and 2-periodic in units of π.
  long long a = num % (2 * den);
  if (a < 0) a += 2 * den;
  if (a > den) a = 2 * den - a;
  const long long g = std::gcd(a, den);
  a /= g;
  const long long b = den / g;
  // Rational values of 2cos(qπ) are exactly 0, ±1, ±2.
  if (b == 1) return integer(a == 0 ? 2 : -2);
  if (b == 2) return integer(0);
  if (b == 3) return integer(a == 1 ? 1 : -1);
  Eigenvalue e;
  e.kind_ = Kind::Cosine;
  e.num_ = a;
  e.den_ = b;
  return e;
}

Eigenvalue Eigenvalue::surd(const BigInt& p, int sign, const BigInt& q) {
  if (q < 0) throw std::invalid_argument("quadratic surd needs a nonnegative radicand");
  if (sign != 1 && sign != -1) throw std::invalid_argument("quadratic surd sign must be ±1");
  const BigInt root = boost::multiprecision::sqrt(q);
  if (root * root == q) {
    const BigInt twice = p + sign * root;
    if (twice % 2 != 0) throw std::invalid_argument("quadratic surd is a non-integer rational, not an eigenvalue");
    return integer(twice / 2);
  }
  Eigenvalue e;
  e.kind_ = Kind::Surd;
  e.a_ = p;
  e.b_ = q;
  e.num_ = sign;
  return e;
}

Eigenvalue Eigenvalue::numeric(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("numeric eigenvalue enclosure is empty");
  Eigenvalue e;
  e.kind_ = Kind::Numeric;
  e.lo_ = lo;
  e.hi_ = hi;
  return e;
}

double Eigenvalue::value() const {
  switch (kind_) {
    case Kind::Integer:
      return a_.convert_to<double>();
    case Kind::Cosine:
      return 2.0 * std::cos(std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
    case Kind::Surd:
      return (a_.convert_to<double>() + static_cast<double>(num_) * std::sqrt(b_.convert_to<double>())) / 2.0;
    case Kind::Numeric:
      return lo_ + (hi_ - lo_) / 2.0;
  }
  return 0.0;
}

double Eigenvalue::lower() const { return kind_ == Kind::Numeric ? lo_ : value(); }
double Eigenvalue::upper() const { return kind_ == Kind::Numeric ? hi_ : value(); }

const BigInt& Eigenvalue::integer_value() const {
  if (kind_ != Kind::Integer) throw std::logic_error("eigenvalue is not an exact integer");
  return a_;
}

std::pair<long long, long long> Eigenvalue::angle() const {
  if (kind_ != Kind::Cosine) throw std::logic_error("eigenvalue is not in cosine form");
  return {num_, den_};
}

std::tuple<BigInt, int, BigInt> Eigenvalue::surd_parts() const {
  if (kind_ != Kind::Surd) throw std::logic_error("eigenvalue is not a quadratic surd");
  return {a_, static_cast<int>(num_), b_};
}

bool Eigenvalue::exactly_equals(const Eigenvalue& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Integer:
      return a_ == other.a_;
    case Kind::Cosine:
      return num_ == other.num_ && den_ == other.den_;
    case Kind::Surd:
      return a_ == other.a_ && b_ == other.b_ && num_ == other.num_;
    case Kind::Numeric:
      return false;
  }
  return false;
}

std::string Eigenvalue::kind_name() const {
  switch (kind_) {
    case Kind::Integer:
      return "exact_integer";
    case Kind::Cosine:
      return "cosine";
    case Kind::Surd:
      return "quadratic_surd";
    case Kind::Numeric:
      return "numeric";
  }
  return "";
}

std::string Eigenvalue::form() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Integer:
      os << a_;
      break;
    case Kind::Cosine:
      os << "2cos(";
      if (num_ != 1) os << num_;
      os << "π/" << den_ << ')';
      break;
    case Kind::Surd:
      os << '(' << a_ << (num_ > 0 ? "+" : "-") << "√" << b_ << ")/2";
      break;
    case Kind::Numeric:
      os.precision(17);
      os << '[' << lo_ << ", " << hi_ << ']';
      break;
  }
  return os.str();
}

void Spectrum::add(const Eigenvalue& value, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative eigenvalue multiplicity");
  if (multiplicity == 0) return;
  for (auto& entry : entries_)
    if (entry.value.exactly_equals(value)) {
      entry.multiplicity += multiplicity;
      return;
    }
  const double v = value.value();
  auto pos = std::find_if(entries_.begin(), entries_.end(),
                          [v](const SpectrumEntry& e) { return e.value.value() < v; });
  entries_.insert(pos, SpectrumEntry{value, multiplicity});
}

int Spectrum::size() const noexcept {
  int total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value.value());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double Spectrum::trace() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.multiplicity * e.value.value();
  return t;
}

double Spectrum::trace_of_squares() const {
  double t = 0.0;
  for (const auto& e : entries_) {
    const double v = e.value.value();
    t += e.multiplicity * v * v;
  }
  return t;
}

Spectrum adjacency_eigenvalues_numeric(const SignedGraph& g) {
  constexpr double kGroupTolerance = 1e-8;
  constexpr double kResidualFactor = 1e-9;

  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(e.u - 1, e.v - 1) = e.sign;
    a(e.v - 1, e.u - 1) = e.sign;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver did not converge");

  const Eigen::VectorXd& values = solver.eigenvalues();
  const double norm = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::vector<std::pair<double, double>> pairs;  // (value, residual bound)
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd x = solver.eigenvectors().col(i);
    const double residual = (a * x - values(i) * x).norm() / x.norm();
    if (residual > kResidualFactor * norm)
      throw ConsistencyError("eigenpair residual " + std::to_string(residual) + " exceeds certification bound");
    pairs.emplace_back(values(i), residual);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  Spectrum s;
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::size_t j = i + 1;
    while (j < pairs.size() && pairs[j - 1].first - pairs[j].first <= kGroupTolerance) ++j;
    double lo = pairs[i].first;
    double hi = pairs[i].first;
    for (std::size_t t = i; t < j; ++t) {
      lo = std::min(lo, pairs[t].first - pairs[t].second);
      hi = std::max(hi, pairs[t].first + pairs[t].second);
    }
    s.add(Eigenvalue::numeric(lo, hi), static_cast<int>(j - i));
    i = j;
  }
  return s;
}

SpectrumComparison compare_spectra(const Spectrum& closed_form, const Spectrum& numeric, double tolerance) {
  SpectrumComparison out;
  const auto a = closed_form.expanded();
  const auto b = numeric.expanded();
  std::ostringstream detail;
  if (a.size() != b.size()) {
    detail << "sizes differ: " << a.size() << " vs " << b.size();
    out.detail = detail.str();
    return out;
  }
  for (std::size_t i = 0; i < a.size(); ++i) out.max_value_error = std::max(out.max_value_error, std::abs(a[i] - b[i]));
  if (out.max_value_error > tolerance) {
    detail << "max eigenvalue error " << out.max_value_error << " exceeds " << tolerance;
    out.detail = detail.str();
    return out;
  }
  if (closed_form.entries().size() != numeric.entries().size()) {
    detail << "distinct eigenvalue counts differ: " << closed_form.entries().size() << " vs "
           << numeric.entries().size();
    out.detail = detail.str();
    return out;
  }
  for (std::size_t i = 0; i < closed_form.entries().size(); ++i) {
    const auto& x = closed_form.entries()[i];
    const auto& y = numeric.entries()[i];
    if (x.multiplicity != y.multiplicity || std::abs(x.value.value() - y.value.value()) > tolerance) {
      detail << "eigenvalue " << x.value.form() << " has multiplicity " << x.multiplicity << ", numeric has "
             << y.multiplicity << " at " << y.value.value();
      out.detail = detail.str();
      return out;
    }
  }
  out.matches = true;
  return out;
}

std::optional<std::string> spectrum_invariant_violation(const Spectrum& s, int n, std::size_t edge_count,
                                                        double tolerance) {
  std::ostringstream os;
  if (s.size() != n) {
    os << "multiplicities sum to " << s.size() << ", expected " << n;
    return os.str();
  }
  if (std::abs(s.trace()) > tolerance) {
    os << "trace " << s.trace() << " is not zero";
    return os.str();
  }
  const double expected = 2.0 * static_cast<double>(edge_count);
  if (std::abs(s.trace_of_squares() - expected) > tolerance) {
    os << "sum of squares " << s.trace_of_squares() << ", expected " << expected;
    return os.str();
  }
  return std::nullopt;
}

}  // namespace signedspec
