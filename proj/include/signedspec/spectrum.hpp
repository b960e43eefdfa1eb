#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signedspec/numeric.hpp"
#include "signedspec/signed_graph.hpp"

namespace signedspec {

// One eigenvalue in the most exact form available. Constructors canonicalise:
// a cosine or surd whose value is an integer is stored as an integer, so two
// exact values are equal iff exactly_equals() says so (within one kind).
class Eigenvalue {
 public:
  enum class Kind { Integer, Cosine, Surd, Numeric };

  static Eigenvalue integer(const BigInt& v);
  /// 2·cos(π·num/den), den > 0.
  static Eigenvalue cosine(long long num, long long den);
  /// (p + sign·√q)/2 with q ≥ 0 and sign ±1.
  static Eigenvalue surd(const BigInt& p, int sign, const BigInt& q);
  /// Certified enclosure lo ≤ λ ≤ hi.
  static Eigenvalue numeric(double lo, double hi);

  Kind kind() const noexcept { return kind_; }
  double value() const;
  double lower() const;
  double upper() const;

  const BigInt& integer_value() const;
  /// Reduced angle num/den in [0, 1] (units of π) for Kind::Cosine.
  std::pair<long long, long long> angle() const;
  /// (p, sign, q) for Kind::Surd.
  std::tuple<BigInt, int, BigInt> surd_parts() const;

  /// Exact equality for exact kinds; numeric values never compare equal.
  bool exactly_equals(const Eigenvalue& other) const;

  /// "exact_integer", "cosine", "quadratic_surd" or "numeric".
  std::string kind_name() const;
  /// Symbolic form, e.g. "-2", "2cos(2π/5)", "(1+√5)/2", "[1.61803, 1.61803]".
  std::string form() const;

 private:
  Kind kind_ = Kind::Integer;
  BigInt a_;          // integer value | surd p
  BigInt b_;          // surd q
  long long num_ = 0; // cosine angle numerator | surd sign
  long long den_ = 1;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

struct SpectrumEntry {
  Eigenvalue value;
  int multiplicity = 0;
};

// Multiset of eigenvalues, kept sorted by decreasing value.
class Spectrum {
 public:
  /// Adds `multiplicity` copies; merges with an exactly equal entry.
  /// Zero multiplicity is a no-op, negative throws.
  void add(const Eigenvalue& value, int multiplicity = 1);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  int size() const noexcept;
  /// Every eigenvalue repeated by multiplicity, descending.
  std::vector<double> expanded() const;
  double trace() const;
  double trace_of_squares() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Numeric eigenvalues of the adjacency matrix (Eigen's symmetric solver).
/// Values within 1e-8 are grouped; every eigenpair is certified by
/// ‖Ax − λx‖ ≤ 1e-9·‖A‖, otherwise ConsistencyError.
Spectrum adjacency_eigenvalues_numeric(const SignedGraph& g);

struct SpectrumComparison {
  bool matches = false;
  double max_value_error = 0.0;
  std::string detail;
};

/// Sorted values agree within `tolerance` and multiplicities agree exactly.
SpectrumComparison compare_spectra(const Spectrum& closed_form, const Spectrum& numeric, double tolerance = 1e-9);

/// Multiplicities sum to n, Σλ = 0 and Σλ² = 2|E| within `tolerance`.
/// Returns a description of the first violation.
std::optional<std::string> spectrum_invariant_violation(const Spectrum& s, int n, std::size_t edge_count,
                                                        double tolerance = 1e-9);

}  // namespace signedspec
