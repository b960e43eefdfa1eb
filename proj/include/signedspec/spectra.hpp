#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signedspec/families.hpp"
#include "signedspec/polynomial.hpp"
#include "signedspec/spectrum.hpp"

namespace signedspec {

Spectrum eigenvalues_cycle(int n, int delta);
/// 2cos(kπ/(n+1)), k = 1…n.
Spectrum eigenvalues_path(int n);
Spectrum eigenvalues_kmr_full(int m, int r);
/// n > mr: 1, 1−2r, the two roots of the quadratic factor and −1.
Spectrum eigenvalues_kmr_general(int n, int m, int r);
Spectrum eigenvalues_star_block(int r, int k, int l);
/// Dispatch; mixed cliques go through secular_solve.
Spectrum eigenvalues_closed(const FamilySpec& spec);

/// The factor of φ(star block) left after removing the stated eigenvalues
/// 1, 2−r, −1, r−2 (multiplicities clamped at zero).
IntPolynomial star_block_residual(int r, int k, int l);

// Complete graph covered by negative cliques, viewed through A(G) − I:
// p(λ) = Σ m_i n̄_i / (−2n̄_i − λ) over the distinct orders n̄_i.
class SecularProblem {
 public:
  explicit SecularProblem(CliqueProfile profile);

  const CliqueProfile& profile() const noexcept { return profile_; }
  const std::vector<int>& distinct() const noexcept { return distinct_; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  double p(double lambda) const;
  /// (1 + p(λ))·Π(−2n̄_i − λ); its roots are the secular roots.
  const IntPolynomial& secular_polynomial() const noexcept { return secular_; }

 private:
  CliqueProfile profile_;
  std::vector<int> distinct_;
  std::vector<int> counts_;
  IntPolynomial secular_;
};

// Root of 1 + p(λ) = 0 enclosed in [lower, upper]; exact when an integer.
struct SecularRoot {
  Rational lower;
  Rational upper;
  std::optional<BigInt> exact;

  double value() const;
};

/// The t roots λ*_1 > … > λ*_t, one per interval (−2n̄_1, n] and
/// (−2n̄_{i+1}, −2n̄_i), by bisection (≤ 200 steps, width ≤ 1e-12).
std::vector<SecularRoot> secular_roots(const SecularProblem& problem);

/// Spectrum of A(G): 1 (n−k), 1−2n̄_i (m_i−1), and λ*_i + 1.
Spectrum secular_solve(const SecularProblem& problem);

/// Eigenvalues of the k×k quotient matrix N (the block-constant eigenvalues
/// of A(G) − I), descending, each as an exact or certified enclosure.
std::vector<SecularRoot> quotient_eigenvalues(const SecularProblem& problem);

// Eigenvector of A(G) − I constant on every clique block.
struct BlockEigenvector {
  double shifted_eigenvalue = 0.0;                   // λ, eigenvalue of A(G) − I
  std::optional<Rational> exact_shifted_eigenvalue;  // set on the exact path
  std::vector<double> coefficients;                  // α_1 … α_k
  std::optional<std::vector<Rational>> exact_coefficients;

  /// X with the vertices of block i set to α_i.
  std::vector<double> expand(const CliqueProfile& profile) const;
};

/// Exact null vector of N_λ. Rejects λ = 0 and λ with N_λ nonsingular.
BlockEigenvector block_eigenvector(const SecularProblem& problem, const Rational& lambda);
/// Numeric null vector of N_λ via SVD; certified by the residual of the
/// expanded vector against A(G). Same rejections.
BlockEigenvector block_eigenvector(const SecularProblem& problem, double lambda);
/// Basis of the exact null space of N_λ (dimension m_i − 1 at λ = −2n̄_i).
std::vector<BlockEigenvector> block_eigenspace(const SecularProblem& problem, const Rational& lambda);

/// ‖A X − (λ+1) X‖ / ‖X‖ for the expanded vector.
double block_eigenvector_residual(const SecularProblem& problem, const BlockEigenvector& v);
/// max over i, j of |λ(α_i − α_j) − 2(n_j α_j − n_i α_i)|; exactly 0 on the exact path.
double pairwise_relation_defect(const SecularProblem& problem, const BlockEigenvector& v);
/// Exact check of the pairwise relation (requires exact coefficients).
bool pairwise_relation_exact(const SecularProblem& problem, const BlockEigenvector& v);

struct InterlacingReport {
  bool strict_chain = false;  // λ*_1 > −2n̄_1 > λ*_2 > … > λ*_t > −2n̄_t
  bool weak_chain = false;    // μ_1 ≥ −2n_1 ≥ μ_2 ≥ … ≥ μ_k ≥ −2n_k
  std::vector<std::string> comparisons;

  bool holds() const noexcept { return strict_chain && weak_chain; }
};

InterlacingReport interlacing_check(const SecularProblem& problem);

/// |λ_i − β_i| = |λ_{n−i+1} − β_{n−i+1}| for balanced (λ) and unbalanced (β)
/// cycle spectra sorted descending, within 1e-9.
bool cycle_symmetry_check(int n);

}  // namespace signedspec
