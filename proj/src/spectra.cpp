#include "signedspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "signedspec/charpoly.hpp"
#include "signedspec/roots.hpp"

namespace signedspec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr int kBisectionSteps = 200;
constexpr double kResidualTolerance = 1e-9;

IntPolynomial shift(long long c) { return IntPolynomial::linear(c, -1); }

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// One root of `p` in (lo, hi], where p(lo) and p(hi) are nonzero with opposite signs.
SecularRoot bisect(const IntPolynomial& p, Rational lo, Rational hi) {
  const int sign_lo = sign_of(p.evaluate(lo));
  if (sign_lo == 0 || sign_lo == sign_of(p.evaluate(hi)))
    throw ConsistencyError("secular root bracket does not change sign");
  const Rational width = default_root_width();
  for (int step = 0; step < kBisectionSteps && hi - lo > width; ++step) {
    const Rational mid = (lo + hi) / 2;
    const int s = sign_of(p.evaluate(mid));
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s == sign_lo ? lo : hi) = mid;
  }
  SecularRoot root{lo, hi, std::nullopt};
  const BigInt first = numerator(lo) / denominator(lo) - 1;
  for (BigInt c = first; Rational(c) <= hi; ++c)
    if (Rational(c) >= lo && p.evaluate(c) == 0) {
      root = {Rational(c), Rational(c), c};
      break;
    }
  return root;
}

// Exact reduced row echelon form; returns a basis of the null space.
std::vector<std::vector<Rational>> null_space(RationalMatrix m) {
  const int n = m.order();
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = row;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    for (int j = 0; j < n; ++j) std::swap(m(row, j), m(pivot, j));
    const Rational lead = m(row, col);
    for (int j = 0; j < n; ++j) m(row, j) /= lead;
    for (int i = 0; i < n; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = -m(static_cast<int>(r), free);
    // First nonzero coefficient positive.
    const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (*lead < 0)
      for (auto& x : v) x = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix quotient_shifted(const CliqueProfile& profile, const Rational& lambda) {
  const auto& n = profile.orders();
  const int k = profile.clique_count();
  RationalMatrix out(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out(i, j) = i == j ? Rational(-n[static_cast<std::size_t>(i)]) - lambda : Rational(n[static_cast<std::size_t>(j)]);
  return out;
}

// Interval comparisons that are certified by the enclosures.
struct Enclosure {
  Rational lo;
  Rational hi;
  std::string label;
};

Enclosure enclose(const SecularRoot& r, const std::string& label) { return {r.lower, r.upper, label}; }
Enclosure enclose(long long v, const std::string& label) { return {Rational(v), Rational(v), label}; }

std::string describe(const Enclosure& e) {
  std::ostringstream os;
  os << e.label << " = ";
  if (e.lo == e.hi)
    os << e.lo;
  else
    os << Rational((e.lo + e.hi) / 2).convert_to<double>();
  return os.str();
}

}  // namespace

Spectrum eigenvalues_cycle(int n, int delta) {
  validate(CycleSpec{n, delta});
  Spectrum s;
  for (int k = 1; k <= n; ++k) s.add(Eigenvalue::cosine(delta > 0 ? 2LL * k : 1LL + 2LL * k, n));
  return s;
}

Spectrum eigenvalues_path(int n) {
  validate(PathSpec{n, {}});
  Spectrum s;
  for (int k = 1; k <= n; ++k) s.add(Eigenvalue::cosine(k, n + 1LL));
  return s;
}

Spectrum eigenvalues_kmr_full(int m, int r) {
  validate(KmrSpec{m * r, m, r});
  Spectrum s;
  s.add(Eigenvalue::integer(1), m * (r - 1));
  s.add(Eigenvalue::integer(1 - 2 * r), m - 1);
  s.add(Eigenvalue::integer(1 + r * (m - 2)), 1);
  return s;
}

Spectrum eigenvalues_kmr_general(int n, int m, int r) {
  validate(KmrSpec{n, m, r});
  if (n <= m * r) throw std::invalid_argument("eigenvalues_kmr_general needs n > m*r; use eigenvalues_kmr_full");
  const BigInt p = n - 2 * r;
  const BigInt q = BigInt(8) * m * r - 8 * r - 4 * n - BigInt(8) * m * r * r + 4 + BigInt(n + 2 * r) * (n + 2 * r);
  Spectrum s;
  s.add(Eigenvalue::integer(1), m * (r - 1));
  s.add(Eigenvalue::integer(1 - 2 * r), m - 1);
  s.add(Eigenvalue::surd(p, 1, q), 1);
  s.add(Eigenvalue::surd(p, -1, q), 1);
  // The rational factor of the characteristic polynomial reduces to −(λ + 1).
  s.add(Eigenvalue::integer(-1), n - m * r - 1);
  return s;
}

IntPolynomial star_block_residual(int r, int k, int l) {
  const IntPolynomial phi = charpoly_star_block(r, k, l);
  const int ones = std::max(0, (r - 2) * (l - 1));
  const int two_minus_r = std::max(0, l - 1);
  const int minus_ones = std::max(0, (r - 2) * (k - l - 1));
  const int r_minus_two = std::max(0, k - l - 1);
  const IntPolynomial stated = shift(1).pow(static_cast<unsigned>(ones)) *
                               shift(2 - r).pow(static_cast<unsigned>(two_minus_r)) *
                               shift(-1).pow(static_cast<unsigned>(minus_ones)) *
                               shift(r - 2).pow(static_cast<unsigned>(r_minus_two));
  return divide_exact(phi, stated, "star block stated eigenvalues");
}

Spectrum eigenvalues_star_block(int r, int k, int l) {
  validate(StarBlockSpec{r, k, l});
  Spectrum s;
  s.add(Eigenvalue::integer(1), std::max(0, (r - 2) * (l - 1)));
  s.add(Eigenvalue::integer(2 - r), std::max(0, l - 1));
  s.add(Eigenvalue::integer(-1), std::max(0, (r - 2) * (k - l - 1)));
  s.add(Eigenvalue::integer(r - 2), std::max(0, k - l - 1));
  for (const RealRoot& root : real_roots(star_block_residual(r, k, l))) {
    if (root.exact)
      s.add(Eigenvalue::integer(*root.exact), root.multiplicity);
    else
      s.add(Eigenvalue::numeric(root.lower.convert_to<double>(), root.upper.convert_to<double>()), root.multiplicity);
  }
  if (s.size() != k * (r - 1) + 1) throw ConsistencyError("star block residual has non-real roots");
  return s;
}

Spectrum eigenvalues_closed(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const CycleSpec& s) { return eigenvalues_cycle(s.n, s.delta); },
                        [](const PathSpec& s) { return eigenvalues_path(s.n); },
                        [](const KmrSpec& s) {
                          return s.n == s.m * s.r ? eigenvalues_kmr_full(s.m, s.r)
                                                  : eigenvalues_kmr_general(s.n, s.m, s.r);
                        },
                        [](const MixedSpec& s) { return secular_solve(SecularProblem(s.profile)); },
                        [](const StarBlockSpec& s) { return eigenvalues_star_block(s.r, s.k, s.l); },
                    },
                    spec);
}

SecularProblem::SecularProblem(CliqueProfile profile)
    : profile_(std::move(profile)), distinct_(profile_.distinct()), counts_(profile_.counts()) {
  IntPolynomial all = IntPolynomial::constant(1);
  for (int d : distinct_) all *= shift(-2 * d);
  secular_ = all;
  for (std::size_t i = 0; i < distinct_.size(); ++i) {
    IntPolynomial term = IntPolynomial::constant(counts_[i] * distinct_[i]);
    for (std::size_t j = 0; j < distinct_.size(); ++j)
      if (j != i) term *= shift(-2 * distinct_[j]);
    secular_ += term;
  }
}

double SecularProblem::p(double lambda) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < distinct_.size(); ++i)
    sum += counts_[i] * distinct_[i] / (-2.0 * distinct_[i] - lambda);
  return sum;
}

double SecularRoot::value() const {
  if (exact) return exact->convert_to<double>();
  return Rational((lower + upper) / 2).convert_to<double>();
}

std::vector<SecularRoot> secular_roots(const SecularProblem& problem) {
  const auto& d = problem.distinct();
  std::vector<SecularRoot> roots;
  // 1 + p(λ) > 0 at λ = n, so the largest root lies in (−2n̄_1, n).
  roots.push_back(bisect(problem.secular_polynomial(), Rational(-2 * d[0]), Rational(problem.profile().vertex_count())));
  for (std::size_t i = 1; i < d.size(); ++i)
    roots.push_back(bisect(problem.secular_polynomial(), Rational(-2 * d[i]), Rational(-2 * d[i - 1])));
  return roots;
}

Spectrum secular_solve(const SecularProblem& problem) {
  const auto& prof = problem.profile();
  Spectrum s;
  s.add(Eigenvalue::integer(1), prof.vertex_count() - prof.clique_count());
  for (std::size_t i = 0; i < problem.distinct().size(); ++i)
    s.add(Eigenvalue::integer(1 - 2 * problem.distinct()[i]), problem.counts()[i] - 1);
  for (const SecularRoot& root : secular_roots(problem)) {
    if (root.exact)
      s.add(Eigenvalue::integer(*root.exact + 1));
    else
      s.add(Eigenvalue::numeric(Rational(root.lower + 1).convert_to<double>(),
                                Rational(root.upper + 1).convert_to<double>()));
  }
  return s;
}

std::vector<SecularRoot> quotient_eigenvalues(const SecularProblem& problem) {
  std::vector<SecularRoot> out = secular_roots(problem);
  for (std::size_t i = 0; i < problem.distinct().size(); ++i) {
    const BigInt pole = -2 * problem.distinct()[i];
    for (int c = 1; c < problem.counts()[i]; ++c) out.push_back({Rational(pole), Rational(pole), pole});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SecularRoot& a, const SecularRoot& b) { return a.value() > b.value(); });
  return out;
}

std::vector<double> BlockEigenvector::expand(const CliqueProfile& profile) const {
  std::vector<double> x;
  for (std::size_t i = 0; i < profile.orders().size(); ++i)
    x.insert(x.end(), static_cast<std::size_t>(profile.orders()[i]), coefficients[i]);
  return x;
}

std::vector<BlockEigenvector> block_eigenspace(const SecularProblem& problem, const Rational& lambda) {
  if (lambda == 0)
    throw std::invalid_argument("λ = 0: eigenvectors of A(G) − I for 0 sum to zero on each block, not block-constant");
  const auto basis = null_space(quotient_shifted(problem.profile(), lambda));
  if (basis.empty()) throw std::invalid_argument("λ is not an eigenvalue of A(G) − I: N_λ is nonsingular");
  std::vector<BlockEigenvector> out;
  for (const auto& alpha : basis) {
    BlockEigenvector v;
    v.shifted_eigenvalue = lambda.convert_to<double>();
    v.exact_shifted_eigenvalue = lambda;
    for (const auto& a : alpha) v.coefficients.push_back(a.convert_to<double>());
    v.exact_coefficients = alpha;
    out.push_back(std::move(v));
  }
  return out;
}

BlockEigenvector block_eigenvector(const SecularProblem& problem, const Rational& lambda) {
  return block_eigenspace(problem, lambda).front();
}

BlockEigenvector block_eigenvector(const SecularProblem& problem, double lambda) {
  if (std::abs(lambda) <= kResidualTolerance)
    throw std::invalid_argument("λ = 0: eigenvectors of A(G) − I for 0 sum to zero on each block, not block-constant");
  const auto& n = problem.profile().orders();
  const int k = problem.profile().clique_count();
  Eigen::MatrixXd nl(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) nl(i, j) = i == j ? -n[static_cast<std::size_t>(i)] - lambda : n[static_cast<std::size_t>(j)];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(nl, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(k - 1) > kResidualTolerance * std::max(1.0, sv(0)))
    throw std::invalid_argument("λ is not an eigenvalue of A(G) − I: N_λ is nonsingular (smallest singular value " +
                                std::to_string(sv(k - 1)) + ")");
  Eigen::VectorXd alpha = svd.matrixV().col(k - 1);
  for (int i = 0; i < k; ++i)
    if (std::abs(alpha(i)) > 1e-12) {
      if (alpha(i) < 0) alpha = -alpha;
      break;
    }
  BlockEigenvector v;
  v.shifted_eigenvalue = lambda;
  v.coefficients.assign(alpha.data(), alpha.data() + k);
  if (block_eigenvector_residual(problem, v) > kResidualTolerance)
    throw ConsistencyError("block eigenvector residual exceeds 1e-9");
  return v;
}

double block_eigenvector_residual(const SecularProblem& problem, const BlockEigenvector& v) {
  const SignedGraph g = build_mixed_cliques(problem.profile());
  const std::vector<double> x = v.expand(problem.profile());
  const int n = g.order();
  double residual = 0.0;
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double ax = 0.0;
    for (int j = 0; j < n; ++j) ax += g.sign(i + 1, j + 1) * x[static_cast<std::size_t>(j)];
    const double r = ax - (v.shifted_eigenvalue + 1.0) * x[static_cast<std::size_t>(i)];
    residual += r * r;
    norm += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  }
  return std::sqrt(residual) / std::sqrt(norm);
}

double pairwise_relation_defect(const SecularProblem& problem, const BlockEigenvector& v) {
  const auto& n = problem.profile().orders();
  const double lambda = v.shifted_eigenvalue;
  double worst = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) {
      const double lhs = lambda * (v.coefficients[i] - v.coefficients[j]);
      const double rhs = 2.0 * (n[j] * v.coefficients[j] - n[i] * v.coefficients[i]);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  return worst;
}

bool pairwise_relation_exact(const SecularProblem& problem, const BlockEigenvector& v) {
  if (!v.exact_coefficients || !v.exact_shifted_eigenvalue)
    throw std::invalid_argument("exact pairwise check needs an exactly computed eigenvector");
  const auto& n = problem.profile().orders();
  const auto& a = *v.exact_coefficients;
  const Rational& lambda = *v.exact_shifted_eigenvalue;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      if (lambda * (a[i] - a[j]) != 2 * (n[j] * a[j] - n[i] * a[i])) return false;
  return true;
}

InterlacingReport interlacing_check(const SecularProblem& problem) {
  InterlacingReport report;
  auto compare = [&report](const Enclosure& a, const Enclosure& b, bool strict) {
    const bool ok = strict ? a.lo > b.hi : a.lo >= b.hi;
    report.comparisons.push_back(describe(a) + (strict ? " > " : " >= ") + describe(b) + (ok ? "  ok" : "  FAILED"));
    return ok;
  };

  const auto roots = secular_roots(problem);
  const auto& d = problem.distinct();
  std::vector<Enclosure> strict_chain;
  for (std::size_t i = 0; i < d.size(); ++i) {
    strict_chain.push_back(enclose(roots[i], "λ*_" + std::to_string(i + 1)));
    strict_chain.push_back(enclose(-2LL * d[i], "-2n̄_" + std::to_string(i + 1)));
  }
  report.strict_chain = true;
  for (std::size_t i = 0; i + 1 < strict_chain.size(); ++i)
    report.strict_chain = compare(strict_chain[i], strict_chain[i + 1], true) && report.strict_chain;

  const auto mu = quotient_eigenvalues(problem);
  const auto& orders = problem.profile().orders();
  std::vector<Enclosure> weak_chain;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    weak_chain.push_back(enclose(mu[i], "μ_" + std::to_string(i + 1)));
    weak_chain.push_back(enclose(-2LL * orders[i], "-2n_" + std::to_string(i + 1)));
  }
  report.weak_chain = true;
  for (std::size_t i = 0; i + 1 < weak_chain.size(); ++i)
    report.weak_chain = compare(weak_chain[i], weak_chain[i + 1], false) && report.weak_chain;
  return report;
}

bool cycle_symmetry_check(int n) {
  const auto lambda = eigenvalues_cycle(n, 1).expanded();
  const auto beta = eigenvalues_cycle(n, -1).expanded();
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const std::size_t mirror = lambda.size() - 1 - i;
    const double lhs = std::abs(lambda[i] - beta[i]);
    const double rhs = std::abs(lambda[mirror] - beta[mirror]);
    if (std::abs(lhs - rhs) > 1e-9) return false;
  }
  return true;
}

}  // namespace signedspec
