#include "signedspec/sweep.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "signedspec/balance.hpp"
#include "signedspec/charpoly.hpp"
#include "signedspec/oracle.hpp"
#include "signedspec/spectra.hpp"
#include "signedspec/spectrum.hpp"

namespace signedspec {

namespace {

constexpr int kCoatesSweepOrder = 8;
constexpr int kMixedCharpolyOrder = 8;
constexpr int kProfileOrder = 10;
constexpr double kTolerance = 1e-9;

class Recorder {
 public:
  explicit Recorder(SweepReport& report) : report_(report) {}

  // `body` returns an empty string on success, otherwise the failure detail.
  void check(const std::string& instance, const std::string& name, const std::function<std::string()>& body) {
    SweepCheck c{instance, name, false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  SweepReport& report_;
};

std::string mismatch(const IntPolynomial& a, const IntPolynomial& b) {
  if (a == b) return {};
  return a.to_string() + " vs " + b.to_string();
}

std::string mismatch(const BigInt& a, const BigInt& b) {
  if (a == b) return {};
  return a.str() + " vs " + b.str();
}

void partitions(int remaining, int min_part, std::vector<int>& current, std::vector<CliqueProfile>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

bool is_kind(const FamilySpec& spec, const char* name) { return family_name(spec) == name; }

void check_family(Recorder& rec, const FamilySpec& spec, const SweepOptions& options) {
  const std::string label = instance_label(spec);
  const SignedGraph g = build_family(spec);
  const IntPolynomial exact = charpoly_exact(g);
  const bool mixed = std::holds_alternative<MixedSpec>(spec);

  if (!mixed || g.order() <= kMixedCharpolyOrder) {
    rec.check(label, "closed_form_charpoly", [&] {
      IntPolynomial closed = charpoly_closed(spec);
      if (options.inject_fault && *options.inject_fault == family_name(spec)) closed += IntPolynomial::constant(1);
      return mismatch(closed, exact);
    });
    rec.check(label, "determinant", [&] {
      const BigInt closed = determinant_closed(spec);
      if (auto m = mismatch(closed, exact.coeff(0)); !m.empty()) return "closed vs engine: " + m;
      if (auto m = mismatch(closed, det_bareiss(g.adjacency())); !m.empty()) return "closed vs Bareiss: " + m;
      return std::string{};
    });
  }
  if (g.order() <= kCoatesSweepOrder) {
    rec.check(label, "coates_charpoly", [&] { return mismatch(charpoly_coates(g), exact); });
    rec.check(label, "coates_determinant", [&] { return mismatch(det_coates(g.adjacency()), det_bareiss(g.adjacency())); });
  }
  rec.check(label, "spectrum_vs_numeric", [&] {
    const Spectrum closed = eigenvalues_closed(spec);
    if (auto v = spectrum_invariant_violation(closed, g.order(), g.edge_count())) return *v;
    const SpectrumComparison cmp = compare_spectra(closed, adjacency_eigenvalues_numeric(g));
    return cmp.matches ? std::string{} : cmp.detail;
  });

  if (const auto* k = std::get_if<KmrSpec>(&spec); k && k->n > k->m * k->r) {
    rec.check(label, "eigenvalue_product", [&] {
      double product = 1.0;
      for (double v : eigenvalues_kmr_general(k->n, k->m, k->r).expanded()) product *= v;
      const double det = determinant_closed(spec).convert_to<double>();
      if (std::abs(product - det) <= 1e-6 * std::max(1.0, std::abs(det))) return std::string{};
      return "product " + std::to_string(product) + " vs determinant " + std::to_string(det);
    });
  }

  if (is_kind(spec, "kmr") || is_kind(spec, "mixed") || is_kind(spec, "star")) {
    rec.check(label, "negated_weakly_balanced", [&] {
      const SignedGraph neg = negate(g);
      const BalanceCertificate cert = is_weakly_balanced(neg);
      if (!cert.verdict) return std::string("negated graph is not weakly balanced");
      if (!partition_certifies(neg, *cert.partition)) return std::string("partition fails the edge scan");
      return std::string{};
    });
  }

  if (const auto* c = std::get_if<CycleSpec>(&spec)) {
    rec.check(label, "balance_verdict", [&] {
      const BalanceCertificate cert = is_balanced(g);
      if (cert.verdict != (c->delta == 1)) return std::string("verdict disagrees with delta");
      if (cert.verdict) return partition_certifies(g, *cert.partition) ? std::string{} : "partition fails the edge scan";
      return cycle_sign(g, *cert.witness_cycle) == -1 ? std::string{} : "witness cycle is positive";
    });
    if (c->delta == 1)
      rec.check(label, "negated_weakly_balanced", [&] {
        const BalanceCertificate cert = is_weakly_balanced(negate(g));
        return cert.verdict && partition_certifies(negate(g), *cert.partition) ? std::string{}
                                                                               : "negated balanced cycle rejected";
      });
  }
}

void check_matchings(Recorder& rec, int max_n) {
  for (int n = 3; n <= std::min(12, max_n); ++n)
    for (int delta : {1, -1}) {
      const SignedGraph g = build_cycle(n, delta);
      rec.check("cycle " + std::to_string(n) + " " + std::to_string(delta), "matchings", [&] {
        for (int k = 0; k <= n / 2; ++k)
          if (auto m = mismatch(count_matchings(g, k), matching_count_formula(MatchingFamily::Cycle, n, k)); !m.empty())
            return "k=" + std::to_string(k) + ": " + m;
        return std::string{};
      });
    }
  for (int n = 1; n <= std::min(12, max_n); ++n) {
    const SignedGraph g = build_path(n);
    rec.check("path " + std::to_string(n), "matchings", [&] {
      for (int k = 0; k <= n / 2; ++k)
        if (auto m = mismatch(count_matchings(g, k), matching_count_formula(MatchingFamily::Path, n, k)); !m.empty())
          return "k=" + std::to_string(k) + ": " + m;
      return std::string{};
    });
  }
  // Matchings of C_n against linear subdigraphs made of 2-cycles and loops.
  for (int n = 3; n <= std::min(kCoatesMaxOrder, max_n); ++n) {
    const SignedGraph g = build_cycle(n, 1);
    rec.check("cycle " + std::to_string(n), "matching_subdigraph_bijection", [&] {
      SquareMatrix<char> support(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) support(i, j) = i == j || g.sign(i + 1, j + 1) != 0;
      std::map<int, BigInt> by_two_cycles;
      for_each_linear_subdigraph(support, [&](const LinearSubdigraph& l) {
        int two = 0;
        for (const auto& cycle : l.cycles) {
          if (cycle.size() > 2) return;
          two += cycle.size() == 2;
        }
        ++by_two_cycles[two];
      });
      for (int k = 0; k <= n / 2; ++k)
        if (auto m = mismatch(by_two_cycles[k], count_matchings(g, k)); !m.empty()) return "k=" + std::to_string(k) + ": " + m;
      return std::string{};
    });
  }
}

void check_cycles(Recorder& rec, int max_n) {
  for (int n = 3; n <= std::min(12, max_n); ++n) {
    const std::string label = "cycle " + std::to_string(n);
    rec.check(label, "symmetry_theorem", [&] { return cycle_symmetry_check(n) ? std::string{} : "identity fails"; });
    if (n % 2 == 0)
      rec.check(label, "even_antisymmetry", [&] {
        for (int delta : {1, -1}) {
          const auto v = eigenvalues_cycle(n, delta).expanded();
          for (std::size_t i = 0; i < v.size(); ++i)
            if (std::abs(v[i] + v[v.size() - 1 - i]) > kTolerance) return "delta " + std::to_string(delta);
        }
        return std::string{};
      });
    // The exception: one positive edge, the rest negative, negates to a cycle
    // with exactly one negative edge.
    rec.check(label, "negated_exception_not_weakly_balanced", [&] {
      std::vector<int> signs(static_cast<std::size_t>(n), -1);
      signs[0] = 1;
      const SignedGraph neg = negate(build_signed_cycle(signs));
      const BalanceCertificate cert = is_weakly_balanced(neg);
      if (cert.verdict) return std::string("accepted");
      int negatives = 0;
      const auto& w = *cert.witness_cycle;
      for (std::size_t i = 0; i < w.size(); ++i) negatives += neg.sign(w[i], w[(i + 1) % w.size()]) < 0;
      return negatives == 1 ? std::string{} : "witness has " + std::to_string(negatives) + " negative edges";
    });
  }
}

std::string profile_label(const CliqueProfile& p) {
  return instance_label(MixedSpec{p});
}

void check_profiles(Recorder& rec, int max_n) {
  for (const CliqueProfile& profile : profiles_up_to(std::min(kProfileOrder, max_n))) {
    const SecularProblem problem(profile);
    const std::string label = profile_label(profile);
    rec.check(label, "interlacing", [&] {
      const InterlacingReport r = interlacing_check(problem);
      if (r.holds()) return std::string{};
      std::string detail = r.strict_chain ? "weak chain:" : "strict chain:";
      for (const auto& c : r.comparisons)
        if (c.find("FAILED") != std::string::npos) detail += " " + c;
      return detail;
    });
    rec.check(label, "block_eigenvectors", [&] {
      for (const SecularRoot& mu : quotient_eigenvalues(problem)) {
        if (mu.exact && *mu.exact == 0) continue;
        if (mu.exact) {
          for (const BlockEigenvector& v : block_eigenspace(problem, Rational(*mu.exact))) {
            if (!pairwise_relation_exact(problem, v)) return "pairwise relation at " + mu.exact->str();
            if (block_eigenvector_residual(problem, v) > kTolerance) return "residual at " + mu.exact->str();
          }
        } else {
          const BlockEigenvector v = block_eigenvector(problem, mu.value());
          double scale = std::abs(mu.value());
          for (int n : profile.orders()) scale = std::max(scale, 2.0 * n);
          if (pairwise_relation_defect(problem, v) > kTolerance * scale)
            return "pairwise relation at " + std::to_string(mu.value());
          if (block_eigenvector_residual(problem, v) > kTolerance) return "residual at " + std::to_string(mu.value());
        }
      }
      return std::string{};
    });
    const auto& d = problem.distinct();
    if (d.size() == 1 && d[0] >= 2)
      rec.check(label, "secular_matches_kmr", [&] {
        const Spectrum a = secular_solve(problem);
        const Spectrum b = eigenvalues_kmr_full(problem.counts()[0], d[0]);
        if (a.entries().size() != b.entries().size()) return std::string("entry count differs");
        for (std::size_t i = 0; i < a.entries().size(); ++i)
          if (!a.entries()[i].value.exactly_equals(b.entries()[i].value) ||
              a.entries()[i].multiplicity != b.entries()[i].multiplicity)
            return "entry " + std::to_string(i) + " differs";
        return std::string{};
      });
  }
}

void check_resolvent(Recorder& rec) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  for (auto [m, r] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const std::string label = "kmr " + std::to_string(m * r) + " " + std::to_string(m) + " " + std::to_string(r);
    int done = 0;
    while (done < 5) {
      const Rational lambda(num(rng), den(rng));
      if (lambda == 1 || lambda == 1 - 2 * r || lambda == 1 + r * (m - 2)) continue;
      ++done;
      rec.check(label, "resolvent lambda=" + lambda.str(), [&] {
        const RationalMatrix product = resolvent_kmr_full(m, r, lambda) * shifted_kmr_adjacency(m, r, lambda);
        return product == RationalMatrix::identity(m * r) ? std::string{} : "M(A - λI) is not the identity";
      });
    }
  }
}

}  // namespace

bool SweepReport::passed() const { return failure_count() == 0; }

std::size_t SweepReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.passed;
  return n;
}

std::string SweepReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.instance << ' ' << c.check;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << checks.size() - failure_count() << '/' << checks.size() << " checks passed\n";
  return os.str();
}

std::vector<CliqueProfile> profiles_up_to(int max_total) {
  std::vector<CliqueProfile> out;
  std::vector<int> current;
  for (int n = 1; n <= max_total; ++n) partitions(n, 1, current, out);
  return out;
}

std::vector<FamilySpec> family_sweep(int max_n) {
  std::vector<FamilySpec> out;
  auto keep = [&](FamilySpec spec) {
    if (family_order(spec) <= max_n) out.push_back(std::move(spec));
  };
  for (int n = 3; n <= 12; ++n)
    for (int delta : {1, -1}) keep(CycleSpec{n, delta});
  for (int n = 1; n <= 12; ++n) keep(PathSpec{n, {}});
  for (int m = 1; m <= 3; ++m)
    for (int r = 2; r <= 3; ++r)
      for (int n = m * r; n <= m * r + 3; ++n) keep(KmrSpec{n, m, r});
  for (const CliqueProfile& p : profiles_up_to(std::min(max_n, kMixedCharpolyOrder))) keep(MixedSpec{p});
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 4; ++k)
      for (int l = 0; l <= k; ++l) keep(StarBlockSpec{r, k, l});
  return out;
}

std::string instance_label(const FamilySpec& spec) { return family_name(spec) + " " + family_parameters(spec); }

SweepReport run_sweep(const SweepOptions& options) {
  SweepReport report;
  Recorder rec(report);
  for (const FamilySpec& spec : family_sweep(options.max_n)) check_family(rec, spec, options);
  check_matchings(rec, options.max_n);
  check_cycles(rec, options.max_n);
  check_profiles(rec, options.max_n);
  check_resolvent(rec);
  return report;
}

}  // namespace signedspec
