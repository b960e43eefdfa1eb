#include "signedspec/families.hpp"

#include <algorithm>
#include <sstream>

namespace signedspec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw GraphError(message);
}

void require_sign(int s, const char* what) {
  require(s == 1 || s == -1, std::string(what) + " must be +1 or -1, got " + std::to_string(s));
}

// Complete graph on n vertices where two vertices share a negative edge iff
// they carry the same nonnegative block id.
SignedGraph complete_with_blocks(int n, const std::vector<int>& block) {
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const int bu = block[static_cast<std::size_t>(u - 1)];
      const int bv = block[static_cast<std::size_t>(v - 1)];
      edges.push_back({u, v, (bu >= 0 && bu == bv) ? -1 : 1});
    }
  return SignedGraph::build(n, edges);
}

}  // namespace

CliqueProfile::CliqueProfile(std::vector<int> orders) : orders_(std::move(orders)) {
  require(!orders_.empty(), "clique profile must list at least one clique");
  for (int o : orders_) require(o >= 1, "clique orders must be positive, got " + std::to_string(o));
  std::sort(orders_.begin(), orders_.end());
}

int CliqueProfile::vertex_count() const noexcept {
  int total = 0;
  for (int o : orders_) total += o;
  return total;
}

std::vector<int> CliqueProfile::distinct() const {
  std::vector<int> out = orders_;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> CliqueProfile::counts() const {
  std::vector<int> out;
  for (int value : distinct())
    out.push_back(static_cast<int>(std::count(orders_.begin(), orders_.end(), value)));
  return out;
}

void validate(const FamilySpec& spec) {
  std::visit(Overloaded{
                 [](const CycleSpec& s) {
                   require(s.n > 2, "cycle requires n > 2, got n = " + std::to_string(s.n));
                   require_sign(s.delta, "cycle weight delta");
                 },
                 [](const PathSpec& s) {
                   require(s.n >= 1, "path requires n >= 1, got n = " + std::to_string(s.n));
                   require(s.signs.empty() || static_cast<int>(s.signs.size()) == s.n - 1,
                           "path on " + std::to_string(s.n) + " vertices needs " + std::to_string(s.n - 1) +
                               " signs, got " + std::to_string(s.signs.size()));
                   for (int sg : s.signs) require_sign(sg, "path edge sign");
                 },
                 [](const KmrSpec& s) {
                   require(s.m >= 1, "K^{m,r}_n requires m >= 1, got m = " + std::to_string(s.m));
                   require(s.r >= 2, "K^{m,r}_n requires r >= 2, got r = " + std::to_string(s.r));
                   require(static_cast<long long>(s.m) * s.r <= s.n,
                           "K^{m,r}_n requires m*r <= n, got m*r = " + std::to_string(s.m * s.r) +
                               " > n = " + std::to_string(s.n));
                 },
                 [](const MixedSpec&) {},
                 [](const StarBlockSpec& s) {
                   require(s.r >= 2, "star block graph requires r >= 2, got r = " + std::to_string(s.r));
                   require(s.k >= 1, "star block graph requires k >= 1, got k = " + std::to_string(s.k));
                   require(s.l >= 0 && s.l <= s.k, "star block graph requires 0 <= l <= k, got l = " +
                                                       std::to_string(s.l) + ", k = " + std::to_string(s.k));
                 },
             },
             spec);
}

int family_order(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const CycleSpec& s) { return s.n; },
                        [](const PathSpec& s) { return s.n; },
                        [](const KmrSpec& s) { return s.n; },
                        [](const MixedSpec& s) { return s.profile.vertex_count(); },
                        [](const StarBlockSpec& s) { return s.k * (s.r - 1) + 1; },
                    },
                    spec);
}

std::string family_name(const FamilySpec& spec) {
  static const char* names[] = {"cycle", "path", "kmr", "mixed", "star"};
  return names[spec.index()];
}

std::string family_parameters(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const CycleSpec& s) { os << s.n << ' ' << s.delta; },
                 [&](const PathSpec& s) {
                   os << s.n;
                   for (std::size_t i = 0; i < s.signs.size(); ++i) os << (i == 0 ? ' ' : ',') << s.signs[i];
                 },
                 [&](const KmrSpec& s) { os << s.n << ' ' << s.m << ' ' << s.r; },
                 [&](const MixedSpec& s) {
                   for (std::size_t i = 0; i < s.profile.orders().size(); ++i)
                     os << (i == 0 ? "" : ",") << s.profile.orders()[i];
                 },
                 [&](const StarBlockSpec& s) { os << s.r << ' ' << s.k << ' ' << s.l; },
             },
             spec);
  return os.str();
}

SignedGraph build_family(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const CycleSpec& s) { return build_cycle(s.n, s.delta); },
                        [](const PathSpec& s) { return build_path(s.n, s.signs); },
                        [](const KmrSpec& s) { return build_kmr(s.n, s.m, s.r); },
                        [](const MixedSpec& s) { return build_mixed_cliques(s.profile); },
                        [](const StarBlockSpec& s) { return build_star_block(s.r, s.k, s.l); },
                    },
                    spec);
}

SignedGraph build_cycle(int n, int delta) {
  validate(CycleSpec{n, delta});
  std::vector<int> signs(static_cast<std::size_t>(n), 1);
  if (delta < 0) signs.back() = -1;
  return build_signed_cycle(signs);
}

SignedGraph build_signed_cycle(std::span<const int> signs) {
  const int n = static_cast<int>(signs.size());
  require(n > 2, "cycle requires n > 2, got n = " + std::to_string(n));
  std::vector<SignedEdge> edges;
  for (int i = 1; i <= n; ++i) {
    require_sign(signs[static_cast<std::size_t>(i - 1)], "cycle edge sign");
    edges.push_back({i, i == n ? 1 : i + 1, signs[static_cast<std::size_t>(i - 1)]});
  }
  return SignedGraph::build(n, edges);
}

SignedGraph build_path(int n, std::span<const int> signs) {
  validate(PathSpec{n, std::vector<int>(signs.begin(), signs.end())});
  std::vector<SignedEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, signs.empty() ? 1 : signs[static_cast<std::size_t>(i - 1)]});
  return SignedGraph::build(n, edges);
}

SignedGraph build_kmr(int n, int m, int r) {
  validate(KmrSpec{n, m, r});
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < m * r; ++v) block[static_cast<std::size_t>(v)] = v / r;
  return complete_with_blocks(n, block);
}

SignedGraph build_mixed_cliques(const CliqueProfile& profile) {
  std::vector<int> block;
  int id = 0;
  for (int order : profile.orders()) {
    block.insert(block.end(), static_cast<std::size_t>(order), id);
    ++id;
  }
  return complete_with_blocks(profile.vertex_count(), block);
}

SignedGraph build_star_block(int r, int k, int l) {
  validate(StarBlockSpec{r, k, l});
  const int n = k * (r - 1) + 1;
  std::vector<SignedEdge> edges;
  for (int b = 0; b < k; ++b) {
    const int sign = b < l ? -1 : 1;
    std::vector<int> members{1};
    for (int t = 0; t < r - 1; ++t) members.push_back(2 + b * (r - 1) + t);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.push_back({members[i], members[j], sign});
  }
  return SignedGraph::build(n, edges);
}

}  // namespace signedspec
