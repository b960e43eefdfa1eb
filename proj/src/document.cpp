#include "signedspec/document.hpp"

#include <sstream>

#include "signedspec/balance.hpp"
#include "signedspec/charpoly.hpp"
#include "signedspec/oracle.hpp"
#include "signedspec/roots.hpp"
#include "signedspec/spectra.hpp"
#include "signedspec/spectrum.hpp"

namespace signedspec {

namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

int parse_int(const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw std::invalid_argument("expected an integer, got '" + token + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item)));
  return out;
}

Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& entry : s.entries()) {
    Json e;
    e["value_kind"] = entry.value.kind_name();
    if (entry.value.kind() == Eigenvalue::Kind::Integer)
      e["value"] = entry.value.integer_value().str();
    else
      e["value"] = entry.value.value();
    e["form"] = entry.value.form();
    if (entry.value.kind() == Eigenvalue::Kind::Numeric) {
      e["lower"] = entry.value.lower();
      e["upper"] = entry.value.upper();
    }
    e["multiplicity"] = entry.multiplicity;
    out.push_back(std::move(e));
  }
  return out;
}

Json balance_json(const SignedGraph& g) {
  return Json{{"balanced", is_balanced(g).verdict}, {"weakly_balanced", is_weakly_balanced(g).verdict}};
}

std::vector<std::string> single(const BigInt& v) { return {v.str()}; }

void require_equal(const IntPolynomial& expected, const IntPolynomial& actual, const std::string& what) {
  if (expected != actual) throw VerificationError(what, expected.coefficient_strings(), actual.coefficient_strings());
}

void require_spectrum(const Spectrum& s, const SignedGraph& g) {
  const Spectrum numeric = adjacency_eigenvalues_numeric(g);
  const SpectrumComparison cmp = compare_spectra(s, numeric);
  if (!cmp.matches) {
    std::vector<std::string> expected, actual;
    for (double v : s.expanded()) expected.push_back(std::to_string(v));
    for (double v : numeric.expanded()) actual.push_back(std::to_string(v));
    throw VerificationError("spectrum differs from the numeric eigensolver: " + cmp.detail, expected, actual);
  }
}

void require_oracles(const SignedGraph& g, const IntPolynomial& exact) {
  if (g.order() <= kCoatesMaxOrder) require_equal(exact, charpoly_coates(g), "exact engine differs from the Coates expansion");
  const BigInt det = det_bareiss(g.adjacency());
  if (det != exact.coeff(0))
    throw VerificationError("constant coefficient differs from the Bareiss determinant", single(exact.coeff(0)), single(det));
}

Spectrum spectrum_from_roots(const IntPolynomial& p) {
  Spectrum s;
  for (const RealRoot& root : real_roots(p)) {
    if (root.exact)
      s.add(Eigenvalue::integer(*root.exact), root.multiplicity);
    else
      s.add(Eigenvalue::numeric(root.lower.convert_to<double>(), root.upper.convert_to<double>()), root.multiplicity);
  }
  return s;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}

VerificationError::VerificationError(const std::string& what, std::vector<std::string> expected,
                                     std::vector<std::string> actual)
    : std::runtime_error(what), expected_(std::move(expected)), actual_(std::move(actual)) {}

std::string write_edge_list(const SignedGraph& g, const std::optional<FamilySpec>& family) {
  std::ostringstream os;
  if (family) os << "# family " << family_name(*family) << ' ' << family_parameters(*family) << '\n';
  os << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
  return os.str();
}

FamilySpec parse_family(const std::string& name, const std::string& parameters) {
  std::istringstream is(parameters);
  std::vector<std::string> tokens;
  for (std::string t; is >> t;) tokens.push_back(t);
  auto expect = [&](std::size_t count) {
    if (tokens.size() != count)
      throw std::invalid_argument("family " + name + " takes " + std::to_string(count) + " parameter(s)");
  };
  FamilySpec spec;
  if (name == "cycle") {
    expect(2);
    spec = CycleSpec{parse_int(tokens[0]), parse_int(tokens[1])};
  } else if (name == "path") {
    if (tokens.empty() || tokens.size() > 2) throw std::invalid_argument("family path takes n and optional signs");
    spec = PathSpec{parse_int(tokens[0]), tokens.size() == 2 ? parse_int_list(tokens[1]) : std::vector<int>{}};
  } else if (name == "kmr") {
    expect(3);
    spec = KmrSpec{parse_int(tokens[0]), parse_int(tokens[1]), parse_int(tokens[2])};
  } else if (name == "mixed") {
    expect(1);
    spec = MixedSpec{CliqueProfile(parse_int_list(tokens[0]))};
  } else if (name == "star") {
    expect(3);
    spec = StarBlockSpec{parse_int(tokens[0]), parse_int(tokens[1]), parse_int(tokens[2])};
  } else {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  validate(spec);
  return spec;
}

EdgeListDocument parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<FamilySpec> family;
  std::optional<int> n;
  std::vector<SignedEdge> edges;
  std::vector<int> edge_lines;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream c(line.substr(1));
      std::string tag, name;
      c >> tag >> name;
      if (tag == "family" && !family) {
        std::string rest;
        std::getline(c, rest);
        try {
          family = parse_family(name, rest);
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, std::string("bad family comment: ") + e.what());
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    try {
      if (!n) {
        if (tokens.size() != 2 || tokens[0] != "n") throw std::invalid_argument("expected header 'n <count>'");
        n = parse_int(tokens[1]);
        if (*n < 1) throw std::invalid_argument("vertex count must be positive");
        continue;
      }
      if (tokens.size() != 3) throw std::invalid_argument("expected 'u v s'");
      if (tokens[2] != "+1" && tokens[2] != "-1") throw std::invalid_argument("sign must be +1 or -1");
      edges.push_back({parse_int(tokens[0]), parse_int(tokens[1]), tokens[2] == "+1" ? 1 : -1});
      edge_lines.push_back(line_no);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!n) throw ParseError(line_no, "missing header 'n <count>'");
  try {
    return {build_graph(*n, edges), family};
  } catch (const GraphError& e) {
    // Re-validate edge by edge to name the offending line.
    for (std::size_t i = 0; i < edges.size(); ++i) {
      try {
        build_graph(*n, std::span<const SignedEdge>(edges.data(), i + 1));
      } catch (const GraphError& inner) {
        throw ParseError(edge_lines[i], inner.what());
      }
    }
    throw ParseError(line_no, e.what());
  }
}

Json family_parameters_json(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const CycleSpec& s) { return Json{{"n", s.n}, {"delta", s.delta}}; },
                        [](const PathSpec& s) {
                          Json j{{"n", s.n}};
                          if (!s.signs.empty()) j["signs"] = s.signs;
                          return j;
                        },
                        [](const KmrSpec& s) { return Json{{"n", s.n}, {"m", s.m}, {"r", s.r}}; },
                        [](const MixedSpec& s) { return Json{{"orders", s.profile.orders()}}; },
                        [](const StarBlockSpec& s) { return Json{{"r", s.r}, {"k", s.k}, {"l", s.l}}; },
                    },
                    spec);
}

Json analyze_family(const FamilySpec& spec, bool verify) {
  validate(spec);
  const SignedGraph g = build_family(spec);
  const IntPolynomial closed = charpoly_closed(spec);
  const BigInt det = determinant_closed(spec);
  const Spectrum spectrum = eigenvalues_closed(spec);
  if (verify) {
    const IntPolynomial exact = charpoly_exact(g);
    require_equal(closed, exact, "closed-form characteristic polynomial differs from the exact engine");
    require_oracles(g, exact);
    if (det != exact.coeff(0))
      throw VerificationError("closed-form determinant differs from the exact engine", single(det), single(exact.coeff(0)));
    require_spectrum(spectrum, g);
  }
  Json out;
  out["family"] = family_name(spec);
  out["parameters"] = family_parameters_json(spec);
  out["n"] = g.order();
  out["charpoly"] = closed.coefficient_strings();
  out["determinant"] = det.str();
  out["spectrum"] = spectrum_json(spectrum);
  out["balance"] = balance_json(g);
  out["verification"] = Json{{"oracle_checked", verify}};
  return out;
}

Json analyze_graph(const SignedGraph& g, bool verify) {
  const IntPolynomial exact = charpoly_exact(g);
  const Spectrum spectrum = spectrum_from_roots(exact);
  if (spectrum.size() != g.order()) throw ConsistencyError("characteristic polynomial has non-real roots");
  if (verify) {
    require_oracles(g, exact);
    require_spectrum(spectrum, g);
  }
  Json out;
  out["family"] = "edge_list";
  out["parameters"] = Json{{"n", g.order()}, {"edges", g.edge_count()}};
  out["n"] = g.order();
  out["charpoly"] = exact.coefficient_strings();
  out["determinant"] = exact.coeff(0).str();
  out["spectrum"] = spectrum_json(spectrum);
  out["balance"] = balance_json(g);
  out["verification"] = Json{{"oracle_checked", verify}};
  return out;
}

Json analyze_document(const EdgeListDocument& doc, bool verify) {
  if (doc.family && build_family(*doc.family) == doc.graph) return analyze_family(*doc.family, verify);
  return analyze_graph(doc.graph, verify);
}

}  // namespace signedspec
