#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "signedspec/families.hpp"
#include "signedspec/signed_graph.hpp"

namespace signedspec {

class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Closed form disagreed with the exact engine (or another oracle).
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, std::vector<std::string> expected, std::vector<std::string> actual);
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::vector<std::string>& actual() const noexcept { return actual_; }

 private:
  std::vector<std::string> expected_;
  std::vector<std::string> actual_;
};

struct EdgeListDocument {
  SignedGraph graph;
  std::optional<FamilySpec> family;
};

/// "n <count>", then "u v +1|-1" per edge; a "# family <name> <params>" line
/// when `family` is given.
std::string write_edge_list(const SignedGraph& g, const std::optional<FamilySpec>& family = std::nullopt);

/// Blank lines and lines starting with '#' are skipped, except that a
/// well-formed "# family ..." line is recorded.
EdgeListDocument parse_edge_list(std::string_view text);

/// Family parameters from the comment tokens: name followed by the
/// family_parameters() text. Throws std::invalid_argument.
FamilySpec parse_family(const std::string& name, const std::string& parameters);

nlohmann::ordered_json family_parameters_json(const FamilySpec& spec);

/// Closed-form analysis. With `verify`, the closed form is compared with the
/// exact engine, the Coates oracle (n ≤ 10), the Bareiss determinant and the
/// numeric eigensolver; a mismatch throws VerificationError.
nlohmann::ordered_json analyze_family(const FamilySpec& spec, bool verify);

/// Generic analysis: exact engine plus certified real roots.
nlohmann::ordered_json analyze_graph(const SignedGraph& g, bool verify);

/// Uses the family comment when it reproduces the edges exactly.
nlohmann::ordered_json analyze_document(const EdgeListDocument& doc, bool verify);

}  // namespace signedspec
