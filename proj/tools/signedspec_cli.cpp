#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signedspec.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerification = 2 };

struct GraphDeleter {
  void operator()(ssg_graph* g) const { ssg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ssg_graph, GraphDeleter>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { ssg_string_free(p); }
};

struct FamilyFlags {
  int cycle = 0;
  int delta = 1;
  int path = 0;
  std::string signs;
  std::vector<int> kmr;
  std::string mixed;
  std::vector<int> star;

  void attach(CLI::App* app) {
    auto* group = app->add_option_group("family", "Family selection (exactly one)");
    group->add_option("--cycle", cycle, "Cycle C_N")->check(CLI::PositiveNumber);
    group->add_option("--path", path, "Path P_N")->check(CLI::PositiveNumber);
    group->add_option("--kmr", kmr, "K_N with M negative cliques of order R")->expected(3);
    group->add_option("--mixed", mixed, "Complete graph with negative cliques of orders N1,N2,...");
    group->add_option("--star", star, "Star block: R K L")->expected(3);
    group->require_option(0, 1);
    app->add_option("--delta", delta, "Cycle sign: +1 balanced, -1 unbalanced");
    app->add_option("--signs", signs, "Path edge signs, comma separated");
  }

  bool selected() const { return cycle || path || !kmr.empty() || !mixed.empty() || !star.empty(); }

  std::pair<std::string, std::string> spec() const {
    auto triple = [](const std::vector<int>& v) {
      return std::to_string(v[0]) + " " + std::to_string(v[1]) + " " + std::to_string(v[2]);
    };
    if (cycle) return {"cycle", std::to_string(cycle) + " " + std::to_string(delta)};
    if (path) return {"path", std::to_string(path) + (signs.empty() ? "" : " " + signs)};
    if (!kmr.empty()) return {"kmr", triple(kmr)};
    if (!mixed.empty()) return {"mixed", mixed};
    return {"star", triple(star)};
  }
};

int report(ssg_status status) {
  std::cerr << "error: " << ssg_status_string(status) << ": " << ssg_last_error() << '\n';
  return status == SSG_VERIFICATION_FAILED ? kVerification : kUsage;
}

int emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(output);
  if (!(out << text)) {
    std::cerr << "error: cannot write " << output << '\n';
    return kUsage;
  }
  return kOk;
}

ssg_status family_graph(const FamilyFlags& flags, ssg_graph** out) {
  const auto [name, params] = flags.spec();
  return ssg_graph_from_family(name.c_str(), params.c_str(), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of signed graph families"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Output path (default: standard output)");

  FamilyFlags make_flags;
  auto* make = app.add_subcommand("make", "Write the edge list of a family");
  make_flags.attach(make);

  FamilyFlags analyze_flags;
  bool verify = false;
  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Characteristic polynomial, determinant, spectrum and balance as JSON");
  analyze_flags.attach(analyze);
  analyze->add_flag("--verify", verify, "Cross-check against the exact engine and oracles");
  analyze->add_option("input", input, "Edge-list file, '-' for standard input");

  int max_n = 0;
  std::string inject_fault;
  auto* sweep = app.add_subcommand("sweep", "Run every cross-check over the instance ranges");
  sweep->add_option("--max-n", max_n, "Skip instances with more vertices")->check(CLI::PositiveNumber);
  sweep->add_option("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (make->parsed()) {
    if (!make_flags.selected()) {
      std::cerr << "error: make needs one of --cycle, --path, --kmr, --mixed, --star\n";
      return kUsage;
    }
    ssg_graph* raw = nullptr;
    if (ssg_status s = family_graph(make_flags, &raw); s != SSG_OK) return report(s);
    GraphPtr g(raw);
    OwnedString text;
    if (ssg_status s = ssg_graph_to_edge_list(g.get(), &text.p); s != SSG_OK) return report(s);
    return emit(text.p, output);
  }

  if (analyze->parsed()) {
    ssg_graph* raw = nullptr;
    ssg_status s;
    if (analyze_flags.selected()) {
      if (!input.empty()) {
        std::cerr << "error: give either family flags or an input file, not both\n";
        return kUsage;
      }
      s = family_graph(analyze_flags, &raw);
    } else {
      std::string text;
      if (input.empty() || input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(input);
        if (!in) {
          std::cerr << "error: cannot read " << input << '\n';
          return kUsage;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      s = ssg_graph_from_edge_list(text.c_str(), &raw);
    }
    if (s != SSG_OK) return report(s);
    GraphPtr g(raw);
    OwnedString json;
    if (s = ssg_graph_analyze(g.get(), verify ? 1 : 0, &json.p); s != SSG_OK) return report(s);
    return emit(json.p, output);
  }

  int all_passed = 0;
  OwnedString text;
  if (ssg_status s = ssg_sweep(max_n, inject_fault.empty() ? nullptr : inject_fault.c_str(), &all_passed, &text.p);
      s != SSG_OK)
    return report(s);
  if (int code = emit(text.p, output); code != kOk) return code;
  if (!all_passed) {
    std::istringstream lines(text.p);
    for (std::string line; std::getline(lines, line);)
      if (line.rfind("FAIL ", 0) == 0) std::cerr << line << '\n';
    return kVerification;
  }
  return kOk;
}
