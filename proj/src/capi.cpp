#include "signedspec.h"

#include <cstring>
#include <new>
#include <string>

#include "signedspec/document.hpp"
#include "signedspec/sweep.hpp"

using namespace signedspec;

struct ssg_graph {
  EdgeListDocument doc;
};

namespace {

thread_local std::string last_error;

ssg_status fail(ssg_status status, const std::string& message) {
  last_error = message;
  return status;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
ssg_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(SSG_PARSE_ERROR, e.what());
  } catch (const VerificationError& e) {
    return fail(SSG_VERIFICATION_FAILED,
                std::string(e.what()) + "\nclosed form: " + join(e.expected()) + "\noracle:      " + join(e.actual()));
  } catch (const std::invalid_argument& e) {
    return fail(SSG_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SSG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SSG_INTERNAL_ERROR, e.what());
  }
}

ssg_status null_check(const void* p, const char* what) {
  return p ? SSG_OK : fail(SSG_INVALID_ARGUMENT, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* ssg_last_error(void) { return last_error.c_str(); }

const char* ssg_status_string(ssg_status status) {
  switch (status) {
    case SSG_OK: return "ok";
    case SSG_INVALID_ARGUMENT: return "invalid argument";
    case SSG_PARSE_ERROR: return "parse error";
    case SSG_VERIFICATION_FAILED: return "verification failed";
    case SSG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

ssg_status ssg_graph_from_edges(int n, const ssg_edge* edges, size_t count, ssg_graph** out) {
  if (null_check(out, "out") != SSG_OK || (count > 0 && null_check(edges, "edges") != SSG_OK)) return SSG_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<SignedEdge> list;
    for (size_t i = 0; i < count; ++i) list.push_back({edges[i].u, edges[i].v, edges[i].sign});
    *out = new ssg_graph{{build_graph(n, list), std::nullopt}};
    return SSG_OK;
  });
}

ssg_status ssg_graph_from_family(const char* family, const char* params, ssg_graph** out) {
  if (null_check(out, "out") != SSG_OK || null_check(family, "family") != SSG_OK ||
      null_check(params, "params") != SSG_OK)
    return SSG_INVALID_ARGUMENT;
  return guarded([&] {
    const FamilySpec spec = parse_family(family, params);
    *out = new ssg_graph{{build_family(spec), spec}};
    return SSG_OK;
  });
}

ssg_status ssg_graph_from_edge_list(const char* text, ssg_graph** out) {
  if (null_check(out, "out") != SSG_OK || null_check(text, "text") != SSG_OK) return SSG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new ssg_graph{parse_edge_list(text)};
    return SSG_OK;
  });
}

void ssg_graph_free(ssg_graph* g) { delete g; }

int ssg_graph_order(const ssg_graph* g) { return g ? g->doc.graph.order() : 0; }

size_t ssg_graph_edge_count(const ssg_graph* g) { return g ? g->doc.graph.edge_count() : 0; }

int ssg_graph_sign(const ssg_graph* g, int u, int v) {
  if (!g) return 0;
  const int n = g->doc.graph.order();
  if (u < 1 || v < 1 || u > n || v > n) return 0;
  return g->doc.graph.sign(u, v);
}

ssg_status ssg_graph_negate(const ssg_graph* g, ssg_graph** out) {
  if (null_check(g, "graph") != SSG_OK || null_check(out, "out") != SSG_OK) return SSG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new ssg_graph{{negate(g->doc.graph), std::nullopt}};
    return SSG_OK;
  });
}

ssg_status ssg_graph_to_edge_list(const ssg_graph* g, char** out) {
  if (null_check(g, "graph") != SSG_OK || null_check(out, "out") != SSG_OK) return SSG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = copy_string(write_edge_list(g->doc.graph, g->doc.family));
    return SSG_OK;
  });
}

ssg_status ssg_graph_analyze(const ssg_graph* g, int verify, char** json_out) {
  if (null_check(g, "graph") != SSG_OK || null_check(json_out, "json_out") != SSG_OK) return SSG_INVALID_ARGUMENT;
  return guarded([&] {
    *json_out = copy_string(analyze_document(g->doc, verify != 0).dump(2) + "\n");
    return SSG_OK;
  });
}

ssg_status ssg_sweep(int max_n, const char* inject_fault, int* all_passed, char** report_out) {
  if (null_check(all_passed, "all_passed") != SSG_OK || null_check(report_out, "report_out") != SSG_OK)
    return SSG_INVALID_ARGUMENT;
  return guarded([&] {
    SweepOptions options;
    if (max_n > 0) options.max_n = max_n;
    if (inject_fault) options.inject_fault = inject_fault;
    const SweepReport report = run_sweep(options);
    *all_passed = report.passed() ? 1 : 0;
    *report_out = copy_string(report.to_text());
    return SSG_OK;
  });
}

void ssg_string_free(char* s) { delete[] s; }

}  // extern "C"
