#include "plumb/plumb.h"

#include "plumb/dagcat.hpp"
#include "plumb/error.hpp"
#include "plumb/graphio.hpp"
#include "plumb/treenest.hpp"
#include "plumb/verify.hpp"
#include "plumb/zhat.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

struct plumb_graph {
  plumb::PlumbedGraph pg;
};

struct plumb_series {
  plumb::QSeries s;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0, last_column = 0;

plumb_status status_of(plumb::ErrorCode c) {
  using plumb::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument: return PLUMB_E_INVALID_ARGUMENT;
    case ErrorCode::parse: return PLUMB_E_PARSE;
    case ErrorCode::not_negative_definite: return PLUMB_E_NOT_NEGATIVE_DEFINITE;
    case ErrorCode::no_internal_vertices: return PLUMB_E_NO_INTERNAL_VERTICES;
    case ErrorCode::unsupported: return PLUMB_E_UNSUPPORTED;
    case ErrorCode::insufficient_truncation: return PLUMB_E_INSUFFICIENT_TRUNCATION;
    case ErrorCode::not_slim: return PLUMB_E_NOT_SLIM;
    case ErrorCode::internal: return PLUMB_E_INTERNAL;
  }
  return PLUMB_E_INTERNAL;
}

template <class F>
plumb_status guarded(F body) {
  last_error.clear();
  last_line = last_column = 0;
  try {
    body();
    return PLUMB_OK;
  } catch (const plumb::ParseError& e) {
    last_error = e.what();
    last_line = e.line();
    last_column = e.column();
    return PLUMB_E_PARSE;
  } catch (const plumb::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PLUMB_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PLUMB_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw plumb::Error(plumb::ErrorCode::invalid_argument, std::string(what) + " is null");
}

nlohmann::ordered_json id_list(const plumb::Tree& t, const std::vector<plumb::VertexId>& vs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto v : vs) arr.push_back(t.id(v));
  return arr;
}

// ---- dag specs ----

struct Spec {
  std::string kind;
  std::map<std::string, std::string> args;

  std::optional<std::string> take(const std::string& key) {
    auto it = args.find(key);
    if (it == args.end()) return std::nullopt;
    std::string v = it->second;
    args.erase(it);
    return v;
  }
  std::optional<std::string> take_any(std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (auto v = take(k)) return v;
    return std::nullopt;
  }
  void finish() const {
    if (!args.empty())
      throw plumb::Error(plumb::ErrorCode::invalid_argument, "unknown parameter '" + args.begin()->first + "' for " + kind);
  }
};

Spec parse_spec(const std::string& text) {
  std::istringstream in(text);
  Spec spec;
  if (!(in >> spec.kind)) throw plumb::Error(plumb::ErrorCode::invalid_argument, "empty dag spec");
  for (std::string tok; in >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw plumb::Error(plumb::ErrorCode::invalid_argument, "expected key=value, got '" + tok + "'");
    if (!spec.args.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
      throw plumb::Error(plumb::ErrorCode::invalid_argument, "repeated parameter '" + tok.substr(0, eq) + "'");
  }
  return spec;
}

int to_int(const std::string& s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw plumb::Error(plumb::ErrorCode::invalid_argument, std::string("bad integer for ") + what + ": '" + s + "'");
  return v;
}

plumb::dag::Bits to_bits(const std::string& s, const char* what) {
  for (char c : s)
    if (c != '+' && c != '-')
      throw plumb::Error(plumb::ErrorCode::invalid_argument, std::string("bad sign word for ") + what + ": '" + s + "'");
  return plumb::dag::Bits::parse(s);
}

int depth_arg(Spec& spec, int fallback) {
  auto d = spec.take("depth");
  const int v = d ? to_int(*d, "depth") : fallback;
  if (v < 0) throw plumb::Error(plumb::ErrorCode::invalid_argument, "depth must be >= 0");
  return v;
}

plumb::dag::ColoredDag build_dag(const std::string& text) {
  namespace dag = plumb::dag;
  using plumb::Error;
  using plumb::ErrorCode;
  Spec spec = parse_spec(text);
  dag::ColoredDag out;
  if (spec.kind == "hypercube") {
    auto ms = spec.take("m");
    auto d = spec.take("D");
    auto e = spec.take("E");
    const int depth = depth_arg(spec, dag::kUnbounded);
    spec.finish();
    const int m = ms ? to_int(*ms, "m") : 0;
    if (ms && m < 1) throw Error(ErrorCode::invalid_argument, "m must be >= 1");
    const auto ds = d ? dag::expand_pattern(*d) : dag::all_bits(m ? static_cast<std::size_t>(m) : 1);
    const std::size_t len = ds.front().size();
    if (ms && len != static_cast<std::size_t>(m)) throw Error(ErrorCode::invalid_argument, "D does not have length m");
    const auto es = e ? dag::expand_pattern(*e) : dag::all_bits(len);
    out = dag::hypercube(ds, es, depth);
  } else if (spec.kind == "fragment") {
    auto lam = spec.take_any({"lambda", "λ"});
    if (!lam) throw Error(ErrorCode::invalid_argument, "fragment needs lambda=<signs>");
    const dag::Bits l = to_bits(*lam, "lambda");
    if (auto m = spec.take("m"); m && static_cast<std::size_t>(to_int(*m, "m")) != l.size())
      throw Error(ErrorCode::invalid_argument, "lambda does not have length m");
    const std::string side = spec.take("side").value_or("left");
    const int depth = depth_arg(spec, 6);
    spec.finish();
    if (side != "left" && side != "right") throw Error(ErrorCode::invalid_argument, "side must be left or right");
    const auto base = dag::base_chain(depth + 2 * static_cast<int>(l.size()) + 2);
    out = dag::fragment(base, side == "left" ? dag::Side::left : dag::Side::right, l, depth);
  } else if (spec.kind == "product") {
    auto lam = spec.take_any({"lambda", "λ"});
    auto mu = spec.take_any({"mu", "μ"});
    spec.finish();
    if (!lam || !mu) throw Error(ErrorCode::invalid_argument, "product needs lambda=<signs> mu=<signs>");
    const dag::Bits l = to_bits(*lam, "lambda"), u = to_bits(*mu, "mu");
    const std::vector<dag::Bits> dl{l}, du{u};
    out = dag::product(dag::hypercube(dl, dag::all_bits(l.size())), dag::hypercube(du, dag::all_bits(u.size())));
  } else if (spec.kind == "base") {
    const int depth = depth_arg(spec, 6);
    spec.finish();
    out = dag::base_chain(depth);
  } else if (spec.kind == "bilateral") {
    auto lam = spec.take_any({"lambda", "λ"});
    auto h = spec.take("h");
    const std::string part = spec.take("part").value_or("whole");
    const int depth = depth_arg(spec, 6);
    spec.finish();
    if (!lam || !h) throw Error(ErrorCode::invalid_argument, "bilateral needs lambda=<sign> h=<int>");
    const dag::Bits l = to_bits(*lam, "lambda");
    if (l.size() != 1) throw Error(ErrorCode::invalid_argument, "bilateral lambda is a single sign");
    if (part != "whole" && part != "plus") throw Error(ErrorCode::invalid_argument, "part must be whole or plus");
    out = dag::bilateral_component(l[0], to_int(*h, "h"), depth, part == "plus");
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown constructor '" + spec.kind + "'");
  }
  return out;
}

}  // namespace

extern "C" {

const char* plumb_last_error(void) { return last_error.c_str(); }

void plumb_last_error_location(size_t* line, size_t* column) {
  if (line) *line = last_line;
  if (column) *column = last_column;
}

plumb_status plumb_graph_parse(const char* text, plumb_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new plumb_graph{plumb::parse_plumbing(text)};
  });
}

plumb_status plumb_graph_load(const char* path, plumb_graph** out) {
  if (path && !std::ifstream(path)) {
    last_error = std::string("cannot open '") + path + "'";
    last_line = last_column = 0;
    return PLUMB_E_IO;
  }
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new plumb_graph{plumb::load_plumbing(path)};
  });
}

void plumb_graph_free(plumb_graph* g) { delete g; }

plumb_status plumb_graph_report(const plumb_graph* g, char** json, int* negative_definite) {
  return guarded([&] {
    require(g, "graph");
    require(json, "json");
    const plumb::PlumbedGraph& pg = g->pg;
    const plumb::Tree& t = pg.tree;
    const auto part = plumb::degree_partition(t);
    nlohmann::ordered_json r;
    r["vertices"] = t.size();
    r["edges"] = t.size() - 1;
    r["leaves"] = id_list(t, part.leaves);
    r["degree2"] = id_list(t, part.degree2);
    r["nodes"] = id_list(t, part.nodes);
    r["centers"] = id_list(t, plumb::centers(t));
    if (pg.root) {
      r["root"] = t.id(*pg.root);
      r["centered"] = plumb::is_centered(plumb::RootedTree(t, *pg.root));
    } else {
      r["root"] = nullptr;
      r["centered"] = nullptr;
    }
    const plumb::IntMatrix w = plumb::linking_matrix(pg);
    const bool nd = plumb::is_negative_definite(w);
    r["negative_definite"] = nd;
    r["det"] = plumb::determinant(w).str();
    if (!nd) {
      r["form"] = nullptr;
      r["form_error"] = "linking matrix is not negative definite";
    } else if (part.degree2.empty() && part.nodes.empty()) {
      r["form"] = nullptr;
      r["form_error"] = "no internal vertices";
    } else {
      const plumb::QuadraticForm f = plumb::theta_form(pg);
      nlohmann::ordered_json form;
      form["index"] = id_list(t, f.index);
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < f.dimension(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < f.dimension(); ++j) row.push_back(plumb::to_fraction_string(f.matrix(i, j)));
        rows.push_back(std::move(row));
      }
      form["matrix"] = std::move(rows);
      r["form"] = std::move(form);
    }
    if (negative_definite) *negative_definite = nd ? 1 : 0;
    *json = dup_string(r.dump());
  });
}

plumb_status plumb_zhat(const plumb_graph* g, const char* order, plumb_method method, unsigned threads,
                        plumb_series** out) {
  return guarded([&] {
    require(g, "graph");
    require(order, "order");
    require(out, "out");
    const plumb::Rational n = plumb::parse_rational(order);
    if (n < 0) throw plumb::Error(plumb::ErrorCode::invalid_argument, "order must be >= 0");
    plumb::QSeries s;
    if (method == PLUMB_METHOD_DIRECT) {
      s = plumb::zhat_bosonic(g->pg, n, {threads, 0});
    } else if (method == PLUMB_METHOD_NESTED) {
      s = plumb::nest::zhat_nested(g->pg, n, {threads, 0});
    } else {
      throw plumb::Error(plumb::ErrorCode::invalid_argument, "unknown method");
    }
    *out = new plumb_series{std::move(s)};
  });
}

plumb_status plumb_series_to_json(const plumb_series* s, char** json) {
  return guarded([&] {
    require(s, "series");
    require(json, "json");
    *json = dup_string(plumb::serialize_series(s->s));
  });
}

plumb_status plumb_series_equal(const plumb_series* a, const plumb_series* b, int* equal) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(equal, "equal");
    const plumb::Rational n = std::min(a->s.order(), b->s.order());
    *equal = plumb::equal_to_order(a->s, b->s, n) ? 1 : 0;
  });
}

void plumb_series_free(plumb_series* s) { delete s; }

plumb_status plumb_verify(const char* suite, int m, int depth, char** report, int* all_passed) {
  return guarded([&] {
    require(suite, "suite");
    require(report, "report");
    plumb::SuiteOptions opt;
    if (m > 0) opt.m = m;
    if (depth > 0) opt.depth = depth;
    const auto results = plumb::run_suite(suite, opt);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& c : results) {
      nlohmann::ordered_json row;
      row["suite"] = c.suite;
      row["case"] = c.name;
      row["passed"] = c.passed;
      row["detail"] = c.detail;
      arr.push_back(std::move(row));
      ok = ok && c.passed;
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    *report = dup_string(arr.dump());
  });
}

plumb_status plumb_dag_dot(const char* spec, char** dot) {
  return guarded([&] {
    require(spec, "spec");
    require(dot, "dot");
    *dot = dup_string(plumb::emit_dot(build_dag(spec)));
  });
}

void plumb_string_free(char* s) { std::free(s); }

}  // extern "C"
