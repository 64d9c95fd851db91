// plumb: command-line front end over the C interface of libplumb.

#include "plumb/plumb.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

// 0 success, 1 mathematical failure, 2 usage or parse error
int exit_code(plumb_status st) {
  switch (st) {
    case PLUMB_OK: return 0;
    case PLUMB_E_INVALID_ARGUMENT:
    case PLUMB_E_PARSE:
    case PLUMB_E_IO: return 2;
    default: return 1;
  }
}

int fail(plumb_status st, const std::string& context = {}) {
  std::cerr << "plumb: ";
  if (!context.empty()) std::cerr << context << ": ";
  std::cerr << plumb_last_error() << '\n';
  return exit_code(st);
}

struct GraphDeleter {
  void operator()(plumb_graph* g) const { plumb_graph_free(g); }
};
struct SeriesDeleter {
  void operator()(plumb_series* s) const { plumb_series_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { plumb_string_free(s); }
};
using GraphPtr = std::unique_ptr<plumb_graph, GraphDeleter>;
using SeriesPtr = std::unique_ptr<plumb_series, SeriesDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string join(const nlohmann::json& arr) {
  std::string out;
  for (const auto& x : arr) out += (out.empty() ? "" : " ") + x.get<std::string>();
  return out.empty() ? "-" : out;
}

int cmd_check(const std::string& file, bool json) {
  plumb_graph* raw = nullptr;
  if (auto st = plumb_graph_load(file.c_str(), &raw); st != PLUMB_OK) return fail(st, file);
  GraphPtr g(raw);
  char* text = nullptr;
  int nd = 0;
  if (auto st = plumb_graph_report(g.get(), &text, &nd); st != PLUMB_OK) return fail(st, file);
  StringPtr owned(text);
  if (json) {
    std::cout << text << '\n';
  } else {
    const auto r = nlohmann::json::parse(text);
    std::cout << "vertices: " << r["vertices"] << "\nedges: " << r["edges"] << '\n';
    std::cout << "leaves: " << join(r["leaves"]) << "\ndegree-2: " << join(r["degree2"])
              << "\nnodes: " << join(r["nodes"]) << "\ncenters: " << join(r["centers"]) << '\n';
    if (r["root"].is_null())
      std::cout << "root: none\n";
    else
      std::cout << "root: " << r["root"].get<std::string>() << (r["centered"].get<bool>() ? " (centered)" : " (not centered)") << '\n';
    std::cout << "negative definite: " << (nd ? "yes" : "no") << "\ndet W: " << r["det"].get<std::string>() << '\n';
    if (!r["form"].is_null()) {
      std::cout << "S over " << join(r["form"]["index"]) << ":\n";
      for (const auto& row : r["form"]["matrix"]) std::cout << "  " << join(row) << '\n';
    }
  }
  if (!nd) {
    std::cerr << "plumb: " << file << ": linking matrix is not negative definite\n";
    return 1;
  }
  return 0;
}

int cmd_zhat(const std::string& file, const std::string& order, const std::string& method, unsigned threads) {
  plumb_graph* raw = nullptr;
  if (auto st = plumb_graph_load(file.c_str(), &raw); st != PLUMB_OK) return fail(st, file);
  GraphPtr g(raw);

  auto run = [&](plumb_method m, SeriesPtr& out) -> plumb_status {
    plumb_series* s = nullptr;
    const plumb_status st = plumb_zhat(g.get(), order.c_str(), m, threads, &s);
    out.reset(s);
    return st;
  };
  auto to_json = [](const SeriesPtr& s) {
    char* text = nullptr;
    plumb_series_to_json(s.get(), &text);
    StringPtr owned(text);
    return std::string(text ? text : "");
  };

  if (method != "both") {
    SeriesPtr s;
    if (auto st = run(method == "direct" ? PLUMB_METHOD_DIRECT : PLUMB_METHOD_NESTED, s); st != PLUMB_OK)
      return fail(st, file);
    std::cout << to_json(s) << '\n';
    return 0;
  }
  SeriesPtr direct, nested;
  if (auto st = run(PLUMB_METHOD_DIRECT, direct); st != PLUMB_OK) return fail(st, file + " (direct)");
  if (auto st = run(PLUMB_METHOD_NESTED, nested); st != PLUMB_OK) return fail(st, file + " (nested)");
  int equal = 0;
  if (auto st = plumb_series_equal(direct.get(), nested.get(), &equal); st != PLUMB_OK) return fail(st);
  std::cout << "{\"direct\":" << to_json(direct) << ",\"nested\":" << to_json(nested)
            << ",\"equal\":" << (equal ? "true" : "false") << "}\n";
  if (!equal) {
    std::cerr << "plumb: direct and nested series differ\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& suite, int m, int depth, bool json) {
  char* text = nullptr;
  int ok = 0;
  if (auto st = plumb_verify(suite.c_str(), m, depth, &text, &ok); st != PLUMB_OK) return fail(st);
  StringPtr owned(text);
  if (json) {
    std::cout << text << '\n';
  } else {
    for (const auto& c : nlohmann::json::parse(text))
      std::cout << (c["passed"].get<bool>() ? "pass" : "FAIL") << '\t' << c["suite"].get<std::string>() << '\t'
                << c["case"].get<std::string>() << '\t' << c["detail"].get<std::string>() << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_dag(const std::string& spec, const std::string& out) {
  char* text = nullptr;
  if (auto st = plumb_dag_dot(spec.c_str(), &text); st != PLUMB_OK) return fail(st, "dag");
  StringPtr owned(text);
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "plumb: cannot write '" << out << "'\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series of negative definite plumbings and colored DAG character checks", "plumb"};
  app.require_subcommand(1);

  std::string file, order = "20", method = "both", suite = "all", spec, out;
  bool json = false;
  unsigned threads = 0;
  int m = 0, depth = 0;

  auto* check = app.add_subcommand("check", "parse a plumbing and report its structure and definiteness");
  check->add_option("file", file, "plumbing file")->required();
  check->add_flag("--json", json, "print the report as JSON");

  auto* zhat = app.add_subcommand("zhat", "print the series up to the given order as JSON");
  zhat->add_option("file", file, "plumbing file")->required();
  zhat->add_option("--order,-N", order, "truncation order, an exact rational")->capture_default_str();
  zhat->add_option("--method", method, "direct, nested or both")
      ->check(CLI::IsMember({"direct", "nested", "both"}))
      ->capture_default_str();
  zhat->add_option("--threads", threads, "worker threads (0: all cores; PLUMB_THREADS caps it)");

  auto* verify = app.add_subcommand("verify", "run the character identity suites");
  verify->add_option("--suite", suite, "star, tree, felder, defrag or all")
      ->check(CLI::IsMember({"star", "tree", "felder", "defrag", "all"}))
      ->capture_default_str();
  verify->add_option("--m", m, "recursion number (star/defrag) or cap on it (tree)")->check(CLI::PositiveNumber);
  verify->add_option("--N", depth, "depth bound")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "print the report as JSON");

  auto* dagcmd = app.add_subcommand("dag", "write a colored DAG as DOT");
  dagcmd->add_option("--spec", spec, "constructor and key=value parameters, e.g. \"hypercube m=2\"")->required();
  dagcmd->add_option("--out", out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*check) return cmd_check(file, json);
  if (*zhat) return cmd_zhat(file, order, method, threads);
  if (*verify) return cmd_verify(suite, m, depth, json);
  return cmd_dag(spec, out);
}
