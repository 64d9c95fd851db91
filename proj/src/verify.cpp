#include "plumb/verify.hpp"

#include "plumb/error.hpp"
#include "plumb/kgroup.hpp"

#include <sstream>

namespace plumb {

namespace {

using dag::Sign;

std::string sign_name(Sign s) { return std::string(1, dag::to_char(s)); }

void check_m(const SuiteOptions& o) {
  if (o.m && *o.m < 1) throw Error(ErrorCode::invalid_argument, "--m must be >= 1");
  if (o.depth && *o.depth < 0) throw Error(ErrorCode::invalid_argument, "--N must be >= 0");
}

void star(const SuiteOptions& o, std::vector<CaseResult>& out) {
  std::vector<int> ms = o.m ? std::vector<int>{*o.m} : std::vector<int>{1, 2, 3};
  for (Sign s : {Sign::plus, Sign::minus})
    for (int m : ms) {
      const int n = o.depth.value_or(m >= 3 ? 14 : 20);
      const auto c = kgroup::verify_star_identity(s, static_cast<std::size_t>(m), n);
      out.push_back({"star", "lambda=" + sign_name(s) + " m=" + std::to_string(m) + " N=" + std::to_string(n), c.holds,
                     std::to_string(c.lhs.terms().size()) + " colors"});
    }
}

void tree(const SuiteOptions& o, std::vector<CaseResult>& out) {
  const std::vector<std::vector<std::size_t>> shapes{{1}, {2}, {1, 1}, {2, 1}, {2, 2}, {1, 1, 1}};
  const int n = o.depth.value_or(14);
  for (const auto& shape : shapes) {
    bool within = true;
    for (std::size_t mv : shape) within = within && (!o.m || static_cast<int>(mv) <= *o.m);
    if (!within) continue;
    std::ostringstream name;
    name << "m=(";
    for (std::size_t i = 0; i < shape.size(); ++i) name << (i ? "," : "") << shape[i];
    name << ") N=" << n;
    const auto c = kgroup::verify_tree_identity(shape, n);
    out.push_back({"tree", name.str(), c.holds, std::to_string(c.lhs.terms().size()) + " colors"});
  }
}

void felder(const SuiteOptions& o, std::vector<CaseResult>& out) {
  const int n = o.depth.value_or(16);
  for (Sign s : {Sign::plus, Sign::minus})
    for (const auto& c : kgroup::verify_felder(s, -6, 6, n))
      out.push_back({"felder", "lambda=" + sign_name(s) + " h=" + std::to_string(c.h) + " N=" + std::to_string(n),
                     c.holds, std::to_string(c.whole.terms().size()) + " colors"});
}

void defrag(const SuiteOptions& o, std::vector<CaseResult>& out) {
  std::vector<int> ms = o.m ? std::vector<int>{*o.m} : std::vector<int>{1, 2, 3};
  const int n = o.depth.value_or(12);
  for (int m : ms)
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
      std::vector<std::size_t> coords;
      std::string set = "{";
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1U) {
          set += (coords.empty() ? "" : ",") + std::to_string(i + 1);
          coords.push_back(static_cast<std::size_t>(i));
        }
      set += "}";
      const auto c = kgroup::verify_defrag(static_cast<std::size_t>(m), coords, n);
      out.push_back({"defrag", "m=" + std::to_string(m) + " I=" + set + " N=" + std::to_string(n), c.invariant && c.fubini,
                     std::string("invariant=") + (c.invariant ? "yes" : "no") + " fubini=" + (c.fubini ? "yes" : "no")});
    }
}

}  // namespace

std::vector<CaseResult> run_suite(std::string_view suite, const SuiteOptions& options) {
  check_m(options);
  std::vector<CaseResult> out;
  const bool all = suite == "all";
  if (!all && suite != "star" && suite != "tree" && suite != "felder" && suite != "defrag")
    throw Error(ErrorCode::invalid_argument, "unknown suite '" + std::string(suite) + "'");
  if (all || suite == "star") star(options, out);
  if (all || suite == "tree") tree(options, out);
  if (all || suite == "felder") felder(options, out);
  if (all || suite == "defrag") defrag(options, out);
  return out;
}

}  // namespace plumb
